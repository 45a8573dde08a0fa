#pragma once

#include <cstddef>
#include <optional>

#include "hypl/series.hpp"

namespace hypl {

enum class Kind { starlike, convex };

/// Parameters of one extremal function: the hyperbola parameter s in (0,1],
/// the z^n rotation index of the generating Schwarz monomial, and the jet
/// order to expand to.
struct ClassParams {
    double s = 0.5;
    int n_index = 1;
    std::size_t order = 32;

    void validate() const;
};

/// A class member: the normalized jet f (f0 = 0, f1 = 1), its transform
/// p = zf'/f (starlike) or 1 + zf''/f' (convex), and optionally the Schwarz
/// jet that generated it.
struct ClassMember {
    Kind kind = Kind::starlike;
    ClassParams params;
    TruncatedSeries f;
    TruncatedSeries p;
    std::optional<TruncatedSeries> omega;
};

/// A point of the boundary hyperbola rho = (2 cos(phi/s))^(-s).
struct HyperbolaPoint {
    double phi;
    double rho;
    Complex w;
};

/// Jet of (1 - z)^(-s): coefficient n is the Pochhammer ratio (s)_n / n!,
/// built by the stable running product q_n = q_{n-1} (s + n - 1)/n.
TruncatedSeries q_series(double s, std::size_t order);

/// Starlike extremal generated by omega = z^n: f = z exp(S) with S the
/// term-wise integral of (q_s(t^n) - 1)/t.
ClassMember phi_extremal(const ClassParams& params);

/// Convex extremal for the same data; coefficients are a_k / k of the
/// starlike extremal (Alexander relation).
ClassMember k_extremal(const ClassParams& params);

/// Builds a member from an arbitrary Schwarz jet omega (omega0 = 0):
/// p = q_s(omega), then the forward coefficient recursion
/// (n-1) a_n = sum_{k=1}^{n-1} p_{n-k} a_k, with d_n = a_n / n for convex.
ClassMember member_from_schwarz(Kind kind, double s, const TruncatedSeries& omega,
                                std::size_t order);

/// Membership predicate for the hyperbola domain: |w^(1/s) - 1| < |w|^(1/s),
/// principal branch. Points on the negative real axis (and the origin) are
/// rejected rather than silently branched.
bool point_in_domain(Complex w, double s);

/// Boundary parameterization; requires |phi| < pi*s/2.
HyperbolaPoint boundary_point(double s, double phi);

/// The rotated member z -> conj(mu) f(mu z) for unimodular mu; rotates f, p
/// and omega consistently.
ClassMember rotated(const ClassMember& m, Complex mu);

/// Recomputes the defining transform from f alone (zf'/f or 1 + zf''/f');
/// result has order one less than f.
TruncatedSeries transform_of(Kind kind, const TruncatedSeries& f);

} // namespace hypl
