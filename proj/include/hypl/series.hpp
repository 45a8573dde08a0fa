#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hypl/errors.hpp"

namespace hypl {

using Complex = std::complex<double>;

/// Division pivot: a divisor whose constant term is at or below this in
/// modulus yields a numerically meaningless quotient jet.
inline constexpr double kDivisionPivotTol = 1e-12;

/// Tolerance on |c0 - 1| for log/pow, which require a unit constant term.
inline constexpr double kUnitConstantTol = 1e-12;

/// Tolerance on |c0| for composition, which requires a vanishing inner
/// constant term.
inline constexpr double kInnerConstantTol = 1e-14;

/// A truncated complex power series (jet): coefficients c0..cN of a fixed
/// order N. Immutable value type; binary operations truncate the result to
/// the smaller operand order.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
    TruncatedSeries(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
        if (coeffs_.empty()) coeffs_.resize(1);
    }

    static TruncatedSeries from_coeffs(std::vector<Complex> coeffs);
    static TruncatedSeries constant(Complex c0, std::size_t order);
    /// z^k as a jet of the given order (zero jet if k > order).
    static TruncatedSeries monomial(std::size_t k, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    Complex operator[](std::size_t k) const { return coeffs_[k]; }
    Complex& operator[](std::size_t k) { return coeffs_[k]; }

    /// Truncates or zero-pads to a new order.
    TruncatedSeries resized(std::size_t new_order) const;
    /// Multiplies by z^k, keeping the order (top k coefficients drop off).
    TruncatedSeries shifted_up(std::size_t k) const;
    /// Divides by z, dropping c0; the order decreases by one.
    TruncatedSeries shifted_down() const;
    /// Coefficient-wise derivative; the order decreases by one.
    TruncatedSeries derivative() const;

    bool all_finite() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Long division; requires |b0| > kDivisionPivotTol.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

    friend TruncatedSeries operator*(Complex c, const TruncatedSeries& a);
    friend TruncatedSeries operator*(const TruncatedSeries& a, Complex c) { return c * a; }
    friend TruncatedSeries operator+(Complex c, const TruncatedSeries& a);
    friend TruncatedSeries operator+(const TruncatedSeries& a, Complex c) { return c + a; }

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Jet of outer(inner(z)); requires |inner0| <= kInnerConstantTol.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

TruncatedSeries exp_series(const TruncatedSeries& a);
/// Principal branch; requires a0 = 1 (callers normalize).
TruncatedSeries log_series(const TruncatedSeries& a);
/// exp(alpha * log a); requires a0 = 1.
TruncatedSeries pow_real(const TruncatedSeries& a, double alpha);

/// Compositional inverse of a normalized jet (f0 = 0, f1 = 1):
/// compose(f, revert(f)) is the identity jet up to the working order.
TruncatedSeries revert(const TruncatedSeries& f);

struct EvalResult {
    Complex value;
    double tail_bound;   // crude geometric bound on the dropped tail
    bool reliable;       // tail_bound <= tail_tol
};

/// Horner evaluation inside the unit disk (|z| < 1). The tail bound is
/// max |c_k| over the trailing coefficient window times |z|^(N+1)/(1-|z|).
EvalResult evaluate(const TruncatedSeries& a, Complex z, double tail_tol);

} // namespace hypl
