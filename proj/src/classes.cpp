#include "hypl/classes.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace hypl {

namespace {

void check_s(double s) {
    if (!(s > 0.0) || !(s <= 1.0)) throw BadS("s must lie in (0, 1]");
}

} // namespace

void ClassParams::validate() const {
    check_s(s);
    if (n_index < 1) throw BadIndex("n_index must be >= 1");
    if (order < 4) throw BadIndex("order must be >= 4");
}

TruncatedSeries q_series(double s, std::size_t order) {
    check_s(s);
    TruncatedSeries q(order);
    double c = 1.0;
    q[0] = 1.0;
    for (std::size_t n = 1; n <= order; ++n) {
        c *= (s + double(n) - 1.0) / double(n);
        q[n] = c;
    }
    return q;
}

ClassMember phi_extremal(const ClassParams& params) {
    params.validate();
    const std::size_t N = params.order;
    const std::size_t n = std::size_t(params.n_index);
    const TruncatedSeries q = q_series(params.s, N);

    // S(z) = sum_k q_k z^(nk) / (nk), the integral of (q(t^n)-1)/t.
    TruncatedSeries integral(N);
    for (std::size_t k = 1; n * k <= N; ++k) integral[n * k] = q[k] / double(n * k);
    const TruncatedSeries f = exp_series(integral).shifted_up(1);

    TruncatedSeries p(N);
    for (std::size_t k = 0; n * k <= N; ++k) p[n * k] = q[k];

    return {Kind::starlike, params, f, p, TruncatedSeries::monomial(n, N)};
}

ClassMember k_extremal(const ClassParams& params) {
    ClassMember st = phi_extremal(params);
    TruncatedSeries d(st.f.order());
    for (std::size_t k = 1; k <= st.f.order(); ++k) d[k] = st.f[k] / double(k);
    return {Kind::convex, params, d, st.p, st.omega};
}

ClassMember member_from_schwarz(Kind kind, double s, const TruncatedSeries& omega,
                                std::size_t order) {
    check_s(s);
    if (order < 4) throw BadIndex("order must be >= 4");
    if (std::abs(omega[0]) > kInnerConstantTol)
        throw InnerConstantNonzero("member_from_schwarz: omega(0) must be 0");
    const TruncatedSeries w = omega.resized(order);
    const TruncatedSeries p = compose(q_series(s, order), w);

    TruncatedSeries f(order);
    f[1] = 1.0;
    for (std::size_t m = 2; m <= order; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k < m; ++k) acc += p[m - k] * f[k];
        f[m] = acc / double(m - 1);
    }
    if (kind == Kind::convex)
        for (std::size_t m = 2; m <= order; ++m) f[m] /= double(m);

    return {kind, ClassParams{s, 1, order}, f, p, w};
}

bool point_in_domain(Complex w, double s) {
    check_s(s);
    if (w.imag() == 0.0 && w.real() <= 0.0)
        throw BranchCut("point_in_domain: w on the branch cut (-inf, 0]");
    const Complex root = std::pow(w, 1.0 / s);
    const double lhs = std::abs(root - 1.0);
    const double rhs = std::pow(std::abs(w), 1.0 / s);
    // strict inequality with an equality guard: boundary points, which land
    // within rounding of the equality locus, classify as outside
    return lhs < rhs - 1e-13 * std::max(1.0, rhs);
}

HyperbolaPoint boundary_point(double s, double phi) {
    check_s(s);
    const double limit = std::numbers::pi * s / 2.0;
    if (!(std::abs(phi) < limit))
        throw AngleOutOfRange("boundary_point: |phi| must be < pi*s/2");
    const double rho = std::pow(2.0 * std::cos(phi / s), -s);
    return {phi, rho, std::polar(rho, phi)};
}

ClassMember rotated(const ClassMember& m, Complex mu) {
    if (std::abs(std::abs(mu) - 1.0) > 1e-9)
        throw ParamOutOfDisk("rotated: mu must be unimodular");
    ClassMember r = m;
    // f: a_n -> mu^(n-1) a_n; p and omega: c_n -> mu^n c_n.
    Complex pw = 1.0;
    for (std::size_t k = 1; k <= m.f.order(); ++k) {
        r.f[k] = pw * m.f[k];
        pw *= mu;
    }
    pw = 1.0;
    for (std::size_t k = 0; k <= m.p.order(); ++k) {
        r.p[k] = pw * m.p[k];
        pw *= mu;
    }
    if (m.omega) {
        pw = 1.0;
        TruncatedSeries& w = *r.omega;
        for (std::size_t k = 0; k <= w.order(); ++k) {
            w[k] = pw * (*m.omega)[k];
            pw *= mu;
        }
    }
    return r;
}

TruncatedSeries transform_of(Kind kind, const TruncatedSeries& f) {
    assert(f.order() >= 2);
    const TruncatedSeries fp = f.derivative();
    if (kind == Kind::starlike) return fp / f.shifted_down();
    const TruncatedSeries zfpp = fp.derivative().resized(f.order() - 1).shifted_up(1);
    return Complex(1.0) + zfpp / fp;
}

} // namespace hypl
