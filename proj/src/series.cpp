#include "hypl/series.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace hypl {

namespace {

std::size_t common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}

void require_finite(const TruncatedSeries& s, const char* op) {
    if (!s.all_finite())
        throw NonFinite(std::string(op) + ": non-finite coefficient in result");
}

} // namespace

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Complex> coeffs) {
    TruncatedSeries s;
    if (coeffs.empty()) coeffs.resize(1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::constant(Complex c0, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c0;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, std::size_t order) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = 1.0;
    return s;
}

TruncatedSeries TruncatedSeries::resized(std::size_t new_order) const {
    TruncatedSeries s(new_order);
    const std::size_t n = std::min(new_order, order());
    std::copy_n(coeffs_.begin(), n + 1, s.coeffs_.begin());
    return s;
}

TruncatedSeries TruncatedSeries::shifted_up(std::size_t k) const {
    TruncatedSeries s(order());
    for (std::size_t j = k; j <= order(); ++j) s.coeffs_[j] = coeffs_[j - k];
    return s;
}

TruncatedSeries TruncatedSeries::shifted_down() const {
    assert(order() >= 1);
    TruncatedSeries s(order() - 1);
    for (std::size_t j = 0; j < order(); ++j) s.coeffs_[j] = coeffs_[j + 1];
    return s;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) return TruncatedSeries{0.0};
    TruncatedSeries s(order() - 1);
    for (std::size_t j = 1; j <= order(); ++j) s.coeffs_[j - 1] = double(j) * coeffs_[j];
    return s;
}

bool TruncatedSeries::all_finite() const {
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] + b[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) r[k] = a[k] - b[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) r[k] = -a[k];
    return r;
}

TruncatedSeries operator*(Complex c, const TruncatedSeries& a) {
    TruncatedSeries r(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) r[k] = c * a[k];
    return r;
}

TruncatedSeries operator+(Complex c, const TruncatedSeries& a) {
    TruncatedSeries r = a;
    r[0] += c;
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = common_order(a, b);
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i <= k; ++i) acc += a[i] * b[k - i];
        r[k] = acc;
    }
    require_finite(r, "mul");
    return r;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (std::abs(b[0]) <= kDivisionPivotTol)
        throw ZeroConstantTerm("div: divisor constant term below pivot tolerance");
    const std::size_t n = common_order(a, b);
    TruncatedSeries q(n);
    q[0] = a[0] / b[0];
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = a[m];
        for (std::size_t k = 1; k <= m; ++k) acc -= b[k] * q[m - k];
        q[m] = acc / b[0];
    }
    require_finite(q, "div");
    return q;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) { return a / b; }

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (std::abs(inner[0]) > kInnerConstantTol)
        throw InnerConstantNonzero("compose: inner constant term must vanish");
    const std::size_t n = common_order(outer, inner);
    const TruncatedSeries in = inner.resized(n);
    // Horner in the jet algebra; inner0 = 0 keeps every step order-exact.
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (std::size_t j = n; j-- > 0;) {
        acc = acc * in;
        acc[0] += outer[j];
    }
    require_finite(acc, "compose");
    return acc;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    const std::size_t n = a.order();
    TruncatedSeries e(n);
    e[0] = std::exp(a[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) acc += double(k) * a[k] * e[m - k];
        e[m] = acc / double(m);
    }
    require_finite(e, "exp_series");
    return e;
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    if (std::abs(a[0] - 1.0) > kUnitConstantTol)
        throw NotUnitConstantTerm("log_series: constant term must be 1");
    const std::size_t n = a.order();
    TruncatedSeries l(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Complex acc = 0.0;
        for (std::size_t j = 1; j < m; ++j) acc += double(j) * l[j] * a[m - j];
        l[m] = a[m] - acc / double(m);
    }
    require_finite(l, "log_series");
    return l;
}

TruncatedSeries pow_real(const TruncatedSeries& a, double alpha) {
    if (std::abs(a[0] - 1.0) > kUnitConstantTol)
        throw NotUnitConstantTerm("pow_real: constant term must be 1");
    return exp_series(Complex(alpha) * log_series(a));
}

TruncatedSeries revert(const TruncatedSeries& f) {
    if (f.order() < 1 || std::abs(f[0]) > 1e-12 || std::abs(f[1] - 1.0) > 1e-12)
        throw NotNormalized("revert: requires f0 = 0 and f1 = 1");
    const std::size_t n = f.order();
    TruncatedSeries g(n);
    g[1] = 1.0;
    // Coefficient m of f(g) is g_m plus terms in g_1..g_{m-1}; zero it out.
    for (std::size_t m = 2; m <= n; ++m) {
        const TruncatedSeries h = compose(f.resized(m), g.resized(m));
        g[m] = -h[m];
    }
    require_finite(g, "revert");
    return g;
}

EvalResult evaluate(const TruncatedSeries& a, Complex z, double tail_tol) {
    const double r = std::abs(z);
    if (r >= 1.0) throw OutsideDisk("evaluate: |z| must be < 1");
    const std::size_t n = a.order();
    Complex v = a[n];
    for (std::size_t k = n; k-- > 0;) v = v * z + a[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NonFinite("evaluate: non-finite value");

    const std::size_t window = std::min<std::size_t>(8, n + 1);
    double m = 0.0;
    for (std::size_t k = n + 1 - window; k <= n; ++k) m = std::max(m, std::abs(a[k]));
    const double tail = m * std::pow(r, double(n + 1)) / (1.0 - r);
    return {v, tail, tail <= tail_tol};
}

} // namespace hypl
