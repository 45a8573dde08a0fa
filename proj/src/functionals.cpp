#include "hypl/functionals.hpp"

#include <cmath>
#include <utility>

namespace hypl {

namespace {

void require_order(const ClassMember& m, std::size_t needed, const char* op) {
    if (m.f.order() < needed)
        throw OrderExceeded(std::string(op) + ": jet order too small");
}

FunctionalValue make_value(FunctionalName name, Complex raw) {
    return {name, raw, std::abs(raw)};
}

// Determinant by LU with partial pivoting; dim small (Hankel blocks).
Complex lu_det(std::vector<Complex> m, int dim) {
    Complex det = 1.0;
    for (int col = 0; col < dim; ++col) {
        int pivot = col;
        double best = std::abs(m[std::size_t(col) * dim + col]);
        for (int r = col + 1; r < dim; ++r) {
            const double v = std::abs(m[std::size_t(r) * dim + col]);
            if (v > best) { best = v; pivot = r; }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int c = 0; c < dim; ++c)
                std::swap(m[std::size_t(pivot) * dim + c], m[std::size_t(col) * dim + c]);
            det = -det;
        }
        const Complex d = m[std::size_t(col) * dim + col];
        det *= d;
        for (int r = col + 1; r < dim; ++r) {
            const Complex factor = m[std::size_t(r) * dim + col] / d;
            for (int c = col; c < dim; ++c)
                m[std::size_t(r) * dim + c] -= factor * m[std::size_t(col) * dim + c];
        }
    }
    return det;
}

} // namespace

Complex coefficient(const ClassMember& m, std::size_t n) {
    if (n < 1 || n > m.f.order())
        throw OrderExceeded("coefficient: n outside 1..order");
    return m.f[n];
}

FunctionalValue fekete_szego(const ClassMember& m, double lambda) {
    require_order(m, 3, "fekete_szego");
    const Complex a2 = m.f[2], a3 = m.f[3];
    FunctionalValue v = make_value(FunctionalName::fs, a3 - lambda * a2 * a2);
    v.lambda = lambda;
    return v;
}

FunctionalValue fekete_szego_target(const ClassMember& m, FsTarget target, double lambda) {
    if (target == FsTarget::f) return fekete_szego(m, lambda);
    if (target == FsTarget::z_over_f) {
        const auto b = z_over_f_coeffs(m, 2);
        FunctionalValue v = make_value(FunctionalName::fs_zf, b[1] - lambda * b[0] * b[0]);
        v.lambda = lambda;
        return v;
    }
    const auto a = inverse_coeffs(m, 3);  // A1..A3
    FunctionalValue v = make_value(FunctionalName::fs_inv, a[2] - lambda * a[1] * a[1]);
    v.lambda = lambda;
    return v;
}

FunctionalValue hankel(const ClassMember& m, int q, int n) {
    if (q < 1 || n < 1) throw OrderExceeded("hankel: q and n must be >= 1");
    require_order(m, std::size_t(n + 2 * q - 2), "hankel");
    const auto a = [&](int k) { return m.f[std::size_t(k)]; };  // a1 = 1 by normalization

    Complex det;
    if (q == 1) {
        det = a(n);
    } else if (q == 2) {
        det = a(n) * a(n + 2) - a(n + 1) * a(n + 1);
    } else if (q == 3) {
        det = a(n) * (a(n + 2) * a(n + 4) - a(n + 3) * a(n + 3))
            - a(n + 1) * (a(n + 1) * a(n + 4) - a(n + 3) * a(n + 2))
            + a(n + 2) * (a(n + 1) * a(n + 3) - a(n + 2) * a(n + 2));
    } else {
        std::vector<Complex> mat(std::size_t(q) * q);
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) mat[std::size_t(i) * q + j] = a(n + i + j);
        det = lu_det(std::move(mat), q);
    }
    FunctionalValue v = make_value(FunctionalName::hankel, det);
    v.q = q;
    v.n = n;
    return v;
}

std::vector<Complex> z_over_f_coeffs(const ClassMember& m, std::size_t count) {
    if (count > m.f.order() - 1)
        throw OrderExceeded("z_over_f_coeffs: count exceeds order - 1");
    const TruncatedSeries u = m.f.shifted_down();  // f/z, unit constant term
    const TruncatedSeries g = TruncatedSeries::constant(1.0, u.order()) / u;
    std::vector<Complex> b(count);
    for (std::size_t k = 0; k < count; ++k) b[k] = g[k + 1];
    return b;
}

std::vector<Complex> inverse_coeffs(const ClassMember& m, std::size_t count) {
    if (count > m.f.order())
        throw OrderExceeded("inverse_coeffs: count exceeds order");
    const TruncatedSeries g = revert(m.f);
    std::vector<Complex> a(count);
    for (std::size_t k = 0; k < count; ++k) a[k] = g[k + 1];
    return a;
}

std::vector<Complex> log_coeffs(const ClassMember& m, std::size_t count) {
    if (count > m.f.order() - 1)
        throw OrderExceeded("log_coeffs: count exceeds order - 1");
    const TruncatedSeries l = log_series(m.f.shifted_down());
    std::vector<Complex> g(count);
    for (std::size_t k = 0; k < count; ++k) g[k] = 0.5 * l[k + 1];
    return g;
}

} // namespace hypl
