#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hypl/classes.hpp"
#include "oracles.hpp"

using namespace hypl;
using oracles::max_coeff_dist;

namespace {

// Printed closed forms of the first starlike extremal coefficients (n = 1).
double phi_a2(double s) { return s; }
double phi_a3(double s) { return (3.0 * s * s + s) / 4.0; }
double phi_a4(double s) { return (4.0 * s + 15.0 * s * s + 17.0 * s * s * s) / 36.0; }

} // namespace

TEST_CASE("q_series: limits, frozen values, monotonicity") {
    const TruncatedSeries q1 = q_series(1.0, 12);
    for (std::size_t k = 0; k <= 12; ++k) CHECK(std::abs(q1[k] - 1.0) < 1e-15);

    const TruncatedSeries qh = q_series(0.5, 6);
    CHECK(std::abs(qh[0] - 1.0) == 0.0);
    CHECK(std::abs(qh[1] - 0.5) < 1e-15);
    CHECK(std::abs(qh[2] - 0.375) < 1e-15);
    CHECK(std::abs(qh[3] - 0.3125) < 1e-15);
    CHECK(std::abs(qh[4] - 0.2734375) < 1e-15);

    for (double s : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const TruncatedSeries q = q_series(s, 64);
        for (std::size_t k = 1; k <= 64; ++k) CHECK(std::abs(q[k]) < std::abs(q[k - 1]));
    }

    CHECK_THROWS_AS(q_series(0.0, 4), BadS);
    CHECK_THROWS_AS(q_series(1.5, 4), BadS);
}

TEST_CASE("phi_extremal: printed coefficients at n = 1") {
    for (double s : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        const ClassMember m = phi_extremal({s, 1, 16});
        CHECK(std::abs(m.f[1] - 1.0) == 0.0);
        CHECK(std::abs(m.f[2] - phi_a2(s)) < 1e-13);
        CHECK(std::abs(m.f[3] - phi_a3(s)) < 1e-13);
        CHECK(std::abs(m.f[4] - phi_a4(s)) < 1e-13);
    }
}

TEST_CASE("phi_extremal: s = 1 solves to the geometric jet") {
    const ClassMember m = phi_extremal({1.0, 1, 32});
    for (std::size_t k = 1; k <= 32; ++k) CHECK(std::abs(m.f[k] - 1.0) < 1e-12);
}

TEST_CASE("phi_extremal: n = 2 sparse coefficients") {
    const ClassMember m = phi_extremal({0.5, 2, 8});
    CHECK(std::abs(m.f[2]) == 0.0);
    CHECK(std::abs(m.f[3] - 0.25) < 1e-14);
    CHECK(std::abs(m.f[4]) == 0.0);
    CHECK(std::abs(m.f[5] - 0.125) < 1e-14);
}

TEST_CASE("phi_extremal: jet identity z f' = p f") {
    for (double s : {0.25, 0.6, 1.0})
        for (int n : {1, 2, 3}) {
            const ClassMember m = phi_extremal({s, n, 24});
            const TruncatedSeries zfp =
                TruncatedSeries::monomial(1, 24) * m.f.derivative().resized(24);
            CHECK(max_coeff_dist(zfp, m.p * m.f) < 1e-10);
            CHECK(max_coeff_dist(transform_of(Kind::starlike, m.f), m.p) < 1e-10);
        }
}

TEST_CASE("k_extremal: printed coefficients and the log limit") {
    for (double s : {0.25, 0.5, 1.0}) {
        const ClassMember m = k_extremal({s, 1, 16});
        CHECK(std::abs(m.f[2] - s / 2.0) < 1e-14);
        CHECK(std::abs(m.f[3] - (3.0 * s * s + s) / 12.0) < 1e-14);
        CHECK(std::abs(m.f[4] - (4.0 * s + 15.0 * s * s + 17.0 * s * s * s) / 144.0) < 1e-14);
    }

    const ClassMember log_jet = k_extremal({1.0, 1, 32});
    for (std::size_t k = 1; k <= 32; ++k)
        CHECK(std::abs(log_jet.f[k] - 1.0 / double(k)) < 1e-12);

    const ClassMember m = k_extremal({0.5, 2, 8});
    CHECK(std::abs(m.f[3] - 0.5 / 6.0) < 1e-14);

    // convex transform identity
    CHECK(max_coeff_dist(transform_of(Kind::convex, m.f), m.p) < 1e-10);
}

TEST_CASE("Alexander relation: k * (convex coeff k) equals starlike coeff k") {
    for (double s : {0.25, 0.5, 0.75, 1.0})
        for (int n : {1, 2, 3}) {
            const ClassMember st = phi_extremal({s, n, 24});
            const ClassMember cv = k_extremal({s, n, 24});
            for (std::size_t k = 1; k <= 24; ++k) {
                const Complex lhs = double(k) * cv.f[k];
                CHECK(std::abs(lhs - st.f[k]) <= 1e-12 * std::max(1.0, std::abs(st.f[k])));
            }
        }
}

TEST_CASE("member_from_schwarz: monomial omegas reproduce the extremals") {
    for (double s : {0.3, 0.5, 0.9})
        for (int n : {1, 2}) {
            const ClassMember direct = phi_extremal({s, n, 16});
            const ClassMember built = member_from_schwarz(
                Kind::starlike, s, TruncatedSeries::monomial(std::size_t(n), 16), 16);
            CHECK(max_coeff_dist(direct.f, built.f) < 1e-12);
            const ClassMember cv = member_from_schwarz(
                Kind::convex, s, TruncatedSeries::monomial(std::size_t(n), 16), 16);
            CHECK(max_coeff_dist(k_extremal({s, n, 16}).f, cv.f) < 1e-12);
        }
}

TEST_CASE("member_from_schwarz: Mobius omega leading coefficient") {
    // omega = z(z+x)/(1+xz) with x = 0.3 has w1 = x, so a2 = s*w1 = 0.15.
    const double x = 0.3, s = 0.5;
    const std::size_t order = 12;
    const TruncatedSeries num = TruncatedSeries::monomial(2, order)
        + Complex(x) * TruncatedSeries::monomial(1, order);
    const TruncatedSeries den = TruncatedSeries::constant(1.0, order)
        + Complex(x) * TruncatedSeries::monomial(1, order);
    const ClassMember m = member_from_schwarz(Kind::starlike, s, num / den, order);
    CHECK(std::abs(m.f[2] - 0.15) < 1e-14);
    CHECK(max_coeff_dist(transform_of(Kind::starlike, m.f), m.p) < 1e-10);
    // p is the composition of q_s with omega by construction
    CHECK(max_coeff_dist(m.p, compose(q_series(s, order), *m.omega)) == 0.0);

    CHECK_THROWS_AS(member_from_schwarz(Kind::starlike, s,
                                        TruncatedSeries::constant(0.1, 8), 8),
                    InnerConstantNonzero);
    CHECK_THROWS_AS(member_from_schwarz(Kind::starlike, 2.0,
                                        TruncatedSeries::monomial(1, 8), 8),
                    BadS);
}

TEST_CASE("point_in_domain: interior, exterior, boundary, branch cut") {
    CHECK(point_in_domain(1.0, 0.25));
    CHECK(point_in_domain(1.0, 1.0));
    CHECK(!point_in_domain(Complex(0.1, 0.0), 0.5));

    const HyperbolaPoint vertex = boundary_point(0.5, 0.0);
    CHECK(!point_in_domain(vertex.w, 0.5));  // equality locus counts as outside

    CHECK_THROWS_AS(point_in_domain(Complex(-1.0, 0.0), 0.5), BranchCut);
    CHECK_THROWS_AS(point_in_domain(Complex(0.0, 0.0), 0.5), BranchCut);
}

TEST_CASE("boundary_point: vertex values, symmetry, defining relation") {
    CHECK(std::abs(boundary_point(0.5, 0.0).rho - std::pow(2.0, -0.5)) < 1e-15);
    CHECK(std::abs(boundary_point(1.0, 0.0).rho - 0.5) < 1e-15);

    const double phi = 0.7853981;
    CHECK(std::abs(boundary_point(0.9, phi).rho - boundary_point(0.9, -phi).rho) < 1e-15);

    // rho (2 cos(phi/s))^s = 1 and w = rho e^{i phi}
    for (double s : {0.3, 0.7, 1.0})
        for (double p : {-0.3 * s, 0.0, 0.4 * s}) {
            const HyperbolaPoint pt = boundary_point(s, p);
            CHECK(std::abs(pt.rho * std::pow(2.0 * std::cos(p / s), s) - 1.0) < 1e-12);
            CHECK(std::abs(pt.w - std::polar(pt.rho, pt.phi)) == 0.0);
        }

    CHECK_THROWS_AS(boundary_point(0.5, 0.8), AngleOutOfRange);
}

TEST_CASE("boundary_point: images sit on the equality locus") {
    for (double s : {0.25, 0.5, 0.75, 1.0}) {
        const double limit = 0.98 * std::numbers::pi * s / 2.0;
        for (int k = 0; k < 100; ++k) {
            const double phi = limit * (2.0 * (double(k) + 0.5) / 100.0 - 1.0);
            const HyperbolaPoint pt = boundary_point(s, phi);
            const double lhs = std::abs(std::pow(pt.w, 1.0 / s) - 1.0);
            const double rhs = std::pow(std::abs(pt.w), 1.0 / s);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, rhs));
        }
    }
}

TEST_CASE("q_series circle images stay inside the domain") {
    for (double s : {0.25, 0.5, 1.0}) {
        const TruncatedSeries q = q_series(s, 512);
        for (double r : {0.5, 0.95}) {
            for (int k = 0; k < 360; ++k) {
                const double th = 2.0 * std::numbers::pi * double(k) / 360.0;
                const EvalResult e = evaluate(q, std::polar(r, th), 1e-8);
                CHECK(e.reliable);
                CHECK(point_in_domain(e.value, s));
            }
        }
    }
}

TEST_CASE("rotated: transform stays consistent") {
    const ClassMember m = phi_extremal({0.5, 1, 16});
    const Complex mu = std::polar(1.0, 0.37);
    const ClassMember r = rotated(m, mu);
    CHECK(max_coeff_dist(transform_of(Kind::starlike, r.f), r.p) < 1e-10);
    CHECK(std::abs(r.f[1] - 1.0) < 1e-15);
    CHECK_THROWS_AS(rotated(m, Complex(0.5, 0.0)), ParamOutOfDisk);
}

TEST_CASE("ClassParams validation") {
    CHECK_THROWS_AS(phi_extremal({0.5, 0, 16}), BadIndex);
    CHECK_THROWS_AS(phi_extremal({0.5, 1, 3}), BadIndex);
    CHECK_THROWS_AS(phi_extremal({-0.5, 1, 16}), BadS);
}
