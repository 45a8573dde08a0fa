#include "hypl/bounds.hpp"

#include <cmath>

namespace hypl {

namespace {

void check_s(double s) {
    if (!(s > 0.0) || !(s <= 1.0)) throw BadS("s must lie in (0, 1]");
}

double pochhammer_over_factorial(double s, int m) {
    double v = 1.0;
    for (int k = 1; k <= m; ++k) v *= (s + double(k) - 1.0) / double(k);
    return v;
}

Regime classify(double lambda, double lo, double hi) {
    if (lambda < lo) return Regime::left;
    if (lambda > hi) return Regime::right;
    return Regime::middle;
}

} // namespace

BoundResult coeff_bound(Kind kind, double s, int n) {
    check_s(s);
    if (n < 2) throw BadIndex("coeff_bound: n must be >= 2");
    double v = pochhammer_over_factorial(s, n - 1);
    if (kind == Kind::convex) v /= double(n);
    return {v, Regime::single, std::nullopt, false, "no attainment claimed"};
}

BoundResult fs_bound(Kind kind, FsTarget target, double s, double lambda) {
    check_s(s);
    double lo, hi, value;
    const bool st = kind == Kind::starlike;

    if (st && target == FsTarget::f) {
        lo = (3.0 * s - 1.0) / (4.0 * s);
        hi = (3.0 * s + 3.0) / (4.0 * s);
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = -s * s * (lambda - (3.0 * s + 1.0) / (4.0 * s)); break;
            case Regime::right: value = s * s * (lambda - (3.0 * s + 1.0) / (4.0 * s)); break;
            default:            value = s / 2.0; break;
        }
    } else if (st && target == FsTarget::z_over_f) {
        lo = (s - 3.0) / (4.0 * s);
        hi = (s + 1.0) / (4.0 * s);
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = s * s * ((s - 1.0) / (4.0 * s) - lambda); break;
            case Regime::right: value = s * s * (lambda - (s - 1.0) / (4.0 * s)); break;
            default:            value = s / 2.0; break;
        }
    } else if (st && target == FsTarget::inverse) {
        lo = (5.0 * s - 3.0) / (4.0 * s);
        hi = (5.0 * s + 1.0) / (4.0 * s);
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = s * s * ((5.0 * s - 1.0) / (4.0 * s) - lambda); break;
            case Regime::right: value = s * s * (lambda - (5.0 * s - 1.0) / (4.0 * s)); break;
            default:            value = s / 2.0; break;
        }
    } else if (!st && target == FsTarget::f) {
        lo = (3.0 * s - 1.0) / (3.0 * s);
        hi = (s + 1.0) / s;
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = -(s * s / 4.0) * (lambda - (3.0 * s + 1.0) / (3.0 * s)); break;
            case Regime::right: value = (s * s / 4.0) * (lambda - (3.0 * s + 1.0) / (3.0 * s)); break;
            default:            value = s / 6.0; break;
        }
    } else if (!st && target == FsTarget::z_over_f) {
        lo = -1.0 / s;
        hi = 1.0 / (3.0 * s);
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = -(s * s / 4.0) * (lambda + 1.0 / (3.0 * s)); break;
            case Regime::right: value = (s * s / 4.0) * (lambda + 1.0 / (3.0 * s)); break;
            default:            value = s / 6.0; break;
        }
    } else {  // convex, inverse
        lo = (s - 1.0) / s;
        hi = (3.0 * s + 1.0) / (3.0 * s);
        switch (classify(lambda, lo, hi)) {
            case Regime::left:  value = (s * s / 4.0) * ((3.0 * s - 1.0) / (3.0 * s) - lambda); break;
            case Regime::right: value = (s * s / 4.0) * (lambda - (3.0 * s - 1.0) / (3.0 * s)); break;
            default:            value = s / 6.0; break;
        }
    }

    const Regime regime = classify(lambda, lo, hi);
    std::string hint;
    if (regime == Regime::middle) {
        hint = st ? "rotations of phi_extremal(s, 2); f_x/g_x families at the thresholds"
                  : "rotations of k_extremal(s, 2); F_x/G_x families at the thresholds";
    } else {
        hint = st ? "rotations of phi_extremal(s, 1)" : "rotations of k_extremal(s, 1)";
    }
    return {value, regime, std::make_pair(lo, hi), true, hint};
}

BoundResult hankel22_bound(Kind kind, double s) {
    check_s(s);
    if (kind == Kind::starlike)
        return {s * s / 4.0, Regime::single, std::nullopt, true,
                "rotations of phi_extremal(s, 2)"};
    const double d = s * s + 3.0 * s + 6.0;
    return {(s * s / 36.0) * (1.0 + 9.0 * s * s / (8.0 * d)), Regime::single,
            std::nullopt, false, "no attainment claimed"};
}

BoundResult schwarz_fs_bound(double t) {
    double value;
    Regime regime;
    if (t < -1.0) { value = -t; regime = Regime::left; }
    else if (t > 1.0) { value = t; regime = Regime::right; }
    else { value = 1.0; regime = Regime::middle; }
    std::string hint = regime == Regime::middle
        ? "omega = z^2 and rotations; x-families at t = -1, +1"
        : "omega = z and rotations";
    return {value, regime, std::make_pair(-1.0, 1.0), true, hint};
}

} // namespace hypl
