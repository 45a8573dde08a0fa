#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hypl/functionals.hpp"

namespace hypl {

enum class Regime { left, middle, right, single };

/// A closed-form bound value together with the piecewise branch that fired,
/// the lambda break-points (when the bound is piecewise), and whether
/// attainment is claimed.
struct BoundResult {
    double value = 0.0;
    Regime regime = Regime::single;
    std::optional<std::pair<double, double>> thresholds;
    bool sharp = false;
    std::string extremal_hint;
};

/// Coefficient bound |a_n|: (s)_{n-1}/(n-1)! for starlike members,
/// (s)_{n-1}/n! for convex ones. No attainment is claimed.
BoundResult coeff_bound(Kind kind, double s, int n);

/// Piecewise Fekete-Szego bound for the given kind and target sequence.
/// Each of the six tables is transcribed on its own; the reduction
/// identities (z/f <-> 1-lambda, inverse <-> 2-lambda) are checked in tests
/// rather than used to derive the tables.
BoundResult fs_bound(Kind kind, FsTarget target, double s, double lambda);

/// Second Hankel determinant bound |a2 a4 - a3^2|: s^2/4 (starlike, sharp)
/// or s^2/36 (1 + 9 s^2 / (8 (s^2 + 3 s + 6))) (convex, no attainment claim).
BoundResult hankel22_bound(Kind kind, double s);

/// |w2 - t w1^2| <= max(1, |t|) over Schwarz functions, with the three-case
/// regime split at t = -1 and t = 1.
BoundResult schwarz_fs_bound(double t);

} // namespace hypl
