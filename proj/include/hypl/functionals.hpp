#pragma once

#include <vector>

#include "hypl/classes.hpp"

namespace hypl {

enum class FunctionalName { an, fs, fs_zf, fs_inv, hankel, log_coeff };

/// Which coefficient sequence a Fekete-Szego functional is taken over:
/// the function itself, the reciprocal z/f, or the compositional inverse.
enum class FsTarget { f, z_over_f, inverse };

/// An evaluated coefficient functional: the raw complex value plus its
/// modulus (the bounded quantity), and the parameters it was taken at.
struct FunctionalValue {
    FunctionalName name;
    Complex raw;
    double value;       // |raw|
    int n = 0;
    int q = 0;
    double lambda = 0.0;
};

/// n-th Taylor coefficient of m.f (1 <= n <= order).
Complex coefficient(const ClassMember& m, std::size_t n);

/// a3 - lambda a2^2 on the stored coefficients (kind-agnostic); lambda is
/// real, as in the bounds.
FunctionalValue fekete_szego(const ClassMember& m, double lambda);

/// Fekete-Szego over a derived coefficient sequence; z/f and inverse
/// coefficients are produced by series division / reversion, not by the
/// closed-form maps.
FunctionalValue fekete_szego_target(const ClassMember& m, FsTarget target, double lambda);

/// Determinant of the q x q matrix [a_{n+i+j}] with a1 = 1; direct cofactor
/// expansion for q <= 3, LU with partial pivoting above.
FunctionalValue hankel(const ClassMember& m, int q, int n);

/// Coefficients b_1..b_count of z/f(z) = 1 + sum b_n z^n.
std::vector<Complex> z_over_f_coeffs(const ClassMember& m, std::size_t count);

/// Coefficients A_1..A_count of the inverse function f^{-1}(w) = w + sum A_n w^n.
std::vector<Complex> inverse_coeffs(const ClassMember& m, std::size_t count);

/// Logarithmic coefficients gamma_1..gamma_count from log(f/z) = 2 sum gamma_n z^n.
/// Exposed for exploration; nothing is asserted about their size.
std::vector<Complex> log_coeffs(const ClassMember& m, std::size_t count);

} // namespace hypl
