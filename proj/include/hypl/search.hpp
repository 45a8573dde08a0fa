#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hypl/bounds.hpp"

namespace hypl {

/// Leading Schwarz data (w1, xi, zeta), all in the closed unit disk, with
/// the induced second and third coefficients. The derivation uses the
/// rotation-covariant admissible form
///   w2 = xi (1 - |w1|^2)
///   w3 = (1 - |w1|^2)(1 - |xi|^2) zeta - conj(w1) (1 - |w1|^2) xi^2,
/// which parameterizes exactly the triples realized by Schwarz functions.
struct SchwarzPrefix {
    Complex w1, xi, zeta;
    Complex w2, w3;

    static SchwarzPrefix from_params(Complex w1, Complex xi, Complex zeta);
};

enum class Functional { fs, hankel22, coeff };

/// Which functional a search evaluates, and at which parameters.
struct FunctionalSpec {
    Functional functional = Functional::fs;
    FsTarget target = FsTarget::f;
    double lambda = 0.0;  // fs only
};

/// Evaluates the functional modulus straight from the coefficient maps
/// a2 = s w1, a3 = (s/2)(w2 + (3s+1)/2 w1^2),
/// a4 = (s/3)(w3 + (5s+2)/2 w1 w2 + (17s^2+15s+4)/12 w1^3)
/// (divided by 2, 3, 4 for convex members); no series construction.
double functional_from_triple(Kind kind, double s, Complex w1, Complex w2, Complex w3,
                              const FunctionalSpec& spec);

double prefix_functional(Kind kind, double s, const SchwarzPrefix& prefix,
                         const FunctionalSpec& spec);

struct CampaignConfig {
    Functional functional = Functional::fs;
    Kind kind = Kind::starlike;
    FsTarget target = FsTarget::f;
    std::vector<double> s_grid;
    std::vector<double> lambda_grid;  // fs campaigns
    int n_max = 10;                   // coeff campaigns: bounds checked for n = 2..n_max
    int samples = 1;
    int refine_steps = 3;             // coordinate-descent sweeps of golden-section refinement
    std::uint64_t seed = 0;
    double tol_attain = 1e-3;
    double tol_violate = 1e-9;

    void validate() const;
};

struct PrefixArgmax {
    Complex w1, xi, zeta;
};

struct BlaschkeArgmax {
    Complex c;
    std::vector<Complex> zeros;  // up to 3
};

using Argmax = std::variant<PrefixArgmax, BlaschkeArgmax>;

struct CampaignRow {
    double s = 0.0;
    std::optional<double> lambda;
    std::optional<int> n;
    BoundResult bound;
    double sup_found = 0.0;
    double gap = 0.0;        // bound - sup_found
    bool violated = false;   // sup_found > bound + tol_violate
    bool attained = false;   // gap <= tol_attain
    Argmax argmax;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<CampaignRow> rows;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;  // diagnostics only; never serialized
};

/// Runs one verification campaign: per grid point, evaluates the named
/// extremal candidates, draws `samples` random parameter points, then
/// refines the incumbent coordinate-wise by golden section. Deterministic
/// given the seed; each grid point owns a private RNG stream.
CampaignReport run_campaign(const CampaignConfig& cfg);

enum class RotationWhich { f_x, g_x, F_x, G_x };

/// Member generated by omega(z) = +-z(z+x)/(1+xz), x in [0,1]:
/// g_x/G_x take the plus sign, f_x/F_x the minus sign; f_x/g_x are starlike,
/// F_x/G_x convex.
ClassMember rotation_family(RotationWhich which, double s, double x, std::size_t order);

/// Member generated by the genuine Schwarz map
/// omega(z) = c z prod_i (z + x_i)/(1 + conj(x_i) z), |c| <= 1, |x_i| < 1,
/// at most 3 zeros.
ClassMember blaschke_member(Kind kind, double s, Complex c,
                            const std::vector<Complex>& zeros, std::size_t order);

} // namespace hypl
