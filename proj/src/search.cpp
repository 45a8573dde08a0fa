#include "hypl/search.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>

#include "hypl/rng.hpp"

namespace hypl {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kCandidatePhases = 32;
constexpr int kCandidateXPoints = 33;
constexpr int kGoldenIters = 40;

void check_disk(Complex v, const char* what) {
    if (std::abs(v) > 1.0 + 1e-12)
        throw ParamOutOfDisk(std::string(what) + " must lie in the closed unit disk");
}

} // namespace

SchwarzPrefix SchwarzPrefix::from_params(Complex w1, Complex xi, Complex zeta) {
    check_disk(w1, "w1");
    check_disk(xi, "xi");
    check_disk(zeta, "zeta");
    const double m1 = std::norm(w1);
    const Complex w2 = xi * (1.0 - m1);
    const Complex w3 = (1.0 - m1) * (1.0 - std::norm(xi)) * zeta
                     - std::conj(w1) * (1.0 - m1) * xi * xi;
    return {w1, xi, zeta, w2, w3};
}

double functional_from_triple(Kind kind, double s, Complex w1, Complex w2, Complex w3,
                              const FunctionalSpec& spec) {
    const Complex a2 = s * w1;
    const Complex a3 = 0.5 * s * (w2 + 0.5 * (3.0 * s + 1.0) * w1 * w1);
    const Complex a4 = (s / 3.0) * (w3 + 0.5 * (5.0 * s + 2.0) * w1 * w2
                                    + ((17.0 * s * s + 15.0 * s + 4.0) / 12.0) * w1 * w1 * w1);
    Complex c2 = a2, c3 = a3, c4 = a4;
    if (kind == Kind::convex) {
        c2 /= 2.0;
        c3 /= 3.0;
        c4 /= 4.0;
    }
    switch (spec.functional) {
        case Functional::fs:
            switch (spec.target) {
                case FsTarget::f:
                    return std::abs(c3 - spec.lambda * c2 * c2);
                case FsTarget::z_over_f: {
                    const Complex b1 = -c2, b2 = c2 * c2 - c3;
                    return std::abs(b2 - spec.lambda * b1 * b1);
                }
                case FsTarget::inverse: {
                    const Complex i2 = -c2, i3 = 2.0 * c2 * c2 - c3;
                    return std::abs(i3 - spec.lambda * i2 * i2);
                }
            }
            break;
        case Functional::hankel22:
            return std::abs(c2 * c4 - c3 * c3);
        case Functional::coeff:
            break;
    }
    throw ConfigInvalid("functional_from_triple: functional needs a full member");
}

double prefix_functional(Kind kind, double s, const SchwarzPrefix& prefix,
                         const FunctionalSpec& spec) {
    return functional_from_triple(kind, s, prefix.w1, prefix.w2, prefix.w3, spec);
}

void CampaignConfig::validate() const {
    if (s_grid.empty()) throw ConfigInvalid("campaign: s grid is empty");
    for (double s : s_grid)
        if (!(s > 0.0) || !(s <= 1.0)) throw ConfigInvalid("campaign: s grid value outside (0, 1]");
    if (functional == Functional::fs && lambda_grid.empty())
        throw ConfigInvalid("campaign: fs needs a lambda grid");
    if (functional == Functional::coeff && n_max < 2)
        throw ConfigInvalid("campaign: n_max must be >= 2");
    if (samples < 1) throw ConfigInvalid("campaign: samples must be >= 1");
    if (refine_steps < 0) throw ConfigInvalid("campaign: refine_steps must be >= 0");
    if (!(tol_attain > 0.0) || !(tol_violate > 0.0))
        throw ConfigInvalid("campaign: tolerances must be positive");
}

namespace {

using ParamVec = std::vector<double>;
using ObjectiveFn = std::function<double(const ParamVec&)>;

struct SearchSpace {
    ParamVec lo, hi;
    ObjectiveFn value;
};

// Golden-section maximization of a 1-d slice; returns (arg, value) of the
// best bracket point seen.
std::pair<double, double> golden_max(const std::function<double(double)>& g,
                                     double lo, double hi, int iters) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = g(c), fd = g(d);
    for (int i = 0; i < iters; ++i) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - invphi * (b - a);
            fc = g(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + invphi * (b - a);
            fd = g(d);
        }
    }
    return fc > fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

void refine_coordinatewise(const SearchSpace& sp, ParamVec& best_p, double& best_v,
                           int sweeps) {
    if (best_p.empty()) return;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (std::size_t dim = 0; dim < best_p.size(); ++dim) {
            auto slice = [&](double x) {
                ParamVec p = best_p;
                p[dim] = x;
                return sp.value(p);
            };
            const auto [x, v] = golden_max(slice, sp.lo[dim], sp.hi[dim], kGoldenIters);
            if (v > best_v) {
                best_v = v;
                best_p[dim] = x;
            }
        }
    }
}

// ---- prefix-space campaigns (fs, hankel22) --------------------------------

SchwarzPrefix prefix_from_params(const ParamVec& p) {
    return SchwarzPrefix::from_params(std::polar(p[0], p[1]),
                                      std::polar(p[2], p[3]),
                                      std::polar(p[4], p[5]));
}

// Named extremal configurations: rotations of the n=1 and n=2 extremals and
// the f_x/g_x threshold families, all expressed as (r, theta) parameters.
std::vector<ParamVec> prefix_candidates() {
    std::vector<ParamVec> out;
    out.reserve(2 * kCandidatePhases + 2 * kCandidateXPoints);
    for (int j = 0; j < kCandidatePhases; ++j) {
        const double th = -kPi + 2.0 * kPi * double(j) / kCandidatePhases;
        out.push_back({1.0, th, 0.0, 0.0, 0.0, 0.0});  // omega = mu z
        out.push_back({0.0, 0.0, 1.0, th, 0.0, 0.0});  // omega = mu z^2
    }
    for (int k = 0; k < kCandidateXPoints; ++k) {
        const double x = double(k) / (kCandidateXPoints - 1);
        out.push_back({x, 0.0, 1.0, 0.0, 0.0, 0.0});   // g_x
        out.push_back({x, kPi, 1.0, kPi, 0.0, 0.0});   // f_x
    }
    return out;
}

ParamVec draw_prefix_params(SplitMix64& rng) {
    ParamVec p(6);
    for (int i = 0; i < 3; ++i) {
        p[2 * i] = std::sqrt(rng.uniform01());
        p[2 * i + 1] = rng.uniform(-kPi, kPi);
    }
    return p;
}

CampaignRow run_prefix_point(const CampaignConfig& cfg, double s,
                             std::optional<double> lambda, std::uint64_t grid_index) {
    const FunctionalSpec spec{cfg.functional, cfg.target, lambda.value_or(0.0)};
    const BoundResult bound = cfg.functional == Functional::fs
        ? fs_bound(cfg.kind, cfg.target, s, *lambda)
        : hankel22_bound(cfg.kind, s);

    SearchSpace sp;
    sp.lo = {0.0, -kPi, 0.0, -kPi, 0.0, -kPi};
    sp.hi = {1.0, kPi, 1.0, kPi, 1.0, kPi};
    sp.value = [&](const ParamVec& p) {
        return prefix_functional(cfg.kind, s, prefix_from_params(p), spec);
    };

    double best_v = -1.0;
    ParamVec best_p;
    for (const ParamVec& p : prefix_candidates()) {
        const double v = sp.value(p);
        if (v > best_v) { best_v = v; best_p = p; }
    }
    SplitMix64 rng(mix_seed(cfg.seed, grid_index));
    for (int i = 0; i < cfg.samples; ++i) {
        const ParamVec p = draw_prefix_params(rng);
        const double v = sp.value(p);
        if (v > best_v) { best_v = v; best_p = p; }
    }
    refine_coordinatewise(sp, best_p, best_v, cfg.refine_steps);

    CampaignRow row;
    row.s = s;
    row.lambda = lambda;
    row.bound = bound;
    row.sup_found = best_v;
    row.gap = bound.value - best_v;
    row.violated = best_v > bound.value + cfg.tol_violate;
    row.attained = row.gap <= cfg.tol_attain;
    row.argmax = PrefixArgmax{std::polar(best_p[0], best_p[1]),
                              std::polar(best_p[2], best_p[3]),
                              std::polar(best_p[4], best_p[5])};
    return row;
}

// ---- coefficient-bound campaigns (genuine Blaschke members) ---------------

constexpr double kZeroRadiusCap = 1.0 - 1e-9;  // Blaschke zeros stay strictly inside

struct BlaschkeParams {
    Complex c;
    std::array<Complex, 3> zeros;
};

BlaschkeParams blaschke_from_params(const ParamVec& p) {
    BlaschkeParams b;
    b.c = std::polar(p[0], p[1]);
    for (int i = 0; i < 3; ++i) b.zeros[i] = std::polar(p[2 + 2 * i], p[3 + 2 * i]);
    return b;
}

ClassMember member_from_params(Kind kind, double s, const ParamVec& p, std::size_t order) {
    const BlaschkeParams b = blaschke_from_params(p);
    return blaschke_member(kind, s, b.c, {b.zeros.begin(), b.zeros.end()}, order);
}

void run_coeff_point(const CampaignConfig& cfg, double s, std::uint64_t grid_index,
                     std::vector<CampaignRow>& rows) {
    const std::size_t order = std::size_t(std::max(4, cfg.n_max));
    const std::size_t n_count = std::size_t(cfg.n_max - 1);  // n = 2..n_max

    std::vector<double> best_v(n_count, -1.0);
    std::vector<Argmax> best_arg(n_count);
    std::vector<ParamVec> best_random(n_count);

    auto consider_member = [&](const ClassMember& m, const Argmax& arg, const ParamVec* p) {
        for (int n = 2; n <= cfg.n_max; ++n) {
            const double v = std::abs(m.f[std::size_t(n)]);
            const std::size_t i = std::size_t(n - 2);
            if (v > best_v[i]) {
                best_v[i] = v;
                best_arg[i] = arg;
                if (p) best_random[i] = *p;
                else best_random[i].clear();
            }
        }
    };

    // Named candidates: omega = z, z^2, z^3, z^4 (zeros pinned at the origin).
    for (int nz = 0; nz <= 3; ++nz) {
        const std::vector<Complex> zeros(std::size_t(nz), Complex(0.0));
        const ClassMember m = blaschke_member(cfg.kind, s, 1.0, zeros, order);
        consider_member(m, BlaschkeArgmax{1.0, zeros}, nullptr);
    }

    SplitMix64 rng(mix_seed(cfg.seed, grid_index));
    for (int i = 0; i < cfg.samples; ++i) {
        ParamVec p(8);
        p[0] = std::sqrt(rng.uniform01());
        p[1] = rng.uniform(-kPi, kPi);
        for (int z = 0; z < 3; ++z) {
            p[2 + 2 * z] = std::min(std::sqrt(rng.uniform01()), kZeroRadiusCap);
            p[3 + 2 * z] = rng.uniform(-kPi, kPi);
        }
        const ClassMember m = member_from_params(cfg.kind, s, p, order);
        const BlaschkeParams b = blaschke_from_params(p);
        consider_member(m, BlaschkeArgmax{b.c, {b.zeros.begin(), b.zeros.end()}}, &p);
    }

    for (int n = 2; n <= cfg.n_max; ++n) {
        const std::size_t i = std::size_t(n - 2);
        if (!best_random[i].empty() && cfg.refine_steps > 0) {
            SearchSpace sp;
            sp.lo = {0.0, -kPi, 0.0, -kPi, 0.0, -kPi, 0.0, -kPi};
            sp.hi = {1.0, kPi, kZeroRadiusCap, kPi, kZeroRadiusCap, kPi, kZeroRadiusCap, kPi};
            sp.value = [&](const ParamVec& p) {
                const ClassMember m = member_from_params(cfg.kind, s, p, order);
                return std::abs(m.f[std::size_t(n)]);
            };
            ParamVec p = best_random[i];
            double v = best_v[i];
            refine_coordinatewise(sp, p, v, cfg.refine_steps);
            if (v > best_v[i]) {
                best_v[i] = v;
                const BlaschkeParams b = blaschke_from_params(p);
                best_arg[i] = BlaschkeArgmax{b.c, {b.zeros.begin(), b.zeros.end()}};
            }
        }

        CampaignRow row;
        row.s = s;
        row.n = n;
        row.bound = coeff_bound(cfg.kind, s, n);
        row.sup_found = best_v[i];
        row.gap = row.bound.value - best_v[i];
        row.violated = best_v[i] > row.bound.value + cfg.tol_violate;
        row.attained = row.gap <= cfg.tol_attain;
        row.argmax = best_arg[i];
        rows.push_back(std::move(row));
    }
}

} // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    CampaignReport report;
    report.config = cfg;
    report.seed = cfg.seed;

    switch (cfg.functional) {
        case Functional::fs:
            for (std::size_t is = 0; is < cfg.s_grid.size(); ++is)
                for (std::size_t il = 0; il < cfg.lambda_grid.size(); ++il)
                    report.rows.push_back(run_prefix_point(
                        cfg, cfg.s_grid[is], cfg.lambda_grid[il],
                        is * cfg.lambda_grid.size() + il));
            break;
        case Functional::hankel22:
            for (std::size_t is = 0; is < cfg.s_grid.size(); ++is)
                report.rows.push_back(run_prefix_point(cfg, cfg.s_grid[is], std::nullopt, is));
            break;
        case Functional::coeff:
            for (std::size_t is = 0; is < cfg.s_grid.size(); ++is)
                run_coeff_point(cfg, cfg.s_grid[is], is, report.rows);
            break;
    }

    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

ClassMember rotation_family(RotationWhich which, double s, double x, std::size_t order) {
    if (!(x >= 0.0) || !(x <= 1.0))
        throw XOutOfRange("rotation_family: x must lie in [0, 1]");
    const TruncatedSeries num =
        TruncatedSeries::monomial(2, order) + Complex(x) * TruncatedSeries::monomial(1, order);
    const TruncatedSeries den =
        TruncatedSeries::constant(1.0, order) + Complex(x) * TruncatedSeries::monomial(1, order);
    TruncatedSeries omega = num / den;
    const bool minus = which == RotationWhich::f_x || which == RotationWhich::F_x;
    if (minus) omega = -omega;
    const Kind kind = (which == RotationWhich::f_x || which == RotationWhich::g_x)
        ? Kind::starlike : Kind::convex;
    return member_from_schwarz(kind, s, omega, order);
}

ClassMember blaschke_member(Kind kind, double s, Complex c,
                            const std::vector<Complex>& zeros, std::size_t order) {
    if (std::abs(c) > 1.0 + 1e-12)
        throw ParamOutOfDisk("blaschke_member: |c| must be <= 1");
    if (zeros.size() > 3)
        throw ParamOutOfDisk("blaschke_member: at most 3 zeros");
    for (Complex z : zeros)
        if (std::abs(z) >= 1.0)
            throw ParamOutOfDisk("blaschke_member: zeros must lie strictly inside the disk");

    TruncatedSeries omega = c * TruncatedSeries::monomial(1, order);
    for (Complex x : zeros) {
        const TruncatedSeries num =
            TruncatedSeries::monomial(1, order) + TruncatedSeries::constant(x, order);
        const TruncatedSeries den = TruncatedSeries::constant(1.0, order)
            + std::conj(x) * TruncatedSeries::monomial(1, order);
        omega = omega * num / den;
    }
    return member_from_schwarz(kind, s, omega, order);
}

} // namespace hypl
