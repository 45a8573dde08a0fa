#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hypl/series.hpp"

namespace hypl {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// distributions so that identical seeds give bit-identical streams on any
/// platform or standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform over the closed unit disk: r = sqrt(u), theta uniform.
    Complex unit_disk() {
        const double r = std::sqrt(uniform01());
        const double t = uniform(-std::numbers::pi, std::numbers::pi);
        return std::polar(r, t);
    }

private:
    std::uint64_t state_;
};

/// Derives an independent stream seed for one grid point of a campaign.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 m(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return m.next();
}

} // namespace hypl
