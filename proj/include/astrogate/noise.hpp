#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace astrogate {

/// splitmix64 finalizer; the stream mixer behind deterministic seed
/// derivation for sweep cells.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seedable Gaussian current source, one N(0, sigma^2) draw per call.
/// Uses Box-Muller over raw mt19937_64 words instead of
/// std::normal_distribution so the stream does not depend on the standard
/// library implementation. sigma = 0 short-circuits to an exact zero
/// stream without consuming generator state.
class NoiseSource {
public:
    NoiseSource(double sigma, std::uint64_t seed)
        : sigma_(sigma), engine_(seed) {}

    double sample() {
        if (sigma_ == 0.0) {
            return 0.0;
        }
        // u1 in (0, 1], u2 in [0, 1); exactly two engine words per draw.
        const double u1 = ((engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = (engine_() >> 11) * 0x1.0p-53;
        constexpr double two_pi = 6.283185307179586476925286766559;
        return sigma_ * std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    double sigma() const { return sigma_; }

private:
    double sigma_;
    std::mt19937_64 engine_;
};

} // namespace astrogate
