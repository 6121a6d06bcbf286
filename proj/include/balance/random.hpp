#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace balance {

using Seed = std::uint64_t;

/// SplitMix64 output function (Steele, Lea and Flood). Bijective on 64 bits.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent child seed for stream `index` of `seed`.
constexpr Seed derive_seed(Seed seed, std::uint64_t index) {
    return splitmix64_mix(seed ^ splitmix64_mix(index + 0x632be59bd9b4e019ULL));
}

/// Counter-based SplitMix64: draw i is splitmix64_mix(seed + (i + 1) * gamma),
/// so a stream is fully determined by (seed, position) on every platform.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(Seed seed) : seed_(seed) {}

    constexpr std::uint64_t next() {
        ++counter_;
        return splitmix64_mix(seed_ + counter_ * kGamma);
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - bound + 1) % bound;
        for (;;) {
            auto x = next();
            if (x >= limit) return x % bound;
        }
    }

    /// Standard normal via Box-Muller (one draw per call, second discarded).
    double normal() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    [[nodiscard]] constexpr std::uint64_t position() const { return counter_; }

private:
    Seed seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace balance
