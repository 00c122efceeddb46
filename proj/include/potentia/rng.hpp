#ifndef POTENTIA_RNG_HPP
#define POTENTIA_RNG_HPP

#include <cmath>
#include <cstdint>

namespace potentia {

/// SplitMix64: the 64-bit generator used everywhere randomness is needed.
/// All sampling in the project goes through this class so that every
/// experiment and property run is bit-reproducible from its recorded seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of entropy.
    double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound) noexcept { return next() % bound; }

    /// Standard normal via Box-Muller (consumes two uniforms, returns one value).
    double next_gaussian() noexcept {
        double u1 = next_unit();
        double u2 = next_unit();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    std::uint64_t state_;
};

/// SplitMix64 finalizer, usable as a standalone 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of the per-shot substream `index` of the master stream `seed`.
/// Each shot of a repeated experiment draws from its own substream, so shot
/// outcomes are independent of how many draws earlier shots consumed.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

}  // namespace potentia

#endif
