#pragma once

#include <cstdint>
#include <random>

namespace csamp {

/// splitmix64 mixing step; used to derive independent stream seeds.
inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic 64-bit-seeded randomness source. All sampling operations
/// take one of these explicitly; there is no global generator. Integer and
/// real draws are implemented on top of raw mt19937_64 output so that
/// results are identical across platforms and standard libraries.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Unbiased draw from {0, ..., bound-1} by rejection.
    std::uint64_t uniform_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % bound;
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double uniform_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Seed for an independent child stream (per trial, per round, ...).
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
        return splitmix64(master ^ splitmix64(stream));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace csamp
