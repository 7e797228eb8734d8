#pragma once

#include <cstdint>
#include <random>

namespace plateau {

/// SplitMix64 finalizer. Bijective on 64-bit words, near-ideal avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

/// Deterministic random stream.
///
/// The engine (mt19937_64) is fully specified by the standard, so the raw
/// 64-bit stream is identical on every platform. The distribution transforms
/// are hand-rolled because std::uniform_real_distribution and
/// std::normal_distribution are implementation-defined and would break
/// reproducibility across standard libraries.
class RngEngine {
public:
    explicit RngEngine(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform angle in [0, 2*pi).
    double uniform_angle() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        return two_pi * uniform_double();
    }

    /// Unbiased uniform integer in [0, bound). bound must be >= 1.
    std::uint32_t uniform_below(std::uint32_t bound);

    /// Standard normal deviate (Marsaglia polar method; second value cached).
    double normal();

private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace plateau
