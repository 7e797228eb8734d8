#include "plateau/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace plateau {

std::uint32_t RngEngine::uniform_below(std::uint32_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be >= 1");
    }
    // Lemire's multiply-shift rejection on the full 64-bit draw.
    const std::uint64_t b = bound;
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * b;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < b) {
        const std::uint64_t threshold = (0 - b) % b;
        while (lo < threshold) {
            x = next_u64();
            m = static_cast<__uint128_t>(x) * b;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 64);
}

double RngEngine::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform_double() - 1.0;
        v = 2.0 * uniform_double() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_normal_ = v * f;
    has_cached_ = true;
    return u * f;
}

}  // namespace plateau
