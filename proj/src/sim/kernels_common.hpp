#pragma once

// Shared pieces of the kernel implementations. The scalar kernels define the
// reference operation tree; the SIMD kernels must replicate it exactly so the
// backends stay bit-identical. Anything changed here changes the contract for
// every backend at once.

#include <bit>
#include <cstddef>
#include <cstdint>

#include "plateau/sim/kernels.hpp"

namespace plateau::sim::detail {

// value * entry with the canonical operation order:
//   re = vr*mr - vi*mi,  im = vi*mr + vr*mi
// This matches the vector sequence  addsub(v*dup_even(m), swap(v)*dup_odd(m)).
inline void cmul(double vr, double vi, double mr, double mi, double& re,
                 double& im) {
    re = vr * mr - vi * mi;
    im = vi * mr + vr * mi;
}

// i00 for the k-th amplitude quadruple of a two-qubit index pattern.
// p0 < p1 required.
struct PairMasks {
    std::size_t lo, mid, hi;
    std::size_t bit0, bit1;
};

inline PairMasks pair_masks(unsigned p0, unsigned p1) {
    const std::size_t m0 = std::size_t{1} << p0;
    const std::size_t m1 = std::size_t{1} << (p1 - 1);
    PairMasks pm;
    pm.lo = m0 - 1;
    pm.mid = (m1 - 1) ^ pm.lo;
    pm.hi = ~(m1 - 1);
    pm.bit0 = m0;
    pm.bit1 = std::size_t{1} << p1;
    return pm;
}

inline std::size_t expand_index(std::size_t k, const PairMasks& pm) {
    return ((k & pm.hi) << 2) | ((k & pm.mid) << 1) | (k & pm.lo);
}

inline int parity64(std::uint64_t v) { return std::popcount(v) & 1; }

}  // namespace plateau::sim::detail
