#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace plateau::sim {

using Complex = std::complex<double>;

/// One ISA variant of the amplitude kernels.
///
/// Every backend computes bit-identical results: the scalar kernels are the
/// reference semantics (elementwise complex arithmetic with a fixed operation
/// order, reductions with a fixed 4/8-lane structure and combine order, no
/// FMA), and the SIMD variants implement exactly the same operation tree.
/// The equivalence tests assert exact equality, not a tolerance.
struct KernelBackend {
    const char* name;

    /// amps <- (m on `target`) * amps, m row-major {m00, m01, m10, m11}.
    void (*apply_single_qubit)(Complex* amps, std::size_t dim, unsigned target,
                               const Complex* m);

    /// Phase flip of every amplitude whose q0 and q1 bits are both set.
    void (*apply_cz)(Complex* amps, std::size_t dim, unsigned q0, unsigned q1);

    /// amps <- factor * amps.
    void (*scale)(Complex* amps, std::size_t dim, double factor);

    /// <bra|ket> = sum_j conj(bra_j) * ket_j.
    Complex (*inner_product)(const Complex* bra, const Complex* ket,
                             std::size_t dim);

    /// sum_j |amps_j|^2.
    double (*norm_sq)(const Complex* amps, std::size_t dim);

    /// sum_j (-1)^popcount(j & mask) * |amps_j|^2  (diagonal Pauli-Z strings).
    double (*z_parity_expectation)(const Complex* amps, std::size_t dim,
                                   std::uint64_t mask);
};

const KernelBackend& scalar_backend() noexcept;

/// AVX2 backend, or nullptr when not compiled in or not supported by the CPU.
const KernelBackend* avx2_backend() noexcept;

/// Backends usable on this machine, scalar first.
std::vector<const KernelBackend*> available_backends();

/// Resolve a backend by name ("scalar", "avx2"); empty/null means the best
/// available. Throws std::invalid_argument for unknown or unavailable names.
const KernelBackend& resolve_backend(const char* choice);

/// Backend selected once per process: PLATEAU_SIMD environment variable if
/// set, otherwise the best available.
const KernelBackend& active_backend();

}  // namespace plateau::sim
