#include <immintrin.h>

#include "kernels_common.hpp"

// AVX2 variants. Each kernel performs exactly the operation tree of its
// scalar reference (no FMA, same reduction lanes, same combine order); the
// equivalence tests assert bitwise-equal outputs.

namespace plateau::sim {
namespace {

// value * entry, entries broadcast: addsub(v*mr, swap(v)*mi)
//   even lanes: vr*mr - vi*mi,  odd lanes: vi*mr + vr*mi
inline __m256d cmul_broadcast(__m256d v, __m256d mr, __m256d mi) {
    const __m256d t1 = _mm256_mul_pd(v, mr);
    const __m256d sw = _mm256_permute_pd(v, 0b0101);
    const __m256d t2 = _mm256_mul_pd(sw, mi);
    return _mm256_addsub_pd(t1, t2);
}

// Same, with a per-128-bit-lane entry packed as [e0r, e0i, e1r, e1i].
inline __m256d cmul_packed(__m256d v, __m256d entries) {
    const __m256d mr = _mm256_movedup_pd(entries);
    const __m256d mi = _mm256_permute_pd(entries, 0b1111);
    return cmul_broadcast(v, mr, mi);
}

void apply_single_qubit_avx2(Complex* amps, std::size_t dim, unsigned target,
                             const Complex* m) {
    double* d = reinterpret_cast<double*>(amps);
    if (target == 0) {
        // One register holds a full (i0, i1) pair: columns carry two distinct
        // matrix entries, one per 128-bit lane.
        const __m256d col0 =
            _mm256_setr_pd(m[0].real(), m[0].imag(), m[2].real(), m[2].imag());
        const __m256d col1 =
            _mm256_setr_pd(m[1].real(), m[1].imag(), m[3].real(), m[3].imag());
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d y = _mm256_loadu_pd(d + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(y, y, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(y, y, 0x11);
            const __m256d r =
                _mm256_add_pd(cmul_packed(a0, col0), cmul_packed(a1, col1));
            _mm256_storeu_pd(d + 2 * i, r);
        }
        return;
    }
    const std::size_t mask = std::size_t{1} << target;
    const __m256d m00r = _mm256_set1_pd(m[0].real()),
                  m00i = _mm256_set1_pd(m[0].imag());
    const __m256d m01r = _mm256_set1_pd(m[1].real()),
                  m01i = _mm256_set1_pd(m[1].imag());
    const __m256d m10r = _mm256_set1_pd(m[2].real()),
                  m10i = _mm256_set1_pd(m[2].imag());
    const __m256d m11r = _mm256_set1_pd(m[3].real()),
                  m11i = _mm256_set1_pd(m[3].imag());
    for (std::size_t base = 0; base < dim; base += mask << 1) {
        for (std::size_t off = 0; off < mask; off += 2) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const __m256d y0 = _mm256_loadu_pd(d + 2 * i0);
            const __m256d y1 = _mm256_loadu_pd(d + 2 * i1);
            const __m256d n0 = _mm256_add_pd(cmul_broadcast(y0, m00r, m00i),
                                             cmul_broadcast(y1, m01r, m01i));
            const __m256d n1 = _mm256_add_pd(cmul_broadcast(y0, m10r, m10i),
                                             cmul_broadcast(y1, m11r, m11i));
            _mm256_storeu_pd(d + 2 * i0, n0);
            _mm256_storeu_pd(d + 2 * i1, n1);
        }
    }
}

void apply_cz_avx2(Complex* amps, std::size_t dim, unsigned q0, unsigned q1) {
    const unsigned p0 = q0 < q1 ? q0 : q1;
    const unsigned p1 = q0 < q1 ? q1 : q0;
    const auto pm = detail::pair_masks(p0, p1);
    const std::size_t quads = dim >> 2;
    if (p0 == 0) {
        // Affected amplitudes are isolated; plain negation.
        for (std::size_t k = 0; k < quads; ++k) {
            const std::size_t i11 =
                detail::expand_index(k, pm) | pm.bit0 | pm.bit1;
            amps[i11] = Complex(-amps[i11].real(), -amps[i11].imag());
        }
        return;
    }
    // Affected amplitudes form contiguous runs of 2^p0 >= 2 complex values.
    double* d = reinterpret_cast<double*>(amps);
    const __m256d signs = _mm256_set1_pd(-0.0);
    const std::size_t run = std::size_t{1} << p0;
    for (std::size_t k = 0; k < quads; k += run) {
        const std::size_t i11 = detail::expand_index(k, pm) | pm.bit0 | pm.bit1;
        double* p = d + 2 * i11;
        for (std::size_t j = 0; j < 2 * run; j += 4) {
            _mm256_storeu_pd(p + j,
                             _mm256_xor_pd(_mm256_loadu_pd(p + j), signs));
        }
    }
}

void scale_avx2(Complex* amps, std::size_t dim, double factor) {
    double* d = reinterpret_cast<double*>(amps);
    const std::size_t nd = 2 * dim;
    const std::size_t body = nd & ~std::size_t{3};
    const __m256d f = _mm256_set1_pd(factor);
    for (std::size_t i = 0; i < body; i += 4) {
        _mm256_storeu_pd(d + i, _mm256_mul_pd(_mm256_loadu_pd(d + i), f));
    }
    for (std::size_t i = body; i < nd; ++i) {
        d[i] *= factor;
    }
}

Complex inner_product_avx2(const Complex* bra, const Complex* ket,
                           std::size_t dim) {
    const double* da = reinterpret_cast<const double*>(bra);
    const double* db = reinterpret_cast<const double*>(ket);
    __m256d accr = _mm256_setzero_pd();
    __m256d acci = _mm256_setzero_pd();
    const std::size_t body = dim & ~std::size_t{1};
    for (std::size_t j = 0; j < body; j += 2) {
        const __m256d a = _mm256_loadu_pd(da + 2 * j);
        const __m256d b = _mm256_loadu_pd(db + 2 * j);
        accr = _mm256_add_pd(accr, _mm256_mul_pd(a, b));
        const __m256d bs = _mm256_permute_pd(b, 0b0101);
        acci = _mm256_add_pd(acci, _mm256_mul_pd(a, bs));
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, accr);
    _mm256_store_pd(li, acci);
    double re = (lr[0] + lr[1]) + (lr[2] + lr[3]);
    double im = (li[0] - li[1]) + (li[2] - li[3]);
    for (std::size_t j = body; j < dim; ++j) {
        const double ar = bra[j].real(), ai = bra[j].imag();
        const double br = ket[j].real(), bi = ket[j].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_avx2(const Complex* amps, std::size_t dim) {
    const double* d = reinterpret_cast<const double*>(amps);
    const std::size_t nd = 2 * dim;
    const std::size_t body = nd & ~std::size_t{7};
    __m256d accA = _mm256_setzero_pd();
    __m256d accB = _mm256_setzero_pd();
    for (std::size_t i = 0; i < body; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(d + i);
        const __m256d v1 = _mm256_loadu_pd(d + i + 4);
        accA = _mm256_add_pd(accA, _mm256_mul_pd(v0, v0));
        accB = _mm256_add_pd(accB, _mm256_mul_pd(v1, v1));
    }
    alignas(32) double c[4];
    _mm256_store_pd(c, _mm256_add_pd(accA, accB));
    double r = (c[0] + c[2]) + (c[1] + c[3]);
    for (std::size_t i = body; i < nd; ++i) {
        r += d[i] * d[i];
    }
    return r;
}

double z_parity_avx2(const Complex* amps, std::size_t dim,
                     std::uint64_t mask) {
    const double* d = reinterpret_cast<const double*>(amps);
    static constexpr int perm[4] = {0, 2, 1, 3};
    alignas(32) std::uint64_t pat[4];
    for (int t = 0; t < 4; ++t) {
        pat[t] = std::uint64_t(detail::parity64(std::uint64_t(perm[t]) & mask & 3))
                 << 63;
    }
    const __m256d patv =
        _mm256_castsi256_pd(_mm256_load_si256(reinterpret_cast<const __m256i*>(pat)));
    __m256d acc = _mm256_setzero_pd();
    const std::size_t body = dim & ~std::size_t{3};
    for (std::size_t base = 0; base < body; base += 4) {
        const __m256d a = _mm256_loadu_pd(d + 2 * base);
        const __m256d b = _mm256_loadu_pd(d + 2 * base + 4);
        // hadd output lanes: |psi|^2 of elements base+0, base+2, base+1, base+3
        const __m256d sq =
            _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
        const std::uint64_t hs =
            std::uint64_t(detail::parity64(base & mask)) << 63;
        const __m256d hv = _mm256_castsi256_pd(
            _mm256_set1_epi64x(static_cast<long long>(hs)));
        const __m256d sv = _mm256_xor_pd(patv, hv);
        acc = _mm256_add_pd(acc, _mm256_xor_pd(sq, sv));
    }
    alignas(32) double l[4];
    _mm256_store_pd(l, acc);
    double r = (l[0] + l[1]) + (l[2] + l[3]);
    for (std::size_t j = body; j < dim; ++j) {
        const double re = amps[j].real(), im = amps[j].imag();
        const double p = re * re + im * im;
        r += detail::parity64(j & mask) ? -p : p;
    }
    return r;
}

}  // namespace

extern const KernelBackend kAvx2Backend;
const KernelBackend kAvx2Backend = {
    "avx2",     apply_single_qubit_avx2, apply_cz_avx2, scale_avx2,
    inner_product_avx2, norm_sq_avx2,    z_parity_avx2,
};

}  // namespace plateau::sim
