#include "kernels_common.hpp"

// Reference kernels. The reductions accumulate into explicit lanes that
// mirror the AVX2 register layout (and are combined in the same order), so
// every backend returns the same doubles bit for bit.

namespace plateau::sim {
namespace {

void apply_single_qubit_scalar(Complex* amps, std::size_t dim, unsigned target,
                               const Complex* m) {
    const std::size_t mask = std::size_t{1} << target;
    const double m00r = m[0].real(), m00i = m[0].imag();
    const double m01r = m[1].real(), m01i = m[1].imag();
    const double m10r = m[2].real(), m10i = m[2].imag();
    const double m11r = m[3].real(), m11i = m[3].imag();
    for (std::size_t base = 0; base < dim; base += mask << 1) {
        for (std::size_t off = 0; off < mask; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const double a0r = amps[i0].real(), a0i = amps[i0].imag();
            const double a1r = amps[i1].real(), a1i = amps[i1].imag();
            double t0r, t0i, t1r, t1i, u0r, u0i, u1r, u1i;
            detail::cmul(a0r, a0i, m00r, m00i, t0r, t0i);
            detail::cmul(a1r, a1i, m01r, m01i, t1r, t1i);
            detail::cmul(a0r, a0i, m10r, m10i, u0r, u0i);
            detail::cmul(a1r, a1i, m11r, m11i, u1r, u1i);
            amps[i0] = Complex(t0r + t1r, t0i + t1i);
            amps[i1] = Complex(u0r + u1r, u0i + u1i);
        }
    }
}

void apply_cz_scalar(Complex* amps, std::size_t dim, unsigned q0, unsigned q1) {
    const unsigned p0 = q0 < q1 ? q0 : q1;
    const unsigned p1 = q0 < q1 ? q1 : q0;
    const auto pm = detail::pair_masks(p0, p1);
    const std::size_t quads = dim >> 2;
    for (std::size_t k = 0; k < quads; ++k) {
        const std::size_t i11 = detail::expand_index(k, pm) | pm.bit0 | pm.bit1;
        amps[i11] = Complex(-amps[i11].real(), -amps[i11].imag());
    }
}

void scale_scalar(Complex* amps, std::size_t dim, double factor) {
    for (std::size_t j = 0; j < dim; ++j) {
        amps[j] = Complex(amps[j].real() * factor, amps[j].imag() * factor);
    }
}

Complex inner_product_scalar(const Complex* bra, const Complex* ket,
                             std::size_t dim) {
    // Lane layout per iteration (two complex elements j, j+1):
    //   re lanes: [ar*br, ai*bi, ar'*br', ai'*bi']
    //   im lanes: [ar*bi, ai*br, ar'*bi', ai'*br']
    double accr[4] = {0.0, 0.0, 0.0, 0.0};
    double acci[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t body = dim & ~std::size_t{1};
    for (std::size_t j = 0; j < body; j += 2) {
        const double a0r = bra[j].real(), a0i = bra[j].imag();
        const double b0r = ket[j].real(), b0i = ket[j].imag();
        const double a1r = bra[j + 1].real(), a1i = bra[j + 1].imag();
        const double b1r = ket[j + 1].real(), b1i = ket[j + 1].imag();
        accr[0] += a0r * b0r;
        accr[1] += a0i * b0i;
        accr[2] += a1r * b1r;
        accr[3] += a1i * b1i;
        acci[0] += a0r * b0i;
        acci[1] += a0i * b0r;
        acci[2] += a1r * b1i;
        acci[3] += a1i * b1r;
    }
    double re = (accr[0] + accr[1]) + (accr[2] + accr[3]);
    double im = (acci[0] - acci[1]) + (acci[2] - acci[3]);
    for (std::size_t j = body; j < dim; ++j) {
        const double ar = bra[j].real(), ai = bra[j].imag();
        const double br = ket[j].real(), bi = ket[j].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

double norm_sq_scalar(const Complex* amps, std::size_t dim) {
    const double* d = reinterpret_cast<const double*>(amps);
    const std::size_t nd = 2 * dim;
    const std::size_t body = nd & ~std::size_t{7};
    double acc[8] = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < body; i += 8) {
        for (int t = 0; t < 8; ++t) {
            acc[t] += d[i + t] * d[i + t];
        }
    }
    const double c0 = acc[0] + acc[4];
    const double c1 = acc[1] + acc[5];
    const double c2 = acc[2] + acc[6];
    const double c3 = acc[3] + acc[7];
    double r = (c0 + c2) + (c1 + c3);
    for (std::size_t i = body; i < nd; ++i) {
        r += d[i] * d[i];
    }
    return r;
}

double z_parity_scalar(const Complex* amps, std::size_t dim,
                       std::uint64_t mask) {
    // Blocks of four complex elements; lane t holds element base + perm[t]
    // where perm = {0, 2, 1, 3} is the AVX2 hadd output order.
    static constexpr int perm[4] = {0, 2, 1, 3};
    int lowpar[4];
    for (int t = 0; t < 4; ++t) {
        lowpar[t] = detail::parity64(std::uint64_t(perm[t]) & mask & 3);
    }
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t body = dim & ~std::size_t{3};
    for (std::size_t base = 0; base < body; base += 4) {
        const int hs = detail::parity64(base & mask);
        for (int t = 0; t < 4; ++t) {
            const std::size_t idx = base + std::size_t(perm[t]);
            const double re = amps[idx].real(), im = amps[idx].imag();
            const double p = re * re + im * im;
            acc[t] += (hs ^ lowpar[t]) ? -p : p;
        }
    }
    double r = (acc[0] + acc[1]) + (acc[2] + acc[3]);
    for (std::size_t j = body; j < dim; ++j) {
        const double re = amps[j].real(), im = amps[j].imag();
        const double p = re * re + im * im;
        r += detail::parity64(j & mask) ? -p : p;
    }
    return r;
}

constexpr KernelBackend kScalarBackend = {
    "scalar",           apply_single_qubit_scalar, apply_cz_scalar,
    scale_scalar,       inner_product_scalar,      norm_sq_scalar,
    z_parity_scalar,
};

}  // namespace

const KernelBackend& scalar_backend() noexcept { return kScalarBackend; }

}  // namespace plateau::sim
