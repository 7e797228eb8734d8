#include "plateau/haar/variance.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "plateau/accum.hpp"

namespace plateau::haar {

const char* design_case_name(DesignCase c) {
    switch (c) {
        case DesignCase::MinusIs2Design: return "minus-is-2-design";
        case DesignCase::PlusIs2Design: return "plus-is-2-design";
        case DesignCase::BothAre2Designs: return "both-are-2-designs";
    }
    throw std::invalid_argument("invalid design case");
}

double two_design_variance(double tr_h2, double tr_rho2, double tr_v2,
                           double tr_v, unsigned n_qubits) {
    const double p3n = std::ldexp(1.0, 3 * int(n_qubits));
    const double p4n = std::ldexp(1.0, 4 * int(n_qubits));
    return 2.0 * tr_h2 * tr_rho2 * (tr_v2 / p3n - (tr_v * tr_v) / p4n);
}

VariancePrediction predict_variance_case3(const sim::Observable& obs,
                                          unsigned n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("predict_variance_case3: n_qubits >= 1");
    }
    if (obs.is_projector() ? obs.projector_n_qubits() != n_qubits
                           : obs.min_qubits() > n_qubits) {
        throw std::invalid_argument(
            "predict_variance_case3: observable does not fit the register");
    }
    VariancePrediction p;
    p.design_case = DesignCase::BothAre2Designs;
    p.n_qubits = n_qubits;
    p.tr_h2 = obs.trace_h_squared(n_qubits);
    p.tr_rho2 = 1.0;                              // pure initial state
    p.tr_v2 = std::ldexp(1.0, int(n_qubits) - 2); // Tr((P/2)^2) = 2^{n-2}
    p.tr_v = 0.0;                                 // Pauli generators traceless
    p.value = two_design_variance(p.tr_h2, p.tr_rho2, p.tr_v2, p.tr_v,
                                  n_qubits);
    return p;
}

VariancePrediction predict_variance_partial(DesignCase which,
                                            const HalfSampler& sampler,
                                            const Eigen::MatrixXcd& h_matrix,
                                            const Eigen::MatrixXcd& v_matrix,
                                            unsigned n_qubits,
                                            std::size_t samples,
                                            RngEngine& rng) {
    if (which == DesignCase::BothAre2Designs) {
        throw std::invalid_argument(
            "predict_variance_partial: use predict_variance_case3 for the "
            "both-halves case");
    }
    if (samples < 1) {
        throw std::invalid_argument(
            "predict_variance_partial: samples must be >= 1");
    }
    const auto dim = Eigen::Index(1) << n_qubits;
    if (h_matrix.rows() != dim || h_matrix.cols() != dim ||
        v_matrix.rows() != dim || v_matrix.cols() != dim) {
        throw std::invalid_argument(
            "predict_variance_partial: matrix dimensions must be 2^n");
    }

    VariancePrediction p;
    p.design_case = which;
    p.n_qubits = n_qubits;
    p.samples = samples;
    p.tr_h2 = (h_matrix * h_matrix).trace().real();
    p.tr_rho2 = 1.0;  // rho = |0><0|
    p.tr_v2 = (v_matrix * v_matrix).trace().real();
    p.tr_v = v_matrix.trace().real();

    const double p2n = std::ldexp(1.0, 2 * int(n_qubits));
    const double prefactor =
        (which == DesignCase::MinusIs2Design ? p.tr_rho2 : p.tr_h2) / p2n;

    std::vector<double> draws;
    draws.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd u = sampler(rng);
        Eigen::MatrixXcd m;
        if (which == DesignCase::MinusIs2Design) {
            m = u.adjoint() * h_matrix * u;  // H conjugated by the U+ draw
        } else {
            // rho = |0><0| conjugated by the U- draw: outer product of col 0
            const Eigen::VectorXcd psi = u.col(0);
            m = psi * psi.adjoint();
        }
        const Eigen::MatrixXcd comm = v_matrix * m - m * v_matrix;
        const double tr = (comm * comm).trace().real();
        draws.push_back(-prefactor * tr);  // Tr([A,B]^2) <= 0 for hermitian
    }

    NeumaierSum mean_sum;
    for (double x : draws) {
        mean_sum.add(x);
    }
    const double mean = mean_sum.value() / double(samples);
    double se = 0.0;
    if (samples > 1) {
        NeumaierSum dev2;
        for (double x : draws) {
            const double d = x - mean;
            dev2.add(d * d);
        }
        const double var = dev2.value() / double(samples - 1);
        se = std::sqrt(var / double(samples));
    }
    p.value = mean;
    p.standard_error = se;
    return p;
}

double frame_potential(std::span<const sim::Statevector> states, int t) {
    if (states.size() < 2) {
        throw std::invalid_argument("frame_potential: need at least 2 states");
    }
    if (t != 1 && t != 2) {
        throw std::invalid_argument("frame_potential: t must be 1 or 2");
    }
    const std::size_t dim = states[0].dim();
    for (const auto& s : states) {
        if (s.dim() != dim) {
            throw std::invalid_argument("frame_potential: dimension mismatch");
        }
    }
    NeumaierSum sum;
    const std::size_t n = states.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double o = std::norm(sim::inner_product(states[i], states[j]));
            sum.add(t == 1 ? o : o * o);
        }
    }
    // |<i|j>| is symmetric, so the ordered-pair mean equals the i<j mean.
    const double pairs = 0.5 * double(n) * double(n - 1);
    return sum.value() / pairs;
}

double haar_frame_potential(std::size_t dim, int t) {
    if (dim < 1) {
        throw std::invalid_argument("haar_frame_potential: dim must be >= 1");
    }
    if (t != 1 && t != 2) {
        throw std::invalid_argument("haar_frame_potential: t must be 1 or 2");
    }
    // t! (N-1)! / (N+t-1)! = t! / (N (N+1) ... (N+t-1))
    double denom = 1.0;
    for (int s = 0; s < t; ++s) {
        denom *= double(dim + std::size_t(s));
    }
    const double t_factorial = t == 1 ? 1.0 : 2.0;
    return t_factorial / denom;
}

}  // namespace plateau::haar
