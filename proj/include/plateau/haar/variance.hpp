#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <span>

#include "plateau/rng.hpp"
#include "plateau/sim/observable.hpp"
#include "plateau/sim/statevector.hpp"

namespace plateau::haar {

enum class DesignCase { MinusIs2Design, PlusIs2Design, BothAre2Designs };

const char* design_case_name(DesignCase c);

/// Predicted Var[dE/dtheta_k] together with the trace inputs that produced
/// it. Analytic for BothAre2Designs; Monte Carlo (with standard error) for
/// the single-sided cases.
struct VariancePrediction {
    DesignCase design_case = DesignCase::BothAre2Designs;
    double value = 0.0;
    double standard_error = 0.0;  // 0 for the analytic case
    std::size_t samples = 0;      // 0 for the analytic case
    double tr_h2 = 0.0;
    double tr_rho2 = 1.0;
    double tr_v2 = 0.0;
    double tr_v = 0.0;
    unsigned n_qubits = 0;
};

/// Both-halves formula for arbitrary traces:
/// 2 Tr(H^2) Tr(rho^2) (Tr(V^2)/2^{3n} - Tr(V)^2/2^{4n}).
double two_design_variance(double tr_h2, double tr_rho2, double tr_v2,
                           double tr_v, unsigned n_qubits);

/// Both-halves prediction specialised to this circuit family: pure initial
/// state (Tr rho^2 = 1) and generator V = P/2 (Tr V = 0, Tr V^2 = 2^{n-2}),
/// so the value reduces to Tr(H^2) * 2^{-2n-1}.
VariancePrediction predict_variance_case3(const sim::Observable& obs,
                                          unsigned n_qubits);

/// Draws one unitary from the distribution of the non-2-design circuit half.
using HalfSampler = std::function<Eigen::MatrixXcd(RngEngine&)>;

/// Semi-analytic single-sided predictions, Monte Carlo over the non-design
/// half u (rho = |0><0|):
///   MinusIs2Design:  -Tr(rho^2)/2^{2n} * Tr<[V, u^dag H u]^2>
///   PlusIs2Design:   -Tr(H^2)/2^{2n}  * Tr<[V, u rho u^dag]^2>
VariancePrediction predict_variance_partial(DesignCase which,
                                            const HalfSampler& sampler,
                                            const Eigen::MatrixXcd& h_matrix,
                                            const Eigen::MatrixXcd& v_matrix,
                                            unsigned n_qubits,
                                            std::size_t samples,
                                            RngEngine& rng);

/// Mean over ordered pairs (i != j) of |<psi_i|psi_j>|^{2t}, t in {1, 2}.
double frame_potential(std::span<const sim::Statevector> states, int t);

/// Haar value t! (N-1)! / (N+t-1)!: 1/N for t=1, 2/(N(N+1)) for t=2.
double haar_frame_potential(std::size_t dim, int t);

}  // namespace plateau::haar
