#pragma once

#include <cstdint>

#include "plateau/rpqc/rpqc.hpp"
#include "plateau/sim/observable.hpp"

namespace plateau::grad {

enum class Method { Commutator, ParameterShift, FiniteDifference };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

struct GradientSample {
    double value = 0.0;
    rpqc::ParamIndex k;
    Method method = Method::ParameterShift;
    std::uint64_t spec_seed = 0;
};

/// dE/dtheta_k as i<0|U-^dag [V, U+^dag H U+] U-|0> with V = P_k/2, evaluated
/// with three statevectors as 2*Im(<U psi | H | U V phi>).
double grad_commutator(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                       const sim::Observable& obs);

/// Exact shift identity for half-angle Pauli rotations:
/// [E(theta_k + pi/2) - E(theta_k - pi/2)] / 2.
double grad_parameter_shift(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                            const sim::Observable& obs);

/// Central difference [E(theta_k + h) - E(theta_k - h)] / (2h), truncation
/// error O(h^2). Test oracle for the exact methods. Requires 0 < h <= 0.1.
double grad_finite_difference(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                              const sim::Observable& obs, double h = 1e-4);

double gradient(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                const sim::Observable& obs, Method method);

}  // namespace plateau::grad
