#include "plateau/gradient/gradient.hpp"

#include <cmath>
#include <stdexcept>

namespace plateau::grad {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;

void check_param(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k) {
    if (k.layer < 0 || k.layer >= spec.n_layers || k.qubit < 0 ||
        k.qubit >= spec.n_qubits) {
        throw std::out_of_range("gradient: parameter index out of range");
    }
}

double objective_with_offset(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                             const sim::Observable& obs, double offset) {
    rpqc::RpqcSpec shifted = spec;
    shifted.angles[std::size_t(k.flat(spec.n_qubits))] += offset;
    return sim::expectation(rpqc::execute(shifted), obs);
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::Commutator: return "commutator";
        case Method::ParameterShift: return "parameter-shift";
        case Method::FiniteDifference: return "finite-difference";
    }
    throw std::invalid_argument("invalid gradient method");
}

Method method_from_name(const std::string& name) {
    if (name == "commutator") return Method::Commutator;
    if (name == "parameter-shift") return Method::ParameterShift;
    if (name == "finite-difference") return Method::FiniteDifference;
    throw std::invalid_argument("unknown gradient method '" + name + "'");
}

double grad_commutator(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                       const sim::Observable& obs) {
    spec.validate();
    check_param(spec, k);
    const auto split = rpqc::split_at(spec, k);

    sim::Statevector phi = rpqc::run(split.prefix);  // U-|0>
    sim::Statevector full = phi;
    rpqc::run_inplace(full, split.suffix);           // U|0>

    // V|phi> with V = P/2, then the suffix and H applied on top.
    sim::Statevector v_branch = phi;
    v_branch.apply_pauli(unsigned(split.generator_qubit), split.generator_axis);
    v_branch.scale(0.5);
    rpqc::run_inplace(v_branch, split.suffix);
    sim::apply_observable(v_branch, obs);

    return 2.0 * sim::inner_product(full, v_branch).imag();
}

double grad_parameter_shift(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                            const sim::Observable& obs) {
    spec.validate();
    check_param(spec, k);
    const double plus = objective_with_offset(spec, k, obs, kHalfPi);
    const double minus = objective_with_offset(spec, k, obs, -kHalfPi);
    return 0.5 * (plus - minus);
}

double grad_finite_difference(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                              const sim::Observable& obs, double h) {
    spec.validate();
    check_param(spec, k);
    if (!(h > 0.0) || h > 0.1) {
        throw std::invalid_argument(
            "grad_finite_difference: h must satisfy 0 < h <= 0.1");
    }
    const double plus = objective_with_offset(spec, k, obs, h);
    const double minus = objective_with_offset(spec, k, obs, -h);
    return (plus - minus) / (2.0 * h);
}

double gradient(const rpqc::RpqcSpec& spec, rpqc::ParamIndex k,
                const sim::Observable& obs, Method method) {
    switch (method) {
        case Method::Commutator: return grad_commutator(spec, k, obs);
        case Method::ParameterShift: return grad_parameter_shift(spec, k, obs);
        case Method::FiniteDifference:
            return grad_finite_difference(spec, k, obs);
    }
    throw std::invalid_argument("invalid gradient method");
}

}  // namespace plateau::grad
