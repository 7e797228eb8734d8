#pragma once

#include <Eigen/Dense>
#include <json.hpp>
#include <vector>

#include "plateau/rng.hpp"
#include "plateau/sim/statevector.hpp"

namespace plateau::rpqc {

using sim::Pauli;

/// Position of one rotation angle. The flat index is layer * n_qubits + qubit.
struct ParamIndex {
    int layer = 0;
    int qubit = 0;

    static ParamIndex from_flat(int flat, int n_qubits);
    int flat(int n_qubits) const { return layer * n_qubits + qubit; }
};

/// One sampled instance of the layered random circuit family: L layers, each
/// a parallel row of single-qubit Pauli rotations followed by a 1D ladder of
/// CZ gates on pairs (j, j+1), preceded once by sqrt(H) on every qubit.
struct RpqcSpec {
    int n_qubits = 0;
    int n_layers = 0;
    std::vector<Pauli> axes;     // row-major [layer][qubit]
    std::vector<double> angles;  // row-major [layer][qubit]
    bool include_initial_sqrt_h = true;

    int param_count() const { return n_layers * n_qubits; }
    Pauli axis(int layer, int qubit) const {
        return axes[std::size_t(layer) * n_qubits + qubit];
    }
    double angle(int layer, int qubit) const {
        return angles[std::size_t(layer) * n_qubits + qubit];
    }

    /// Shape and finiteness checks. Sampled specs always carry angles in
    /// [0, 2*pi); shifted evaluation copies may not, which is fine.
    void validate() const;

    nlohmann::json to_json() const;
    static RpqcSpec from_json(const nlohmann::json& j);
};

/// Uniform i.i.d. draw: axes over {X, Y, Z}, angles over [0, 2*pi).
/// Draw order is fixed (layer-major, axis then angle per qubit) so a seed
/// pins the instance exactly. Requires n_qubits >= 2 and n_layers >= 1.
RpqcSpec sample_rpqc(int n_qubits, int n_layers, RngEngine& rng);

/// A concrete gate list on a fixed register width.
struct CircuitProgram {
    int n_qubits = 0;
    std::vector<sim::Gate> gates;
};

CircuitProgram to_program(const RpqcSpec& spec);

void run_inplace(sim::Statevector& state, const CircuitProgram& program);
sim::Statevector run(const CircuitProgram& program);

/// U(theta)|0...0>.
sim::Statevector execute(const RpqcSpec& spec);

/// Circuit cut immediately after rotation k: prefix contains the sqrt(H)
/// layer, all earlier layers, and the rotations of layer k.layer on qubits
/// 0..k.qubit; suffix contains the rest. Running prefix then suffix is the
/// full circuit. The gradient generator at the cut is V = P/2 on k.qubit.
struct SplitCircuit {
    CircuitProgram prefix;
    Pauli generator_axis;
    int generator_qubit;
    CircuitProgram suffix;
};

SplitCircuit split_at(const RpqcSpec& spec, ParamIndex k);

/// Dense matrix of a program, built by running it on every basis state.
/// Guarded to n_qubits <= 10.
Eigen::MatrixXcd dense_unitary(const CircuitProgram& program);

}  // namespace plateau::rpqc
