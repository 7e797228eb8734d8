#include "plateau/rpqc/rpqc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plateau::rpqc {

ParamIndex ParamIndex::from_flat(int flat, int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("ParamIndex: n_qubits must be >= 1");
    }
    if (flat < 0) {
        throw std::out_of_range("ParamIndex: negative flat index");
    }
    return {flat / n_qubits, flat % n_qubits};
}

void RpqcSpec::validate() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("RpqcSpec: n_qubits must be >= 1");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("RpqcSpec: n_layers must be >= 1");
    }
    const auto expected = std::size_t(n_layers) * std::size_t(n_qubits);
    if (axes.size() != expected || angles.size() != expected) {
        throw std::invalid_argument("RpqcSpec: axes/angles must be L x n");
    }
    for (double a : angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("RpqcSpec: non-finite angle");
        }
    }
}

nlohmann::json RpqcSpec::to_json() const {
    validate();
    nlohmann::json j;
    j["n_qubits"] = n_qubits;
    j["n_layers"] = n_layers;
    j["include_initial_sqrt_h"] = include_initial_sqrt_h;
    std::vector<std::string> axis_rows;
    std::vector<std::vector<double>> angle_rows;
    for (int l = 0; l < n_layers; ++l) {
        std::string row;
        std::vector<double> arow;
        for (int q = 0; q < n_qubits; ++q) {
            row.push_back(sim::pauli_char(axis(l, q)));
            arow.push_back(angle(l, q));
        }
        axis_rows.push_back(std::move(row));
        angle_rows.push_back(std::move(arow));
    }
    j["axes"] = axis_rows;
    j["angles"] = angle_rows;
    return j;
}

RpqcSpec RpqcSpec::from_json(const nlohmann::json& j) {
    RpqcSpec spec;
    spec.n_qubits = j.at("n_qubits").get<int>();
    spec.n_layers = j.at("n_layers").get<int>();
    spec.include_initial_sqrt_h = j.value("include_initial_sqrt_h", true);
    const auto& axis_rows = j.at("axes");
    const auto& angle_rows = j.at("angles");
    for (const auto& row : axis_rows) {
        const auto s = row.get<std::string>();
        for (char c : s) {
            spec.axes.push_back(sim::pauli_from_char(c));
        }
    }
    for (const auto& row : angle_rows) {
        for (const auto& a : row) {
            spec.angles.push_back(a.get<double>());
        }
    }
    spec.validate();
    return spec;
}

RpqcSpec sample_rpqc(int n_qubits, int n_layers, RngEngine& rng) {
    if (n_qubits < 2) {
        throw std::invalid_argument(
            "sample_rpqc: n_qubits must be >= 2 (the CZ ladder needs a pair)");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("sample_rpqc: n_layers must be >= 1");
    }
    RpqcSpec spec;
    spec.n_qubits = n_qubits;
    spec.n_layers = n_layers;
    const auto count = std::size_t(n_layers) * std::size_t(n_qubits);
    spec.axes.reserve(count);
    spec.angles.reserve(count);
    static constexpr Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (std::size_t i = 0; i < count; ++i) {
        spec.axes.push_back(kAxes[rng.uniform_below(3)]);
        spec.angles.push_back(rng.uniform_angle());
    }
    return spec;
}

CircuitProgram to_program(const RpqcSpec& spec) {
    spec.validate();
    CircuitProgram prog;
    prog.n_qubits = spec.n_qubits;
    if (spec.include_initial_sqrt_h) {
        for (int q = 0; q < spec.n_qubits; ++q) {
            prog.gates.push_back(sim::Gate::sqrt_h(unsigned(q)));
        }
    }
    for (int l = 0; l < spec.n_layers; ++l) {
        for (int q = 0; q < spec.n_qubits; ++q) {
            prog.gates.push_back(sim::Gate::rotation(spec.axis(l, q),
                                                     unsigned(q),
                                                     spec.angle(l, q)));
        }
        for (int q = 0; q + 1 < spec.n_qubits; ++q) {
            prog.gates.push_back(sim::Gate::cz(unsigned(q), unsigned(q + 1)));
        }
    }
    return prog;
}

void run_inplace(sim::Statevector& state, const CircuitProgram& program) {
    if (int(state.n_qubits()) != program.n_qubits) {
        throw std::invalid_argument("run_inplace: register width mismatch");
    }
    for (const auto& g : program.gates) {
        state.apply(g);
    }
}

sim::Statevector run(const CircuitProgram& program) {
    sim::Statevector state(unsigned(program.n_qubits));
    run_inplace(state, program);
    return state;
}

sim::Statevector execute(const RpqcSpec& spec) { return run(to_program(spec)); }

SplitCircuit split_at(const RpqcSpec& spec, ParamIndex k) {
    spec.validate();
    if (k.layer < 0 || k.layer >= spec.n_layers || k.qubit < 0 ||
        k.qubit >= spec.n_qubits) {
        throw std::out_of_range("split_at: parameter index out of range");
    }
    SplitCircuit out;
    out.prefix.n_qubits = spec.n_qubits;
    out.suffix.n_qubits = spec.n_qubits;
    out.generator_axis = spec.axis(k.layer, k.qubit);
    out.generator_qubit = k.qubit;

    auto& pre = out.prefix.gates;
    auto& suf = out.suffix.gates;
    if (spec.include_initial_sqrt_h) {
        for (int q = 0; q < spec.n_qubits; ++q) {
            pre.push_back(sim::Gate::sqrt_h(unsigned(q)));
        }
    }
    for (int l = 0; l < spec.n_layers; ++l) {
        for (int q = 0; q < spec.n_qubits; ++q) {
            auto g = sim::Gate::rotation(spec.axis(l, q), unsigned(q),
                                         spec.angle(l, q));
            const bool before_cut =
                l < k.layer || (l == k.layer && q <= k.qubit);
            (before_cut ? pre : suf).push_back(g);
        }
        for (int q = 0; q + 1 < spec.n_qubits; ++q) {
            auto g = sim::Gate::cz(unsigned(q), unsigned(q + 1));
            (l < k.layer ? pre : suf).push_back(g);
        }
    }
    return out;
}

Eigen::MatrixXcd dense_unitary(const CircuitProgram& program) {
    if (program.n_qubits < 1 || program.n_qubits > 10) {
        throw std::invalid_argument(
            "dense_unitary: register must have 1..10 qubits");
    }
    const auto dim = Eigen::Index(1) << program.n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        sim::Statevector basis(unsigned(program.n_qubits),
                               std::uint64_t(col));
        run_inplace(basis, program);
        for (Eigen::Index row = 0; row < dim; ++row) {
            u(row, col) = basis.amplitudes()[std::size_t(row)];
        }
    }
    return u;
}

}  // namespace plateau::rpqc
