#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plateau/rng.hpp"
#include "plateau/sim/statevector.hpp"

namespace plateau::sim {

/// A weighted Pauli string (identity positions omitted) or a
/// computational-basis projector |b><b|.
class Observable {
public:
    static Observable pauli_string(
        double coefficient, std::vector<std::pair<unsigned, Pauli>> letters);
    static Observable projector(unsigned n_qubits, std::uint64_t bits);

    bool is_pauli() const { return kind_ == Kind::PauliString; }
    bool is_projector() const { return kind_ == Kind::Projector; }

    double coefficient() const { return coefficient_; }
    const std::vector<std::pair<unsigned, Pauli>>& letters() const {
        return letters_;
    }
    unsigned projector_n_qubits() const { return proj_qubits_; }
    std::uint64_t projector_bits() const { return proj_bits_; }

    /// Smallest register the observable fits on.
    unsigned min_qubits() const;

    /// Tr(H^2) on an n-qubit register, computed from structure (exact):
    /// coefficient^2 * 2^n for a Pauli string, 1 for a projector.
    double trace_h_squared(unsigned n_qubits) const;

private:
    enum class Kind { PauliString, Projector };
    Observable() = default;

    Kind kind_ = Kind::PauliString;
    double coefficient_ = 1.0;
    std::vector<std::pair<unsigned, Pauli>> letters_;
    unsigned proj_qubits_ = 0;
    std::uint64_t proj_bits_ = 0;
};

/// <psi|H|psi>. Exactly real for hermitian H; the imaginary residue is
/// checked against 1e-10 and discarded.
double expectation(const Statevector& state, const Observable& obs);

/// state <- H|state> (not unitary in general; the norm may change).
void apply_observable(Statevector& state, const Observable& obs);

struct ShotEstimate {
    double estimate;
    double standard_error;  // sample standard deviation / sqrt(shots)
};

/// Sample mean of `shots` independent single-shot outcomes drawn from the
/// exact outcome distribution: +/-1 outcomes with p(+1) = (1+E)/2 for a
/// unit-coefficient Pauli string, 0/1 outcomes with p(1) = E for a projector.
ShotEstimate shot_estimate(const Statevector& state, const Observable& obs,
                           std::size_t shots, RngEngine& rng);

}  // namespace plateau::sim
