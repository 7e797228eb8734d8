#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "plateau/sim/kernels.hpp"

namespace plateau::sim {

enum class Pauli { X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

enum class GateKind { RX, RY, RZ, CZ };

/// Gate alphabet: half-angle Pauli rotations R_P(theta) = exp(-i theta P / 2)
/// and the nearest-neighbour controlled-Z entangler.
struct Gate {
    GateKind kind;
    unsigned q0 = 0;
    unsigned q1 = 0;      // CZ only
    double angle = 0.0;   // rotations only

    static Gate rx(unsigned q, double theta);
    static Gate ry(unsigned q, double theta);
    static Gate rz(unsigned q, double theta);
    static Gate rotation(Pauli axis, unsigned q, double theta);
    static Gate cz(unsigned a, unsigned b);
    /// sqrt(H) = R_Y(pi/4), the fixed preparation gate.
    static Gate sqrt_h(unsigned q);
};

/// Dense n-qubit state, 2^n complex amplitudes. Qubit 0 is the least
/// significant bit of the amplitude index.
class Statevector {
public:
    /// |0...0> on n_qubits (1 <= n_qubits <= 30).
    explicit Statevector(unsigned n_qubits);

    /// Computational basis state |basis>.
    Statevector(unsigned n_qubits, std::uint64_t basis);

    static Statevector from_amplitudes(unsigned n_qubits,
                                       std::vector<Complex> amps);

    unsigned n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    void apply(const Gate& g);
    /// Bare Pauli operator on one qubit (X, Y or Z as a unitary).
    void apply_pauli(unsigned qubit, Pauli p);
    void scale(double factor);

    double norm_sq() const;

private:
    unsigned n_;
    std::vector<Complex> amps_;
};

/// <a|b>. Throws on dimension mismatch.
Complex inner_product(const Statevector& a, const Statevector& b);

}  // namespace plateau::sim
