#include "plateau/sim/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plateau::sim {

namespace {

constexpr unsigned kMaxQubits = 30;

void check_angle(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle must be finite");
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    throw std::invalid_argument("invalid Pauli");
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                        c + "'");
    }
}

Gate Gate::rx(unsigned q, double theta) {
    check_angle(theta);
    return {GateKind::RX, q, 0, theta};
}

Gate Gate::ry(unsigned q, double theta) {
    check_angle(theta);
    return {GateKind::RY, q, 0, theta};
}

Gate Gate::rz(unsigned q, double theta) {
    check_angle(theta);
    return {GateKind::RZ, q, 0, theta};
}

Gate Gate::rotation(Pauli axis, unsigned q, double theta) {
    switch (axis) {
        case Pauli::X: return rx(q, theta);
        case Pauli::Y: return ry(q, theta);
        case Pauli::Z: return rz(q, theta);
    }
    throw std::invalid_argument("invalid rotation axis");
}

Gate Gate::cz(unsigned a, unsigned b) {
    if (a == b) {
        throw std::invalid_argument("CZ targets must be distinct");
    }
    const unsigned lo = a < b ? a : b;
    const unsigned hi = a < b ? b : a;
    if (hi - lo != 1) {
        throw std::invalid_argument("CZ targets must be adjacent");
    }
    return {GateKind::CZ, a, b, 0.0};
}

Gate Gate::sqrt_h(unsigned q) {
    // pi/4 rotation about Y, i.e. exp(-i pi/8 Y).
    return ry(q, 0.78539816339744830961566084581988);
}

Statevector::Statevector(unsigned n_qubits) : Statevector(n_qubits, 0) {}

Statevector::Statevector(unsigned n_qubits, std::uint64_t basis) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, 30]");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (basis >= dim) {
        throw std::out_of_range("basis state out of range");
    }
    amps_.assign(dim, Complex(0.0, 0.0));
    amps_[basis] = Complex(1.0, 0.0);
}

Statevector Statevector::from_amplitudes(unsigned n_qubits,
                                         std::vector<Complex> amps) {
    Statevector sv(n_qubits);
    if (amps.size() != sv.dim()) {
        throw std::invalid_argument("amplitude vector has wrong length");
    }
    sv.amps_ = std::move(amps);
    return sv;
}

void Statevector::apply(const Gate& g) {
    const auto& k = active_backend();
    if (g.kind == GateKind::CZ) {
        if (g.q0 >= n_ || g.q1 >= n_) {
            throw std::out_of_range("CZ target out of range");
        }
        k.apply_cz(amps_.data(), amps_.size(), g.q0, g.q1);
        return;
    }
    if (g.q0 >= n_) {
        throw std::out_of_range("gate target out of range");
    }
    check_angle(g.angle);
    const double c = std::cos(0.5 * g.angle);
    const double s = std::sin(0.5 * g.angle);
    Complex m[4];
    switch (g.kind) {
        case GateKind::RX:
            m[0] = {c, 0.0};
            m[1] = {0.0, -s};
            m[2] = {0.0, -s};
            m[3] = {c, 0.0};
            break;
        case GateKind::RY:
            m[0] = {c, 0.0};
            m[1] = {-s, 0.0};
            m[2] = {s, 0.0};
            m[3] = {c, 0.0};
            break;
        case GateKind::RZ:
            m[0] = {c, -s};
            m[1] = {0.0, 0.0};
            m[2] = {0.0, 0.0};
            m[3] = {c, s};
            break;
        default:
            throw std::invalid_argument("invalid gate kind");
    }
    k.apply_single_qubit(amps_.data(), amps_.size(), g.q0, m);
}

void Statevector::apply_pauli(unsigned qubit, Pauli p) {
    if (qubit >= n_) {
        throw std::out_of_range("Pauli target out of range");
    }
    Complex m[4];
    switch (p) {
        case Pauli::X:
            m[0] = {0.0, 0.0};
            m[1] = {1.0, 0.0};
            m[2] = {1.0, 0.0};
            m[3] = {0.0, 0.0};
            break;
        case Pauli::Y:
            m[0] = {0.0, 0.0};
            m[1] = {0.0, -1.0};
            m[2] = {0.0, 1.0};
            m[3] = {0.0, 0.0};
            break;
        case Pauli::Z:
            m[0] = {1.0, 0.0};
            m[1] = {0.0, 0.0};
            m[2] = {0.0, 0.0};
            m[3] = {-1.0, 0.0};
            break;
    }
    active_backend().apply_single_qubit(amps_.data(), amps_.size(), qubit, m);
}

void Statevector::scale(double factor) {
    active_backend().scale(amps_.data(), amps_.size(), factor);
}

double Statevector::norm_sq() const {
    return active_backend().norm_sq(amps_.data(), amps_.size());
}

Complex inner_product(const Statevector& a, const Statevector& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    return active_backend().inner_product(a.amplitudes().data(),
                                          b.amplitudes().data(), a.dim());
}

}  // namespace plateau::sim
