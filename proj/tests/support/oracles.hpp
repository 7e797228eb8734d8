#pragma once

// Dense-matrix oracles built purely from Eigen and closed-form gate
// definitions. Nothing here touches the amplitude kernels, so these are an
// independent route for checking the simulator.

#include <Eigen/Dense>
#include <complex>

#include "plateau/rpqc/rpqc.hpp"
#include "plateau/sim/observable.hpp"
#include "plateau/sim/statevector.hpp"

namespace oracles {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using C = std::complex<double>;

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

inline Mat pauli_matrix(plateau::sim::Pauli p) {
    Mat m(2, 2);
    switch (p) {
        case plateau::sim::Pauli::X:
            m << C(0, 0), C(1, 0), C(1, 0), C(0, 0);
            break;
        case plateau::sim::Pauli::Y:
            m << C(0, 0), C(0, -1), C(0, 1), C(0, 0);
            break;
        case plateau::sim::Pauli::Z:
            m << C(1, 0), C(0, 0), C(0, 0), C(-1, 0);
            break;
    }
    return m;
}

inline Mat rotation_matrix(plateau::sim::GateKind kind, double theta) {
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    Mat m(2, 2);
    switch (kind) {
        case plateau::sim::GateKind::RX:
            m << C(c, 0), C(0, -s), C(0, -s), C(c, 0);
            break;
        case plateau::sim::GateKind::RY:
            m << C(c, 0), C(-s, 0), C(s, 0), C(c, 0);
            break;
        case plateau::sim::GateKind::RZ:
            m << C(c, -s), C(0, 0), C(0, 0), C(c, s);
            break;
        default:
            throw std::invalid_argument("not a rotation");
    }
    return m;
}

// qubit 0 is the least-significant index bit: full = I_left (x) g (x) I_right
inline Mat embed_single_qubit(int n, unsigned target, const Mat& g) {
    const auto left = Eigen::Index(1) << (n - 1 - int(target));
    const auto right = Eigen::Index(1) << target;
    return kron(kron(Mat::Identity(left, left), g),
                Mat::Identity(right, right));
}

inline Mat cz_matrix(int n, unsigned a, unsigned b) {
    const auto dim = Eigen::Index(1) << n;
    Mat m = Mat::Identity(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        if ((i >> a & 1) && (i >> b & 1)) {
            m(i, i) = C(-1, 0);
        }
    }
    return m;
}

inline Mat gate_matrix(int n, const plateau::sim::Gate& g) {
    if (g.kind == plateau::sim::GateKind::CZ) {
        return cz_matrix(n, g.q0, g.q1);
    }
    return embed_single_qubit(n, g.q0, rotation_matrix(g.kind, g.angle));
}

inline Mat program_matrix(const plateau::rpqc::CircuitProgram& prog) {
    const auto dim = Eigen::Index(1) << prog.n_qubits;
    Mat u = Mat::Identity(dim, dim);
    for (const auto& g : prog.gates) {
        u = gate_matrix(prog.n_qubits, g) * u;
    }
    return u;
}

inline Mat observable_matrix(int n, const plateau::sim::Observable& obs) {
    const auto dim = Eigen::Index(1) << n;
    if (obs.is_projector()) {
        Mat m = Mat::Zero(dim, dim);
        m(Eigen::Index(obs.projector_bits()), Eigen::Index(obs.projector_bits())) =
            C(1, 0);
        return m;
    }
    Mat m = Mat::Identity(dim, dim);
    for (const auto& [q, p] : obs.letters()) {
        m = embed_single_qubit(n, q, pauli_matrix(p)) * m;
    }
    return obs.coefficient() * m;
}

inline Vec state_vector(const plateau::sim::Statevector& sv) {
    Vec v(Eigen::Index(sv.dim()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = sv.amplitudes()[std::size_t(i)];
    }
    return v;
}

}  // namespace oracles
