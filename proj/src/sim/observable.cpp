#include "plateau/sim/observable.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace plateau::sim {

Observable Observable::pauli_string(
    double coefficient, std::vector<std::pair<unsigned, Pauli>> letters) {
    if (!std::isfinite(coefficient)) {
        throw std::invalid_argument("pauli_string: coefficient must be finite");
    }
    std::sort(letters.begin(), letters.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < letters.size(); ++i) {
        if (letters[i].first == letters[i - 1].first) {
            throw std::invalid_argument("pauli_string: duplicate qubit");
        }
    }
    Observable o;
    o.kind_ = Kind::PauliString;
    o.coefficient_ = coefficient;
    o.letters_ = std::move(letters);
    return o;
}

Observable Observable::projector(unsigned n_qubits, std::uint64_t bits) {
    if (n_qubits < 1 || n_qubits > 30) {
        throw std::invalid_argument("projector: n_qubits must be in [1, 30]");
    }
    if (bits >> n_qubits != 0) {
        throw std::invalid_argument("projector: bitstring exceeds n_qubits");
    }
    Observable o;
    o.kind_ = Kind::Projector;
    o.proj_qubits_ = n_qubits;
    o.proj_bits_ = bits;
    return o;
}

unsigned Observable::min_qubits() const {
    if (kind_ == Kind::Projector) {
        return proj_qubits_;
    }
    unsigned m = 0;
    for (const auto& [q, p] : letters_) {
        (void)p;
        m = std::max(m, q + 1);
    }
    return m;
}

double Observable::trace_h_squared(unsigned n_qubits) const {
    if (kind_ == Kind::Projector) {
        return 1.0;
    }
    // (coeff * P)^2 = coeff^2 * I
    return coefficient_ * coefficient_ * std::ldexp(1.0, int(n_qubits));
}

namespace {

void check_fits(const Statevector& state, const Observable& obs) {
    if (obs.is_projector()) {
        if (obs.projector_n_qubits() != state.n_qubits()) {
            throw std::invalid_argument("projector/state dimension mismatch");
        }
        return;
    }
    if (obs.min_qubits() > state.n_qubits()) {
        throw std::invalid_argument("observable acts outside the register");
    }
}

}  // namespace

double expectation(const Statevector& state, const Observable& obs) {
    check_fits(state, obs);
    if (obs.is_projector()) {
        return std::norm(state.amplitudes()[obs.projector_bits()]);
    }
    bool diagonal = true;
    std::uint64_t zmask = 0;
    for (const auto& [q, p] : obs.letters()) {
        if (p == Pauli::Z) {
            zmask |= std::uint64_t{1} << q;
        } else {
            diagonal = false;
        }
    }
    if (diagonal) {
        const double v = active_backend().z_parity_expectation(
            state.amplitudes().data(), state.dim(), zmask);
        return obs.coefficient() * v;
    }
    Statevector transformed = state;
    apply_observable(transformed, obs);
    const Complex val = inner_product(state, transformed);
    if (std::abs(val.imag()) >= 1e-10) {
        throw std::runtime_error("expectation: non-real value for hermitian "
                                 "observable");
    }
    return val.real();
}

void apply_observable(Statevector& state, const Observable& obs) {
    check_fits(state, obs);
    if (obs.is_projector()) {
        const std::uint64_t keep = obs.projector_bits();
        auto amps = state.amplitudes();
        const Complex kept = amps[keep];
        std::fill(amps.begin(), amps.end(), Complex(0.0, 0.0));
        amps[keep] = kept;
        return;
    }
    for (const auto& [q, p] : obs.letters()) {
        state.apply_pauli(q, p);
    }
    if (obs.coefficient() != 1.0) {
        state.scale(obs.coefficient());
    }
}

ShotEstimate shot_estimate(const Statevector& state, const Observable& obs,
                           std::size_t shots, RngEngine& rng) {
    if (shots < 1) {
        throw std::invalid_argument("shot_estimate: shots must be >= 1");
    }
    double hi, lo, p;
    if (obs.is_projector()) {
        hi = 1.0;
        lo = 0.0;
        p = expectation(state, obs);
    } else {
        if (std::abs(obs.coefficient()) != 1.0) {
            throw std::invalid_argument(
                "shot_estimate: Pauli string must be +/-1 valued "
                "(coefficient +/-1)");
        }
        const double e = expectation(state, obs) / obs.coefficient();
        hi = obs.coefficient();
        lo = -obs.coefficient();
        p = 0.5 * (1.0 + e);
    }
    p = std::clamp(p, 0.0, 1.0);
    std::size_t count = 0;  // draws of the `hi` outcome
    for (std::size_t s = 0; s < shots; ++s) {
        count += rng.uniform_double() < p ? 1 : 0;
    }
    const double mean =
        (double(count) * hi + double(shots - count) * lo) / double(shots);
    double se = 0.0;
    if (shots > 1) {
        const double dev_hi = hi - mean;
        const double dev_lo = lo - mean;
        const double ss = double(count) * dev_hi * dev_hi +
                          double(shots - count) * dev_lo * dev_lo;
        const double sd = std::sqrt(ss / double(shots - 1));
        se = sd / std::sqrt(double(shots));
    }
    return {mean, se};
}

}  // namespace plateau::sim
