#include <doctest.h>

#include <cmath>

#include "plateau/gradient/gradient.hpp"
#include "plateau/rng.hpp"

using namespace plateau;
using namespace plateau::grad;
using rpqc::ParamIndex;
using rpqc::RpqcSpec;
using sim::Observable;
using sim::Pauli;

namespace {

// Bare single rotation R_P(theta) on |0>: no sqrt-H layer, no entangler.
RpqcSpec single_rotation(Pauli axis, double theta) {
    RpqcSpec spec;
    spec.n_qubits = 1;
    spec.n_layers = 1;
    spec.axes = {axis};
    spec.angles = {theta};
    spec.include_initial_sqrt_h = false;
    return spec;
}

Observable zz() {
    return Observable::pauli_string(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
}

}  // namespace

TEST_SUITE_BEGIN("gradient");

TEST_CASE("single R_X rotation against E(theta) = cos(theta)") {
    const auto z = Observable::pauli_string(1.0, {{0, Pauli::Z}});
    for (double theta : {0.0, 0.3, M_PI / 2, 2.1}) {
        const auto spec = single_rotation(Pauli::X, theta);
        const double expect = -std::sin(theta);
        CHECK(grad_commutator(spec, {0, 0}, z) ==
              doctest::Approx(expect).epsilon(1e-12));
        CHECK(grad_parameter_shift(spec, {0, 0}, z) ==
              doctest::Approx(expect).epsilon(1e-12));
        CHECK(grad_finite_difference(spec, {0, 0}, z, 1e-4) ==
              doctest::Approx(expect).epsilon(1e-7));
    }
    const auto spec = single_rotation(Pauli::X, M_PI / 2);
    CHECK(grad_commutator(spec, {0, 0}, z) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(std::abs(grad_finite_difference(spec, {0, 0}, z, 1e-4) + 1.0) <
          1e-8);
}

TEST_CASE("projector objective is stationary at the zero-angle circuit") {
    RpqcSpec spec;
    spec.n_qubits = 2;
    spec.n_layers = 1;
    spec.axes = {Pauli::X, Pauli::Y};
    spec.angles = {0.0, 0.0};
    spec.include_initial_sqrt_h = false;
    const auto proj = Observable::projector(2, 0);
    CHECK(grad_parameter_shift(spec, {0, 0}, proj) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(grad_commutator(spec, {0, 0}, proj) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("three methods agree on random circuits") {
    RngEngine rng(314);
    double max_exact = 0.0, max_fd = 0.0, max_abs = 0.0;
    for (int i = 0; i < 100; ++i) {
        const int n = 2 + int(rng.uniform_below(5));  // 2..6
        const int l = 1 + int(rng.uniform_below(8));  // 1..8
        const auto spec = rpqc::sample_rpqc(n, l, rng);
        const auto k =
            ParamIndex::from_flat(int(rng.uniform_below(std::uint32_t(n * l))), n);
        const auto obs = i % 2 == 0
                             ? Observable::pauli_string(
                                   1.0, {{0, Pauli::Z}, {1, Pauli::Z}})
                             : Observable::projector(unsigned(n), 0);
        const double gc = grad_commutator(spec, k, obs);
        const double gp = grad_parameter_shift(spec, k, obs);
        const double gf = grad_finite_difference(spec, k, obs, 1e-4);
        max_exact = std::max(max_exact, std::abs(gc - gp));
        max_fd = std::max(max_fd, std::abs(gc - gf));
        max_abs = std::max(max_abs, std::abs(gc));
    }
    CHECK(max_exact < 1e-10);
    CHECK(max_fd < 1e-6);
    // |dE| <= ||[V, H]|| <= 1 for these V = P/2, ||H|| <= 1 objectives
    CHECK(max_abs <= 1.0 + 1e-12);
}

TEST_CASE("gradient is linear in the observable") {
    RngEngine rng(315);
    const auto spec = rpqc::sample_rpqc(3, 4, rng);
    const ParamIndex k{1, 2};
    const auto h1 = Observable::pauli_string(1.0, {{0, Pauli::Z}, {1, Pauli::Z}});
    const auto h2 = Observable::pauli_string(1.0, {{1, Pauli::X}, {2, Pauli::Y}});
    const double a = 0.37, b = -1.25;

    // coefficient scaling
    const auto h1_scaled =
        Observable::pauli_string(a, {{0, Pauli::Z}, {1, Pauli::Z}});
    CHECK(grad_commutator(spec, k, h1_scaled) ==
          doctest::Approx(a * grad_commutator(spec, k, h1)).epsilon(1e-12));
    CHECK(grad_parameter_shift(spec, k, h1_scaled) ==
          doctest::Approx(a * grad_parameter_shift(spec, k, h1))
              .epsilon(1e-12));

    // additivity: evaluate the shifted objectives of a*H1 + b*H2 directly
    const double half_pi = M_PI / 2;
    auto shifted = [&](double delta) {
        auto s = spec;
        s.angles[std::size_t(k.flat(3))] += delta;
        const auto sv = rpqc::execute(s);
        return a * sim::expectation(sv, h1) + b * sim::expectation(sv, h2);
    };
    const double g_sum = 0.5 * (shifted(half_pi) - shifted(-half_pi));
    const double expected = a * grad_parameter_shift(spec, k, h1) +
                            b * grad_parameter_shift(spec, k, h2);
    CHECK(g_sum == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("finite difference step validation") {
    const auto spec = single_rotation(Pauli::Y, 0.4);
    const auto z = Observable::pauli_string(1.0, {{0, Pauli::Z}});
    CHECK_THROWS_AS(grad_finite_difference(spec, {0, 0}, z, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(grad_finite_difference(spec, {0, 0}, z, -1e-4),
                    std::invalid_argument);
    CHECK_THROWS_AS(grad_finite_difference(spec, {0, 0}, z, 0.2),
                    std::invalid_argument);
}

TEST_CASE("finite difference converges at order h^2") {
    RngEngine rng(316);
    const auto spec = rpqc::sample_rpqc(3, 3, rng);
    const ParamIndex k{0, 0};
    const auto obs = zz();
    const double exact = grad_parameter_shift(spec, k, obs);
    const double err_coarse =
        std::abs(grad_finite_difference(spec, k, obs, 1e-2) - exact);
    const double err_fine =
        std::abs(grad_finite_difference(spec, k, obs, 1e-3) - exact);
    REQUIRE(err_coarse > 1e-9);  // curvature is non-trivial for this seed
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 50.0);
    CHECK(ratio < 200.0);
}

TEST_CASE("parameter index validation") {
    RngEngine rng(317);
    const auto spec = rpqc::sample_rpqc(2, 2, rng);
    CHECK_THROWS_AS(grad_commutator(spec, {2, 0}, zz()), std::out_of_range);
    CHECK_THROWS_AS(grad_parameter_shift(spec, {0, 2}, zz()),
                    std::out_of_range);
}

TEST_CASE("method plumbing") {
    CHECK(method_from_name("parameter-shift") == Method::ParameterShift);
    CHECK(method_from_name(method_name(Method::Commutator)) ==
          Method::Commutator);
    CHECK_THROWS_AS(method_from_name("adjoint"), std::invalid_argument);

    RngEngine rng(318);
    const auto spec = rpqc::sample_rpqc(2, 2, rng);
    const auto obs = zz();
    CHECK(gradient(spec, {0, 0}, obs, Method::Commutator) ==
          grad_commutator(spec, {0, 0}, obs));
    CHECK(gradient(spec, {0, 0}, obs, Method::FiniteDifference) ==
          grad_finite_difference(spec, {0, 0}, obs));
}

TEST_SUITE_END();
