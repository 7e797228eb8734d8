#include <doctest.h>

#include <cmath>
#include <complex>

#include "plateau/experiment/experiment.hpp"
#include "plateau/haar/haar.hpp"
#include "plateau/haar/variance.hpp"
#include "plateau/rng.hpp"
#include "plateau/rpqc/rpqc.hpp"
#include "support/oracles.hpp"

using namespace plateau;
using namespace plateau::haar;

namespace {

sim::Statevector random_haar_state(unsigned n, RngEngine& rng) {
    std::vector<sim::Complex> amps(std::size_t(1) << n);
    double norm = 0.0;
    for (auto& a : amps) {
        a = sim::Complex(rng.normal(), rng.normal());
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : amps) {
        a /= norm;
    }
    return sim::Statevector::from_amplitudes(n, std::move(amps));
}

}  // namespace

TEST_SUITE_BEGIN("haar");

TEST_CASE("sampled unitaries are unitary") {
    RngEngine rng(1);
    for (int dim : {2, 5, 8}) {
        const auto u = sample_haar_unitary(dim, rng);
        const auto defect =
            (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim))
                .cwiseAbs()
                .maxCoeff();
        CHECK(defect < 1e-12);
    }
    CHECK_THROWS_AS(sample_haar_unitary(1, rng), std::invalid_argument);
}

TEST_CASE("first-moment closed form") {
    CHECK(first_moment_closed_form(4, 0, 0, 0, 0) ==
          std::complex<double>(0.25, 0.0));
    CHECK(first_moment_closed_form(4, 0, 1, 1, 0) ==
          std::complex<double>(0.0, 0.0));
    CHECK(first_moment_closed_form(4, 2, 1, 2, 1) ==
          std::complex<double>(0.25, 0.0));
}

TEST_CASE("first-moment estimates converge to delta/N") {
    RngEngine rng(2);
    const auto list = check_first_moment(2, 20000, rng);
    REQUIRE(list.size() == 16);
    double max_err = 0.0;
    for (const auto& e : list) {
        max_err = std::max(max_err, e.abs_error);
    }
    CHECK(max_err < 1.5e-2);

    CHECK_THROWS_AS(check_first_moment(2, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(check_first_moment(2, 9999, rng), std::invalid_argument);
    CHECK_THROWS_AS(check_first_moment(9, 20000, rng), std::invalid_argument);
}

TEST_CASE("conjugation average collapses to Tr(O)/N times identity") {
    RngEngine rng(3);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
        op(i, i) = double(i + 1);
    }
    const auto avg = average_conjugated(op, 20000, rng);
    const Eigen::MatrixXcd target =
        2.5 * Eigen::MatrixXcd::Identity(4, 4);
    CHECK((avg - target).cwiseAbs().maxCoeff() < 1.5e-2);
    CHECK_THROWS_AS(average_conjugated(op, 0, rng), std::invalid_argument);
}

TEST_CASE("left invariance: V U has the same first moments as U") {
    RngEngine rng(4);
    RngEngine vseed(99);
    const Eigen::MatrixXcd v = sample_haar_unitary(4, vseed);  // fixed V
    constexpr int dim = 4;
    const std::size_t samples = 20000;
    Eigen::MatrixXcd acc[dim][dim];
    for (auto& row : acc) {
        for (auto& m : row) {
            m = Eigen::MatrixXcd::Zero(dim, dim);
        }
    }
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd vu = v * sample_haar_unitary(dim, rng);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                acc[i][j] += vu(i, j) * vu.adjoint();  // entries (k, m)
            }
        }
    }
    double max_err = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (int m = 0; m < dim; ++m) {
                for (int k = 0; k < dim; ++k) {
                    // acc(i,j)(k,m) accumulates (VU)_ij conj((VU)_mk)
                    const auto est = acc[i][j](k, m) / double(samples);
                    const auto cf = first_moment_closed_form(dim, i, j, m, k);
                    max_err = std::max(max_err, std::abs(est - cf));
                }
            }
        }
    }
    CHECK(max_err < 1.5e-2);
}

TEST_CASE("second-moment closed form matches hand-computed values") {
    // all indices 0: E|U00|^4 = 2/(N^2-1) - 2/(N(N^2-1)) = 0.1 at N=4
    CHECK(second_moment_closed_form(4, 0, 0, 0, 0, 0, 0, 0, 0).real() ==
          doctest::Approx(0.1).epsilon(1e-15));
    // E|U00|^2 |U01|^2 = 1/15 - 1/60 = 0.05
    CHECK(second_moment_closed_form(4, 0, 0, 0, 1, 0, 0, 0, 1).real() ==
          doctest::Approx(0.05).epsilon(1e-15));
    // E U00 U11 U*01 U*10 = -1/60
    CHECK(second_moment_closed_form(4, 0, 0, 1, 1, 0, 1, 1, 0).real() ==
          doctest::Approx(-1.0 / 60.0).epsilon(1e-15));
}

TEST_CASE("second-moment closed form has the pair-swap symmetry") {
    for (int t = 0; t < 256; ++t) {
        const int i1 = t >> 7 & 1, j1 = t >> 6 & 1, i2 = t >> 5 & 1,
                  j2 = t >> 4 & 1;
        const int i1p = t >> 3 & 1, j1p = t >> 2 & 1, i2p = t >> 1 & 1,
                  j2p = t & 1;
        const auto direct =
            second_moment_closed_form(4, i1, j1, i2, j2, i1p, j1p, i2p, j2p);
        const auto swapped =
            second_moment_closed_form(4, i2, j2, i1, j1, i2p, j2p, i1p, j1p);
        CHECK(direct == swapped);
    }
}

TEST_CASE("second-moment estimates converge to the Weingarten expression") {
    RngEngine rng(5);
    const auto list = check_second_moment(2, 100000, rng);
    REQUIRE(list.size() == 256);
    double max_err = 0.0;
    for (const auto& e : list) {
        max_err = std::max(max_err, e.abs_error);
    }
    CHECK(max_err < 1e-2);

    CHECK_THROWS_AS(check_second_moment(2, 99999, rng), std::invalid_argument);
    CHECK_THROWS_AS(check_second_moment(9, 100000, rng), std::invalid_argument);
}

TEST_CASE("moment reports serialize") {
    RngEngine rng(6);
    const auto list = check_first_moment(2, 10000, rng);
    const auto j = moment_report_json(list);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 16);
    CHECK(j[0].contains("estimate"));
    CHECK(j[0].contains("closed_form"));
    CHECK(j[0].at("samples").get<std::size_t>() == 10000);
}

TEST_CASE("generic both-halves variance formula") {
    // non-traceless V = |1><1| on one qubit with H = Z:
    // 2 * 2 * 1 * (1/8 - 1/16) = 0.25
    CHECK(two_design_variance(2.0, 1.0, 1.0, 1.0, 1) == 0.25);
}

TEST_CASE("case-3 predictions for the experiment observables") {
    const auto zz =
        sim::Observable::pauli_string(1.0, {{0, sim::Pauli::Z}, {1, sim::Pauli::Z}});
    const auto p10 = predict_variance_case3(zz, 10);
    CHECK(p10.value == std::ldexp(1.0, -11));  // 4.8828125e-4
    CHECK(p10.tr_h2 == 1024.0);
    CHECK(p10.tr_v == 0.0);

    const auto proj = sim::Observable::projector(4, 0);
    CHECK(predict_variance_case3(proj, 4).value == std::ldexp(1.0, -9));

    CHECK_THROWS_AS(predict_variance_case3(proj, 5), std::invalid_argument);
}

TEST_CASE("case-3 prediction decays exactly 2x per qubit for fixed-weight strings") {
    const auto zz =
        sim::Observable::pauli_string(1.0, {{0, sim::Pauli::Z}, {1, sim::Pauli::Z}});
    for (unsigned n = 2; n < 12; ++n) {
        const double a = predict_variance_case3(zz, n).value;
        const double b = predict_variance_case3(zz, n + 1).value;
        CHECK(b / a == 0.5);  // exact in binary arithmetic
    }
}

TEST_CASE("partial prediction vanishes when V commutes with the state") {
    // u = identity, rho = |0><0|, V = Z/2 diagonal: [V, rho] = 0
    const unsigned n = 2;
    const auto dim = Eigen::Index(1) << n;
    const Eigen::MatrixXcd h =
        oracles::observable_matrix(int(n), experiment::make_observable(
                                               experiment::ObservableKind::ZZ, int(n)));
    const Eigen::MatrixXcd v =
        0.5 * oracles::embed_single_qubit(int(n), 0,
                                          oracles::pauli_matrix(sim::Pauli::Z));
    RngEngine rng(7);
    const auto pred = predict_variance_partial(
        DesignCase::PlusIs2Design,
        [dim](RngEngine&) { return Eigen::MatrixXcd::Identity(dim, dim).eval(); },
        h, v, n, 50, rng);
    CHECK(pred.value == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("partial prediction with a Haar half reproduces the case-3 value") {
    const unsigned n = 2;
    const auto zz = experiment::make_observable(experiment::ObservableKind::ZZ,
                                                int(n));
    const Eigen::MatrixXcd h = oracles::observable_matrix(int(n), zz);
    const Eigen::MatrixXcd v =
        0.5 * oracles::embed_single_qubit(int(n), 0,
                                          oracles::pauli_matrix(sim::Pauli::Z));
    RngEngine rng(8);
    const auto pred = predict_variance_partial(
        DesignCase::MinusIs2Design,
        [](RngEngine& r) { return sample_haar_unitary(4, r); }, h, v, n, 4000,
        rng);
    const double case3 = predict_variance_case3(zz, n).value;  // 0.125
    CHECK(pred.value ==
          doctest::Approx(case3).epsilon(2.5 * pred.standard_error / case3));
    CHECK(pred.value > 0.0);

    CHECK_THROWS_AS(
        predict_variance_partial(
            DesignCase::BothAre2Designs,
            [](RngEngine& r) { return sample_haar_unitary(4, r); }, h, v, n, 10,
            rng),
        std::invalid_argument);
}

TEST_CASE("case-2 prediction from the shallow half matches the deep plateau") {
    // The gradient direction theta_{1,1} pins U- to one sqrt(H) layer plus a
    // single rotation, so the deep-circuit plateau is the U+-is-a-2-design
    // case averaged over that shallow ensemble.
    const unsigned n = 4;
    const auto zz =
        experiment::make_observable(experiment::ObservableKind::ZZ, int(n));
    const Eigen::MatrixXcd h = oracles::observable_matrix(int(n), zz);

    double predicted = 0.0;
    RngEngine rng(9);
    for (const auto axis : {sim::Pauli::X, sim::Pauli::Y, sim::Pauli::Z}) {
        const Eigen::MatrixXcd v =
            0.5 * oracles::embed_single_qubit(int(n), 0,
                                              oracles::pauli_matrix(axis));
        const auto sampler = [n, axis](RngEngine& r) {
            rpqc::CircuitProgram prefix;
            prefix.n_qubits = int(n);
            for (unsigned q = 0; q < n; ++q) {
                prefix.gates.push_back(sim::Gate::sqrt_h(q));
            }
            prefix.gates.push_back(
                sim::Gate::rotation(axis, 0, r.uniform_angle()));
            return rpqc::dense_unitary(prefix);
        };
        predicted += predict_variance_partial(DesignCase::PlusIs2Design,
                                              sampler, h,
                                              v, n, 60, rng)
                         .value;
    }
    predicted /= 3.0;
    CHECK(predicted == doctest::Approx(std::ldexp(1.0, -int(n)) / 3.0)
                           .epsilon(1e-10));

    experiment::ExperimentConfig config;
    config.qubit_list = {int(n)};
    config.layer_list = {100};
    config.samples_per_point = 2000;
    config.master_seed = 10;
    const auto report = experiment::run_point(config, int(n), 100);
    CHECK(std::abs(report.grad_var - predicted) < 3.0 * report.var_stderr);
}

TEST_CASE("frame potential closed cases") {
    std::vector<sim::Statevector> same(3, sim::Statevector(2));
    CHECK(frame_potential(same, 2) == 1.0);
    CHECK(frame_potential(same, 1) == 1.0);

    std::vector<sim::Statevector> basis;
    for (std::uint64_t b = 0; b < 4; ++b) {
        basis.emplace_back(2, b);
    }
    CHECK(frame_potential(basis, 2) == 0.0);

    std::vector<sim::Statevector> one(1, sim::Statevector(2));
    CHECK_THROWS_AS(frame_potential(one, 2), std::invalid_argument);
    CHECK_THROWS_AS(frame_potential(same, 3), std::invalid_argument);
    std::vector<sim::Statevector> mixed{sim::Statevector(2),
                                        sim::Statevector(3)};
    CHECK_THROWS_AS(frame_potential(mixed, 2), std::invalid_argument);
}

TEST_CASE("haar frame potential values") {
    CHECK(haar_frame_potential(4, 1) == 0.25);
    CHECK(haar_frame_potential(4, 2) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(haar_frame_potential(64, 2) ==
          doctest::Approx(4.8077e-4).epsilon(1e-4));
    CHECK_THROWS_AS(haar_frame_potential(4, 3), std::invalid_argument);
}

TEST_CASE("haar states hit the t=2 frame potential") {
    RngEngine rng(11);
    std::vector<sim::Statevector> states;
    states.reserve(2000);
    for (int i = 0; i < 2000; ++i) {
        states.push_back(random_haar_state(2, rng));
    }
    const double fp = frame_potential(states, 2);
    CHECK(std::abs(fp - 0.1) / 0.1 < 0.10);
}

TEST_CASE("deep layered circuits approach the state 2-design value") {
    RngEngine rng(12);
    std::vector<sim::Statevector> states;
    states.reserve(400);
    for (int i = 0; i < 400; ++i) {
        states.push_back(rpqc::execute(rpqc::sample_rpqc(4, 40, rng)));
    }
    const double fp = frame_potential(states, 2);
    const double target = haar_frame_potential(16, 2);
    CHECK(std::abs(fp - target) / target < 0.10);
}

TEST_SUITE_END();
