#include "plateau/cli/cli.hpp"

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <algorithm>
#include <cstdio>
#include <fstream>

#include "plateau/gradient/gradient.hpp"
#include "plateau/haar/haar.hpp"
#include "plateau/haar/variance.hpp"
#include "plateau/parallel.hpp"
#include "plateau/rpqc/rpqc.hpp"
#include "plateau/version.hpp"

namespace plateau::cli {

namespace {

std::string fmt_sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    f << contents;
    if (!f) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

// ------------------------------------------------------------------- sweep

int cmd_sweep(const std::string& qubits_text, const std::string& layers_text,
              int samples, const std::string& obs_name, int grad_param,
              std::uint64_t seed, const std::string& out_path,
              std::ostream& err) {
    experiment::ExperimentConfig config;
    config.qubit_list = parse_int_range(qubits_text);
    config.layer_list = parse_int_range(layers_text);
    config.samples_per_point = samples;
    config.observable = experiment::observable_kind_from_name(obs_name);
    config.grad_param = grad_param;
    config.master_seed = seed;
    config.validate();

    const std::size_t total =
        config.qubit_list.size() * config.layer_list.size();
    std::size_t done = 0;
    const auto reports = experiment::run_sweep(
        config, 0, [&](const experiment::VarianceReport& r) {
            ++done;
            err << "[" << done << "/" << total << "] n=" << r.n_qubits
                << " L=" << r.n_layers << " var=" << fmt_sci(r.grad_var)
                << " predicted=" << fmt_sci(r.predicted_var_2design) << "\n";
        });

    std::ostringstream csv;
    experiment::write_csv(csv, reports);
    write_file(out_path, csv.str());
    write_file(out_path + ".json",
               experiment::sidecar_json(config).dump(2) + "\n");
    return 0;
}

// ----------------------------------------------------------------- predict

int cmd_predict(const std::string& qubits_text, const std::string& obs_name,
                std::ostream& out) {
    const auto qubits = parse_int_range(qubits_text);
    const auto kind = experiment::observable_kind_from_name(obs_name);
    out << "n_qubits  predicted_var_2design\n";
    for (int n : qubits) {
        const auto obs = experiment::make_observable(kind, n);
        const auto pred = haar::predict_variance_case3(obs, unsigned(n));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%-8d  %s\n", n,
                      fmt_sci(pred.value).c_str());
        out << buf;
    }
    return 0;
}

// -------------------------------------------------------------- check-haar

int cmd_check_haar(int dim, std::size_t samples, std::uint64_t seed,
                   std::ostream& out) {
    constexpr double kTol = 5e-3;
    bool ok = true;
    out << "check              dim  samples  max_abs_error  tolerance  status\n";
    const auto row = [&](const char* name, double max_err) {
        const bool pass = max_err < kTol;
        ok = ok && pass;
        char buf[128];
        std::snprintf(buf, sizeof buf, "%-17s  %-3d  %-7zu  %-13.3e  %-9.0e  %s\n",
                      name, dim, samples, max_err, kTol,
                      pass ? "ok" : "FAIL");
        out << buf;
    };

    RngEngine rng1(seed);
    const auto first = haar::check_first_moment(dim, samples, rng1);
    double max1 = 0.0;
    for (const auto& e : first) {
        max1 = std::max(max1, e.abs_error);
    }
    row("first-moment", max1);

    // Monte Carlo U O U^dag against Tr(O)/N * I.
    RngEngine rng2(seed + 1);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        op(i, i) = double(i + 1);
    }
    const auto avg = haar::average_conjugated(op, samples, rng2);
    const Eigen::MatrixXcd target = (op.trace() / double(dim)) *
                                    Eigen::MatrixXcd::Identity(dim, dim);
    row("conjugation-mean", (avg - target).cwiseAbs().maxCoeff());

    RngEngine rng3(seed + 2);
    const auto second = haar::check_second_moment(dim, samples, rng3);
    double max2 = 0.0;
    for (const auto& e : second) {
        max2 = std::max(max2, e.abs_error);
    }
    row("second-moment", max2);

    return ok ? 0 : 1;
}

// ------------------------------------------------------------ check-design

int cmd_check_design(int n_qubits, int n_layers, int states, int t,
                     std::uint64_t seed, std::ostream& out) {
    if (states < 2) {
        throw std::invalid_argument("check-design: need at least 2 states");
    }
    const auto state_count = std::size_t(states);
    std::vector<sim::Statevector> slots(state_count,
                                        sim::Statevector(unsigned(n_qubits)));
    parallel_for_index(state_count, 0, [&](std::size_t i) {
        RngEngine rng(experiment::derive_seed(seed, std::uint64_t(n_qubits),
                                              std::uint64_t(n_layers), i));
        slots[i] = rpqc::execute(
            rpqc::sample_rpqc(n_qubits, n_layers, rng));
    });
    const double fp = haar::frame_potential(slots, t);
    const double target =
        haar::haar_frame_potential(std::size_t(1) << n_qubits, t);
    const double rel = std::abs(fp - target) / target;
    const bool pass = rel <= 0.10;
    out << "frame potential (t=" << t << ", " << states << " states, n="
        << n_qubits << ", L=" << n_layers << "): " << fmt_sci(fp) << "\n";
    out << "haar value: " << fmt_sci(target) << "  relative error: "
        << fmt_sci(rel) << "  tolerance: 0.1  "
        << (pass ? "ok" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

// -------------------------------------------------------------- grad-check

int cmd_grad_check(int instances, int max_qubits, int max_layers,
                   std::uint64_t seed, std::ostream& out) {
    if (instances < 1 || max_qubits < 2 || max_layers < 1) {
        throw std::invalid_argument(
            "grad-check: instances >= 1, max-qubits >= 2, max-layers >= 1");
    }
    RngEngine rng(seed);
    double max_exact = 0.0;  // |commutator - parameter shift|
    double max_fd = 0.0;     // |commutator - finite difference|
    double max_abs = 0.0;    // gradient magnitude (bounded by 1 here)
    for (int i = 0; i < instances; ++i) {
        const int n = 2 + int(rng.uniform_below(std::uint32_t(max_qubits - 1)));
        const int l = 1 + int(rng.uniform_below(std::uint32_t(max_layers)));
        const auto spec = rpqc::sample_rpqc(n, l, rng);
        const auto k = rpqc::ParamIndex::from_flat(
            int(rng.uniform_below(std::uint32_t(n * l))), n);
        const auto obs = experiment::make_observable(
            i % 2 == 0 ? experiment::ObservableKind::ZZ
                       : experiment::ObservableKind::Projector,
            n);
        const double gc = grad::grad_commutator(spec, k, obs);
        const double gp = grad::grad_parameter_shift(spec, k, obs);
        const double gf = grad::grad_finite_difference(spec, k, obs, 1e-4);
        max_exact = std::max(max_exact, std::abs(gc - gp));
        max_fd = std::max(max_fd, std::abs(gc - gf));
        max_abs = std::max(max_abs, std::abs(gc));
    }
    const bool ok_exact = max_exact < 1e-10;
    const bool ok_fd = max_fd < 1e-6;
    const bool ok_bound = max_abs <= 1.0 + 1e-12;
    out << "instances: " << instances << "\n";
    out << "max |commutator - parameter-shift|: " << fmt_sci(max_exact)
        << "  tolerance 1e-10  " << (ok_exact ? "ok" : "FAIL") << "\n";
    out << "max |commutator - finite-difference(1e-4)|: " << fmt_sci(max_fd)
        << "  tolerance 1e-06  " << (ok_fd ? "ok" : "FAIL") << "\n";
    out << "max |gradient|: " << fmt_sci(max_abs) << "  bound 1  "
        << (ok_bound ? "ok" : "FAIL") << "\n";
    return (ok_exact && ok_fd && ok_bound) ? 0 : 1;
}

// -------------------------------------------------------------------- plot

int cmd_plot(const std::string& in_path, const std::string& kind_name,
             const std::string& out_path) {
    const PlotKind kind = plot_kind_from_name(kind_name);
    std::ifstream in(in_path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + in_path + "'");
    }
    const auto reports = experiment::read_csv(in);
    if (reports.empty()) {
        throw std::invalid_argument("csv '" + in_path + "' has no data rows");
    }
    write_file(out_path, render_svg(reports, kind));
    write_file(out_path + ".gnuplot",
               render_gnuplot(in_path, out_path, kind));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"barren-plateau gradient statistics for layered random "
                 "circuits"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    int rc = 0;

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "Monte Carlo gradient-variance sweep over (qubits, layers)");
    std::string sw_qubits, sw_layers, sw_obs = "zz", sw_out;
    int sw_samples = 500, sw_grad_param = 0;
    std::uint64_t sw_seed = 0;
    sweep->add_option("--qubits", sw_qubits,
                      "qubit counts: a, a,b,c or a:b:step")->required();
    sweep->add_option("--layers", sw_layers,
                      "layer counts: a, a,b,c or a:b:step")->required();
    sweep->add_option("--samples", sw_samples,
                      "circuit samples per grid point");
    sweep->add_option("--observable", sw_obs, "zz or projector");
    sweep->add_option("--grad-param", sw_grad_param,
                      "flat parameter index for the gradient direction");
    sweep->add_option("--seed", sw_seed, "master seed");
    sweep->add_option("--out", sw_out, "output CSV path")->required();
    sweep->callback([&] {
        rc = cmd_sweep(sw_qubits, sw_layers, sw_samples, sw_obs,
                       sw_grad_param, sw_seed, sw_out, err);
    });

    // predict
    auto* predict = app.add_subcommand(
        "predict", "Print the analytic 2-design plateau variance");
    std::string pr_qubits, pr_obs = "zz";
    predict->add_option("--qubits", pr_qubits, "qubit counts")->required();
    predict->add_option("--observable", pr_obs, "zz or projector");
    predict->callback([&] { rc = cmd_predict(pr_qubits, pr_obs, out); });

    // check-haar
    auto* check_haar = app.add_subcommand(
        "check-haar",
        "Verify Haar moment estimates against the closed forms");
    int ch_dim = 4;
    std::size_t ch_samples = 200000;
    std::uint64_t ch_seed = 1;
    check_haar->add_option("--dim", ch_dim, "matrix dimension (2..8)");
    check_haar->add_option("--samples", ch_samples, "Monte Carlo samples");
    check_haar->add_option("--seed", ch_seed, "seed");
    check_haar->callback(
        [&] { rc = cmd_check_haar(ch_dim, ch_samples, ch_seed, out); });

    // check-design
    auto* check_design = app.add_subcommand(
        "check-design",
        "Frame-potential diagnostic for deep-circuit output states");
    int cd_qubits = 6, cd_layers = 60, cd_states = 2000, cd_t = 2;
    std::uint64_t cd_seed = 1;
    check_design->add_option("--qubits", cd_qubits, "register width");
    check_design->add_option("--layers", cd_layers, "circuit depth");
    check_design->add_option("--states", cd_states, "sampled output states");
    check_design->add_option("--t", cd_t, "design order (1 or 2)");
    check_design->add_option("--seed", cd_seed, "seed");
    check_design->callback([&] {
        rc = cmd_check_design(cd_qubits, cd_layers, cd_states, cd_t, cd_seed,
                              out);
    });

    // grad-check
    auto* grad_check = app.add_subcommand(
        "grad-check", "Cross-validate the three gradient methods");
    int gc_instances = 100, gc_max_qubits = 6, gc_max_layers = 8;
    std::uint64_t gc_seed = 1;
    grad_check->add_option("--instances", gc_instances, "random instances");
    grad_check->add_option("--max-qubits", gc_max_qubits, "largest register");
    grad_check->add_option("--max-layers", gc_max_layers, "deepest circuit");
    grad_check->add_option("--seed", gc_seed, "seed");
    grad_check->callback([&] {
        rc = cmd_grad_check(gc_instances, gc_max_qubits, gc_max_layers,
                            gc_seed, out);
    });

    // plot
    auto* plot = app.add_subcommand(
        "plot", "Render a sweep CSV as a semi-log SVG figure");
    std::string pl_in, pl_kind, pl_out;
    plot->add_option("--in", pl_in, "input CSV")->required();
    plot->add_option("--kind", pl_kind, "vs-qubits or vs-layers")->required();
    plot->add_option("--out", pl_out, "output SVG path")->required();
    plot->callback([&] { rc = cmd_plot(pl_in, pl_kind, pl_out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const experiment::ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run(args, std::cout, std::cerr);
}

}  // namespace plateau::cli
