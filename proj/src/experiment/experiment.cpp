#include "plateau/experiment/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "plateau/accum.hpp"
#include "plateau/haar/variance.hpp"
#include "plateau/parallel.hpp"
#include "plateau/rng.hpp"
#include "plateau/rpqc/rpqc.hpp"
#include "plateau/version.hpp"

namespace plateau::experiment {

const char* const kCsvHeader =
    "n_qubits,n_layers,samples,grad_mean,grad_var,mean_stderr,var_stderr,"
    "pred_var_2design";

const char* observable_kind_name(ObservableKind k) {
    switch (k) {
        case ObservableKind::ZZ: return "zz";
        case ObservableKind::Projector: return "projector";
    }
    throw std::invalid_argument("invalid observable kind");
}

ObservableKind observable_kind_from_name(const std::string& name) {
    if (name == "zz") return ObservableKind::ZZ;
    if (name == "projector") return ObservableKind::Projector;
    throw std::invalid_argument("unknown observable '" + name +
                                "' (expected zz or projector)");
}

sim::Observable make_observable(ObservableKind kind, int n_qubits) {
    if (n_qubits < 2) {
        throw std::invalid_argument("make_observable: n_qubits must be >= 2");
    }
    if (kind == ObservableKind::ZZ) {
        return sim::Observable::pauli_string(
            1.0, {{0, sim::Pauli::Z}, {1, sim::Pauli::Z}});
    }
    return sim::Observable::projector(unsigned(n_qubits), 0);
}

void ExperimentConfig::validate() const {
    if (qubit_list.empty() || layer_list.empty()) {
        throw std::invalid_argument("config: qubit and layer lists must be "
                                    "non-empty");
    }
    for (int n : qubit_list) {
        if (n < 2) {
            throw std::invalid_argument("config: all qubit counts must be >= 2");
        }
    }
    for (int l : layer_list) {
        if (l < 1) {
            throw std::invalid_argument("config: all layer counts must be >= 1");
        }
    }
    if (samples_per_point < 2) {
        throw std::invalid_argument(
            "config: samples_per_point must be >= 2 (unbiased variance)");
    }
    if (grad_param < 0) {
        throw std::invalid_argument("config: grad_param must be >= 0");
    }
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j;
    j["qubit_list"] = qubit_list;
    j["layer_list"] = layer_list;
    j["samples_per_point"] = samples_per_point;
    j["observable"] = observable_kind_name(observable);
    j["grad_param"] = grad_param;
    j["master_seed"] = master_seed;
    j["method"] = grad::method_name(method);
    return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig c;
    c.qubit_list = j.at("qubit_list").get<std::vector<int>>();
    c.layer_list = j.at("layer_list").get<std::vector<int>>();
    c.samples_per_point = j.at("samples_per_point").get<int>();
    c.observable =
        observable_kind_from_name(j.at("observable").get<std::string>());
    c.grad_param = j.at("grad_param").get<int>();
    c.master_seed = j.at("master_seed").get<std::uint64_t>();
    c.method = grad::method_from_name(j.at("method").get<std::string>());
    c.validate();
    return c;
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t n_qubits,
                          std::uint64_t n_layers,
                          std::uint64_t sample_index) {
    // (n, L, index) packed injectively: 8 + 16 + 40 bits.
    const std::uint64_t key = (n_qubits << 56) | ((n_layers & 0xFFFF) << 40) |
                              (sample_index & ((std::uint64_t{1} << 40) - 1));
    return mix64(mix64(key ^ mix64(master_seed)) ^ 0x9E3779B97F4A7C15ULL);
}

VarianceReport run_point(const ExperimentConfig& config, int n_qubits,
                         int n_layers, int threads) {
    config.validate();
    if (n_qubits > kMaxSweepQubits) {
        throw ResourceLimitError(
            "refusing to simulate more than " +
            std::to_string(kMaxSweepQubits) + " qubits (requested " +
            std::to_string(n_qubits) + ")");
    }
    if (config.grad_param >= n_qubits * n_layers) {
        throw std::invalid_argument(
            "run_point: grad_param exceeds the parameter count L*n");
    }
    const auto obs = make_observable(config.observable, n_qubits);
    const auto k = rpqc::ParamIndex::from_flat(config.grad_param, n_qubits);
    const int s = config.samples_per_point;
    const auto sample_count = std::size_t(s);

    std::vector<double> values(sample_count);
    parallel_for_index(sample_count, threads, [&](std::size_t i) {
        RngEngine rng(derive_seed(config.master_seed, std::uint64_t(n_qubits),
                                  std::uint64_t(n_layers), i));
        const auto spec = rpqc::sample_rpqc(n_qubits, n_layers, rng);
        values[i] = grad::gradient(spec, k, obs, config.method);
    });

    // Aggregation in sample order with compensated sums, so the result does
    // not depend on the worker count.
    NeumaierSum sum;
    for (double v : values) {
        sum.add(v);
    }
    const double mean = sum.value() / double(s);
    NeumaierSum dev2, dev4;
    for (double v : values) {
        const double d = v - mean;
        dev2.add(d * d);
        dev4.add(d * d * d * d);
    }
    const double ss2 = dev2.value();
    const double var = ss2 / double(s - 1);       // unbiased
    const double m2 = ss2 / double(s);            // central moments
    const double m4 = dev4.value() / double(s);
    const double var_of_var =
        (m4 - m2 * m2 * double(s - 3) / double(s - 1)) / double(s);

    VarianceReport r;
    r.n_qubits = n_qubits;
    r.n_layers = n_layers;
    r.samples = s;
    r.grad_mean = mean;
    r.grad_var = var;
    r.mean_stderr = std::sqrt(var / double(s));
    r.var_stderr = std::sqrt(std::max(0.0, var_of_var));
    r.predicted_var_2design =
        haar::predict_variance_case3(obs, unsigned(n_qubits)).value;
    return r;
}

std::vector<VarianceReport> run_sweep(
    const ExperimentConfig& config, int threads,
    const std::function<void(const VarianceReport&)>& progress) {
    config.validate();
    for (int n : config.qubit_list) {
        if (n > kMaxSweepQubits) {
            throw ResourceLimitError(
                "refusing to simulate more than " +
                std::to_string(kMaxSweepQubits) + " qubits (requested " +
                std::to_string(n) + ")");
        }
    }
    std::vector<VarianceReport> out;
    out.reserve(config.qubit_list.size() * config.layer_list.size());
    for (int n : config.qubit_list) {
        for (int l : config.layer_list) {
            out.push_back(run_point(config, n, l, threads));
            if (progress) {
                progress(out.back());
            }
        }
    }
    return out;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const VarianceReport> reports) {
    out << kCsvHeader << '\n';
    for (const auto& r : reports) {
        out << r.n_qubits << ',' << r.n_layers << ',' << r.samples << ','
            << format_double(r.grad_mean) << ',' << format_double(r.grad_var)
            << ',' << format_double(r.mean_stderr) << ','
            << format_double(r.var_stderr) << ','
            << format_double(r.predicted_var_2design) << '\n';
    }
}

std::vector<VarianceReport> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("csv: missing or malformed header");
    }
    std::vector<VarianceReport> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 8) {
            throw std::invalid_argument("csv: malformed row '" + line + "'");
        }
        VarianceReport r;
        try {
            r.n_qubits = std::stoi(fields[0]);
            r.n_layers = std::stoi(fields[1]);
            r.samples = std::stoi(fields[2]);
            r.grad_mean = std::stod(fields[3]);
            r.grad_var = std::stod(fields[4]);
            r.mean_stderr = std::stod(fields[5]);
            r.var_stderr = std::stod(fields[6]);
            r.predicted_var_2design = std::stod(fields[7]);
        } catch (const std::exception&) {
            throw std::invalid_argument("csv: unparsable row '" + line + "'");
        }
        out.push_back(r);
    }
    return out;
}

nlohmann::json sidecar_json(const ExperimentConfig& config) {
    nlohmann::json j;
    j["artifact_version"] = kVersion;
    j["config"] = config.to_json();
    return j;
}

}  // namespace plateau::experiment
