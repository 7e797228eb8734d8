#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <json.hpp>
#include <span>
#include <stdexcept>
#include <vector>

#include "plateau/gradient/gradient.hpp"
#include "plateau/sim/observable.hpp"

namespace plateau::experiment {

/// Hard cap on statevector width for sweeps (2^26 amplitudes ~ 1 GiB).
inline constexpr int kMaxSweepQubits = 26;

/// Thrown when a sweep would exceed the resource guard; the CLI maps this to
/// its own exit code.
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ObservableKind { ZZ, Projector };

const char* observable_kind_name(ObservableKind k);
ObservableKind observable_kind_from_name(const std::string& name);

/// Observable instance on an n-qubit register: Z0 Z1 for ZZ, |0...0><0...0|
/// for Projector.
sim::Observable make_observable(ObservableKind kind, int n_qubits);

struct ExperimentConfig {
    std::vector<int> qubit_list;
    std::vector<int> layer_list;
    int samples_per_point = 500;
    ObservableKind observable = ObservableKind::ZZ;
    int grad_param = 0;  // flat index; 0 is the first rotation of layer 1
    std::uint64_t master_seed = 0;
    grad::Method method = grad::Method::ParameterShift;

    void validate() const;
    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
};

/// Gradient statistics at one (n, L) grid point. Reproducible bit-for-bit
/// from (config, n, L) alone, independent of worker count.
struct VarianceReport {
    int n_qubits = 0;
    int n_layers = 0;
    int samples = 0;
    double grad_mean = 0.0;
    double grad_var = 0.0;     // unbiased, divisor S-1
    double mean_stderr = 0.0;  // sqrt(grad_var / S)
    double var_stderr = 0.0;   // from the fourth central moment
    double predicted_var_2design = 0.0;
};

/// Stateless per-sample seed: an injective pack of (n, L, index) pushed
/// through two SplitMix64 finalizer rounds, keyed by the master seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t n_qubits,
                          std::uint64_t n_layers, std::uint64_t sample_index);

VarianceReport run_point(const ExperimentConfig& config, int n_qubits,
                         int n_layers, int threads = 0);

/// Full qubit_list x layer_list grid (qubits outer), reports in grid order.
/// `progress`, when set, is called once per completed point.
std::vector<VarianceReport> run_sweep(
    const ExperimentConfig& config, int threads = 0,
    const std::function<void(const VarianceReport&)>& progress = {});

/// CSV with the fixed header
/// n_qubits,n_layers,samples,grad_mean,grad_var,mean_stderr,var_stderr,pred_var_2design
/// and doubles rendered with 17 significant digits.
extern const char* const kCsvHeader;
void write_csv(std::ostream& out, std::span<const VarianceReport> reports);
std::vector<VarianceReport> read_csv(std::istream& in);

/// Provenance sidecar: full config plus the artifact version.
nlohmann::json sidecar_json(const ExperimentConfig& config);

}  // namespace plateau::experiment
