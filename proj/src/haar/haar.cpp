#include "plateau/haar/haar.hpp"

#include <cmath>
#include <stdexcept>

#include "plateau/accum.hpp"

namespace plateau::haar {

namespace {

// Compensated accumulator for complex means.
struct ComplexSum {
    NeumaierSum re, im;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> mean(std::size_t n) const {
        return {re.value() / double(n), im.value() / double(n)};
    }
};

}  // namespace

Eigen::MatrixXcd sample_haar_unitary(int dim, RngEngine& rng) {
    if (dim < 2) {
        throw std::invalid_argument("sample_haar_unitary: dim must be >= 2");
    }
    Eigen::MatrixXcd g(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = std::complex<double>(re, im);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    // Absorb the phases of R's diagonal so the triangular factor has a
    // positive real diagonal; this is what makes Q Haar-distributed.
    const auto r_diag = qr.matrixQR().diagonal();
    for (int j = 0; j < dim; ++j) {
        const std::complex<double> r = r_diag(j);
        const double mag = std::abs(r);
        const std::complex<double> phase =
            mag > 0.0 ? r / mag : std::complex<double>(1.0, 0.0);
        q.col(j) *= phase;
    }
    return q;
}

std::complex<double> first_moment_closed_form(int dim, int i, int j, int m,
                                              int k) {
    return (i == m && j == k) ? std::complex<double>(1.0 / double(dim), 0.0)
                              : std::complex<double>(0.0, 0.0);
}

std::complex<double> second_moment_closed_form(int dim, int i1, int j1, int i2,
                                               int j2, int i1p, int j1p,
                                               int i2p, int j2p) {
    const double n = double(dim);
    const auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    const double direct = d(i1, i1p) * d(i2, i2p) * d(j1, j1p) * d(j2, j2p) +
                          d(i1, i2p) * d(i2, i1p) * d(j1, j2p) * d(j2, j1p);
    const double crossed = d(i1, i1p) * d(i2, i2p) * d(j1, j2p) * d(j2, j1p) +
                           d(i1, i2p) * d(i2, i1p) * d(j1, j1p) * d(j2, j2p);
    const double value =
        direct / (n * n - 1.0) - crossed / (n * (n * n - 1.0));
    return {value, 0.0};
}

std::vector<MomentEstimate> check_first_moment(int dim, std::size_t samples,
                                               RngEngine& rng) {
    if (dim < 2 || dim > 8) {
        throw std::invalid_argument("check_first_moment: dim must be in [2, 8]");
    }
    if (samples < 10000) {
        throw std::invalid_argument(
            "check_first_moment: samples must be >= 10^4");
    }
    const std::size_t tuples = std::size_t(dim) * dim * dim * dim;
    std::vector<ComplexSum> acc(tuples);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd u = sample_haar_unitary(dim, rng);
        std::size_t t = 0;
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                const std::complex<double> uij = u(i, j);
                for (int m = 0; m < dim; ++m) {
                    for (int k = 0; k < dim; ++k) {
                        acc[t++].add(uij * std::conj(u(m, k)));
                    }
                }
            }
        }
    }
    std::vector<MomentEstimate> out;
    out.reserve(tuples);
    std::size_t t = 0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            for (int m = 0; m < dim; ++m) {
                for (int k = 0; k < dim; ++k) {
                    MomentEstimate e;
                    e.order = 1;
                    e.indices = {i, j, m, k, 0, 0, 0, 0};
                    e.samples = samples;
                    e.estimate = acc[t++].mean(samples);
                    e.closed_form = first_moment_closed_form(dim, i, j, m, k);
                    e.abs_error = std::abs(e.estimate - e.closed_form);
                    out.push_back(e);
                }
            }
        }
    }
    return out;
}

std::vector<MomentEstimate> check_second_moment(int dim, std::size_t samples,
                                                RngEngine& rng) {
    if (dim < 2 || dim > 8) {
        throw std::invalid_argument(
            "check_second_moment: dim must be in [2, 8]");
    }
    if (samples < 100000) {
        throw std::invalid_argument(
            "check_second_moment: samples must be >= 10^5");
    }
    // All 2^8 tuples with indices in {0, 1}: every delta pattern of the
    // closed form appears.
    constexpr std::size_t kTuples = 256;
    std::vector<ComplexSum> acc(kTuples);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd u = sample_haar_unitary(dim, rng);
        for (std::size_t t = 0; t < kTuples; ++t) {
            const int i1 = int(t >> 7) & 1, j1 = int(t >> 6) & 1;
            const int i2 = int(t >> 5) & 1, j2 = int(t >> 4) & 1;
            const int i1p = int(t >> 3) & 1, j1p = int(t >> 2) & 1;
            const int i2p = int(t >> 1) & 1, j2p = int(t) & 1;
            acc[t].add(u(i1, j1) * u(i2, j2) * std::conj(u(i1p, j1p)) *
                       std::conj(u(i2p, j2p)));
        }
    }
    std::vector<MomentEstimate> out;
    out.reserve(kTuples);
    for (std::size_t t = 0; t < kTuples; ++t) {
        MomentEstimate e;
        e.order = 2;
        e.indices = {int(t >> 7) & 1, int(t >> 6) & 1, int(t >> 5) & 1,
                     int(t >> 4) & 1, int(t >> 3) & 1, int(t >> 2) & 1,
                     int(t >> 1) & 1, int(t) & 1};
        e.samples = samples;
        e.estimate = acc[t].mean(samples);
        e.closed_form = second_moment_closed_form(
            dim, e.indices[0], e.indices[1], e.indices[2], e.indices[3],
            e.indices[4], e.indices[5], e.indices[6], e.indices[7]);
        e.abs_error = std::abs(e.estimate - e.closed_form);
        out.push_back(e);
    }
    return out;
}

Eigen::MatrixXcd average_conjugated(const Eigen::MatrixXcd& op,
                                    std::size_t samples, RngEngine& rng) {
    if (op.rows() != op.cols()) {
        throw std::invalid_argument("average_conjugated: op must be square");
    }
    if (samples < 1) {
        throw std::invalid_argument("average_conjugated: samples must be >= 1");
    }
    const int dim = int(op.rows());
    std::vector<ComplexSum> acc(std::size_t(dim) * dim);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eigen::MatrixXcd u = sample_haar_unitary(dim, rng);
        const Eigen::MatrixXcd m = u * op * u.adjoint();
        for (int r = 0; r < dim; ++r) {
            for (int c = 0; c < dim; ++c) {
                acc[std::size_t(r) * dim + c].add(m(r, c));
            }
        }
    }
    Eigen::MatrixXcd mean(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            mean(r, c) = acc[std::size_t(r) * dim + c].mean(samples);
        }
    }
    return mean;
}

nlohmann::json to_json(const MomentEstimate& e) {
    nlohmann::json j;
    j["order"] = e.order;
    const int used = e.order == 1 ? 4 : 8;
    j["indices"] = std::vector<int>(e.indices.begin(), e.indices.begin() + used);
    j["samples"] = e.samples;
    j["estimate"] = {e.estimate.real(), e.estimate.imag()};
    j["closed_form"] = {e.closed_form.real(), e.closed_form.imag()};
    j["abs_error"] = e.abs_error;
    return j;
}

nlohmann::json moment_report_json(const std::vector<MomentEstimate>& list) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& e : list) {
        j.push_back(to_json(e));
    }
    return j;
}

}  // namespace plateau::haar
