#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <cstddef>
#include <json.hpp>
#include <vector>

#include "plateau/rng.hpp"

namespace plateau::haar {

/// Haar-distributed unitary: QR of an i.i.d. complex Gaussian (Ginibre)
/// matrix with the diagonal phases of R absorbed into Q. The phase fix is
/// what makes the distribution invariant; plain QR is not Haar.
Eigen::MatrixXcd sample_haar_unitary(int dim, RngEngine& rng);

/// One Monte Carlo estimate of a Haar monomial average next to its closed
/// form. order 1: E[U_ij U*_mk], indices = {i, j, m, k}. order 2:
/// E[U_i1j1 U_i2j2 U*_i1'j1' U*_i2'j2'], indices = {i1,j1,i2,j2,i1',j1',i2',j2'}.
struct MomentEstimate {
    int order = 1;
    std::array<int, 8> indices{};
    std::size_t samples = 0;
    std::complex<double> estimate;
    std::complex<double> closed_form;
    double abs_error = 0.0;
};

/// delta_im delta_jk / N.
std::complex<double> first_moment_closed_form(int dim, int i, int j, int m,
                                              int k);

/// Two-term elementwise second-moment (Weingarten) expression with
/// denominators N^2-1 and N(N^2-1).
std::complex<double> second_moment_closed_form(int dim, int i1, int j1, int i2,
                                               int j2, int i1p, int j1p,
                                               int i2p, int j2p);

/// Estimates E[U_ij U*_mk] for every index tuple (dim <= 8) against the
/// closed form. Requires samples >= 10^4.
std::vector<MomentEstimate> check_first_moment(int dim, std::size_t samples,
                                               RngEngine& rng);

/// Estimates the degree-(2,2) monomials on all tuples with indices in {0, 1}
/// (which realises every delta pattern). Requires samples >= 10^5, dim <= 8.
std::vector<MomentEstimate> check_second_moment(int dim, std::size_t samples,
                                                RngEngine& rng);

/// Monte Carlo average of U O U^dag; Haar-exact value is Tr(O)/N * I.
Eigen::MatrixXcd average_conjugated(const Eigen::MatrixXcd& op,
                                    std::size_t samples, RngEngine& rng);

nlohmann::json to_json(const MomentEstimate& e);
nlohmann::json moment_report_json(const std::vector<MomentEstimate>& list);

}  // namespace plateau::haar
