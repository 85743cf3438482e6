#pragma once

#include <Eigen/Core>

#include <complex>
#include <vector>

#include "hybrident/linalg.hpp"
#include "hybrident/model.hpp"

namespace hybrident {

// Drift matrix of u' = A u + n(t) for u = [X_c, Y_c, q_m, p_m, X_s, Y_s].
// Block diagonal: the cavity and the spin are coupled only through the shared
// input beam, which enters the diffusion matrix.
struct DriftMatrix {
  Mat6 entries = Mat6::Zero();
};

// Symmetrized noise correlations D_ij = <n_i n_j + n_j n_i> / 2.
struct DiffusionMatrix {
  Mat6 entries = Mat6::Zero();
};

// Symmetrized spectral densities of the two input ports of the squeezed beam.
struct InputSpectra {
  double sxx_i = 0.5;
  double syy_i = 0.5;
  double sxx_s = 0.5;
  double syy_s = 0.5;
  double sxx_is = 0.0;
  double syy_is = 0.0;
};

Mat4 build_drift_optomech(const ParameterSet& p);

// [[0, omega_s], [-omega_s, -gamma_s]]: a rotation plus damping on Y_s, so a
// sign flip of omega_s is a similarity transform and the block is always stable.
Mat2 build_drift_spin(const ParameterSet& p);

DriftMatrix build_drift(const ParameterSet& p);

InputSpectra input_spectra(double r, double eta_i, double eta_s);

DiffusionMatrix build_diffusion(const ParameterSet& p);

// Covariance of the (possibly lossy) two-mode squeezed input beam, ordering
// [X_in^I, Y_in^I, X_in^S, Y_in^S].
Mat4 input_tmsv_covariance(double r, double eta_i, double eta_s);

struct StabilityReport {
  bool stable = false;
  double max_real_part = 0.0;
  std::vector<std::complex<double>> eigenvalues;
};

// Stable means every eigenvalue has real part below -kStabilityMargin.
inline constexpr double kStabilityMargin = 1e-12;

StabilityReport check_stability(const Eigen::MatrixXd& a);
StabilityReport check_stability(const DriftMatrix& a);

}  // namespace hybrident
