#include "hybrident/dynamics.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hybrident/errors.hpp"

namespace hybrident {

Mat4 build_drift_optomech(const ParameterSet& p) {
  const double phi = std::atan(p.delta / p.kappa);
  const double gs = p.g_om * std::sin(phi);
  const double gc = p.g_om * std::cos(phi);
  Mat4 a;
  // clang-format off
  a << -p.kappa, -p.delta,  -gs,          0.0,
        p.delta, -p.kappa,   gc,          0.0,
        0.0,      0.0,       0.0,         p.omega_m,
        gc,       gs,       -p.omega_m,  -p.gamma_m;
  // clang-format on
  return a;
}

Mat2 build_drift_spin(const ParameterSet& p) {
  Mat2 a;
  a << 0.0, p.omega_s, -p.omega_s, -p.gamma_s;
  return a;
}

DriftMatrix build_drift(const ParameterSet& p) {
  DriftMatrix a;
  a.entries.topLeftCorner<4, 4>() = build_drift_optomech(p);
  a.entries.bottomRightCorner<2, 2>() = build_drift_spin(p);
  return a;
}

InputSpectra input_spectra(double r, double eta_i, double eta_s) {
  const double sh2 = std::sinh(r) * std::sinh(r);
  const double cross = 0.5 * std::sqrt(eta_i * eta_s) * std::sinh(2.0 * r);
  InputSpectra s;
  s.sxx_i = s.syy_i = 0.5 * (1.0 + 2.0 * eta_i * sh2);
  s.sxx_s = s.syy_s = 0.5 * (1.0 + 2.0 * eta_s * sh2);
  s.sxx_is = cross;
  s.syy_is = -cross;
  return s;
}

DiffusionMatrix build_diffusion(const ParameterSet& p) {
  const auto s = input_spectra(p.r, p.eta_i, p.eta_s);
  DiffusionMatrix d;
  auto& m = d.entries;
  m(kXc, kXc) = 2.0 * p.kappa * s.sxx_i;
  m(kYc, kYc) = 2.0 * p.kappa * s.syy_i;
  m(kPm, kPm) = 2.0 * p.gamma_m * (p.n_m + 0.5);
  m(kYs, kYs) = 2.0 * p.gamma_s * (p.n_s + 0.5) + p.gamma_readout * s.sxx_s;
  // The spin sees only X_in^S, so the beam correlates X_c noise with Y_s noise.
  m(kXc, kYs) = m(kYs, kXc) = std::sqrt(2.0 * p.kappa * p.gamma_readout) * s.sxx_is;
  return d;
}

Mat4 input_tmsv_covariance(double r, double eta_i, double eta_s) {
  const auto s = input_spectra(r, eta_i, eta_s);
  Mat4 v;
  // clang-format off
  v << s.sxx_i,  0.0,      s.sxx_is, 0.0,
       0.0,      s.syy_i,  0.0,      s.syy_is,
       s.sxx_is, 0.0,      s.sxx_s,  0.0,
       0.0,      s.syy_is, 0.0,      s.syy_s;
  // clang-format on
  return v;
}

StabilityReport check_stability(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DomainError("stability check needs a non-empty square matrix");
  if (!a.allFinite()) throw DomainError("drift matrix has non-finite entries");

  Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigenvalue iteration did not converge for drift matrix\n" << a;
    throw NumericalError(os.str());
  }

  StabilityReport rep;
  rep.max_real_part = -std::numeric_limits<double>::infinity();
  for (const auto& z : solver.eigenvalues()) {
    rep.eigenvalues.push_back(z);
    rep.max_real_part = std::max(rep.max_real_part, z.real());
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
  });
  rep.stable = rep.max_real_part < -kStabilityMargin;
  return rep;
}

StabilityReport check_stability(const DriftMatrix& a) { return check_stability(Eigen::MatrixXd(a.entries)); }

}  // namespace hybrident
