#pragma once

#include <Eigen/Core>

#include <vector>

#include "hybrident/dynamics.hpp"
#include "hybrident/linalg.hpp"

namespace hybrident {

// V_ij = <u_i u_j + u_j u_i> / 2 over [X_c, Y_c, q_m, p_m, X_s, Y_s]; vacuum is I/2.
struct CovarianceMatrix {
  Mat6 entries = Mat6::Identity() * 0.5;
};

// Solves A V + V A^T = -D through the n^2 x n^2 Kronecker system
// (I (x) A + A (x) I) vec(V) = -vec(D). Requires a Hurwitz-stable A; the
// result is symmetrized and its residual checked against
// 1e-10 * max(1, ||D||_F).
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d);
CovarianceMatrix solve_lyapunov(const DriftMatrix& a, const DiffusionMatrix& d);

double lyapunov_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& v,
                         const Eigen::MatrixXd& d);

struct OdeSettleResult {
  Eigen::MatrixXd v;
  double t = 0.0;
  double residual = 0.0;  // ||dV/dt||_F at the returned state
  long steps = 0;
};

// Fixed-step RK4 on dV/dt = A V + V A^T + D until ||dV/dt||_F < settle_tol.
// Throws ConvergenceError (carrying the last residual) when t_max is reached first.
OdeSettleResult integrate_covariance_ode(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                         const Eigen::MatrixXd& v0, double dt, double t_max,
                                         double settle_tol);

// Symplectic spectrum of a 2n x 2n covariance (n in 1..3): moduli of the
// eigenvalues of i Omega V with Omega = diag([[0,1],[-1,0]], ...), one value per
// conjugate pair, ascending.
std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v);

inline constexpr double kPhysicalityTol = 1e-8;

struct PhysicalityReport {
  double min_symplectic = 0.0;
  bool physical = false;  // min_symplectic >= 1/2 - kPhysicalityTol
};

PhysicalityReport check_physicality(const CovarianceMatrix& v);

}  // namespace hybrident
