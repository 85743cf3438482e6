#include "hybrident/steady_state.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybrident/errors.hpp"

namespace hybrident {

namespace {

void require_square_pair(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
  if (a.rows() != a.cols() || d.rows() != d.cols() || a.rows() != d.rows() || a.rows() == 0)
    throw DomainError("drift and diffusion must be square matrices of equal size");
}

void require_stable(const Eigen::MatrixXd& a) {
  const auto rep = check_stability(a);
  if (!rep.stable) {
    std::ostringstream os;
    os << "drift matrix is not Hurwitz stable: eigenvalue " << rep.eigenvalues.front()
       << " has real part " << rep.max_real_part;
    throw PreconditionError(os.str());
  }
}

template <class M>
M lyapunov_rhs(const M& a, const M& v, const M& d) {
  return a * v + v * a.transpose() + d;
}

template <class M>
OdeSettleResult rk4_settle(const M& a, const M& d, M v, double dt, double t_max,
                           double settle_tol) {
  OdeSettleResult out;
  double t = 0.0;
  long steps = 0;
  for (;;) {
    const M k1 = lyapunov_rhs(a, v, d);
    const double res = k1.norm();
    if (res < settle_tol) {
      out.v = v;
      out.t = t;
      out.residual = res;
      out.steps = steps;
      return out;
    }
    if (t >= t_max) {
      std::ostringstream os;
      os << "covariance ODE did not settle by t = " << t_max << " (||dV/dt|| = " << res << ")";
      throw ConvergenceError(os.str(), res);
    }
    const M k2 = lyapunov_rhs(a, M(v + 0.5 * dt * k1), d);
    const M k3 = lyapunov_rhs(a, M(v + 0.5 * dt * k2), d);
    const M k4 = lyapunov_rhs(a, M(v + dt * k3), d);
    v += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    ++steps;
    t = steps * dt;
  }
}

}  // namespace

double lyapunov_residual(const Eigen::MatrixXd& a, const Eigen::MatrixXd& v,
                         const Eigen::MatrixXd& d) {
  return lyapunov_rhs<Eigen::MatrixXd>(a, v, d).norm();
}

Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d) {
  require_square_pair(a, d);
  require_stable(a);

  const Eigen::Index n = a.rows();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd k(n * n, n * n);
  // Column-major vec: vec(A V) = (I (x) A) vec(V), vec(V A^T) = (A (x) I) vec(V).
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      k.block(i * n, j * n, n, n) = eye(i, j) * a + a(i, j) * eye;

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(k);
  if (!(lu.rcond() > 1e-14)) {
    std::ostringstream os;
    os << "vectorized Lyapunov system is singular (rcond = " << lu.rcond() << ")";
    throw NumericalError(os.str());
  }

  const Eigen::VectorXd rhs = -Eigen::Map<const Eigen::VectorXd>(d.data(), n * n);
  Eigen::VectorXd x = lu.solve(rhs);
  x += lu.solve(rhs - k * x);  // one step of iterative refinement

  Eigen::MatrixXd v = Eigen::Map<Eigen::MatrixXd>(x.data(), n, n);
  v = 0.5 * (v + v.transpose()).eval();

  const double res = lyapunov_residual(a, v, d);
  if (!(res <= 1e-10 * std::max(1.0, d.norm()))) {
    std::ostringstream os;
    os << "Lyapunov residual " << res << " exceeds tolerance";
    throw NumericalError(os.str());
  }
  return v;
}

CovarianceMatrix solve_lyapunov(const DriftMatrix& a, const DiffusionMatrix& d) {
  CovarianceMatrix v;
  v.entries = solve_lyapunov(Eigen::MatrixXd(a.entries), Eigen::MatrixXd(d.entries));
  return v;
}

OdeSettleResult integrate_covariance_ode(const Eigen::MatrixXd& a, const Eigen::MatrixXd& d,
                                         const Eigen::MatrixXd& v0, double dt, double t_max,
                                         double settle_tol) {
  require_square_pair(a, d);
  if (v0.rows() != a.rows() || v0.cols() != a.cols())
    throw DomainError("initial covariance has the wrong shape");
  if (!(dt > 0.0)) throw DomainError("dt must be > 0");
  require_stable(a);

  if (a.rows() == 6) {
    auto r = rk4_settle<Mat6>(a, d, v0, dt, t_max, settle_tol);
    return r;
  }
  if (a.rows() == 2) return rk4_settle<Mat2>(a, d, v0, dt, t_max, settle_tol);
  return rk4_settle<Eigen::MatrixXd>(a, d, v0, dt, t_max, settle_tol);
}

std::vector<double> symplectic_eigenvalues(const Eigen::MatrixXd& v) {
  const Eigen::Index dim = v.rows();
  if (dim != v.cols() || dim % 2 != 0 || dim < 2 || dim > 6)
    throw DomainError("symplectic spectrum needs a 2n x 2n matrix with n in {1,2,3}");
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (!v.allFinite() || (v - v.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw DomainError("covariance matrix is not symmetric");

  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega(k, k + 1) = 1.0;
    omega(k + 1, k) = -1.0;
  }
  // Eigenvalues of Omega V are +-i nu; those of i Omega V are +-nu.
  Eigen::EigenSolver<Eigen::MatrixXd> solver(omega * v, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("eigenvalue iteration did not converge for Omega V");

  std::vector<double> moduli;
  for (const auto& z : solver.eigenvalues()) moduli.push_back(std::abs(z));
  std::sort(moduli.begin(), moduli.end());
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < moduli.size(); k += 2)
    out.push_back(0.5 * (moduli[k] + moduli[k + 1]));
  return out;
}

PhysicalityReport check_physicality(const CovarianceMatrix& v) {
  PhysicalityReport rep;
  rep.min_symplectic = symplectic_eigenvalues(v.entries).front();
  rep.physical = rep.min_symplectic >= 0.5 - kPhysicalityTol;
  return rep;
}

}  // namespace hybrident
