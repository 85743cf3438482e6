#pragma once
// Test-only reference computations. None of these call into the routines they
// are used to check.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// Sign-change scan on a uniform grid refined by bisection.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double lo,
                                      double hi, int cells) {
  std::vector<double> roots;
  const double h = (hi - lo) / cells;
  double a = lo;
  double fa = f(a);
  for (int k = 1; k <= cells; ++k) {
    double b = lo + k * h;
    double fb = f(b);
    if (fa == 0.0) roots.push_back(a);
    if (fa * fb < 0.0) {
      double x0 = a, x1 = b, f0 = fa;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (x0 + x1);
        const double fm = f(mid);
        if (fm == 0.0 || x1 - x0 < 1e-15 * std::max(1.0, std::abs(mid))) {
          x0 = x1 = mid;
          break;
        }
        if ((fm < 0.0) == (f0 < 0.0)) {
          x0 = mid;
          f0 = fm;
        } else {
          x1 = mid;
        }
      }
      roots.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  return roots;
}

// Smallest symplectic eigenvalue of the partial transpose (p2 -> -p2), from a
// direct complex eigen-solve of i Omega V~.
inline double pt_symplectic_min(const Eigen::Matrix4d& v) {
  Eigen::Matrix4d flip = Eigen::Matrix4d::Identity();
  flip(3, 3) = -1.0;
  const Eigen::Matrix4d vt = flip * v * flip;
  Eigen::Matrix4cd omega = Eigen::Matrix4cd::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;
  const Eigen::Matrix4cd m = std::complex<double>(0.0, 1.0) * omega * vt.cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m);
  double best = 1e300;
  for (int k = 0; k < 4; ++k) best = std::min(best, std::abs(es.eigenvalues()(k)));
  return best;
}

inline Eigen::Matrix2d rotation(double theta) {
  Eigen::Matrix2d r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

// Random two-mode Gaussian state: thermal diag, two-mode squeezing, a beam
// splitter and local squeezers/rotations, all symplectic.
inline Eigen::Matrix4d random_two_mode_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double n1 = 3.0 * u(rng), n2 = 3.0 * u(rng);
  Eigen::Matrix4d v = Eigen::Matrix4d::Zero();
  v.diagonal() << n1 + 0.5, n1 + 0.5, n2 + 0.5, n2 + 0.5;

  const double r = 1.5 * u(rng);
  Eigen::Matrix4d tms = Eigen::Matrix4d::Zero();
  tms.topLeftCorner<2, 2>() = std::cosh(r) * Eigen::Matrix2d::Identity();
  tms.bottomRightCorner<2, 2>() = std::cosh(r) * Eigen::Matrix2d::Identity();
  Eigen::Matrix2d z;
  z << std::sinh(r), 0.0, 0.0, -std::sinh(r);
  tms.topRightCorner<2, 2>() = z;
  tms.bottomLeftCorner<2, 2>() = z;

  const double t = 3.14159 * u(rng);
  Eigen::Matrix4d bs = Eigen::Matrix4d::Zero();
  bs.topLeftCorner<2, 2>() = std::cos(t) * Eigen::Matrix2d::Identity();
  bs.bottomRightCorner<2, 2>() = std::cos(t) * Eigen::Matrix2d::Identity();
  bs.topRightCorner<2, 2>() = std::sin(t) * Eigen::Matrix2d::Identity();
  bs.bottomLeftCorner<2, 2>() = -std::sin(t) * Eigen::Matrix2d::Identity();

  auto local = [&] {
    const double s = 0.8 * (u(rng) - 0.5);
    Eigen::Matrix2d sq;
    sq << std::exp(s), 0.0, 0.0, std::exp(-s);
    return Eigen::Matrix2d(rotation(6.28 * u(rng)) * sq * rotation(6.28 * u(rng)));
  };
  Eigen::Matrix4d loc = Eigen::Matrix4d::Zero();
  loc.topLeftCorner<2, 2>() = local();
  loc.bottomRightCorner<2, 2>() = local();

  const Eigen::Matrix4d s = loc * bs * tms;
  return s * v * s.transpose();
}

}  // namespace oracle
