#include <doctest.h>

#include <cmath>
#include <random>

#include "hybrident/dynamics.hpp"
#include "hybrident/errors.hpp"
#include "hybrident/steady_state.hpp"

using namespace hybrident;

namespace {

Eigen::MatrixXd oscillator(double w, double g) {
  Eigen::MatrixXd a(2, 2);
  a << 0.0, w, -w, -g;
  return a;
}

Eigen::MatrixXd diag2(double x, double y) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
  d(0, 0) = x;
  d(1, 1) = y;
  return d;
}

}  // namespace

TEST_CASE("thermal oscillator steady state") {
  // v_qq = v_pp = n + 1/2, v_qp = 0
  const auto v = solve_lyapunov(oscillator(60.0, 1.0), diag2(0.0, 2.0 * 1.0 * 1.3));
  CHECK((v - 1.3 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("empty cavity passes its input through") {
  Eigen::MatrixXd a(2, 2);
  a << -1.0, -60.0, 60.0, -1.0;
  const auto vac = solve_lyapunov(a, Eigen::MatrixXd::Identity(2, 2));
  CHECK((vac - 0.5 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-13);

  const double c2 = std::cosh(2.0);
  const auto sq = solve_lyapunov(a, c2 * Eigen::MatrixXd::Identity(2, 2));
  CHECK((sq - 0.5 * c2 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(sq(0, 0) == doctest::Approx(1.8811).epsilon(1e-4));
}

TEST_CASE("Lyapunov solve of the full model") {
  ParameterSet p;
  p.g_om = 1.0;
  p.r = 1.2;
  const auto a = build_drift(p);
  const auto d = build_diffusion(p);
  const auto v = solve_lyapunov(a, d);
  CHECK(v.entries == v.entries.transpose());
  CHECK(lyapunov_residual(a.entries, v.entries, d.entries) <= 1e-10 * std::max(1.0, d.entries.norm()));
  CHECK(v.entries.diagonal().minCoeff() > 0.0);
  CHECK(check_physicality(v).physical);
}

TEST_CASE("Lyapunov solution is linear in the diffusion") {
  ParameterSet p1;
  p1.g_om = 0.8;
  p1.r = 0.7;
  ParameterSet p2 = p1;
  p2.r = 2.1;
  p2.n_m = 3.0;
  const auto a = Eigen::MatrixXd(build_drift(p1).entries);
  const Eigen::MatrixXd d1 = build_diffusion(p1).entries;
  const Eigen::MatrixXd d2 = build_diffusion(p2).entries;
  const double x = 0.3, y = 1.7;
  const auto combined = solve_lyapunov(a, x * d1 + y * d2);
  const Eigen::MatrixXd separate = x * solve_lyapunov(a, d1) + y * solve_lyapunov(a, d2);
  CHECK((combined - separate).norm() <= 1e-10 * std::max(1.0, separate.norm()));
}

TEST_CASE("decoupled subsystems have block-diagonal covariance") {
  for (double r : {0.0, 0.5, 1.0, 2.5}) {
    ParameterSet p;
    p.g_om = 0.0;
    p.gamma_readout = 0.0;
    p.r = r;
    const auto v = solve_lyapunov(build_drift(p), build_diffusion(p)).entries;
    CHECK(v.block<2, 2>(0, 2).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(v.block<2, 2>(0, 4).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(v.block<2, 2>(2, 4).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("unstable drift is rejected") {
  Eigen::MatrixXd printed(2, 2);
  printed << 0.0, -60.0, -60.0, -1.0;
  CHECK_THROWS_AS(solve_lyapunov(printed, diag2(0.0, 1.0)), PreconditionError);
  CHECK_THROWS_AS(solve_lyapunov(Eigen::MatrixXd(2, 2), Eigen::MatrixXd(3, 3)), DomainError);
}

TEST_CASE("RK4 oracle agrees with the direct solve") {
  ParameterSet p;
  const Eigen::MatrixXd a = build_drift(p).entries;
  const Eigen::MatrixXd d = build_diffusion(p).entries;
  const auto direct = solve_lyapunov(a, d);
  const auto ode = integrate_covariance_ode(a, d, 0.5 * Eigen::MatrixXd::Identity(6, 6), 1e-3,
                                            1e4, 1e-10);
  CHECK(ode.residual < 1e-10);
  CHECK((ode.v - direct).cwiseAbs().maxCoeff() < 1e-6);

  const auto osc = integrate_covariance_ode(oscillator(60.0, 1.0), diag2(0.0, 2.6),
                                            Eigen::MatrixXd::Zero(2, 2), 1e-3, 1e4, 1e-10);
  CHECK((osc.v - 1.3 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("RK4 oracle fixed point and failure modes") {
  ParameterSet p;
  const Eigen::MatrixXd a = build_drift(p).entries;
  const auto still = integrate_covariance_ode(a, Eigen::MatrixXd::Zero(6, 6),
                                              Eigen::MatrixXd::Zero(6, 6), 1e-3, 10.0, 1e-10);
  CHECK(still.v.isZero(0.0));
  CHECK(still.steps == 0);

  try {
    integrate_covariance_ode(a, build_diffusion(p).entries, Eigen::MatrixXd::Zero(6, 6), 1e-3,
                             0.5, 1e-10);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_residual() > 1e-10);
  }
  CHECK_THROWS_AS(integrate_covariance_ode(a, a, a, 0.0, 1.0, 1e-10), DomainError);
}

TEST_CASE("symplectic eigenvalues") {
  auto vac = symplectic_eigenvalues(0.5 * Eigen::MatrixXd::Identity(4, 4));
  REQUIRE(vac.size() == 2);
  CHECK(vac[0] == doctest::Approx(0.5));
  CHECK(vac[1] == doctest::Approx(0.5));

  const auto tmsv = symplectic_eigenvalues(Eigen::MatrixXd(input_tmsv_covariance(1.0, 1.0, 1.0)));
  CHECK(tmsv[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(tmsv[1] == doctest::Approx(0.5).epsilon(1e-10));

  const auto thermal = symplectic_eigenvalues(diag2(1.3, 1.3));
  REQUIRE(thermal.size() == 1);
  CHECK(thermal[0] == doctest::Approx(1.3));

  Eigen::MatrixXd three = Eigen::MatrixXd::Identity(6, 6);
  three.diagonal() << 0.5, 0.5, 2.0, 2.0, 1.0, 1.0;
  const auto s3 = symplectic_eigenvalues(three);
  CHECK(s3 == std::vector<double>{0.5, 1.0, 2.0});

  // squeezed vacuum is still pure
  const auto squeezed = symplectic_eigenvalues(diag2(0.5 * std::exp(2.0), 0.5 * std::exp(-2.0)));
  CHECK(squeezed[0] == doctest::Approx(0.5).epsilon(1e-12));

  Eigen::MatrixXd asym = 0.5 * Eigen::MatrixXd::Identity(2, 2);
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(symplectic_eigenvalues(asym), DomainError);
  CHECK_THROWS_AS(symplectic_eigenvalues(Eigen::MatrixXd::Identity(3, 3)), DomainError);
  CHECK_THROWS_AS(symplectic_eigenvalues(Eigen::MatrixXd::Identity(8, 8)), DomainError);
}

TEST_CASE("default steady state is physical") {
  for (double r : {0.0, 1.0, 3.0}) {
    ParameterSet p;
    p.r = r;
    const auto v = solve_lyapunov(build_drift(p), build_diffusion(p));
    CHECK(check_physicality(v).min_symplectic >= 0.5 - kPhysicalityTol);
  }
}
