#include "hybrident/model.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "hybrident/errors.hpp"

namespace hybrident {

namespace {

double* field_ptr(ParameterSet& p, std::string_view name) {
  if (name == "kappa") return &p.kappa;
  if (name == "delta") return &p.delta;
  if (name == "omega_m") return &p.omega_m;
  if (name == "gamma_m") return &p.gamma_m;
  if (name == "omega_s") return &p.omega_s;
  if (name == "gamma_s") return &p.gamma_s;
  if (name == "g_om") return &p.g_om;
  if (name == "gamma_readout") return &p.gamma_readout;
  if (name == "n_m") return &p.n_m;
  if (name == "n_s") return &p.n_s;
  if (name == "eta_i") return &p.eta_i;
  if (name == "eta_s") return &p.eta_s;
  if (name == "r") return &p.r;
  return nullptr;
}

std::string valid_names() {
  std::string out;
  for (auto n : ParameterSet::field_names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

bool ParameterSet::is_field(std::string_view name) {
  return std::find(field_names.begin(), field_names.end(), name) != field_names.end();
}

double ParameterSet::get(std::string_view name) const {
  auto* ptr = field_ptr(const_cast<ParameterSet&>(*this), name);
  if (!ptr)
    throw DomainError("unknown parameter '" + std::string(name) + "'; valid: " + valid_names());
  return *ptr;
}

void ParameterSet::set(std::string_view name, double value) {
  auto* ptr = field_ptr(*this, name);
  if (!ptr)
    throw DomainError("unknown parameter '" + std::string(name) + "'; valid: " + valid_names());
  *ptr = value;
}

void validate_field(std::string_view name, double value) {
  const std::string n(name);
  if (!ParameterSet::is_field(name))
    throw DomainError("unknown parameter '" + n + "'; valid: " + valid_names());
  if (!std::isfinite(value)) throw DomainError(n + " must be finite");
  auto positive = [&] {
    if (!(value > 0.0)) throw DomainError(n + " must be > 0");
  };
  auto nonneg = [&] {
    if (!(value >= 0.0)) throw DomainError(n + " must be >= 0");
  };
  if (name == "kappa" || name == "gamma_m" || name == "gamma_s") {
    positive();
  } else if (name == "g_om" || name == "gamma_readout" || name == "n_m" || name == "n_s" ||
             name == "r") {
    nonneg();
  } else if (name == "eta_i" || name == "eta_s") {
    if (value < 0.0 || value > 1.0) throw DomainError(n + " must lie in [0,1]");
  }
}

void ParameterSet::validate() const {
  for (auto name : field_names) validate_field(name, get(name));
}

std::vector<double> real_cubic_roots(const std::array<double, 3>& c) {
  Eigen::Matrix3d companion = Eigen::Matrix3d::Zero();
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(0, 2) = -c[0];
  companion(1, 2) = -c[1];
  companion(2, 2) = -c[2];

  Eigen::EigenSolver<Eigen::Matrix3d> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw NumericalError("companion-matrix eigenvalue iteration did not converge");

  auto poly = [&](double x) { return ((x + c[2]) * x + c[1]) * x + c[0]; };
  auto dpoly = [&](double x) { return (3.0 * x + 2.0 * c[2]) * x + c[1]; };

  std::vector<double> roots;
  for (const auto& z : solver.eigenvalues()) {
    if (std::abs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z))) continue;
    double x = z.real();
    for (int it = 0; it < 4; ++it) {
      const double d = dpoly(x);
      if (d == 0.0) break;
      const double step = poly(x) / d;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<OperatingPoint> derive_operating_point(double drive_amp, double delta_laser,
                                                   double g0, double q_zpf, double kappa,
                                                   double omega_m) {
  require_finite(drive_amp, "drive_amp");
  require_finite(delta_laser, "delta_laser");
  require_finite(g0, "g0");
  require_finite(q_zpf, "q_zpf");
  require_finite(kappa, "kappa");
  require_finite(omega_m, "omega_m");
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (!(omega_m > 0.0)) throw DomainError("omega_m must be > 0");

  const double beta = g0 * g0 * q_zpf * q_zpf / omega_m;
  const double k2 = kappa * kappa;
  const double e2 = drive_amp * drive_amp;
  const auto roots = real_cubic_roots({-(delta_laser * k2 + beta * e2), k2, -delta_laser});

  std::vector<OperatingPoint> out;
  out.reserve(roots.size());
  for (double delta_eff : roots) {
    OperatingPoint op;
    op.drive_amp = drive_amp;
    op.delta_laser = delta_laser;
    op.g0 = g0;
    op.q_zpf = q_zpf;
    op.delta_eff = delta_eff;
    op.alpha_s = drive_amp / std::complex<double>(kappa, -delta_eff);
    const double n_cav = e2 / (k2 + delta_eff * delta_eff);
    op.q_s = g0 / omega_m * n_cav * q_zpf * q_zpf;
    op.g_lin = std::sqrt(2.0) * g0 * std::sqrt(n_cav) * q_zpf;
    op.phi = std::atan(delta_eff / kappa);
    out.push_back(op);
  }
  return out;
}

double spin_readout_rate(double alpha_coupling, double photon_flux, double jz_mag) {
  if (!(photon_flux >= 0.0)) throw DomainError("photon flux must be >= 0");
  if (!(jz_mag >= 0.0)) throw DomainError("|<J_z>| must be >= 0");
  require_finite(alpha_coupling, "alpha_coupling");
  return 0.5 * alpha_coupling * alpha_coupling * photon_flux * jz_mag;
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("omega must be > 0");
  if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(omega / temperature);
}

Susceptibility susceptibility(SusceptibilityKind kind, double omega, double resonance,
                              double damping) {
  if (resonance == 0.0) throw DomainError("susceptibility resonance must be nonzero");
  const std::complex<double> den(resonance * resonance - omega * omega,
                                 -2.0 * omega * damping);
  return {resonance / den, kind};
}

SusceptibilityMismatch susceptibility_mismatch(const ParameterSet& p,
                                               std::span<const double> omegas) {
  SusceptibilityMismatch out;
  for (double w : omegas) {
    const auto chi_m = susceptibility(SusceptibilityKind::mechanical, w, p.omega_m, p.gamma_m);
    const auto chi_s = susceptibility(SusceptibilityKind::spin, w, p.omega_s, p.gamma_s);
    const auto chi_s_abs =
        susceptibility(SusceptibilityKind::spin, w, std::abs(p.omega_s), p.gamma_s);
    out.max_signed = std::max(out.max_signed, std::abs(chi_m.value - chi_s.value));
    out.max_magnitude = std::max(out.max_magnitude, std::abs(chi_m.value - chi_s_abs.value));
  }
  return out;
}

}  // namespace hybrident
