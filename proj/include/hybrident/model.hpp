#pragma once

#include <array>
#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hybrident {

// Dimensionless parameters of the linearized hybrid model. Every rate is in
// units of the reference cavity linewidth, so kappa = 1 by default.
struct ParameterSet {
  double kappa = 1.0;
  double delta = 60.0;
  double omega_m = 60.0;
  double gamma_m = 1.0;
  double omega_s = -60.0;  // negative: inverted (negative-mass) spin oscillator
  double gamma_s = 1.0;
  double g_om = 0.0;
  double gamma_readout = 25.14;
  double n_m = 0.8;
  double n_s = 0.5;
  double eta_i = 1.0;
  double eta_s = 1.0;
  double r = 0.0;

  static constexpr std::array<std::string_view, 13> field_names{
      "kappa", "delta", "omega_m", "gamma_m", "omega_s", "gamma_s", "g_om",
      "gamma_readout", "n_m", "n_s", "eta_i", "eta_s", "r"};

  static bool is_field(std::string_view name);

  // Named access used by sweeps and config parsing. Throws DomainError on an
  // unknown name.
  double get(std::string_view name) const;
  void set(std::string_view name, double value);

  // Throws DomainError naming the first violated invariant.
  void validate() const;

  bool operator==(const ParameterSet&) const = default;
};

// Checks the invariant of a single field; used to report config errors per key.
void validate_field(std::string_view name, double value);

// Linearized operating point of the driven optomechanical cavity.
struct OperatingPoint {
  double drive_amp = 0.0;
  double delta_laser = 0.0;
  double g0 = 0.0;
  double q_zpf = 0.0;
  std::complex<double> alpha_s;  // E / (kappa - i delta_eff)
  double q_s = 0.0;
  double delta_eff = 0.0;
  double g_lin = 0.0;
  double phi = 0.0;

  double alpha_abs() const { return std::abs(alpha_s); }
};

// All real self-consistent detunings of the radiation-pressure cubic
//   (delta - delta_laser) (kappa^2 + delta^2) = beta |E|^2,  beta = g0^2 q_zpf^2 / omega_m,
// sorted ascending. One root in the monostable regime, three when bistable.
std::vector<OperatingPoint> derive_operating_point(double drive_amp, double delta_laser,
                                                   double g0, double q_zpf, double kappa,
                                                   double omega_m);

// Real roots of c[0] + c[1] x + c[2] x^2 + x^3 from the companion matrix
// spectrum, Newton-polished and sorted.
std::vector<double> real_cubic_roots(const std::array<double, 3>& c);

// Gamma_S = (alpha^2 / 2) * photon_flux * |<J_z>|
double spin_readout_rate(double alpha_coupling, double photon_flux, double jz_mag);

// Bose-Einstein occupancy with hbar = k_B = 1.
double thermal_occupation(double omega, double temperature);

enum class SusceptibilityKind { mechanical, spin };

struct Susceptibility {
  std::complex<double> value;
  SusceptibilityKind kind;
};

// resonance / (resonance^2 - omega^2 - 2 i omega damping)
Susceptibility susceptibility(SusceptibilityKind kind, double omega, double resonance,
                              double damping);

// Compares chi_m and chi_s over a frequency grid. The matching condition
// chi_m = chi_s is reported twice: with the signed spin frequency as given and
// with |omega_s|, since the sign convention for the negative-mass spin varies.
struct SusceptibilityMismatch {
  double max_signed = 0.0;
  double max_magnitude = 0.0;
};

SusceptibilityMismatch susceptibility_mismatch(const ParameterSet& p,
                                               std::span<const double> omegas);

}  // namespace hybrident
