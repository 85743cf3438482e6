// Figure presets. The published figures do not list the values behind their
// line families, so each axis brackets the default: factors {1/4, 1/2, 1, 2, 4}
// for rates and occupancies, +-15 and +-30 steps for the two frequencies
// around 60, a decade either side for the readout rate, and quarter steps
// for the efficiencies.

#include <cmath>
#include <string>

#include "hybrident/errors.hpp"
#include "hybrident/sweep.hpp"

namespace hybrident {

namespace {

std::vector<double> scaled(double center, std::initializer_list<double> factors) {
  std::vector<double> out;
  for (double f : factors) out.push_back(center * f);
  return out;
}

std::vector<double> brackets(double center) { return scaled(center, {0.25, 0.5, 1.0, 2.0, 4.0}); }

std::vector<double> shifted(double center) {
  return {center - 30.0, center - 15.0, center, center + 15.0, center + 30.0};
}

SweepSpec make(std::string_view label, ParameterSet base, std::string axis,
               std::vector<double> values, std::string note) {
  SweepSpec spec;
  spec.label = std::string(label);
  spec.base = base;
  spec.axes.push_back({std::move(axis), std::move(values)});
  spec.r_grid = default_r_grid();
  spec.notes.push_back(std::move(note));
  return spec;
}

ParameterSet with_mechanics() {
  ParameterSet p;
  p.g_om = kFig2CouplingOn;
  return p;
}

ParameterSet zero_temperature() {
  ParameterSet p;
  p.n_m = 0.0;
  p.n_s = 0.0;
  return p;
}

}  // namespace

SweepSpec fig2_preset(double g_on) {
  return make("fig2", ParameterSet{}, "g_om", {0.0, g_on},
              "second curve uses g_om = " + std::to_string(g_on) + " (not given in the caption)");
}

SweepSpec figure_preset(std::string_view name) {
  const ParameterSet defaults;
  const double gamma0 = defaults.gamma_readout;
  const std::string fixed = "axis values bracket the default; other parameters at defaults";
  const std::string mech =
      "mechanical axis: base g_om = " + std::to_string(kFig2CouplingOn) + " so the mechanics couples";

  if (name == "fig2") return fig2_preset(kFig2CouplingOn);
  if (name == "fig3_Ia") return make(name, defaults, "delta", shifted(defaults.delta), fixed);
  if (name == "fig3_Ib") return make(name, defaults, "kappa", brackets(defaults.kappa), fixed);
  if (name == "fig3_IIa") return make(name, defaults, "omega_s", shifted(defaults.omega_s), fixed);
  if (name == "fig3_IIb") return make(name, defaults, "gamma_s", brackets(defaults.gamma_s), fixed);
  if (name == "fig3_IIIa")
    return make(name, with_mechanics(), "omega_m", brackets(defaults.omega_m), mech);
  if (name == "fig3_IIIb")
    return make(name, with_mechanics(), "gamma_m", brackets(defaults.gamma_m), mech);
  if (name == "fig3_IVa") return make(name, defaults, "g_om", brackets(kFig2CouplingOn), fixed);
  if (name == "fig3_IVb") {
    const double s = std::sqrt(10.0);
    return make(name, defaults, "gamma_readout",
                scaled(gamma0, {0.1, 1.0 / s, 1.0, s, 10.0}),
                "readout rate log-spaced over [gamma0/10, 10 gamma0]");
  }
  if (name == "fig3_Va") return make(name, with_mechanics(), "n_m", brackets(defaults.n_m), mech);
  if (name == "fig3_Vb") return make(name, defaults, "n_s", brackets(defaults.n_s), fixed);
  if (name == "fig3_VIa") return make(name, defaults, "eta_i", {0.0, 0.25, 0.5, 0.75, 1.0}, fixed);
  if (name == "fig3_VIb") return make(name, defaults, "eta_s", {0.0, 0.25, 0.5, 0.75, 1.0}, fixed);
  if (name == "fig4_I")
    return make(name, zero_temperature(), "g_om",
                scaled(kFig2CouplingOn, {0.0, 0.25, 0.5, 0.75, 1.0}),
                "zero-temperature baths; optomechanical coupling family");
  if (name == "fig4_II") {
    auto base = zero_temperature();
    base.g_om = kFig2CouplingOn;
    return make(name, base, "gamma_readout", scaled(gamma0, {0.0, 0.25, 0.5, 1.0, 2.0}),
                "zero-temperature baths; readout-rate family at g_om = " +
                    std::to_string(kFig2CouplingOn));
  }

  std::string valid;
  for (auto n : kPresetNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw DomainError("unknown preset '" + std::string(name) + "'; valid: " + valid);
}

}  // namespace hybrident
