#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrident/entanglement.hpp"
#include "hybrident/model.hpp"
#include "hybrident/steady_state.hpp"

namespace hybrident {

struct PairReport {
  EntanglementReport entanglement;
  DuanReport duan;
};

struct PointReport {
  ParameterSet parameters;
  bool stable = false;
  double max_real_part = 0.0;
  // Present only for stable points; indexed by ModePair.
  std::array<std::optional<PairReport>, 3> pairs;
  std::optional<PhysicalityReport> physicality;
  double input_log_neg = 0.0;

  const std::optional<PairReport>& pair(ModePair p) const {
    return pairs[static_cast<std::size_t>(p)];
  }
};

PointReport run_point(const ParameterSet& p,
                      const std::vector<ModePair>& pairs = {kAllPairs.begin(), kAllPairs.end()});

struct SweepAxis {
  std::string name;
  std::vector<double> values;

  bool operator==(const SweepAxis&) const = default;
};

struct SweepSpec {
  std::string label;  // preset name, or "custom"
  ParameterSet base;
  std::vector<SweepAxis> axes;  // one or two; the first varies slowest
  std::vector<double> r_grid;
  std::vector<ModePair> pairs{kAllPairs.begin(), kAllPairs.end()};
  std::vector<std::string> notes;  // emitted as CSV metadata
};

// Throws DomainError for bad axis names, empty or non-finite value lists, or a
// grid point that violates the ParameterSet invariants.
void validate_sweep(const SweepSpec& spec);

struct SweepOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

// Rows in lexicographic grid order (axis1, axis2, r), independent of scheduling.
std::vector<PointReport> run_sweep(const SweepSpec& spec, const SweepOptions& opts = {});

// r in [0, 3] with step 0.05, computed as k * 0.05.
std::vector<double> default_r_grid();

// G used for the "with mechanics" curve of the fig2 preset.
inline constexpr double kFig2CouplingOn = 1.0;

inline constexpr std::array<std::string_view, 15> kPresetNames{
    "fig2",     "fig3_Ia",  "fig3_Ib",  "fig3_IIa", "fig3_IIb",
    "fig3_IIIa", "fig3_IIIb", "fig3_IVa", "fig3_IVb", "fig3_Va",
    "fig3_Vb",  "fig3_VIa", "fig3_VIb", "fig4_I",   "fig4_II"};

SweepSpec figure_preset(std::string_view name);

// fig2 with an explicit coupling for the second curve.
SweepSpec fig2_preset(double g_on);

}  // namespace hybrident
