#pragma once

#include <array>
#include <string>
#include <string_view>

#include "hybrident/linalg.hpp"
#include "hybrident/steady_state.hpp"

namespace hybrident {

enum class ModePair { cavity_mechanics, cavity_spin, mechanics_spin };

inline constexpr std::array<ModePair, 3> kAllPairs{
    ModePair::cavity_spin, ModePair::cavity_mechanics, ModePair::mechanics_spin};

std::string_view pair_name(ModePair pair);
ModePair pair_from_name(std::string_view name);  // "cavity-spin", ...

// Two-mode reduction, ordering [x1, p1, x2, p2].
struct TwoModeCovariance {
  Mat4 entries = Mat4::Identity() * 0.5;

  Mat2 v11() const { return entries.topLeftCorner<2, 2>(); }
  Mat2 v22() const { return entries.bottomRightCorner<2, 2>(); }
  Mat2 v12() const { return entries.topRightCorner<2, 2>(); }

  static TwoModeCovariance from_blocks(const Mat2& v11, const Mat2& v22, const Mat2& v12);
};

TwoModeCovariance reduce_pair(const CovarianceMatrix& v, ModePair pair);

// Sigma(V) = det V11 + det V22 - 2 det V12
double seralian(const TwoModeCovariance& v);

// Smallest symplectic eigenvalue of the partially transposed state,
// sqrt((Sigma - sqrt(Sigma^2 - 4 det V)) / 2).
double eta_minus(const TwoModeCovariance& v);

// eta_minus within this distance below 1/2 counts as the separable boundary.
// Product states with a vacuum factor sit exactly at 1/2, and rounding would
// otherwise flip the flags at random.
inline constexpr double kBoundaryTol = 1e-10;

struct EntanglementReport {
  double eta_minus = 0.5;
  double log_neg = 0.0;
  bool entangled = false;
  bool simon_violated = false;
};

// E_N = max(0, -ln 2 eta_minus); Simon: 4 det V < Sigma - 1/4.
EntanglementReport log_negativity(const TwoModeCovariance& v);

struct StandardForm {
  double n = 1.0;
  double m = 1.0;
  double c = 0.0;
  double cprime = 0.0;
};

StandardForm duan_standard_form(const TwoModeCovariance& v);

inline constexpr double kDuanDegenerateTol = 1e-9;

struct DuanReport {
  double n = 1.0;
  double m = 1.0;
  double c = 0.0;
  double cprime = 0.0;
  double c0_sq = 1.0;
  double lhs = 2.0;
  double rhs = 2.0;
  double ratio = 1.0;
  bool separable_consistent = true;
  bool degenerate = false;
};

DuanReport duan_quantity(const TwoModeCovariance& v);

}  // namespace hybrident
