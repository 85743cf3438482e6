#include <doctest.h>

#include <cmath>

#include "hybrident/errors.hpp"
#include "hybrident/sweep.hpp"

using namespace hybrident;

namespace {

// Duan ratio of a product of two isotropic states with 2V11 = n I, 2V22 = m I.
double product_duan_ratio(double n, double m) {
  if (n <= 1.0 + 1e-9 || m <= 1.0 + 1e-9) return (n + m) / 2.0;
  const double w = std::sqrt((m - 1.0) / (n - 1.0));
  return (w * n + m / w) / (w + 1.0 / w);
}

}  // namespace

TEST_CASE("default point without coupling or squeezing is a product state") {
  ParameterSet p;
  const auto rep = run_point(p);
  REQUIRE(rep.stable);
  CHECK(rep.max_real_part == doctest::Approx(-0.5));
  CHECK(rep.input_log_neg == 0.0);
  REQUIRE(rep.physicality);
  CHECK(rep.physicality->physical);

  const double n_cav = 1.0;
  const double n_mech = 2.0 * (p.n_m + 0.5);
  const double n_spin = 2.0 * (2.0 * p.gamma_s * (p.n_s + 0.5) + 0.5 * p.gamma_readout) /
                        (2.0 * p.gamma_s);
  for (auto pair : kAllPairs) CHECK(rep.pair(pair)->entanglement.log_neg == 0.0);
  CHECK(rep.pair(ModePair::cavity_spin)->duan.ratio ==
        doctest::Approx(product_duan_ratio(n_cav, n_spin)).epsilon(1e-9));
  CHECK(rep.pair(ModePair::cavity_mechanics)->duan.ratio ==
        doctest::Approx(product_duan_ratio(n_cav, n_mech)).epsilon(1e-9));
  CHECK(rep.pair(ModePair::mechanics_spin)->duan.ratio ==
        doctest::Approx(product_duan_ratio(n_mech, n_spin)).epsilon(1e-9));
  for (auto pair : kAllPairs) CHECK(rep.pair(pair)->duan.ratio >= 1.0);
}

TEST_CASE("input log negativity is 2r at unit efficiency") {
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    ParameterSet p;
    p.r = r;
    CHECK(run_point(p).input_log_neg == doctest::Approx(2.0 * r).epsilon(1e-10));
  }
}

TEST_CASE("the spin stays separable from the cavity") {
  for (double g : {0.0, 0.5, 1.0}) {
    for (double r : {0.5, 1.0, 2.0, 3.0}) {
      ParameterSet p;
      p.g_om = g;
      p.r = r;
      const auto rep = run_point(p);
      REQUIRE(rep.stable);
      const auto& cs = *rep.pair(ModePair::cavity_spin);
      CHECK(cs.entanglement.log_neg == 0.0);
      CHECK(cs.duan.ratio >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("zero readout rate decouples the spin") {
  SweepSpec spec;
  spec.axes = {{"gamma_readout", {0.0}}};
  spec.r_grid = {0.0, 0.5, 1.0, 2.0};
  const auto rows = run_sweep(spec, {1});
  REQUIRE(rows.size() == 4);
  for (const auto& row : rows) {
    REQUIRE(row.stable);
    const auto& cs = *row.pair(ModePair::cavity_spin);
    CHECK(cs.entanglement.log_neg == 0.0);
    const double n_cav = std::cosh(2.0 * row.parameters.r);
    const double n_spin = 2.0 * (row.parameters.n_s + 0.5);
    CHECK(cs.duan.ratio == doctest::Approx(product_duan_ratio(n_cav, n_spin)).epsilon(1e-8));
  }
}

TEST_CASE("coupled mechanics entangles with the cavity at zero temperature") {
  ParameterSet p;
  p.g_om = 1.0;
  p.n_m = 0.0;
  p.n_s = 0.0;
  p.r = 0.5;
  const auto rep = run_point(p);
  REQUIRE(rep.stable);
  CHECK(rep.pair(ModePair::cavity_mechanics)->entanglement.log_neg > 0.0);
  CHECK(rep.pair(ModePair::cavity_mechanics)->duan.ratio < 1.0);
}

TEST_CASE("unstable points are reported, not thrown") {
  ParameterSet p;
  p.g_om = 4.0;
  const auto rep = run_point(p);
  CHECK_FALSE(rep.stable);
  CHECK(rep.max_real_part > 0.0);
  for (auto pair : kAllPairs) CHECK_FALSE(rep.pair(pair).has_value());
  CHECK_FALSE(rep.physicality.has_value());
}

TEST_CASE("requested pairs only") {
  ParameterSet p;
  const auto rep = run_point(p, {ModePair::mechanics_spin});
  CHECK(rep.pair(ModePair::mechanics_spin).has_value());
  CHECK_FALSE(rep.pair(ModePair::cavity_spin).has_value());
  CHECK_FALSE(rep.pair(ModePair::cavity_mechanics).has_value());
}

TEST_CASE("sweep grid shape and order") {
  SweepSpec spec;
  spec.axes = {{"delta", {30.0, 60.0, 90.0}}};
  spec.r_grid = {0.0, 1.0};
  const auto rows = run_sweep(spec, {2});
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].parameters.delta == spec.axes[0].values[i / 2]);
    CHECK(rows[i].parameters.r == spec.r_grid[i % 2]);
  }

  spec.axes.push_back({"g_om", {0.0, 0.5}});
  const auto two = run_sweep(spec, {3});
  REQUIRE(two.size() == 12);
  CHECK(two[0].parameters.g_om == 0.0);
  CHECK(two[1].parameters.r == 1.0);
  CHECK(two[2].parameters.g_om == 0.5);
  CHECK(two[4].parameters.delta == 60.0);
}

TEST_CASE("cavity-spin negativity is nondecreasing in r without coupling") {
  SweepSpec spec;
  spec.axes = {{"g_om", {0.0}}};
  for (int k = 0; k <= 30; ++k) spec.r_grid.push_back(0.1 * k);
  const auto rows = run_sweep(spec);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].pair(ModePair::cavity_spin)->entanglement.log_neg >=
          rows[i - 1].pair(ModePair::cavity_spin)->entanglement.log_neg);
}

TEST_CASE("invalid sweeps fail before evaluation") {
  SweepSpec spec;
  spec.r_grid = {0.0};
  spec.axes = {{"detuning", {1.0}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {{"delta", {}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {{"delta", {std::nan("")}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {{"r", {1.0}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {{"eta_i", {0.5, 1.5}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {{"delta", {1.0}}, {"delta", {2.0}}};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
  spec.axes = {};
  CHECK_THROWS_AS(run_sweep(spec), DomainError);
}

TEST_CASE("sweep results do not depend on thread count") {
  auto spec = figure_preset("fig3_IVa");
  spec.r_grid = {0.0, 0.7, 1.4, 2.1};
  const auto a = run_sweep(spec, {1});
  const auto b = run_sweep(spec, {4});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].parameters == b[i].parameters);
    CHECK(a[i].stable == b[i].stable);
    CHECK(a[i].max_real_part == b[i].max_real_part);
    for (auto pair : kAllPairs) {
      REQUIRE(a[i].pair(pair).has_value() == b[i].pair(pair).has_value());
      if (!a[i].pair(pair)) continue;
      CHECK(a[i].pair(pair)->entanglement.log_neg == b[i].pair(pair)->entanglement.log_neg);
      CHECK(a[i].pair(pair)->duan.ratio == b[i].pair(pair)->duan.ratio);
    }
  }
}

TEST_CASE("figure presets") {
  const auto grid = default_r_grid();
  REQUIRE(grid.size() == 61);
  CHECK(grid.front() == 0.0);
  CHECK(grid[20] == 1.0);
  CHECK(grid.back() == doctest::Approx(3.0).epsilon(1e-15));

  const auto fig2 = figure_preset("fig2");
  REQUIRE(fig2.axes.size() == 1);
  CHECK(fig2.axes[0].name == "g_om");
  CHECK(fig2.axes[0].values == std::vector<double>{0.0, kFig2CouplingOn});
  CHECK(fig2.base == ParameterSet{});
  CHECK(fig2.r_grid == grid);
  CHECK(fig2_preset(0.5).axes[0].values[1] == 0.5);

  const auto iv = figure_preset("fig3_IVb");
  CHECK(iv.axes[0].name == "gamma_readout");
  CHECK(iv.axes[0].values[2] == doctest::Approx(ParameterSet{}.gamma_readout));

  for (auto name : {"fig4_I", "fig4_II"}) {
    const auto f = figure_preset(name);
    CHECK(f.base.n_m == 0.0);
    CHECK(f.base.n_s == 0.0);
    CHECK(f.axes[0].values.front() == 0.0);
    CHECK(std::find(f.pairs.begin(), f.pairs.end(), ModePair::cavity_mechanics) != f.pairs.end());
  }
  CHECK(figure_preset("fig4_I").axes[0].name == "g_om");
  CHECK(figure_preset("fig4_II").axes[0].name == "gamma_readout");

  for (auto name : kPresetNames) {
    const auto spec = figure_preset(name);
    CHECK(spec.label == name);
    CHECK_NOTHROW(validate_sweep(spec));
  }
  CHECK_THROWS_AS(figure_preset("fig5"), DomainError);
}
