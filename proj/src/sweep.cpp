#include "hybrident/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hybrident/dynamics.hpp"
#include "hybrident/errors.hpp"

namespace hybrident {

PointReport run_point(const ParameterSet& p, const std::vector<ModePair>& pairs) {
  p.validate();
  PointReport rep;
  rep.parameters = p;

  TwoModeCovariance input;
  input.entries = input_tmsv_covariance(p.r, p.eta_i, p.eta_s);
  rep.input_log_neg = log_negativity(input).log_neg;

  const auto drift = build_drift(p);
  const auto stability = check_stability(drift);
  rep.stable = stability.stable;
  rep.max_real_part = stability.max_real_part;
  if (!rep.stable) return rep;

  const auto v = solve_lyapunov(drift, build_diffusion(p));
  rep.physicality = check_physicality(v);
  for (auto pair : pairs) {
    const auto reduced = reduce_pair(v, pair);
    rep.pairs[static_cast<std::size_t>(pair)] =
        PairReport{log_negativity(reduced), duan_quantity(reduced)};
  }
  return rep;
}

namespace {

std::vector<ParameterSet> expand_grid(const SweepSpec& spec) {
  std::vector<ParameterSet> grid;
  const auto& a1 = spec.axes[0];
  const std::vector<double> single{0.0};
  const bool two = spec.axes.size() == 2;
  const auto& a2_values = two ? spec.axes[1].values : single;
  for (double v1 : a1.values) {
    for (double v2 : a2_values) {
      for (double r : spec.r_grid) {
        ParameterSet p = spec.base;
        p.set(a1.name, v1);
        if (two) p.set(spec.axes[1].name, v2);
        p.r = r;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

}  // namespace

void validate_sweep(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw DomainError("a sweep needs one or two axes");
  for (const auto& axis : spec.axes) {
    if (!ParameterSet::is_field(axis.name))
      throw DomainError("sweep axis '" + axis.name + "' is not a parameter name");
    if (axis.name == "r") throw DomainError("squeezing r is swept through r_grid, not as an axis");
    if (axis.values.empty()) throw DomainError("sweep axis '" + axis.name + "' has no values");
    for (double v : axis.values)
      if (!std::isfinite(v)) throw DomainError("sweep axis '" + axis.name + "' has a non-finite value");
  }
  if (spec.axes.size() == 2 && spec.axes[0].name == spec.axes[1].name)
    throw DomainError("sweep axes must be distinct");
  if (spec.r_grid.empty()) throw DomainError("r grid is empty");
  for (double r : spec.r_grid)
    if (!std::isfinite(r)) throw DomainError("r grid has a non-finite value");
  for (const auto& p : expand_grid(spec)) p.validate();
}

std::vector<PointReport> run_sweep(const SweepSpec& spec, const SweepOptions& opts) {
  validate_sweep(spec);
  const auto grid = expand_grid(spec);
  std::vector<PointReport> rows(grid.size());

  unsigned threads = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = run_point(grid[i], spec.pairs);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = grid.size();
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<double> default_r_grid() {
  std::vector<double> r;
  for (int k = 0; k <= 60; ++k) r.push_back(k * 0.05);
  return r;
}

}  // namespace hybrident
