#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrident/dynamics.hpp"
#include "hybrident/sweep.hpp"

namespace hybrident {

// Column view of sweep rows shared by the CSV and SVG writers. Columns are the
// axis names followed by
//   r,stable,max_re,EN_cs,EN_cm,EN_ms,duan_cs,duan_cm,duan_ms,eta_cs,eta_cm,eta_ms,EN_input
// Cells without a value (unstable points, unrequested pairs) are empty.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;

  // Throws DomainError for an unknown column.
  std::size_t column(std::string_view name) const;
};

ResultTable build_table(const std::vector<PointReport>& rows, const std::vector<SweepAxis>& axes);

// 12 significant digits, trailing zeros kept; exact zero renders as 0.000000000000.
std::string format_csv_number(double v);

// CSV with a leading `#` metadata block (label, base parameters, axes, notes).
std::string emit_csv(const std::vector<PointReport>& rows, const SweepSpec& spec);

std::string emit_json(const std::vector<PointReport>& rows, const SweepSpec& spec);

std::string emit_stability(const ParameterSet& p, const StabilityReport& rep, bool json);

// Standalone SVG line plot: one polyline per distinct value of group_by (pass
// an empty group_by for a single series). Duan columns get a dashed
// reference line at ratio 1.
std::string emit_svg(const ResultTable& table, std::string_view x_column,
                     std::string_view y_column, std::string_view group_by);

}  // namespace hybrident
