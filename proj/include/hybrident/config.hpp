#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybrident/errors.hpp"
#include "hybrident/model.hpp"
#include "hybrident/sweep.hpp"

namespace hybrident {

class ConfigError : public DomainError {
 public:
  ConfigError(int line, const std::string& what)
      : DomainError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class Command { point, sweep, figure, stability };
enum class OutputFormat { csv, json };

std::string_view command_name(Command c);
Command command_from_name(std::string_view name);

// Flat `key = value` configuration, `#` starts a comment. Recognized keys:
// the ParameterSet field names, plus
//   command    = point | sweep | figure | stability
//   preset     = fig2 | fig3_Ia | ...
//   axis1      = <parameter>: v1, v2, ...       (axis2 likewise)
//   r_values   = v1, v2, ...
//   r_range    = start, stop, step
//   format     = csv | json
//   out        = <path>
//   svg        = <path>
//   svg_column = <csv column>
struct RunConfig {
  std::optional<Command> command;
  std::map<std::string, double> overrides;
  std::optional<std::string> preset;
  std::vector<SweepAxis> axes;
  std::optional<std::vector<double>> r_values;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> out;
  std::optional<std::string> svg;
  std::string svg_column = "EN_cs";

  ParameterSet parameters() const;

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(std::string_view text);
std::string serialize_config(const RunConfig& cfg);

}  // namespace hybrident
