#include "hybrident/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hybrident {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, int line, std::string_view key) {
  const std::string text(trim(token));
  if (text.empty()) throw ConfigError(line, "missing number for '" + std::string(key) + "'");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
    throw ConfigError(line, "malformed number '" + text + "' for '" + std::string(key) + "'");
  return v;
}

std::vector<double> parse_list(std::string_view text, int line, std::string_view key) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(parse_number(piece, line, key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (double v : values) {
    if (!out.empty()) out += ", ";
    out += format_exact(v);
  }
  return out;
}

constexpr std::string_view kExtraKeys[] = {"command", "preset", "axis1", "axis2", "r_values",
                                           "r_range", "format", "out", "svg", "svg_column"};

std::string valid_keys() {
  std::string out;
  for (auto n : ParameterSet::field_names) out += std::string(n) + ", ";
  for (auto n : kExtraKeys) out += std::string(n) + ", ";
  out.resize(out.size() - 2);
  return out;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::point: return "point";
    case Command::sweep: return "sweep";
    case Command::figure: return "figure";
    case Command::stability: return "stability";
  }
  return "?";
}

Command command_from_name(std::string_view name) {
  for (auto c : {Command::point, Command::sweep, Command::figure, Command::stability})
    if (command_name(c) == name) return c;
  throw DomainError("unknown command '" + std::string(name) +
                    "'; valid: point, sweep, figure, stability");
}

ParameterSet RunConfig::parameters() const {
  ParameterSet p;
  for (const auto& [key, value] : overrides) p.set(key, value);
  return p;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view view(raw);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;

    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError(line, "expected 'key = value'");
    const std::string key(trim(view.substr(0, eq)));
    const std::string_view value = trim(view.substr(eq + 1));

    if (ParameterSet::is_field(key)) {
      const double v = parse_number(value, line, key);
      try {
        validate_field(key, v);
      } catch (const DomainError& e) {
        throw ConfigError(line, e.what());
      }
      cfg.overrides[key] = v;
    } else if (key == "command") {
      try {
        cfg.command = command_from_name(value);
      } catch (const DomainError& e) {
        throw ConfigError(line, e.what());
      }
    } else if (key == "preset") {
      cfg.preset = std::string(value);
    } else if (key == "axis1" || key == "axis2") {
      const auto colon = value.find(':');
      if (colon == std::string_view::npos)
        throw ConfigError(line, key + " must look like '<parameter>: v1, v2, ...'");
      SweepAxis axis{std::string(trim(value.substr(0, colon))), {}};
      if (!ParameterSet::is_field(axis.name) || axis.name == "r")
        throw ConfigError(line, "axis parameter '" + axis.name + "' is not sweepable");
      axis.values = parse_list(value.substr(colon + 1), line, key);
      const std::size_t slot = key == "axis1" ? 0 : 1;
      if (cfg.axes.size() <= slot) cfg.axes.resize(slot + 1);
      cfg.axes[slot] = std::move(axis);
    } else if (key == "r_values") {
      cfg.r_values = parse_list(value, line, key);
    } else if (key == "r_range") {
      const auto v = parse_list(value, line, key);
      if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0])
        throw ConfigError(line, "r_range must be 'start, stop, step' with step > 0");
      std::vector<double> grid;
      const long count = std::lround(std::floor((v[1] - v[0]) / v[2] + 1e-9));
      for (long k = 0; k <= count; ++k) grid.push_back(v[0] + k * v[2]);
      cfg.r_values = grid;
    } else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::csv;
      else if (value == "json") cfg.format = OutputFormat::json;
      else throw ConfigError(line, "format must be csv or json");
    } else if (key == "out") {
      cfg.out = std::string(value);
    } else if (key == "svg") {
      cfg.svg = std::string(value);
    } else if (key == "svg_column") {
      cfg.svg_column = std::string(value);
    } else {
      throw ConfigError(line, "unknown key '" + key + "'; valid keys: " + valid_keys());
    }
  }
  for (std::size_t k = 0; k < cfg.axes.size(); ++k)
    if (cfg.axes[k].name.empty()) throw ConfigError(0, "axis2 given without axis1");
  return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  if (cfg.command) os << "command = " << command_name(*cfg.command) << '\n';
  for (const auto& [key, value] : cfg.overrides) os << key << " = " << format_exact(value) << '\n';
  if (cfg.preset) os << "preset = " << *cfg.preset << '\n';
  for (std::size_t k = 0; k < cfg.axes.size(); ++k)
    os << "axis" << k + 1 << " = " << cfg.axes[k].name << ": " << join(cfg.axes[k].values) << '\n';
  if (cfg.r_values) os << "r_values = " << join(*cfg.r_values) << '\n';
  os << "format = " << (cfg.format == OutputFormat::csv ? "csv" : "json") << '\n';
  if (cfg.out) os << "out = " << *cfg.out << '\n';
  if (cfg.svg) os << "svg = " << *cfg.svg << '\n';
  os << "svg_column = " << cfg.svg_column << '\n';
  return os.str();
}

}  // namespace hybrident
