// hybrident: steady-state entanglement of the hybrid optomechanical/spin system.
//
//   hybrident <point|sweep|figure|stability> --config <path> [--preset <name>]
//             [--out <path>] [--format csv|json] [--svg <path>]
//
// Exit codes: 0 success, 2 configuration error, 3 numerical/convergence error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hybrident/config.hpp"
#include "hybrident/dynamics.hpp"
#include "hybrident/errors.hpp"
#include "hybrident/report.hpp"
#include "hybrident/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hybrident::ConfigError(0, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::optional<std::string>& path, const std::string& data) {
  if (!path || *path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw hybrident::ConfigError(0, "cannot write '" + *path + "'");
  out << data;
}

unsigned thread_override() {
  const char* env = std::getenv("HYBRIDENT_THREADS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) throw hybrident::ConfigError(0, "HYBRIDENT_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

int run(const std::string& command_text, const std::string& config_path,
        const std::string& preset, const std::string& out, const std::string& format,
        const std::string& svg) {
  using namespace hybrident;

  RunConfig cfg = config_path.empty() ? RunConfig{} : parse_config(read_file(config_path));
  const Command command = command_from_name(command_text);
  if (!preset.empty()) cfg.preset = preset;
  if (!out.empty()) cfg.out = out;
  if (!svg.empty()) cfg.svg = svg;
  if (format == "json") cfg.format = OutputFormat::json;
  else if (format == "csv") cfg.format = OutputFormat::csv;

  const ParameterSet params = cfg.parameters();
  params.validate();

  if (command == Command::stability) {
    const auto rep = check_stability(build_drift(params));
    write_output(cfg.out, emit_stability(params, rep, cfg.format == OutputFormat::json));
    return 0;
  }

  SweepSpec spec;
  std::vector<PointReport> rows;
  switch (command) {
    case Command::point:
      spec.label = "point";
      spec.base = params;
      rows.push_back(run_point(params));
      break;
    case Command::sweep:
      if (cfg.axes.empty()) throw ConfigError(0, "sweep needs axis1 in the config");
      spec.label = "custom";
      spec.base = params;
      spec.axes = cfg.axes;
      spec.r_grid = cfg.r_values.value_or(std::vector<double>{params.r});
      rows = run_sweep(spec, {thread_override()});
      break;
    case Command::figure: {
      if (!cfg.preset) throw ConfigError(0, "figure needs --preset or a 'preset' key");
      spec = figure_preset(*cfg.preset);
      for (const auto& [key, value] : cfg.overrides) spec.base.set(key, value);
      if (cfg.r_values) spec.r_grid = *cfg.r_values;
      rows = run_sweep(spec, {thread_override()});
      break;
    }
    case Command::stability:
      break;
  }

  write_output(cfg.out, cfg.format == OutputFormat::json ? emit_json(rows, spec) : emit_csv(rows, spec));

  if (cfg.svg) {
    const auto table = build_table(rows, spec.axes);
    const std::string group = spec.axes.empty() ? std::string() : spec.axes.front().name;
    write_output(cfg.svg, emit_svg(table, "r", cfg.svg_column, group));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state entanglement of a hybrid optomechanical / atomic-spin system"};
  std::string command, config, preset, out, format, svg;
  app.add_option("command", command, "point | sweep | figure | stability")
      ->required()
      ->check(CLI::IsMember({"point", "sweep", "figure", "stability"}));
  app.add_option("--config", config, "flat key = value configuration file");
  app.add_option("--preset", preset, "figure preset name (figure command)");
  app.add_option("--out", out, "output path (default: stdout)");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--svg", svg, "write an SVG line plot to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    return run(command, config, preset, out, format, svg);
  } catch (const hybrident::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const hybrident::PreconditionError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const hybrident::DomainError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
