#include "hybrident/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

#include "hybrident/errors.hpp"

namespace hybrident {

namespace {

constexpr const char* kMeasureColumns[] = {"r",       "stable",  "max_re",  "EN_cs",  "EN_cm",
                                           "EN_ms",   "duan_cs", "duan_cm", "duan_ms", "eta_cs",
                                           "eta_cm",  "eta_ms",  "EN_input"};

constexpr ModePair kColumnPairs[] = {ModePair::cavity_spin, ModePair::cavity_mechanics,
                                     ModePair::mechanics_spin};

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_metadata(std::ostream& os, const SweepSpec& spec) {
  os << "# hybrident\n";
  os << "# preset = " << (spec.label.empty() ? "custom" : spec.label) << '\n';
  for (auto name : ParameterSet::field_names)
    os << "# base." << name << " = " << exact(spec.base.get(name)) << '\n';
  for (std::size_t k = 0; k < spec.axes.size(); ++k) {
    os << "# axis" << k + 1 << " = " << spec.axes[k].name << ':';
    for (std::size_t i = 0; i < spec.axes[k].values.size(); ++i)
      os << (i ? ", " : " ") << exact(spec.axes[k].values[i]);
    os << '\n';
  }
  for (const auto& note : spec.notes) os << "# note: " << note << '\n';
}

nlohmann::json pair_json(const PairReport& pr) {
  const auto& e = pr.entanglement;
  const auto& d = pr.duan;
  return {{"eta_minus", e.eta_minus},
          {"log_neg", e.log_neg},
          {"entangled", e.entangled},
          {"simon_violated", e.simon_violated},
          {"duan",
           {{"n", d.n},
            {"m", d.m},
            {"c", d.c},
            {"cprime", d.cprime},
            {"c0_sq", d.c0_sq},
            {"lhs", d.lhs},
            {"rhs", d.rhs},
            {"ratio", d.ratio},
            {"separable_consistent", d.separable_consistent},
            {"degenerate", d.degenerate}}}};
}

nlohmann::json params_json(const ParameterSet& p) {
  nlohmann::json j = nlohmann::json::object();
  for (auto name : ParameterSet::field_names) j[std::string(name)] = p.get(name);
  return j;
}

}  // namespace

std::size_t ResultTable::column(std::string_view name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return k;
  std::string valid;
  for (const auto& c : columns) valid += (valid.empty() ? "" : ", ") + c;
  throw DomainError("unknown column '" + std::string(name) + "'; valid: " + valid);
}

ResultTable build_table(const std::vector<PointReport>& rows, const std::vector<SweepAxis>& axes) {
  ResultTable t;
  for (const auto& a : axes) t.columns.push_back(a.name);
  for (auto c : kMeasureColumns) t.columns.emplace_back(c);

  for (const auto& row : rows) {
    std::vector<std::optional<double>> cells;
    for (const auto& a : axes) cells.emplace_back(row.parameters.get(a.name));
    cells.emplace_back(row.parameters.r);
    cells.emplace_back(row.stable ? 1.0 : 0.0);
    cells.emplace_back(row.max_real_part);
    auto per_pair = [&](auto field) {
      for (auto p : kColumnPairs) {
        const auto& pr = row.pair(p);
        cells.push_back(pr ? std::optional<double>(field(*pr)) : std::nullopt);
      }
    };
    per_pair([](const PairReport& pr) { return pr.entanglement.log_neg; });
    per_pair([](const PairReport& pr) { return pr.duan.ratio; });
    per_pair([](const PairReport& pr) { return pr.entanglement.eta_minus; });
    cells.emplace_back(row.input_log_neg);
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::string format_csv_number(double v) {
  if (v == 0.0) return "0.000000000000";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.12g", v);
  return buf;
}

std::string emit_csv(const std::vector<PointReport>& rows, const SweepSpec& spec) {
  const auto table = build_table(rows, spec.axes);
  const std::size_t stable_col = table.column("stable");

  std::ostringstream os;
  write_metadata(os, spec);
  for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << table.columns[k];
  os << '\n';
  for (const auto& cells : table.rows) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (k) os << ',';
      if (!cells[k]) continue;
      if (k == stable_col) os << (*cells[k] != 0.0 ? 1 : 0);
      else os << format_csv_number(*cells[k]);
    }
    os << '\n';
  }
  return os.str();
}

std::string emit_json(const std::vector<PointReport>& rows, const SweepSpec& spec) {
  nlohmann::json j;
  j["preset"] = spec.label.empty() ? "custom" : spec.label;
  j["base"] = params_json(spec.base);
  j["axes"] = nlohmann::json::array();
  for (const auto& a : spec.axes) j["axes"].push_back({{"name", a.name}, {"values", a.values}});
  j["notes"] = spec.notes;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    for (const auto& a : spec.axes) r[a.name] = row.parameters.get(a.name);
    r["r"] = row.parameters.r;
    r["stable"] = row.stable;
    r["max_re"] = row.max_real_part;
    r["EN_input"] = row.input_log_neg;
    if (row.physicality) r["min_symplectic"] = row.physicality->min_symplectic;
    r["pairs"] = nlohmann::json::object();
    for (auto p : kAllPairs)
      if (const auto& pr = row.pair(p)) r["pairs"][std::string(pair_name(p))] = pair_json(*pr);
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string emit_stability(const ParameterSet& p, const StabilityReport& rep, bool json) {
  if (json) {
    nlohmann::json j;
    j["parameters"] = params_json(p);
    j["stable"] = rep.stable;
    j["max_real_part"] = rep.max_real_part;
    j["eigenvalues"] = nlohmann::json::array();
    for (const auto& z : rep.eigenvalues) j["eigenvalues"].push_back({z.real(), z.imag()});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "stable,max_re\n" << (rep.stable ? 1 : 0) << ',' << format_csv_number(rep.max_real_part)
     << "\nre,im\n";
  for (const auto& z : rep.eigenvalues)
    os << format_csv_number(z.real()) << ',' << format_csv_number(z.imag()) << '\n';
  return os.str();
}

}  // namespace hybrident
