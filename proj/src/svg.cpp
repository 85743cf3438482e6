#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "hybrident/report.hpp"

namespace hybrident {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;  // legend column
constexpr double kTop = 20.0;
constexpr double kBottom = 50.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      const double w = std::max(1.0, std::abs(lo)) * 0.5;
      lo -= w;
      hi += w;
    }
  }
};

}  // namespace

std::string emit_svg(const ResultTable& table, std::string_view x_column,
                     std::string_view y_column, std::string_view group_by) {
  const std::size_t xc = table.column(x_column);
  const std::size_t yc = table.column(y_column);
  const std::optional<std::size_t> gc =
      group_by.empty() ? std::nullopt : std::optional<std::size_t>(table.column(group_by));
  const bool reference = y_column.starts_with("duan");

  // Groups in order of first appearance.
  std::vector<double> group_keys;
  std::map<double, std::vector<std::pair<double, double>>> series;
  Range xr, yr;
  for (const auto& row : table.rows) {
    if (!row[xc] || !row[yc]) continue;
    const double key = gc && row[*gc] ? *row[*gc] : 0.0;
    if (!series.count(key)) group_keys.push_back(key);
    series[key].emplace_back(*row[xc], *row[yc]);
    xr.add(*row[xc]);
    yr.add(*row[yc]);
  }
  if (reference) yr.add(1.0);
  if (group_keys.empty()) {
    xr = {0.0, 1.0};
    yr = {0.0, 1.0};
  }
  xr.pad();
  yr.pad();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<rect class=\"frame\" x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
     << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double xv = xr.lo + k * (xr.hi - xr.lo) / 4.0;
    const double yv = yr.lo + k * (yr.hi - yr.lo) / 4.0;
    os << "<line x1=\"" << num(px(xv)) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << num(px(xv))
       << "\" y2=\"" << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << num(px(xv)) << "\" y=\"" << kTop + plot_h + 18
       << "\" text-anchor=\"middle\">" << num(xv) << "</text>\n";
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(py(yv)) << "\" x2=\"" << kLeft
       << "\" y2=\"" << num(py(yv)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(py(yv) + 4)
       << "\" text-anchor=\"end\">" << num(yv) << "</text>\n";
  }
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
     << "\" text-anchor=\"middle\">" << x_column << "</text>\n";
  os << "<text x=\"15\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
     << kTop + plot_h / 2 << ")\">" << y_column << "</text>\n";

  if (reference) {
    os << "<line class=\"reference\" x1=\"" << kLeft << "\" y1=\"" << num(py(1.0)) << "\" x2=\""
       << kLeft + plot_w << "\" y2=\"" << num(py(1.0))
       << "\" stroke=\"black\" stroke-dasharray=\"6 4\"/>\n";
  }

  for (std::size_t g = 0; g < group_keys.size(); ++g) {
    const auto& pts = series[group_keys[g]];
    const char* color = kPalette[g % std::size(kPalette)];
    if (pts.size() == 1) {
      os << "<circle class=\"series\" cx=\"" << num(px(pts[0].first)) << "\" cy=\""
         << num(py(pts[0].second)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    } else {
      os << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color << "\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i)
        os << (i ? " " : "") << num(px(pts[i].first)) << ',' << num(py(pts[i].second));
      os << "\"/>\n";
    }
    const double ly = kTop + 14.0 + 16.0 * g;
    const double lx = kLeft + plot_w + 12.0;
    os << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 18 << "\" y2=\"" << ly - 4
       << "\" stroke=\"" << color << "\"/>\n";
    os << "<text class=\"legend\" x=\"" << lx + 24 << "\" y=\"" << ly << "\">";
    if (gc) os << group_by << " = " << num(group_keys[g]);
    else os << y_column;
    os << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hybrident
