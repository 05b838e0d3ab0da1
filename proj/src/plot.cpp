#include "gegen/plot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gegen::plot {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 60.0;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string tick_label(double value) {
  std::ostringstream out;
  out.precision(4);
  out << value;
  return out.str();
}

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool log = false;

  double transform(double v) const { return log ? std::log10(v) : v; }
  void include(double v) {
    lo = std::min(lo, transform(v));
    hi = std::max(hi, transform(v));
  }
  void finish() {
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  double unit(double v) const { return (transform(v) - lo) / (hi - lo); }
  double at(double u) const {
    const double raw = lo + u * (hi - lo);
    return log ? std::pow(10.0, raw) : raw;
  }
};

}  // namespace

std::string render_svg(const io::CsvTable& table, const PlotSpec& spec) {
  if (spec.y_columns.empty()) throw std::invalid_argument("plot needs at least one y column");
  const std::size_t xi = table.column(spec.x_column);
  std::vector<std::size_t> yi;
  for (const auto& name : spec.y_columns) yi.push_back(table.column(name));

  Axis x_axis{.log = spec.log_x};
  Axis y_axis{.log = spec.log_y};
  std::vector<std::vector<std::pair<double, double>>> series(yi.size());
  for (const auto& row : table.rows) {
    if (row.size() <= xi) continue;
    const double x = io::parse_real(row[xi]);
    if (spec.log_x && !(x > 0.0)) continue;
    for (std::size_t k = 0; k < yi.size(); ++k) {
      if (row.size() <= yi[k]) continue;
      const double y = io::parse_real(row[yi[k]]);
      if (spec.log_y && !(y > 0.0)) continue;
      series[k].emplace_back(x, y);
      x_axis.include(x);
      y_axis.include(y);
    }
  }
  if (!std::isfinite(x_axis.lo) || !std::isfinite(y_axis.lo)) {
    throw std::invalid_argument("plot: no plottable rows");
  }
  x_axis.finish();
  y_axis.finish();

  const double inner_w = kWidth - 2 * kMargin;
  const double inner_h = kHeight - 2 * kMargin;
  auto px = [&](double x) { return kMargin + x_axis.unit(x) * inner_w; };
  auto py = [&](double y) { return kHeight - kMargin - y_axis.unit(y) * inner_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << inner_w
      << "\" height=\"" << inner_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double u = k / 4.0;
    const double gx = kMargin + u * inner_w;
    const double gy = kHeight - kMargin - u * inner_h;
    svg << "<text x=\"" << gx << "\" y=\"" << kHeight - kMargin + 16
        << "\" text-anchor=\"middle\">" << tick_label(x_axis.at(u)) << "</text>\n";
    svg << "<text x=\"" << kMargin - 6 << "\" y=\"" << gy + 4 << "\" text-anchor=\"end\">"
        << tick_label(y_axis.at(u)) << "</text>\n";
  }
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 14 << "\" text-anchor=\"middle\">"
      << escape(spec.x_column) << (spec.log_x ? " (log)" : "") << "</text>\n";
  if (!spec.title.empty()) {
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kMargin / 2
        << "\" text-anchor=\"middle\" font-size=\"14\">" << escape(spec.title) << "</text>\n";
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* colour = kPalette[k % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[k]) svg << px(x) << ',' << py(y) << ' ';
    svg << "\"/>\n";
    svg << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 14 + 14 * k
        << "\" text-anchor=\"end\" fill=\"" << colour << "\">" << escape(spec.y_columns[k])
        << (spec.log_y ? " (log)" : "") << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gegen::plot
