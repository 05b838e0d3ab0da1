#pragma once

#include <string>
#include <vector>

#include "gegen/io.hpp"

namespace gegen::plot {

struct PlotSpec {
  std::string x_column;
  std::vector<std::string> y_columns;
  bool log_x = false;
  bool log_y = false;
  std::string title;
};

/// Static SVG line chart of the requested CSV columns.
std::string render_svg(const io::CsvTable& table, const PlotSpec& spec);

}  // namespace gegen::plot
