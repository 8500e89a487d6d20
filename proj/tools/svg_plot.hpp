#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ietrel::cli {

struct ScatterPlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

/// Minimal static scatter chart; axes are linear in whatever the caller
/// passes (pass log10 values for a log axis and say so in the label).
void write_scatter_svg(const std::string& path, const ScatterPlot& plot);

}  // namespace ietrel::cli
