#pragma once
// Minimal deterministic SVG line plots (no timestamps, fixed layout).

#include <string>
#include <vector>

namespace ramm {

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
};

struct PlotSpec {
  std::string title;
  std::string xlabel, ylabel;
  bool logx = false, logy = false;
  int width = 720, height = 480;
};

void write_svg_plot(const std::string& path, const PlotSpec& spec,
                    const std::vector<PlotSeries>& series);

}  // namespace ramm
