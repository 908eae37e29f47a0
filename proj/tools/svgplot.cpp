#include "svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace ramm {

namespace {
const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

double tf(double v, bool log) { return log ? std::log10(v) : v; }
}  // namespace

void write_svg_plot(const std::string& path, const PlotSpec& spec,
                    const std::vector<PlotSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (spec.logx && s.x[i] <= 0.0) continue;
      if (spec.logy && s.y[i] <= 0.0) continue;
      xmin = std::min(xmin, tf(s.x[i], spec.logx));
      xmax = std::max(xmax, tf(s.x[i], spec.logx));
      ymin = std::min(ymin, tf(s.y[i], spec.logy));
      ymax = std::max(ymax, tf(s.y[i], spec.logy));
    }
  }
  if (!(xmin <= xmax) || !(ymin <= ymax))
    throw std::runtime_error("write_svg_plot: no plottable points");
  if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
  if (ymax - ymin < 1e-300) ymax = ymin + 1.0;

  const double ml = 70, mr = 20, mt = 40, mb = 50;
  double pw = spec.width - ml - mr, ph = spec.height - mt - mb;
  auto px = [&](double x) { return ml + (tf(x, spec.logx) - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return mt + ph - (tf(y, spec.logy) - ymin) / (ymax - ymin) * ph; };

  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_svg_plot: cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << spec.width / 2 << "\" y=\"22\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << spec.title << "</text>\n";
  out << "<text x=\"" << spec.width / 2 << "\" y=\"" << spec.height - 10
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << spec.xlabel << (spec.logx ? " (log10)" : "") << "</text>\n";
  out << "<text x=\"18\" y=\"" << spec.height / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 18 " << spec.height / 2 << ")\">" << spec.ylabel
      << (spec.logy ? " (log10)" : "") << "</text>\n";

  // axis tick labels at the corners
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", spec.logx ? std::pow(10, xmin) : xmin);
  out << "<text x=\"" << ml << "\" y=\"" << mt + ph + 18
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << buf << "</text>\n";
  std::snprintf(buf, sizeof(buf), "%.3g", spec.logx ? std::pow(10, xmax) : xmax);
  out << "<text x=\"" << ml + pw << "\" y=\"" << mt + ph + 18
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
      << "</text>\n";
  std::snprintf(buf, sizeof(buf), "%.3g", spec.logy ? std::pow(10, ymin) : ymin);
  out << "<text x=\"" << ml - 5 << "\" y=\"" << mt + ph
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
      << "</text>\n";
  std::snprintf(buf, sizeof(buf), "%.3g", spec.logy ? std::pow(10, ymax) : ymax);
  out << "<text x=\"" << ml - 5 << "\" y=\"" << mt + 10
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << buf
      << "</text>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kColors[si % 8];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (spec.logx && s.x[i] <= 0.0) continue;
      if (spec.logy && s.y[i] <= 0.0) continue;
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
      out << buf;
    }
    out << "\"/>\n";
    out << "<text x=\"" << ml + pw - 8 << "\" y=\"" << mt + 18 + 16 * si
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << color << "\">" << s.label << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace ramm
