#include "shadowbench/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace shadowbench {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Dark blue (low) to light blue (high).
std::string blue_shade(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const int r = static_cast<int>(8 + t * (198 - 8));
  const int g = static_cast<int>(48 + t * (219 - 48));
  const int b = static_cast<int>(107 + t * (239 - 107));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

std::string heatmap_svg(const MatrixCsv& matrix, const std::string& title) {
  const std::size_t rows = matrix.row_labels.size();
  const std::size_t cols = matrix.col_labels.size();
  const double cell = 26.0;
  const double left = 150.0, top = 40.0, bottom = 110.0, right = 20.0;
  const double width = left + cols * cell + right;
  const double height = top + rows * cell + bottom;

  double lo = 0.0, hi = 1.0;
  if (matrix.scale) {
    lo = matrix.scale->first;
    hi = matrix.scale->second;
  } else {
    lo = 1e300;
    hi = -1e300;
    for (const auto& row : matrix.values) {
      for (double v : row) {
        if (std::isnan(v)) continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    if (lo > hi) {
      lo = 0.0;
      hi = 1.0;
    }
  }
  const double span = hi > lo ? hi - lo : 1.0;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg += "<text x=\"" + num(width / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = matrix.values[i][j];
      const double x = left + j * cell;
      const double y = top + i * cell;
      const std::string fill =
          std::isnan(v) ? std::string("#eeeeee") : blue_shade((v - lo) / span);
      svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(cell) +
             "\" height=\"" + num(cell) + "\" fill=\"" + fill +
             "\" stroke=\"white\" stroke-width=\"1\"><title>" +
             escape(matrix.row_labels[i]) + " vs " + escape(matrix.col_labels[j]) + ": " +
             (std::isnan(v) ? std::string("n/a") : num(v)) + "</title></rect>\n";
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    svg += "<text x=\"" + num(left - 6) + "\" y=\"" + num(top + i * cell + cell / 2 + 3) +
           "\" text-anchor=\"end\">" + escape(matrix.row_labels[i]) + "</text>\n";
  }
  for (std::size_t j = 0; j < cols; ++j) {
    const double x = left + j * cell + cell / 2;
    const double y = top + rows * cell + 12;
    svg += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"end\" transform=\"rotate(-60 " +
           num(x) + " " + num(y) + ")\">" + escape(matrix.col_labels[j]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string line_chart_svg(const std::vector<std::pair<int, double>>& series,
                           const std::string& title) {
  const double left = 50.0, top = 40.0, bottom = 40.0, right = 20.0;
  const double plot_w = 520.0, plot_h = 220.0;
  const double width = left + plot_w + right;
  const double height = top + plot_h + bottom;

  int max_tick = 1;
  for (const auto& [t, v] : series) max_tick = std::max(max_tick, t);

  auto sx = [&](double t) { return left + (max_tick > 0 ? t / max_tick : 0.0) * plot_w; };
  auto sy = [&](double v) { return top + (1.0 - std::clamp(v, 0.0, 1.0)) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg += "<text x=\"" + num(width / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(title) + "</text>\n";
  // axes
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
         "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top + plot_h) + "\" x2=\"" +
         num(left + plot_w) + "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";
  for (double yv : {0.0, 0.5, 1.0}) {
    svg += "<text x=\"" + num(left - 8) + "\" y=\"" + num(sy(yv) + 3) +
           "\" text-anchor=\"end\">" + num(yv) + "</text>\n";
    svg += "<line x1=\"" + num(left - 4) + "\" y1=\"" + num(sy(yv)) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(sy(yv)) + "\" stroke=\"black\"/>\n";
  }
  svg += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 8) +
         "\" text-anchor=\"middle\">tick</text>\n";

  if (!series.empty()) {
    std::string points;
    for (const auto& [t, v] : series) {
      points += num(sx(t)) + "," + num(sy(v)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"#2171b5\" stroke-width=\"1.5\" points=\"" +
           points + "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace shadowbench
