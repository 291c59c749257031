#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shadowbench/report.hpp"

namespace shadowbench {

// Matrix heatmap in a monotone blue colormap (lighter = higher value).
// Row labels carry the main agent's win percentage. Self-contained SVG.
std::string heatmap_svg(const MatrixCsv& matrix, const std::string& title);

// Convergence-over-time line chart, y axis fixed to [0, 1].
std::string line_chart_svg(const std::vector<std::pair<int, double>>& series,
                           const std::string& title);

}  // namespace shadowbench
