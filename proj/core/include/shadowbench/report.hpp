#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowbench/analysis.hpp"

namespace shadowbench {

// Matrix statistics exported as CSV, one file per statistic per game.
enum class MatrixStat { Ap, Ds, Conv, Efficiency, ValueRank };
const char* to_string(MatrixStat s);
std::vector<MatrixStat> all_matrix_stats();

// CSV layout: a "# stat=... game=... scale=lo,hi" comment, a header row of
// shadow-agent labels, then one row per main agent labelled "name [win%]".
std::string matrix_csv(const ComparisonMatrix& m, MatrixStat stat);

// One verdict row per ordered pair.
std::string verdicts_csv(const ComparisonMatrix& m, const VerdictThresholds& thresholds = {});

// All matrices and verdicts for a run in a single JSON document.
std::string report_bundle_json(const std::vector<ComparisonMatrix>& matrices,
                               const VerdictThresholds& thresholds = {});

// "tick,mean_conv" rows.
std::string series_csv(const std::vector<double>& series);

// Parsed forms used by the SVG plotting stage.
struct MatrixCsv {
  std::string stat;
  std::string game;
  std::optional<std::pair<double, double>> scale;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<double>> values;  // NaN for blank cells
};
MatrixCsv parse_matrix_csv(const std::string& text);
std::vector<std::pair<int, double>> parse_series_csv(const std::string& text);

}  // namespace shadowbench
