#include "shadowbench/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "shadowbench/errors.hpp"

namespace shadowbench {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double stat_value(const PairStats& st, MatrixStat stat, bool* defined = nullptr) {
  if (defined) *defined = true;
  switch (stat) {
    case MatrixStat::Ap: return st.ap;
    case MatrixStat::Ds: return st.ds;
    case MatrixStat::Conv: return st.mean_conv_main;
    case MatrixStat::Efficiency: return st.mean_b_main;
    case MatrixStat::ValueRank:
      if (!st.value_rank_corr) {
        if (defined) *defined = false;
        return 0.0;
      }
      return *st.value_rank_corr;
  }
  return 0.0;
}

}  // namespace

const char* to_string(MatrixStat s) {
  switch (s) {
    case MatrixStat::Ap: return "ap";
    case MatrixStat::Ds: return "ds";
    case MatrixStat::Conv: return "conv";
    case MatrixStat::Efficiency: return "efficiency";
    case MatrixStat::ValueRank: return "value_rank";
  }
  return "?";
}

std::vector<MatrixStat> all_matrix_stats() {
  return {MatrixStat::Ap, MatrixStat::Ds, MatrixStat::Conv, MatrixStat::Efficiency,
          MatrixStat::ValueRank};
}

std::string matrix_csv(const ComparisonMatrix& m, MatrixStat stat) {
  std::string out = "# stat=" + std::string(to_string(stat)) + " game=" + m.game_id;
  if (stat == MatrixStat::Ap) out += " scale=0,100";
  if (stat == MatrixStat::Conv || stat == MatrixStat::Efficiency) out += " scale=0,1";
  if (stat == MatrixStat::ValueRank) out += " scale=-1,1";
  out += "\nmain\\shadow";
  for (const std::string& label : m.roster) out += "," + label;
  out += "\n";
  const auto row_labels = m.labels_with_win_rate();
  for (std::size_t i = 0; i < m.roster.size(); ++i) {
    out += row_labels[i];
    for (std::size_t j = 0; j < m.roster.size(); ++j) {
      bool defined = true;
      const double v = stat_value(m.cells[i][j], stat, &defined);
      out += ",";
      if (defined) out += fmt(v);
    }
    out += "\n";
  }
  return out;
}

std::string verdicts_csv(const ComparisonMatrix& m, const VerdictThresholds& thresholds) {
  std::string out =
      "main,shadow,ap,ds,similar,convergence_pref,conv_gap,value_alignment,"
      "efficiency_pref,b_gap\n";
  for (std::size_t i = 0; i < m.roster.size(); ++i) {
    for (std::size_t j = 0; j < m.roster.size(); ++j) {
      const PairStats& st = m.cells[i][j];
      const Verdict v = decision_graph_verdict(st, thresholds);
      out += m.roster[i] + "," + m.roster[j] + "," + fmt(st.ap) + "," + fmt(st.ds) + ",";
      out += v.similar ? "similar" : "dissimilar";
      if (v.similar) {
        out += std::string(",") + to_string(v.convergence) + "," + fmt(v.conv_gap) + ",";
        out += v.value_alignment ? fmt(*v.value_alignment) : "";
        out += std::string(",") + to_string(v.efficiency) + "," + fmt(v.b_gap);
      } else {
        out += ",,,,,";  // later stages skipped
      }
      out += "\n";
    }
  }
  return out;
}

std::string report_bundle_json(const std::vector<ComparisonMatrix>& matrices,
                               const VerdictThresholds& thresholds) {
  nlohmann::ordered_json root;
  root["thresholds"] = {{"t_ap", thresholds.t_ap},
                        {"t_ds", thresholds.t_ds},
                        {"margin", thresholds.margin}};
  auto games = nlohmann::ordered_json::array();
  for (const ComparisonMatrix& m : matrices) {
    nlohmann::ordered_json jm;
    jm["game"] = m.game_id;
    jm["roster"] = m.roster;
    jm["win_rates"] = m.win_rates;
    auto cells = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < m.roster.size(); ++i) {
      for (std::size_t j = 0; j < m.roster.size(); ++j) {
        const PairStats& st = m.cells[i][j];
        const Verdict v = decision_graph_verdict(st, thresholds);
        nlohmann::ordered_json c;
        c["main"] = m.roster[i];
        c["shadow"] = m.roster[j];
        c["ap"] = st.ap;
        c["ds"] = st.ds;
        c["conv_main"] = st.mean_conv_main;
        c["conv_shadow"] = st.mean_conv_shadow;
        c["b_main"] = st.mean_b_main;
        c["b_shadow"] = st.mean_b_shadow;
        if (st.value_rank_corr) {
          c["value_rank"] = *st.value_rank_corr;
        } else {
          c["value_rank"] = nullptr;
        }
        c["win_rate_main"] = st.win_rate_main;
        c["n_ticks"] = st.n_ticks;
        c["n_playthroughs"] = st.n_playthroughs;
        c["similar"] = v.similar;
        if (v.similar) {
          c["convergence_pref"] = to_string(v.convergence);
          c["efficiency_pref"] = to_string(v.efficiency);
        }
        cells.push_back(std::move(c));
      }
    }
    jm["cells"] = std::move(cells);
    games.push_back(std::move(jm));
  }
  root["games"] = std::move(games);
  return root.dump(2) + "\n";
}

std::string series_csv(const std::vector<double>& series) {
  std::string out = "tick,mean_conv\n";
  for (std::size_t t = 0; t < series.size(); ++t) {
    out += std::to_string(t) + "," + fmt(series[t]) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

MatrixCsv parse_matrix_csv(const std::string& text) {
  MatrixCsv m;
  std::istringstream in(text);
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string kv;
      while (meta >> kv) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq);
        const std::string value = kv.substr(eq + 1);
        if (key == "stat") m.stat = value;
        if (key == "game") m.game = value;
        if (key == "scale") {
          const auto comma = value.find(',');
          if (comma != std::string::npos) {
            m.scale = {std::stod(value.substr(0, comma)), std::stod(value.substr(comma + 1))};
          }
        }
      }
      continue;
    }
    auto cells = split_csv_line(line);
    if (!header_done) {
      if (cells.empty()) throw AnalysisError("malformed matrix CSV: empty header");
      m.col_labels.assign(cells.begin() + 1, cells.end());
      header_done = true;
      continue;
    }
    if (cells.size() != m.col_labels.size() + 1) {
      throw AnalysisError("malformed matrix CSV: row width mismatch at '" + line + "'");
    }
    m.row_labels.push_back(cells[0]);
    std::vector<double> row;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      row.push_back(cells[i].empty() ? std::numeric_limits<double>::quiet_NaN()
                                     : std::stod(cells[i]));
    }
    m.values.push_back(std::move(row));
  }
  if (!header_done || m.values.empty()) {
    throw AnalysisError("malformed matrix CSV: no data rows");
  }
  return m;
}

std::vector<std::pair<int, double>> parse_series_csv(const std::string& text) {
  std::vector<std::pair<int, double>> series;
  std::istringstream in(text);
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_done) {
      header_done = true;  // "tick,mean_conv"
      continue;
    }
    const auto cells = split_csv_line(line);
    if (cells.size() != 2) throw AnalysisError("malformed series CSV at '" + line + "'");
    series.emplace_back(std::stoi(cells[0]), std::stod(cells[1]));
  }
  return series;
}

}  // namespace shadowbench
