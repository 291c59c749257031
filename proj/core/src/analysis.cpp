#include "shadowbench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "shadowbench/errors.hpp"

namespace shadowbench {

double sym_kl(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw AnalysisError("sym_kl: length mismatch (" + std::to_string(p.size()) + " vs " +
                        std::to_string(q.size()) + ")");
  }
  const double n = static_cast<double>(p.size());
  auto smooth = [&](double x) { return (1.0 - kKlEpsilon) * x + kKlEpsilon / n; };
  double kl_pq = 0.0;
  double kl_qp = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = smooth(p[i]);
    const double qi = smooth(q[i]);
    kl_pq += pi * std::log(pi / qi);
    kl_qp += qi * std::log(qi / pi);
  }
  return 0.5 * (kl_pq + kl_qp);
}

namespace {

double mean_over_playthroughs(std::span<const PlaythroughLog> logs,
                              double (*per_tick)(const TickLog&)) {
  if (logs.empty()) throw AnalysisError("empty log collection");
  double total = 0.0;
  for (const PlaythroughLog& log : logs) {
    double acc = 0.0;
    for (const TickLog& t : log.ticks) acc += per_tick(t);
    total += log.ticks.empty() ? 0.0 : acc / static_cast<double>(log.ticks.size());
  }
  return total / static_cast<double>(logs.size());
}

bool rankable(const std::vector<double>& v) {
  bool varies = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::isnan(v[i])) return false;
    if (i > 0 && v[i] != v[0]) varies = true;
  }
  return varies;
}

}  // namespace

double agreement_percentage(std::span<const PlaythroughLog> logs) {
  return 100.0 * mean_over_playthroughs(logs, [](const TickLog& t) {
           return t.main.a_star == t.shadow.a_star ? 1.0 : 0.0;
         });
}

double decision_similarity(std::span<const PlaythroughLog> logs) {
  return mean_over_playthroughs(
      logs, [](const TickLog& t) { return sym_kl(t.main.p, t.shadow.p); });
}

double kendall_tau(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  long concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if (da == 0.0 && db == 0.0) {
        ++ties_a;
        ++ties_b;
      } else if (da == 0.0) {
        ++ties_a;
      } else if (db == 0.0) {
        ++ties_b;
      } else if ((da > 0.0) == (db > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n0 = static_cast<double>(n * (n - 1)) / 2.0;
  const double denom = std::sqrt((n0 - static_cast<double>(ties_a)) *
                                 (n0 - static_cast<double>(ties_b)));
  if (denom == 0.0) return 0.0;
  return static_cast<double>(concordant - discordant) / denom;
}

std::optional<double> value_rank_similarity(std::span<const PlaythroughLog> logs) {
  double total = 0.0;
  long count = 0;
  for (const PlaythroughLog& log : logs) {
    for (const TickLog& t : log.ticks) {
      if (!rankable(t.main.v) || !rankable(t.shadow.v)) continue;
      total += kendall_tau(t.main.v, t.shadow.v);
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

PairStats pair_stats(std::span<const PlaythroughLog> logs) {
  PairStats st;
  st.ap = agreement_percentage(logs);
  st.ds = decision_similarity(logs);
  st.mean_conv_main =
      mean_over_playthroughs(logs, [](const TickLog& t) { return t.main.conv; });
  st.mean_conv_shadow =
      mean_over_playthroughs(logs, [](const TickLog& t) { return t.shadow.conv; });
  st.mean_b_main = mean_over_playthroughs(logs, [](const TickLog& t) { return t.main.b; });
  st.mean_b_shadow = mean_over_playthroughs(logs, [](const TickLog& t) { return t.shadow.b; });
  st.value_rank_corr = value_rank_similarity(logs);
  int wins = 0;
  long ticks = 0;
  for (const PlaythroughLog& log : logs) {
    wins += log.outcome.win ? 1 : 0;
    ticks += static_cast<long>(log.ticks.size());
  }
  st.win_rate_main = 100.0 * wins / static_cast<double>(logs.size());
  st.n_ticks = ticks;
  st.n_playthroughs = static_cast<int>(logs.size());
  return st;
}

const char* to_string(Preference p) {
  switch (p) {
    case Preference::Main: return "main";
    case Preference::Shadow: return "shadow";
    case Preference::Even: return "even";
  }
  return "?";
}

Verdict decision_graph_verdict(const PairStats& stats, const VerdictThresholds& thresholds) {
  Verdict v;
  v.similar = stats.ap >= thresholds.t_ap || stats.ds <= thresholds.t_ds;
  if (!v.similar) return v;  // later stages only apply to similar agents

  v.conv_gap = stats.mean_conv_main - stats.mean_conv_shadow;
  if (v.conv_gap <= -thresholds.margin) {
    v.convergence = Preference::Main;  // main converges faster
  } else if (v.conv_gap >= thresholds.margin) {
    v.convergence = Preference::Shadow;
  }

  v.value_alignment = stats.value_rank_corr;

  v.b_gap = stats.mean_b_main - stats.mean_b_shadow;
  if (v.b_gap <= -thresholds.margin) {
    v.efficiency = Preference::Main;  // main uses less budget
  } else if (v.b_gap >= thresholds.margin) {
    v.efficiency = Preference::Shadow;
  }
  return v;
}

std::vector<std::string> ComparisonMatrix::labels_with_win_rate() const {
  std::vector<std::string> out;
  out.reserve(roster.size());
  for (std::size_t i = 0; i < roster.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.0f", win_rates[i]);
    out.push_back(roster[i] + " [" + buf + "%]");
  }
  return out;
}

ComparisonMatrix build_matrix(std::span<const PlaythroughLog> logs, const std::string& game_id,
                              const std::vector<std::string>& roster) {
  std::map<std::pair<std::string, std::string>, std::vector<PlaythroughLog>> buckets;
  for (const PlaythroughLog& log : logs) {
    if (log.game_id != game_id) continue;
    buckets[{log.main_config.name, log.shadow_config.name}].push_back(log);
  }

  std::string missing;
  for (const std::string& m : roster) {
    for (const std::string& sdw : roster) {
      if (!buckets.count({m, sdw})) {
        missing += missing.empty() ? "" : ", ";
        missing += "(" + m + ", " + sdw + ")";
      }
    }
  }
  if (!missing.empty()) {
    throw AnalysisError("missing pairs for game " + game_id + ": " + missing);
  }

  ComparisonMatrix matrix;
  matrix.game_id = game_id;
  matrix.roster = roster;
  matrix.cells.resize(roster.size());
  for (std::size_t i = 0; i < roster.size(); ++i) {
    matrix.cells[i].resize(roster.size());
    for (std::size_t j = 0; j < roster.size(); ++j) {
      matrix.cells[i][j] = pair_stats(buckets[{roster[i], roster[j]}]);
    }
  }
  // Win rate of an agent as main, pooled over all its shadow pairings.
  matrix.win_rates.resize(roster.size());
  for (std::size_t i = 0; i < roster.size(); ++i) {
    int wins = 0, total = 0;
    for (std::size_t j = 0; j < roster.size(); ++j) {
      const auto& cell_logs = buckets[{roster[i], roster[j]}];
      for (const PlaythroughLog& log : cell_logs) {
        wins += log.outcome.win ? 1 : 0;
        ++total;
      }
    }
    matrix.win_rates[i] = total > 0 ? 100.0 * wins / total : 0.0;
  }
  return matrix;
}

ComparisonMatrix build_matrix(std::span<const PlaythroughLog> logs, const std::string& game_id) {
  std::vector<std::string> roster;
  for (const PlaythroughLog& log : logs) {
    if (log.game_id != game_id) continue;
    if (std::find(roster.begin(), roster.end(), log.main_config.name) == roster.end()) {
      roster.push_back(log.main_config.name);
    }
  }
  if (roster.empty()) throw AnalysisError("no logs for game " + game_id);
  return build_matrix(logs, game_id, roster);
}

std::vector<double> conv_timeseries(std::span<const PlaythroughLog> logs) {
  std::size_t longest = 0;
  for (const PlaythroughLog& log : logs) longest = std::max(longest, log.ticks.size());
  std::vector<double> series(longest, 0.0);
  for (std::size_t t = 0; t < longest; ++t) {
    double acc = 0.0;
    int alive = 0;
    for (const PlaythroughLog& log : logs) {
      if (t < log.ticks.size()) {
        acc += log.ticks[t].main.conv;
        ++alive;
      }
    }
    series[t] = alive > 0 ? acc / alive : 0.0;
  }
  return series;
}

}  // namespace shadowbench
