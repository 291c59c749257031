#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shadowbench/shadowing.hpp"

namespace shadowbench {

// Smoothed symmetric Kullback-Leibler divergence (half-sum form, natural
// log). Both vectors are smoothed with epsilon-uniform mass so disjoint
// supports stay finite; identical inputs give exactly 0.
constexpr double kKlEpsilon = 1e-6;
double sym_kl(std::span<const double> p, std::span<const double> q);

// Pairwise behavior statistics for one (main, shadow) cell.
struct PairStats {
  double ap = 0.0;  // agreement percentage, 0..100
  double ds = 0.0;  // mean symmetric KL of the p-vectors
  double mean_conv_main = 0.0;
  double mean_conv_shadow = 0.0;
  double mean_b_main = 0.0;
  double mean_b_shadow = 0.0;
  std::optional<double> value_rank_corr;  // Kendall tau over paired v, if defined
  double win_rate_main = 0.0;             // percent
  long n_ticks = 0;
  int n_playthroughs = 0;
};

// Per-playthrough agreement fraction, averaged across playthroughs, x100.
double agreement_percentage(std::span<const PlaythroughLog> logs);

// Per-playthrough mean sym_kl(main.p, shadow.p), averaged across playthroughs.
double decision_similarity(std::span<const PlaythroughLog> logs);

// Mean Kendall rank correlation between the two v vectors, over ticks where
// both are NaN-free and non-constant. nullopt when no tick qualifies.
std::optional<double> value_rank_similarity(std::span<const PlaythroughLog> logs);

// Kendall tau-b of two equal-length vectors.
double kendall_tau(std::span<const double> a, std::span<const double> b);

PairStats pair_stats(std::span<const PlaythroughLog> logs);

struct VerdictThresholds {
  double t_ap = 80.0;    // similar when ap >= t_ap ...
  double t_ds = 0.1;     // ... or ds <= t_ds
  double margin = 0.05;  // minimum conv/b gap to call a preference
};

enum class Preference { Main, Shadow, Even };
const char* to_string(Preference p);

// Staged comparison: the similarity gate, then convergence, value ranking
// and efficiency with the deciding margins.
struct Verdict {
  bool similar = false;
  Preference convergence = Preference::Even;  // faster-converging agent
  double conv_gap = 0.0;
  std::optional<double> value_alignment;
  Preference efficiency = Preference::Even;  // more budget-saving agent
  double b_gap = 0.0;
};
Verdict decision_graph_verdict(const PairStats& stats, const VerdictThresholds& thresholds = {});

struct ComparisonMatrix {
  std::string game_id;
  std::vector<std::string> roster;     // agent labels, matrix order
  std::vector<double> win_rates;       // percent, aligned to roster (as main)
  std::vector<std::vector<PairStats>> cells;  // [main][shadow]

  // "name [win%]" labels used on the main-agent axis.
  std::vector<std::string> labels_with_win_rate() const;
};

// One PairStats per ordered roster pair. Throws AnalysisError naming every
// absent pair when the collection does not cover the full matrix.
ComparisonMatrix build_matrix(std::span<const PlaythroughLog> logs, const std::string& game_id,
                              const std::vector<std::string>& roster);
// Roster inferred from order of first appearance as a main agent.
ComparisonMatrix build_matrix(std::span<const PlaythroughLog> logs, const std::string& game_id);

// Mean conv at each tick index for the main agent, averaged over the
// playthroughs still running at that tick.
std::vector<double> conv_timeseries(std::span<const PlaythroughLog> logs);

}  // namespace shadowbench
