#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shadowbench/budget.hpp"
#include "shadowbench/engine.hpp"
#include "shadowbench/policy_expr.hpp"
#include "shadowbench/rng.hpp"

namespace shadowbench {

// Win/loss bonus used by state evaluations; dominates any achievable score
// in the bundled levels.
constexpr double kTerminalBonus = 10000.0;

// Per-tick decision record. p and v are aligned to legal_actions order;
// v entries are NaN where the agent holds no quality estimate.
struct Decision {
  int a_star = 0;
  std::vector<double> p;
  std::vector<double> v;
  double b = 0.0;
  double conv = 0.0;
};

enum class AgentKind : std::uint8_t { Random, Osla, Mcs, Mcts };

const char* to_string(AgentKind k);
std::optional<AgentKind> agent_kind_from_string(std::string_view s);

struct AgentConfig {
  std::string name;
  AgentKind kind = AgentKind::Random;
  std::optional<PolicyExpr> policy;  // MCTS tree policy; UCB(alpha) when absent
  int rollout_depth = 10;
  double alpha = 2.0;  // exploration factor for the implicit UCB policy
  std::uint64_t seed = 0;  // stream salt mixed into the per-playthrough seeds
};

// Test hook: per-iteration recommended-action stream and tree statistics.
struct DecideTrace {
  std::vector<std::pair<int, int>> argmax_stream;  // (budget used, argmax index)
  int iterations = 0;
  std::vector<int> root_child_visits;
  bool visit_consistency = true;  // child_visits <= parent_visits everywhere
};

// Baseline state evaluation: terminal bonus + score - 100 per NPC - 0.1 per
// cell of portal distance. `from` is the pre-decision state the comparison
// is anchored to; the value itself depends only on `to`.
double simple_state_heuristic(const GameState& from, const GameState& to);

// Rollout reward for the MCTS family: score plus the terminal bonus/penalty.
double rollout_reward(const GameState& s);

Decision random_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng);
Decision osla_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                     DecideTrace* trace = nullptr);
Decision mcs_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                    int rollout_depth = 10, DecideTrace* trace = nullptr);
Decision mcts_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                     const PolicyExpr& policy, int rollout_depth = 10,
                     DecideTrace* trace = nullptr);

// Dispatch on cfg.kind.
Decision decide(const AgentConfig& cfg, const GameState& s, BudgetMeter& meter,
                SplitMix64& rng, DecideTrace* trace = nullptr);

// Throws std::logic_error when a Decision violates its contract
// (probability simplex, 0 <= conv <= b <= 1, NaN discipline, argmax rule).
void validate_decision(const Decision& d, int n_actions);

}  // namespace shadowbench
