#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "shadowbench/features.hpp"

namespace shadowbench {

// Node statistics and state features a tree policy can read when scoring
// a child during MCTS selection.
struct NodeContext {
  double max_r = 0.0;        // highest rollout reward seen through this child
  double mean_reward = 0.0;  // average rollout reward through this child
  int child_visits = 0;
  int parent_visits = 0;
  StateFeatures features;
};

enum class PolicyVar : std::uint8_t {
  MaxR,
  MinDMov,
  MinDNpc,
  SumDNpc,
  ChildVisits,
  ParentVisits,
  MeanReward,
};

const char* to_string(PolicyVar v);

// Immutable expression tree over node statistics and state features.
// Leaves are constants or variables; unary ops abs/ln/sqrt; binary ops
// + - * /. Evaluation is total: division floors the denominator's
// magnitude at kDenominatorFloor (sign preserved) and ln/sqrt of
// non-positive values give 0.
class PolicyExpr {
 public:
  enum class Kind : std::uint8_t { Const, Var, Abs, Ln, Sqrt, Add, Sub, Mul, Div };

  static constexpr double kDenominatorFloor = 0.1;

  static PolicyExpr constant(double value);
  static PolicyExpr variable(PolicyVar v);
  static PolicyExpr abs(PolicyExpr e);
  static PolicyExpr ln(PolicyExpr e);
  static PolicyExpr sqrt(PolicyExpr e);
  static PolicyExpr add(PolicyExpr l, PolicyExpr r);
  static PolicyExpr sub(PolicyExpr l, PolicyExpr r);
  static PolicyExpr mul(PolicyExpr l, PolicyExpr r);
  static PolicyExpr div(PolicyExpr l, PolicyExpr r);

  double eval(const NodeContext& ctx) const;

  // Fully parenthesized infix form; injective over structurally distinct
  // trees, used for de-duplication and config round-trips.
  std::string render() const;

  Kind kind() const;
  bool operator==(const PolicyExpr& other) const;  // structural

  struct Node;

 private:
  explicit PolicyExpr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
  friend std::vector<PolicyExpr> prune_enumerate(const PolicyExpr&);
};

// Parse the textual infix grammar documented in docs/policy.md.
// Throws ConfigError on syntax errors.
PolicyExpr parse_policy(std::string_view text);

// All distinct prunings of an expression (subtree deletions under the
// collapse rules), including the expression itself, de-duplicated by
// canonical rendering and sorted by it.
std::vector<PolicyExpr> prune_enumerate(const PolicyExpr& expr);

// Classic UCB child score; unvisited children get a +inf surrogate so the
// caller's argmax forces a first visit.
double ucb_value(const NodeContext& ctx, double alpha);
constexpr double kUnvisitedUcb = 1e18;

// UCB expressed in the policy grammar: mean_reward + sqrt((alpha *
// ln(parent_visits)) / child_visits).
PolicyExpr ucb_policy(double alpha);

// The reference movement heuristic whose prunings form the MCTS agent
// family: (min_d_mov * min_d_npc) + (abs(max_r) / sum_d_npc).
PolicyExpr reference_policy();

}  // namespace shadowbench
