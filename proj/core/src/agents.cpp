#include "shadowbench/agents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace shadowbench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Lowest-index argmax over the non-NaN entries; -1 if all NaN.
int argmax_value(const std::vector<double>& v) {
  int best = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::isnan(v[i])) continue;
    if (best < 0 || v[i] > v[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  return best;
}

// Per-iteration recommendation used for convergence tracking. Exact ties
// among maximal values are broken by the agent's seeded stream, so an agent
// that is genuinely indifferent keeps flipping its recommendation and conv
// stays near 1; the reported a_star still uses the lowest-index rule.
int sampled_argmax(const std::vector<double>& v, SplitMix64& rng) {
  int best = -1;
  int n_tied = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::isnan(v[i])) continue;
    if (best < 0 || v[i] > v[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(i);
      n_tied = 1;
    } else if (v[i] == v[static_cast<std::size_t>(best)]) {
      ++n_tied;
      if (rng.below(static_cast<std::uint32_t>(n_tied)) == 0) best = static_cast<int>(i);
    }
  }
  return best;
}

void record_argmax(DecideTrace* trace, int used, int argmax) {
  if (trace) trace->argmax_stream.emplace_back(used, argmax);
}

}  // namespace

const char* to_string(AgentKind k) {
  switch (k) {
    case AgentKind::Random: return "random";
    case AgentKind::Osla: return "osla";
    case AgentKind::Mcs: return "mcs";
    case AgentKind::Mcts: return "mcts";
  }
  return "?";
}

std::optional<AgentKind> agent_kind_from_string(std::string_view s) {
  if (s == "random") return AgentKind::Random;
  if (s == "osla") return AgentKind::Osla;
  if (s == "mcs") return AgentKind::Mcs;
  if (s == "mcts") return AgentKind::Mcts;
  return std::nullopt;
}

double simple_state_heuristic(const GameState& from, const GameState& to) {
  (void)from;  // anchor state, kept for signature symmetry with the logs
  double bonus = 0.0;
  if (to.status == Status::Win) bonus = kTerminalBonus;
  if (to.status == Status::Loss) bonus = -kTerminalBonus;
  const StateFeatures f = extract_features(to);
  return bonus + to.score - 100.0 * f.n_npc - 0.1 * f.min_d_portal;
}

double rollout_reward(const GameState& s) {
  double bonus = 0.0;
  if (s.status == Status::Win) bonus = kTerminalBonus;
  if (s.status == Status::Loss) bonus = -kTerminalBonus;
  return s.score + bonus;
}

Decision random_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng) {
  (void)meter;
  const auto legal = legal_actions(s);
  const auto n = legal.size();
  Decision d;
  d.a_star = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
  d.p.assign(n, 1.0 / static_cast<double>(n));
  d.v.assign(n, kNaN);
  d.b = 0.0;
  d.conv = 0.0;
  return d;
}

Decision osla_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                     DecideTrace* trace) {
  (void)rng;
  const auto legal = legal_actions(s);
  const auto n = legal.size();
  Decision d;
  d.p.assign(n, 1.0 / static_cast<double>(n));
  d.v.assign(n, kNaN);

  int last_change_sim = 0;
  int running = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const GameState succ = advance(s, legal[i], meter);
    d.v[i] = simple_state_heuristic(s, succ);
    const int am = argmax_value(d.v);
    if (am != running) {
      running = am;
      last_change_sim = static_cast<int>(i) + 1;
    }
    record_argmax(trace, meter.used(), am);
  }
  if (trace) trace->iterations = static_cast<int>(n);

  d.a_star = running;
  d.b = static_cast<double>(n) / meter.cap();
  d.conv = static_cast<double>(last_change_sim) / meter.cap();
  return d;
}

Decision mcs_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                    int rollout_depth, DecideTrace* trace) {
  const auto legal = legal_actions(s);
  const auto n = legal.size();
  std::vector<int> counts(n, 0);
  std::vector<double> sums(n, 0.0);

  int last_change_used = 0;
  int running = -1;
  int completed = 0;
  while (!meter.exhausted()) {
    const int first = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    GameState cur = advance(s, legal[static_cast<std::size_t>(first)], meter);
    int len = 1;
    while (len < rollout_depth && !cur.terminal() && !meter.exhausted()) {
      const auto moves = legal_actions(cur);
      cur = advance(cur, moves[rng.below(static_cast<std::uint32_t>(moves.size()))], meter);
      ++len;
    }
    // A sequence cut short by the budget (and not by a terminal state or
    // the depth cap) is discarded from the statistics.
    if (len < rollout_depth && !cur.terminal()) break;

    counts[static_cast<std::size_t>(first)] += 1;
    sums[static_cast<std::size_t>(first)] += simple_state_heuristic(s, cur);
    ++completed;

    std::vector<double> means(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      if (counts[i] > 0) means[i] = sums[i] / counts[i];
    }
    const int am = sampled_argmax(means, rng);
    if (am != running) {
      running = am;
      last_change_used = meter.used();
    }
    record_argmax(trace, meter.used(), am);
  }
  // Idle out any remainder so b is exactly 1 even after an early terminal.
  while (!meter.exhausted()) meter.charge();
  if (trace) trace->iterations = completed;

  Decision d;
  d.v.assign(n, kNaN);
  if (completed == 0) {
    d.p.assign(n, 1.0 / static_cast<double>(n));
    d.a_star = 0;
    d.conv = 0.0;
  } else {
    d.p.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      d.p[i] = static_cast<double>(counts[i]) / completed;
      if (counts[i] > 0) d.v[i] = sums[i] / counts[i];
    }
    d.a_star = argmax_value(d.v);
    d.conv = static_cast<double>(last_change_used) / meter.cap();
  }
  d.b = static_cast<double>(meter.used()) / meter.cap();
  return d;
}

namespace {

struct TreeNode {
  explicit TreeNode(GameState s, int n_actions)
      : state(std::move(s)), children(static_cast<std::size_t>(n_actions)) {}
  GameState state;
  int visits = 0;
  double total = 0.0;
  double max_r = -std::numeric_limits<double>::infinity();
  std::vector<std::unique_ptr<TreeNode>> children;

  int first_unexpanded() const {
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (!children[i]) return static_cast<int>(i);
    }
    return -1;
  }
};

NodeContext child_context(const TreeNode& parent, const TreeNode& child) {
  NodeContext ctx;
  ctx.max_r = child.max_r;
  ctx.mean_reward = child.total / child.visits;
  ctx.child_visits = child.visits;
  ctx.parent_visits = parent.visits;
  ctx.features = extract_features(child.state);
  return ctx;
}

// Argmax of the tree policy over expanded children, random tie-break.
int select_child(const TreeNode& node, const PolicyExpr& policy, SplitMix64& rng) {
  double best = -std::numeric_limits<double>::infinity();
  int n_best = 0;
  int pick = -1;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const double value = policy.eval(child_context(node, *node.children[i]));
    if (value > best) {
      best = value;
      n_best = 1;
      pick = static_cast<int>(i);
    } else if (value == best) {
      ++n_best;
      if (rng.below(static_cast<std::uint32_t>(n_best)) == 0) pick = static_cast<int>(i);
    }
  }
  return pick;
}

bool check_visit_consistency(const TreeNode& node) {
  for (const auto& c : node.children) {
    if (!c) continue;
    if (c->visits > node.visits) return false;
    if (!check_visit_consistency(*c)) return false;
  }
  return true;
}

}  // namespace

Decision mcts_decide(const GameState& s, BudgetMeter& meter, SplitMix64& rng,
                     const PolicyExpr& policy, int rollout_depth, DecideTrace* trace) {
  const auto legal = legal_actions(s);
  const auto n = legal.size();
  TreeNode root(s, static_cast<int>(n));

  int last_change_used = 0;
  int running = -1;
  int completed = 0;

  while (!meter.exhausted()) {
    TreeNode* node = &root;
    std::vector<TreeNode*> path{node};
    GameState cur = s;
    int depth = 0;
    bool aborted = false;

    // Selection: descend while fully expanded, re-simulating each edge.
    while (!cur.terminal() && depth < rollout_depth && node->first_unexpanded() < 0) {
      const int pick = select_child(*node, policy, rng);
      if (meter.exhausted()) {
        aborted = true;
        break;
      }
      cur = advance(cur, legal[static_cast<std::size_t>(pick)], meter);
      node = node->children[static_cast<std::size_t>(pick)].get();
      path.push_back(node);
      ++depth;
    }

    // Expansion: lowest-index unvisited child first.
    if (!aborted && !cur.terminal() && depth < rollout_depth) {
      const int idx = node->first_unexpanded();
      if (meter.exhausted()) {
        aborted = true;
      } else {
        cur = advance(cur, legal[static_cast<std::size_t>(idx)], meter);
        node->children[static_cast<std::size_t>(idx)] =
            std::make_unique<TreeNode>(cur, static_cast<int>(n));
        node = node->children[static_cast<std::size_t>(idx)].get();
        path.push_back(node);
        ++depth;
      }
    }

    // Rollout: uniformly random to the depth cap, counted from the root.
    while (!aborted && !cur.terminal() && depth < rollout_depth) {
      if (meter.exhausted()) {
        aborted = true;
        break;
      }
      const auto moves = legal_actions(cur);
      cur = advance(cur, moves[rng.below(static_cast<std::uint32_t>(moves.size()))], meter);
      ++depth;
    }
    if (aborted) break;  // truncated final simulation, discarded

    const double reward = rollout_reward(cur);
    for (TreeNode* p : path) {
      p->visits += 1;
      p->total += reward;
      p->max_r = std::max(p->max_r, reward);
    }
    ++completed;

    std::vector<double> means(n, kNaN);
    for (std::size_t i = 0; i < n; ++i) {
      if (root.children[i]) means[i] = root.children[i]->total / root.children[i]->visits;
    }
    const int am = sampled_argmax(means, rng);
    if (am != running) {
      running = am;
      last_change_used = meter.used();
    }
    record_argmax(trace, meter.used(), am);
  }
  while (!meter.exhausted()) meter.charge();

  if (trace) {
    trace->iterations = completed;
    trace->root_child_visits.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (root.children[i]) trace->root_child_visits[i] = root.children[i]->visits;
    }
    trace->visit_consistency = check_visit_consistency(root);
  }

  Decision d;
  d.v.assign(n, kNaN);
  if (completed == 0) {
    d.p.assign(n, 1.0 / static_cast<double>(n));
    d.a_star = 0;
    d.conv = 0.0;
  } else {
    d.p.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = root.children[i];
      d.p[i] = c ? static_cast<double>(c->visits) / root.visits : 0.0;
      if (c) d.v[i] = c->total / c->visits;
    }
    d.a_star = argmax_value(d.v);
    d.conv = static_cast<double>(last_change_used) / meter.cap();
  }
  d.b = static_cast<double>(meter.used()) / meter.cap();
  return d;
}

Decision decide(const AgentConfig& cfg, const GameState& s, BudgetMeter& meter,
                SplitMix64& rng, DecideTrace* trace) {
  switch (cfg.kind) {
    case AgentKind::Random: return random_decide(s, meter, rng);
    case AgentKind::Osla: return osla_decide(s, meter, rng, trace);
    case AgentKind::Mcs: return mcs_decide(s, meter, rng, cfg.rollout_depth, trace);
    case AgentKind::Mcts: {
      const PolicyExpr policy = cfg.policy ? *cfg.policy : ucb_policy(cfg.alpha);
      return mcts_decide(s, meter, rng, policy, cfg.rollout_depth, trace);
    }
  }
  throw std::logic_error("unknown agent kind");
}

void validate_decision(const Decision& d, int n_actions) {
  auto fail = [](const std::string& what) { throw std::logic_error("bad Decision: " + what); };
  if (static_cast<int>(d.p.size()) != n_actions || static_cast<int>(d.v.size()) != n_actions) {
    fail("vector lengths do not match the action count");
  }
  if (d.a_star < 0 || d.a_star >= n_actions) fail("a_star out of range");
  double sum = 0.0;
  for (double pi : d.p) {
    if (std::isnan(pi) || pi < 0.0) fail("p entries must be nonnegative");
    sum += pi;
  }
  if (std::abs(sum - 1.0) > 1e-9) fail("p does not sum to 1");
  if (!(d.b >= 0.0 && d.b <= 1.0)) fail("b outside [0,1]");
  if (!(d.conv >= 0.0 && d.conv <= d.b + 1e-12)) fail("conv outside [0,b]");
  const int am = argmax_value(d.v);
  if (am >= 0 && am != d.a_star) fail("a_star is not the lowest-index argmax of v");
}

}  // namespace shadowbench
