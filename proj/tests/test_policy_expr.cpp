#include <cmath>
#include <set>

#include "doctest.h"
#include "shadowbench/engine.hpp"
#include "shadowbench/policy_expr.hpp"
#include "shadowbench/roster.hpp"
#include "shadowbench/rng.hpp"

using namespace shadowbench;
using P = PolicyExpr;

namespace {

NodeContext ctx_of(double max_r, double min_d_mov, double min_d_npc, double sum_d_npc,
                   int child_visits = 1, int parent_visits = 1, double mean = 0.0) {
  NodeContext ctx;
  ctx.max_r = max_r;
  ctx.mean_reward = mean;
  ctx.child_visits = child_visits;
  ctx.parent_visits = parent_visits;
  ctx.features.min_d_mov = min_d_mov;
  ctx.features.min_d_npc = min_d_npc;
  ctx.features.sum_d_npc = sum_d_npc;
  return ctx;
}

// Random well-formed expression over all node kinds.
P random_expr(SplitMix64& rng, int depth) {
  const std::uint32_t pick = depth <= 0 ? rng.below(2) : rng.below(9);
  switch (pick) {
    case 0: return P::constant(static_cast<double>(rng.below(20)) / 2.0);
    case 1: {
      const PolicyVar vars[] = {PolicyVar::MaxR,        PolicyVar::MinDMov,
                                PolicyVar::MinDNpc,     PolicyVar::SumDNpc,
                                PolicyVar::ChildVisits, PolicyVar::ParentVisits,
                                PolicyVar::MeanReward};
      return P::variable(vars[rng.below(7)]);
    }
    case 2: return P::abs(random_expr(rng, depth - 1));
    case 3: return P::ln(random_expr(rng, depth - 1));
    case 4: return P::sqrt(random_expr(rng, depth - 1));
    case 5: return P::add(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 6: return P::sub(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    case 7: return P::mul(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    default: return P::div(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

NodeContext random_reachable_context(SplitMix64& rng) {
  // Field ranges as produced by the bundled games and the MCTS loop.
  NodeContext ctx;
  ctx.parent_visits = 1 + static_cast<int>(rng.below(700));
  ctx.child_visits = static_cast<int>(rng.below(
      static_cast<std::uint32_t>(ctx.parent_visits))) + 1;
  ctx.max_r = rng.unit() * 20024.0 - 10000.0;
  ctx.mean_reward = rng.unit() * 20024.0 - 10000.0;
  ctx.features.min_d_mov = rng.below(2) ? static_cast<double>(rng.below(42)) : 42.0;
  ctx.features.min_d_npc = rng.below(2) ? static_cast<double>(rng.below(42)) : 42.0;
  ctx.features.sum_d_npc = rng.below(2) ? static_cast<double>(rng.below(200)) : kSumDistanceInf;
  ctx.features.n_npc = static_cast<int>(rng.below(9));
  ctx.features.min_d_portal = static_cast<double>(rng.below(42));
  return ctx;
}

}  // namespace

TEST_CASE("reference policy evaluates by hand") {
  const P h = reference_policy();
  CHECK(h.eval(ctx_of(-4.0, 2.0, 3.0, 10.0)) == doctest::Approx(6.4));
  CHECK(h.render() == "((min_d_mov * min_d_npc) + (abs(max_r) / sum_d_npc))");
}

TEST_CASE("eval basics and totality rules") {
  CHECK(P::constant(1.0).eval(ctx_of(9, 9, 9, 9)) == 1.0);

  // Reciprocal of the empty-NPC sentinel is effectively zero.
  const P recip = P::div(P::constant(1.0), P::variable(PolicyVar::SumDNpc));
  CHECK(recip.eval(ctx_of(0, 0, 0, kSumDistanceInf)) == doctest::Approx(1e-9));

  // Safe division floors the denominator magnitude at 0.1, keeping sign.
  const P div = P::div(P::constant(1.0), P::variable(PolicyVar::MeanReward));
  NodeContext ctx = ctx_of(0, 0, 0, 0);
  ctx.mean_reward = 0.0;
  CHECK(div.eval(ctx) == doctest::Approx(10.0));
  ctx.mean_reward = -0.05;
  CHECK(div.eval(ctx) == doctest::Approx(-10.0));
  ctx.mean_reward = -4.0;
  CHECK(div.eval(ctx) == doctest::Approx(-0.25));

  // ln and sqrt of non-positive values are 0.
  const P ln_e = P::ln(P::variable(PolicyVar::MeanReward));
  ctx.mean_reward = -3.0;
  CHECK(ln_e.eval(ctx) == 0.0);
  ctx.mean_reward = std::exp(1.0);
  CHECK(ln_e.eval(ctx) == doctest::Approx(1.0));
  const P sq = P::sqrt(P::variable(PolicyVar::MeanReward));
  ctx.mean_reward = -9.0;
  CHECK(sq.eval(ctx) == 0.0);
  ctx.mean_reward = 9.0;
  CHECK(sq.eval(ctx) == doctest::Approx(3.0));
}

TEST_CASE("eval never returns NaN or infinity on game-range contexts") {
  SplitMix64 rng(42);
  std::vector<P> policies;
  for (int id = 0; id < 15; ++id) policies.push_back(pruning_policy(id));
  policies.push_back(ucb_policy(2.0));
  for (int i = 0; i < 40; ++i) policies.push_back(random_expr(rng, 4));

  for (const P& p : policies) {
    for (int i = 0; i < 200; ++i) {
      const NodeContext ctx = random_reachable_context(rng);
      const double v = p.eval(ctx);
      CHECK(std::isfinite(v));
    }
  }
}

TEST_CASE("ucb_value oracle and edge rules") {
  NodeContext ctx;
  ctx.mean_reward = 0.5;
  ctx.parent_visits = 100;
  ctx.child_visits = 10;
  CHECK(ucb_value(ctx, 2.0) == doctest::Approx(1.4597).epsilon(1e-4));

  ctx.child_visits = 0;
  CHECK(ucb_value(ctx, 2.0) == kUnvisitedUcb);

  ctx.child_visits = 10;
  CHECK(ucb_value(ctx, 0.0) == 0.5);  // pure exploitation
}

TEST_CASE("ucb_value is monotone in visit counts") {
  NodeContext ctx;
  ctx.mean_reward = 1.0;
  for (int n = 2; n <= 400; n *= 2) {
    double prev = 1e300;
    for (int na = 1; na <= n; ++na) {
      ctx.parent_visits = n;
      ctx.child_visits = na;
      const double v = ucb_value(ctx, 2.0);
      CHECK(v < prev);  // strictly decreasing in n_a
      prev = v;
    }
  }
  ctx.child_visits = 5;
  double prev = -1e300;
  for (int n = 5; n <= 700; n += 7) {
    ctx.parent_visits = n;
    const double v = ucb_value(ctx, 2.0);
    CHECK(v >= prev);  // nondecreasing in n
    prev = v;
  }
}

TEST_CASE("ucb expressed as a policy expression agrees with ucb_value") {
  const P ucb = ucb_policy(2.0);
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    NodeContext ctx = random_reachable_context(rng);
    ctx.mean_reward = rng.unit() * 10.0 - 5.0;
    CHECK(ucb.eval(ctx) == doctest::Approx(ucb_value(ctx, 2.0)).epsilon(1e-12));
  }
}

TEST_CASE("pruning the reference policy gives exactly the 15-agent family") {
  const auto prunings = prune_enumerate(reference_policy());
  CHECK(prunings.size() == 15);

  std::set<std::string> got;
  for (const P& p : prunings) got.insert(p.render());
  const std::set<std::string> expected(pruning_renderings().begin(),
                                       pruning_renderings().end());
  CHECK(got == expected);
}

TEST_CASE("pruning small expressions") {
  // A lone variable has nothing to prune.
  const auto single = prune_enumerate(P::variable(PolicyVar::MinDNpc));
  CHECK(single.size() == 1);
  CHECK(single[0].render() == "min_d_npc");

  // ADD over leaves: the sum and both collapses.
  const auto sum = prune_enumerate(
      P::add(P::variable(PolicyVar::MaxR), P::variable(PolicyVar::MinDNpc)));
  CHECK(sum.size() == 3);
  std::set<std::string> got;
  for (const P& p : sum) got.insert(p.render());
  CHECK(got == std::set<std::string>{"(max_r + min_d_npc)", "max_r", "min_d_npc"});

  // Unary collapse: deleting the child deletes the wrapper too.
  const auto unary = prune_enumerate(P::abs(P::variable(PolicyVar::MaxR)));
  CHECK(unary.size() == 1);
  CHECK(unary[0].render() == "abs(max_r)");

  // DIV: full, reciprocal, numerator.
  const auto frac = prune_enumerate(
      P::div(P::variable(PolicyVar::MaxR), P::variable(PolicyVar::SumDNpc)));
  std::set<std::string> frac_got;
  for (const P& p : frac) frac_got.insert(p.render());
  CHECK(frac_got == std::set<std::string>{"(max_r / sum_d_npc)", "(1 / sum_d_npc)", "max_r"});
}

TEST_CASE("collapse correctness: pruned child equals surviving child") {
  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const P left = random_expr(rng, 2);
    const P right = random_expr(rng, 2);
    for (const P& parent : {P::add(left, right), P::mul(left, right)}) {
      const auto prunings = prune_enumerate(parent);
      // The collapses to the bare children are present and evaluate as the
      // children themselves.
      const NodeContext ctx = random_reachable_context(rng);
      bool left_found = false, right_found = false;
      for (const P& p : prunings) {
        if (p == left) {
          left_found = true;
          CHECK(p.eval(ctx) == left.eval(ctx));
        }
        if (p == right) {
          right_found = true;
          CHECK(p.eval(ctx) == right.eval(ctx));
        }
      }
      CHECK(left_found);
      CHECK(right_found);
    }
  }
}

TEST_CASE("policy text grammar round-trips") {
  const auto& renderings = pruning_renderings();
  for (const std::string& text : renderings) {
    CHECK(parse_policy(text).render() == text);
  }
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const P e = random_expr(rng, 4);
    CHECK(parse_policy(e.render()) == e);
  }
  // Operator precedence and associativity.
  CHECK(parse_policy("min_d_mov * min_d_npc + abs(max_r) / sum_d_npc") ==
        reference_policy());
  CHECK(parse_policy("1 - 2 - 3").render() == "((1 - 2) - 3)");
  CHECK(parse_policy("1 + 2 * 3").render() == "(1 + (2 * 3))");

  CHECK_THROWS_AS(parse_policy("min_d_mov +"), ConfigError);
  CHECK_THROWS_AS(parse_policy("bogus_var"), ConfigError);
  CHECK_THROWS_AS(parse_policy("(1 + 2"), ConfigError);
  CHECK_THROWS_AS(parse_policy(""), ConfigError);
}

TEST_CASE("shared additive constants do not change selection argmax") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const P base = random_expr(rng, 3);
    const P shifted = P::add(base, P::constant(123.5));
    std::vector<NodeContext> children;
    for (int i = 0; i < 4; ++i) children.push_back(random_reachable_context(rng));

    auto argmax = [&](const P& policy) {
      int best = 0;
      double best_v = policy.eval(children[0]);
      for (int i = 1; i < 4; ++i) {
        const double v = policy.eval(children[static_cast<std::size_t>(i)]);
        if (v > best_v) {
          best_v = v;
          best = i;
        }
      }
      return best;
    };
    CHECK(argmax(base) == argmax(shifted));
  }
}
