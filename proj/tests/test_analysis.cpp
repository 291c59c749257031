#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "shadowbench/analysis.hpp"
#include "shadowbench/roster.hpp"
#include "shadowbench/rng.hpp"

using namespace shadowbench;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Hand oracle, written before the implementation: unsmoothed half-sum
// symmetric KL for strictly positive vectors.
double sym_kl_oracle(const std::vector<double>& p, const std::vector<double>& q) {
  double a = 0.0, b = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    a += p[i] * std::log(p[i] / q[i]);
    b += q[i] * std::log(q[i] / p[i]);
  }
  return 0.5 * (a + b);
}

TickLog make_tick(int a_main, int a_shadow, std::vector<double> p_main,
                  std::vector<double> p_shadow, std::vector<double> v_main = {},
                  std::vector<double> v_shadow = {}, double conv_main = 0.0,
                  double conv_shadow = 0.0) {
  TickLog t;
  const std::size_t n = p_main.size();
  t.legal = std::vector<Action>(n, Action::Up);
  t.main.a_star = a_main;
  t.main.p = std::move(p_main);
  t.main.v = v_main.empty() ? std::vector<double>(n, kNaN) : std::move(v_main);
  t.main.conv = conv_main;
  t.shadow.a_star = a_shadow;
  t.shadow.p = std::move(p_shadow);
  t.shadow.v = v_shadow.empty() ? std::vector<double>(n, kNaN) : std::move(v_shadow);
  t.shadow.conv = conv_shadow;
  return t;
}

PlaythroughLog make_log(std::vector<TickLog> ticks, bool win = false) {
  PlaythroughLog log;
  log.game_id = "aliens";
  log.main_config.name = "m";
  log.shadow_config.name = "s";
  log.ticks = std::move(ticks);
  log.outcome.win = win;
  log.outcome.length = static_cast<int>(log.ticks.size());
  return log;
}

}  // namespace

TEST_CASE("sym_kl oracle values") {
  const std::vector<double> u4(4, 0.25);
  CHECK(sym_kl(u4, u4) == 0.0);  // identical after identical smoothing

  // Hand arithmetic: 0.5*(0.5108256 + 0.3680642) = 0.4394449.
  const std::vector<double> p{0.5, 0.5};
  const std::vector<double> q{0.9, 0.1};
  CHECK(sym_kl_oracle(p, q) == doctest::Approx(0.4394449).epsilon(1e-6));
  CHECK(sym_kl(p, q) == doctest::Approx(0.4394449).epsilon(1e-3));

  // Disjoint support stays finite under smoothing, near ln(1/eps).
  const double far = sym_kl(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 1.0});
  CHECK(std::isfinite(far));
  CHECK(far > 10.0);
  CHECK(far < 20.0);

  CHECK_THROWS_AS(sym_kl(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0}),
                  AnalysisError);
}

TEST_CASE("sym_kl symmetry and self-zero over random simplex pairs") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 3;
    std::vector<double> p(n), q(n);
    double ps = 0.0, qs = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = uni(gen) + 1e-12;
      q[i] = uni(gen) + 1e-12;
      ps += p[i];
      qs += q[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      p[i] /= ps;
      q[i] /= qs;
    }
    CHECK(std::abs(sym_kl(p, q) - sym_kl(q, p)) <= 1e-12);
    CHECK(sym_kl(p, p) == 0.0);
    CHECK(sym_kl(p, q) >= 0.0);
  }
}

TEST_CASE("agreement percentage") {
  // 3 of 4 ticks agree -> 75%.
  std::vector<TickLog> ticks;
  ticks.push_back(make_tick(0, 0, {0.5, 0.5}, {0.5, 0.5}));
  ticks.push_back(make_tick(1, 1, {0.5, 0.5}, {0.5, 0.5}));
  ticks.push_back(make_tick(0, 1, {0.5, 0.5}, {0.5, 0.5}));
  ticks.push_back(make_tick(1, 1, {0.5, 0.5}, {0.5, 0.5}));
  const std::vector<PlaythroughLog> logs{make_log(ticks)};
  CHECK(agreement_percentage(logs) == doctest::Approx(75.0));

  // Playthroughs weigh equally regardless of length.
  std::vector<PlaythroughLog> two{
      make_log({make_tick(0, 0, {1, 0}, {1, 0})}),
      make_log({make_tick(0, 1, {1, 0}, {0, 1}), make_tick(0, 1, {1, 0}, {0, 1}),
                make_tick(0, 1, {1, 0}, {0, 1}), make_tick(0, 1, {1, 0}, {0, 1})})};
  CHECK(agreement_percentage(two) == doctest::Approx(50.0));

  CHECK_THROWS_AS(agreement_percentage(std::vector<PlaythroughLog>{}), AnalysisError);
}

TEST_CASE("decision similarity") {
  // Identical p streams -> 0; includes the Random/Random uniform case.
  std::vector<TickLog> same{make_tick(0, 1, {0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}),
                            make_tick(1, 0, {0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25})};
  CHECK(decision_similarity(std::vector<PlaythroughLog>{make_log(same)}) == 0.0);

  // Hand-averaged fixture: mean of 0.4394449 and 0 over one playthrough.
  std::vector<TickLog> mixed{make_tick(0, 0, {0.5, 0.5}, {0.9, 0.1}),
                             make_tick(0, 0, {0.5, 0.5}, {0.5, 0.5})};
  CHECK(decision_similarity(std::vector<PlaythroughLog>{make_log(mixed)}) ==
        doctest::Approx(0.4394449 / 2).epsilon(1e-3));
}

TEST_CASE("reordering playthroughs changes nothing") {
  std::vector<PlaythroughLog> logs;
  SplitMix64 rng(5);
  for (int i = 0; i < 6; ++i) {
    std::vector<TickLog> ticks;
    for (int t = 0; t < 5; ++t) {
      const int am = static_cast<int>(rng.below(2));
      const int as = static_cast<int>(rng.below(2));
      const double x = 0.1 + 0.8 * rng.unit();
      ticks.push_back(make_tick(am, as, {x, 1 - x}, {1 - x, x}));
    }
    logs.push_back(make_log(ticks));
  }
  const double ap = agreement_percentage(logs);
  const double ds = decision_similarity(logs);
  std::reverse(logs.begin(), logs.end());
  CHECK(agreement_percentage(logs) == doctest::Approx(ap).epsilon(1e-12));
  CHECK(decision_similarity(logs) == doctest::Approx(ds).epsilon(1e-12));
}

TEST_CASE("value rank similarity") {
  // Identical rankings -> +1; full reversal -> -1.
  std::vector<TickLog> ident{make_tick(3, 3, {0.25, 0.25, 0.25, 0.25},
                                       {0.25, 0.25, 0.25, 0.25}, {1, 2, 3, 4}, {1, 2, 3, 4})};
  CHECK(*value_rank_similarity(std::vector<PlaythroughLog>{make_log(ident)}) ==
        doctest::Approx(1.0));

  std::vector<TickLog> rev{make_tick(3, 0, {0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25},
                                     {1, 2, 3, 4}, {4, 3, 2, 1})};
  CHECK(*value_rank_similarity(std::vector<PlaythroughLog>{make_log(rev)}) ==
        doctest::Approx(-1.0));

  // NaN vectors (Random) and constant vectors are skipped; nothing left ->
  // undefined.
  std::vector<TickLog> nans{make_tick(0, 0, {0.5, 0.5}, {0.5, 0.5})};
  CHECK(!value_rank_similarity(std::vector<PlaythroughLog>{make_log(nans)}).has_value());
  std::vector<TickLog> flat{
      make_tick(0, 0, {0.5, 0.5}, {0.5, 0.5}, {2, 2}, {1, 3})};
  CHECK(!value_rank_similarity(std::vector<PlaythroughLog>{make_log(flat)}).has_value());
}

TEST_CASE("kendall tau on small vectors") {
  CHECK(kendall_tau(std::vector<double>{1, 2, 3}, std::vector<double>{10, 20, 30}) ==
        doctest::Approx(1.0));
  CHECK(kendall_tau(std::vector<double>{1, 2, 3}, std::vector<double>{3, 2, 1}) ==
        doctest::Approx(-1.0));
  CHECK(kendall_tau(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4}) ==
        doctest::Approx(4.0 / 6.0));
}

TEST_CASE("decision graph verdicts") {
  PairStats st;
  st.ap = 100.0;
  st.ds = 0.0;
  st.mean_conv_main = 0.2;
  st.mean_conv_shadow = 0.8;
  st.mean_b_main = 1.0;
  st.mean_b_shadow = 1.0;
  Verdict v = decision_graph_verdict(st);
  CHECK(v.similar);
  CHECK(v.convergence == Preference::Main);
  CHECK(v.efficiency == Preference::Even);

  PairStats far;
  far.ap = 30.0;
  far.ds = 2.5;
  v = decision_graph_verdict(far);
  CHECK(!v.similar);
  CHECK(v.convergence == Preference::Even);  // later stages skipped

  PairStats budget;
  budget.ap = 95.0;
  budget.ds = 0.5;
  budget.mean_conv_main = 0.5;
  budget.mean_conv_shadow = 0.5;
  budget.mean_b_main = 0.006;
  budget.mean_b_shadow = 1.0;
  v = decision_graph_verdict(budget);
  CHECK(v.similar);
  CHECK(v.convergence == Preference::Even);
  CHECK(v.efficiency == Preference::Main);
}

TEST_CASE("build_matrix over a real experiment") {
  AgentConfig osla, random;
  osla.name = "osla";
  osla.kind = AgentKind::Osla;
  random.name = "random";
  random.kind = AgentKind::Random;
  const std::vector<AgentConfig> roster{osla, random};
  const auto logs = run_experiment(GameId::Camelrace, 0, roster, kDefaultBudget, 3, 5);

  const ComparisonMatrix m = build_matrix(logs, "camelrace");
  CHECK(m.roster == std::vector<std::string>{"osla", "random"});
  CHECK(m.cells.size() == 2);
  CHECK(m.cells[0].size() == 2);
  // OSLA wins camelrace deterministically; random essentially never does.
  CHECK(m.win_rates[0] == 100.0);
  CHECK(m.win_rates[1] == 0.0);
  CHECK(m.cells[0][0].n_playthroughs == 3);
  const auto labels = m.labels_with_win_rate();
  CHECK(labels[0] == "osla [100%]");
  CHECK(labels[1] == "random [0%]");

  // A 1x1 matrix is the self-pair diagonal.
  const auto self_logs =
      run_experiment(GameId::Camelrace, 0, {osla}, kDefaultBudget, 2, 5);
  const ComparisonMatrix diag = build_matrix(self_logs, "camelrace");
  CHECK(diag.roster.size() == 1);
  CHECK(diag.cells[0][0].ap == 100.0);  // deterministic agent agrees with itself

  // Dropping one pair is reported with its name.
  std::vector<PlaythroughLog> partial;
  for (const PlaythroughLog& log : logs) {
    if (log.main_config.name == "osla" && log.shadow_config.name == "random") continue;
    partial.push_back(log);
  }
  CHECK_THROWS_WITH_AS(build_matrix(partial, "camelrace", {"osla", "random"}),
                       doctest::Contains("(osla, random)"), AnalysisError);
}

TEST_CASE("win rate counts wins of the main agent") {
  std::vector<PlaythroughLog> logs;
  for (int i = 0; i < 20; ++i) {
    PlaythroughLog log = make_log({make_tick(0, 0, {1, 0}, {1, 0})}, /*win=*/i < 13);
    log.shadow_config.name = "m";  // self-pair fixture
    logs.push_back(std::move(log));
  }
  const ComparisonMatrix m = build_matrix(logs, "aliens", {"m"});
  CHECK(m.win_rates[0] == doctest::Approx(65.0));
}

TEST_CASE("conv timeseries") {
  // Two playthroughs with conv [0.2, 0.4] and [0.4, 0.6] -> [0.3, 0.5].
  std::vector<PlaythroughLog> logs{
      make_log({make_tick(0, 0, {1, 0}, {1, 0}, {}, {}, 0.2),
                make_tick(0, 0, {1, 0}, {1, 0}, {}, {}, 0.4)}),
      make_log({make_tick(0, 0, {1, 0}, {1, 0}, {}, {}, 0.4),
                make_tick(0, 0, {1, 0}, {1, 0}, {}, {}, 0.6)})};
  const auto series = conv_timeseries(logs);
  REQUIRE(series.size() == 2);
  CHECK(series[0] == doctest::Approx(0.3));
  CHECK(series[1] == doctest::Approx(0.5));

  // Shorter playthroughs drop out of the average.
  logs[0].ticks.pop_back();
  const auto uneven = conv_timeseries(logs);
  REQUIRE(uneven.size() == 2);
  CHECK(uneven[0] == doctest::Approx(0.3));
  CHECK(uneven[1] == doctest::Approx(0.6));
}

TEST_CASE("ds zero does not imply agreement for stochastic agents") {
  // Random vs Random: identical uniform p every tick (ds = 0) yet the
  // recommended actions agree only ~1/|A| of the time.
  AgentConfig random;
  random.name = "random";
  random.kind = AgentKind::Random;
  const auto logs = run_experiment(GameId::Aliens, 0, {random}, kDefaultBudget, 5, 77);
  const PairStats st = pair_stats(logs);
  CHECK(st.ds == 0.0);
  CHECK(st.ap < 60.0);
  CHECK(st.ap > 10.0);
}
