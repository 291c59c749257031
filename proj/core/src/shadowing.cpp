#include "shadowbench/shadowing.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace shadowbench {

namespace {

// Stream tags for deriving independent sub-streams from one playthrough seed.
constexpr std::uint64_t kGameStream = 0x67616D65;    // "game"
constexpr std::uint64_t kMainStream = 0x6D61696E;    // "main"
constexpr std::uint64_t kShadowStream = 0x73686477;  // "shdw"

SplitMix64 agent_stream(std::uint64_t seed, std::uint64_t role, std::uint64_t salt) {
  return SplitMix64(mix_seed(mix_seed(seed, role), salt));
}

}  // namespace

std::uint64_t playthrough_seed(std::uint64_t base_seed, int main_index, int shadow_index,
                               int playthrough_index) {
  std::uint64_t s = mix_seed(base_seed, static_cast<std::uint64_t>(main_index));
  s = mix_seed(s, static_cast<std::uint64_t>(shadow_index));
  return mix_seed(s, static_cast<std::uint64_t>(playthrough_index));
}

PlaythroughLog run_playthrough(GameId game, int level, const AgentConfig& main,
                               const AgentConfig& shadow, int budget_cap, std::uint64_t seed) {
  PlaythroughLog log;
  log.game_id = to_string(game);
  log.level_id = level;
  log.seed = seed;
  log.budget_cap = budget_cap;
  log.main_config = main;
  log.shadow_config = shadow;

  GameState state = load_level(game, level, mix_seed(seed, kGameStream));
  SplitMix64 main_rng = agent_stream(seed, kMainStream, main.seed);
  SplitMix64 shadow_rng = agent_stream(seed, kShadowStream, shadow.seed);

  while (state.status == Status::Running) {
    const auto legal = legal_actions(state);

    BudgetMeter main_meter(budget_cap);
    TickLog tl;
    tl.tick = state.tick;
    tl.legal = legal;
    tl.main = decide(main, state, main_meter, main_rng);

    BudgetMeter shadow_meter(budget_cap);
    tl.shadow = decide(shadow, state, shadow_meter, shadow_rng);

    tl.played = legal[static_cast<std::size_t>(tl.main.a_star)];
    BudgetMeter env_meter(1);
    state = advance(state, tl.played, env_meter);
    log.ticks.push_back(std::move(tl));
  }

  log.outcome.win = state.status == Status::Win;
  log.outcome.score = state.score;
  log.outcome.length = static_cast<int>(log.ticks.size());
  return log;
}

Replay replay_main_only(GameId game, int level, const AgentConfig& main, int budget_cap,
                        std::uint64_t seed) {
  GameState state = load_level(game, level, mix_seed(seed, kGameStream));
  SplitMix64 main_rng = agent_stream(seed, kMainStream, main.seed);

  Replay replay;
  while (state.status == Status::Running) {
    const auto legal = legal_actions(state);
    BudgetMeter meter(budget_cap);
    const Decision d = decide(main, state, meter, main_rng);
    const Action played = legal[static_cast<std::size_t>(d.a_star)];
    BudgetMeter env_meter(1);
    state = advance(state, played, env_meter);
    replay.played.push_back(played);
  }
  replay.outcome.win = state.status == Status::Win;
  replay.outcome.score = state.score;
  replay.outcome.length = static_cast<int>(replay.played.size());
  return replay;
}

std::vector<PlaythroughLog> run_experiment(
    GameId game, int level, const std::vector<AgentConfig>& roster, int budget_cap,
    int n_playthroughs, std::uint64_t base_seed, int jobs,
    const std::function<void(const PlaythroughLog&)>& on_done) {
  struct Task {
    int main_idx;
    int shadow_idx;
    int pt_idx;
  };
  std::vector<Task> tasks;
  const int n = static_cast<int>(roster.size());
  for (int m = 0; m < n; ++m) {
    for (int sdw = 0; sdw < n; ++sdw) {
      for (int k = 0; k < n_playthroughs; ++k) tasks.push_back({m, sdw, k});
    }
  }

  std::vector<PlaythroughLog> logs(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size() || failed.load()) return;
      const Task& t = tasks[i];
      const std::uint64_t seed =
          playthrough_seed(base_seed, t.main_idx, t.shadow_idx, t.pt_idx);
      try {
        logs[i] = run_playthrough(game, level, roster[static_cast<std::size_t>(t.main_idx)],
                                  roster[static_cast<std::size_t>(t.shadow_idx)], budget_cap,
                                  seed);
        if (on_done) on_done(logs[i]);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failed.store(true);
        failure = "playthrough failed for pair (" +
                  roster[static_cast<std::size_t>(t.main_idx)].name + ", " +
                  roster[static_cast<std::size_t>(t.shadow_idx)].name + ") index " +
                  std::to_string(t.pt_idx) + " seed " + std::to_string(seed) + ": " + e.what();
        return;
      }
    }
  };

  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw EngineError(failure);
  return logs;
}

}  // namespace shadowbench
