#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shadowbench/agents.hpp"

namespace shadowbench {

struct TickLog {
  int tick = 0;
  std::vector<Action> legal;
  Decision main;
  Decision shadow;
  Action played = Action::Up;  // always the main agent's a*
};

struct Outcome {
  bool win = false;
  double score = 0.0;
  int length = 0;
};

struct PlaythroughLog {
  std::string game_id;
  int level_id = 0;
  std::uint64_t seed = 0;
  int budget_cap = kDefaultBudget;
  AgentConfig main_config;
  AgentConfig shadow_config;
  std::vector<TickLog> ticks;
  Outcome outcome;
};

// One paired playthrough: per tick both agents decide from the identical
// state snapshot with fresh meters and disjoint random streams; only the
// main agent's action is played. Budget violations abort the playthrough.
PlaythroughLog run_playthrough(GameId game, int level, const AgentConfig& main,
                               const AgentConfig& shadow, int budget_cap, std::uint64_t seed);

// Main-only replay of the same seed: the state/action/outcome trajectory a
// playthrough would produce with the shadow agent removed.
struct Replay {
  std::vector<Action> played;
  Outcome outcome;
};
Replay replay_main_only(GameId game, int level, const AgentConfig& main, int budget_cap,
                        std::uint64_t seed);

// Every ordered roster pair, n_playthroughs each, seeds derived from
// (base_seed, main index, shadow index, playthrough index). Tasks are
// independent; `jobs` > 1 runs them on a small thread pool with results in
// deterministic order. `on_done` (optional) is invoked from worker threads.
std::vector<PlaythroughLog> run_experiment(
    GameId game, int level, const std::vector<AgentConfig>& roster, int budget_cap,
    int n_playthroughs, std::uint64_t base_seed, int jobs = 1,
    const std::function<void(const PlaythroughLog&)>& on_done = {});

// Seed for one (pair, playthrough) cell.
std::uint64_t playthrough_seed(std::uint64_t base_seed, int main_index, int shadow_index,
                               int playthrough_index);

}  // namespace shadowbench
