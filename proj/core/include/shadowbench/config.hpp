#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "shadowbench/roster.hpp"

namespace shadowbench {

// Experiment description; parsed from the key/value text format in
// docs/config.md or built from a named profile.
struct ExperimentConfig {
  std::vector<GameId> games;
  std::map<GameId, int> levels;  // per-game level id, default 0
  std::vector<AgentConfig> roster;
  int budget_cap = kDefaultBudget;
  int playthroughs = 20;
  std::uint64_t base_seed = 1;
  std::string output_dir = "runs/out";
  int jobs = 1;

  int level_of(GameId g) const {
    auto it = levels.find(g);
    return it == levels.end() ? 0 : it->second;
  }
};

// Throws ConfigError with a line diagnostic on malformed input.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& file);

// Named profiles: "full" (18 agents, 5 games, 20 playthroughs) and "desk"
// (6 agents, 2 games, 10 playthroughs).
ExperimentConfig profile_config(const std::string& name);

// Deterministic JSON echo of a config, embedded in run manifests.
std::string config_to_json(const ExperimentConfig& config);

}  // namespace shadowbench
