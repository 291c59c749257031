#include "doctest.h"
#include "shadowbench/config.hpp"

using namespace shadowbench;

TEST_CASE("config parsing") {
  const std::string text = R"(
# comment
games = aliens, racebet2
budget = 500
playthroughs = 4
seed = 99
out = runs/test
level.aliens = 0

[agent]
name = rnd
kind = random

[agent]
name = my-mcts
kind = mcts
policy = min_d_npc + 1 / sum_d_npc
rollout_depth = 8

[agent]
name = explorer
kind = mcts
alpha = 1.5
)";
  const ExperimentConfig config = parse_config(text);
  CHECK(config.games == std::vector<GameId>{GameId::Aliens, GameId::Racebet2});
  CHECK(config.budget_cap == 500);
  CHECK(config.playthroughs == 4);
  CHECK(config.base_seed == 99);
  CHECK(config.output_dir == "runs/test");
  REQUIRE(config.roster.size() == 3);
  CHECK(config.roster[0].kind == AgentKind::Random);
  CHECK(config.roster[1].policy->render() == "(min_d_npc + (1 / sum_d_npc))");
  CHECK(config.roster[1].rollout_depth == 8);
  CHECK(!config.roster[2].policy.has_value());  // implicit UCB
  CHECK(config.roster[2].alpha == 1.5);
}

TEST_CASE("config defaults") {
  const ExperimentConfig config = parse_config("");
  CHECK(config.games.size() == 5);
  CHECK(config.roster.size() == 18);  // the full agent table
  CHECK(config.budget_cap == 700);
  CHECK(config.playthroughs == 20);
}

TEST_CASE("config errors") {
  CHECK_THROWS_AS(parse_config("games = pacman\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("budget = 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[agent]\nname = a\nkind = nope\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[agent]\nkind = random\n"), ConfigError);  // unnamed
  CHECK_THROWS_AS(parse_config("[agent]\nname = a\nkind = random\n[agent]\nname = a\nkind = osla\n"),
                  ConfigError);  // duplicate
  CHECK_THROWS_AS(parse_config("[agent]\nname = a,b\nkind = random\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("playthroughs = x\n"), ConfigError);
}

TEST_CASE("profiles") {
  const ExperimentConfig desk = profile_config("desk");
  CHECK(desk.games == std::vector<GameId>{GameId::Aliens, GameId::Racebet2});
  CHECK(desk.roster.size() == 6);
  CHECK(desk.playthroughs == 10);

  const ExperimentConfig full = profile_config("full");
  CHECK(full.games.size() == 5);
  CHECK(full.roster.size() == 18);
  CHECK(full.playthroughs == 20);

  CHECK_THROWS_AS(profile_config("nope"), ConfigError);
}

TEST_CASE("config json echo is stable") {
  const ExperimentConfig desk = profile_config("desk");
  CHECK(config_to_json(desk) == config_to_json(profile_config("desk")));
  CHECK(config_to_json(desk).find("\"mcts12\"") != std::string::npos);
}
