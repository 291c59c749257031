#include "shadowbench/roster.hpp"

#include <cstdio>
#include <stdexcept>

namespace shadowbench {

const std::vector<std::string>& pruning_renderings() {
  // Id order: second addend alone (reciprocal, numerator, full fraction),
  // then for each first addend (min_d_npc, min_d_mov, their product) the
  // bare term followed by its three combinations.
  static const std::vector<std::string> renderings = {
      "(1 / sum_d_npc)",
      "abs(max_r)",
      "(abs(max_r) / sum_d_npc)",
      "min_d_npc",
      "(min_d_npc + (1 / sum_d_npc))",
      "(min_d_npc + abs(max_r))",
      "(min_d_npc + (abs(max_r) / sum_d_npc))",
      "min_d_mov",
      "(min_d_mov + (1 / sum_d_npc))",
      "(min_d_mov + abs(max_r))",
      "(min_d_mov + (abs(max_r) / sum_d_npc))",
      "(min_d_mov * min_d_npc)",
      "((min_d_mov * min_d_npc) + (1 / sum_d_npc))",
      "((min_d_mov * min_d_npc) + abs(max_r))",
      "((min_d_mov * min_d_npc) + (abs(max_r) / sum_d_npc))",
  };
  return renderings;
}

PolicyExpr pruning_policy(int id) {
  const auto& renderings = pruning_renderings();
  if (id < 0 || id >= static_cast<int>(renderings.size())) {
    throw std::out_of_range("pruning id out of range: " + std::to_string(id));
  }
  return parse_policy(renderings[static_cast<std::size_t>(id)]);
}

namespace {

AgentConfig make_agent(std::string name, AgentKind kind) {
  AgentConfig cfg;
  cfg.name = std::move(name);
  cfg.kind = kind;
  return cfg;
}

AgentConfig make_pruning_agent(int id) {
  char name[16];
  std::snprintf(name, sizeof(name), "mcts%02d", id);
  AgentConfig cfg = make_agent(name, AgentKind::Mcts);
  cfg.policy = pruning_policy(id);
  return cfg;
}

}  // namespace

std::vector<AgentConfig> full_roster() {
  std::vector<AgentConfig> roster;
  for (int id = 0; id < 15; ++id) roster.push_back(make_pruning_agent(id));
  roster.push_back(make_agent("osla", AgentKind::Osla));
  roster.push_back(make_agent("random", AgentKind::Random));
  roster.push_back(make_agent("mcs", AgentKind::Mcs));
  return roster;
}

std::vector<AgentConfig> desk_roster() {
  std::vector<AgentConfig> roster;
  roster.push_back(make_pruning_agent(0));
  roster.push_back(make_pruning_agent(12));
  roster.push_back(make_agent("osla", AgentKind::Osla));
  roster.push_back(make_agent("random", AgentKind::Random));
  roster.push_back(make_agent("mcs", AgentKind::Mcs));
  roster.push_back(make_agent("ucb", AgentKind::Mcts));  // UCB policy by default
  return roster;
}

}  // namespace shadowbench
