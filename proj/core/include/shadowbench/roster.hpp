#pragma once

#include <vector>

#include "shadowbench/agents.hpp"

namespace shadowbench {

// Canonical renderings of the reference policy's prunings, indexed by the
// agent id they map to (0..14). The enumeration in prune_enumerate() must
// reproduce exactly this set.
const std::vector<std::string>& pruning_renderings();

// Pruning with a given id, parsed from its canonical rendering.
PolicyExpr pruning_policy(int id);

// The standard 18-agent roster: one MCTS agent per pruning (mcts00..mcts14),
// then osla, random, mcs.
std::vector<AgentConfig> full_roster();

// Small roster sized for a laptop run: mcts00, mcts12, osla, random, mcs
// plus a UCB-policy MCTS agent.
std::vector<AgentConfig> desk_roster();

}  // namespace shadowbench
