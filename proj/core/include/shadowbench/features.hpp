#pragma once

#include "shadowbench/game_state.hpp"

namespace shadowbench {

// Sentinel for sums over an empty NPC set; large enough that reciprocal
// terms in policies evaluate to ~0.
constexpr double kSumDistanceInf = 1e9;

// Manhattan distances measured from the avatar. Minima over empty sprite
// sets fall back to the unreachable bound distance_cap(state).
struct StateFeatures {
  double min_d_mov = 0.0;
  double min_d_npc = 0.0;
  double sum_d_npc = 0.0;
  int n_npc = 0;
  double min_d_portal = 0.0;
};

// Upper bound on any on-grid Manhattan distance.
inline double distance_cap(const GameState& s) {
  return static_cast<double>(s.width + s.height);
}

StateFeatures extract_features(const GameState& s);

}  // namespace shadowbench
