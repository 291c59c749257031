#pragma once

// Internal per-game rule steps. advance() has already copied the state,
// validated the action, charged the meter and incremented the tick; each
// step applies one transition into the new tick.

#include "shadowbench/game_state.hpp"

namespace shadowbench::games {

// Movable sprite kinds in aliens.
constexpr std::uint8_t kMissile = 0;
constexpr std::uint8_t kBomb = 1;

// Aliens tuning.
constexpr int kMarchPeriod = 3;       // formation moves every 3rd tick
constexpr int kMissileSpeed = 2;      // cells per tick, upwards
constexpr int kMaxMissiles = 2;       // player missiles in flight
constexpr double kBombChance = 0.03;  // per alien, per march step
constexpr double kAlienKillScore = 2.0;

// Camelrace tuning: NPC camel advances every 2nd tick.
constexpr int kCamelPeriod = 2;

// Racebet2 tuning.
constexpr double kCamelStepChance = 0.25;  // per camel, per tick while racing
constexpr int kJudgeDelay = 15;            // ticks between race end and bet judgment
constexpr double kBetWinScore = 2.0;

void step_aliens(GameState& s, Action a);
void step_brainman(GameState& s, Action a);
void step_camelrace(GameState& s, Action a);
void step_racebet2(GameState& s, Action a);
void step_zenpuzzle(GameState& s, Action a);

inline bool is_wall(const GameState& s, Cell c) {
  return !s.in_bounds(c) || s.tile_at(c) == Tile::Wall;
}

}  // namespace shadowbench::games
