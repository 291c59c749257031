#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "shadowbench/budget.hpp"
#include "shadowbench/errors.hpp"
#include "shadowbench/features.hpp"
#include "shadowbench/game_state.hpp"

namespace shadowbench {

// Episode cap; a game still running at this tick is recorded as a loss.
constexpr int kMaxTicks = 2000;

// Default per-tick forward-model call budget.
constexpr int kDefaultBudget = 700;

// Fixed action set of a game, in the order used to index p/v vectors.
std::span<const Action> action_set(GameId game);

// Same order as action_set; empty exactly when the state is terminal.
std::vector<Action> legal_actions(const GameState& s);

// Pure successor function. Charges the meter one call, never mutates the
// input, and applies the game's rule step. Throws BudgetExhaustedError or
// IllegalActionError.
GameState advance(const GameState& s, Action a, BudgetMeter& meter);

// Parse an ASCII level (first line "W H", then H rows of W chars).
GameState parse_level(GameId game, std::string_view text, int level, std::uint64_t seed);

// Load one of the bundled levels. Throws MissingLevelError for unknown ids.
GameState load_level(GameId game, int level, std::uint64_t seed);
GameState load_level(std::string_view game_id, int level, std::uint64_t seed);

// Bundled level ids for a game.
std::vector<int> builtin_levels(GameId game);

// Raw text of a bundled level, as fed to parse_level.
std::string_view builtin_level_text(GameId game, int level);

// True for games whose rules draw from the embedded random stream.
bool is_stochastic(GameId game);

}  // namespace shadowbench
