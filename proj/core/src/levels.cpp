#include "shadowbench/engine.hpp"

// Bundled level fixtures. The ASCII grids double as the documented examples
// in docs/games.md; legend in docs/games.md and parse_level().

namespace shadowbench {

namespace {

constexpr std::string_view kAliens0 =
    "16 10\n"
    "################\n"
    "#..............#\n"
    "#.nnnn.........#\n"
    "#.nnnn.........#\n"
    "#..............#\n"
    "#..............#\n"
    "#..............#\n"
    "#..............#\n"
    "#......A.......#\n"
    "################\n";

constexpr std::string_view kBrainman0 =
    "13 9\n"
    "#############\n"
    "#.....#.....#\n"
    "#.A...#..d..#\n"
    "#.....#.....#\n"
    "#..m..D.....#\n"
    "#.....#.....#\n"
    "#..d..#...p.#\n"
    "#.....#.....#\n"
    "#############\n";

constexpr std::string_view kCamelrace0 =
    "26 5\n"
    "##########################\n"
    "#A......................F#\n"
    "##########################\n"
    "#.......n...............F#\n"
    "##########################\n";

constexpr std::string_view kRacebet0 =
    "30 12\n"
    "##############################\n"
    "#.n........................F.#\n"
    "#.n........................F.#\n"
    "#.n........................F.#\n"
    "#.n........................F.#\n"
    "##############################\n"
    "###############0##############\n"
    "###############.##############\n"
    "#############2.A.3############\n"
    "###############.##############\n"
    "###############1##############\n"
    "##############################\n";

constexpr std::string_view kZenpuzzle0 =
    "10 9\n"
    "##########\n"
    "#........#\n"
    "#..ssss..#\n"
    "#..ssss..#\n"
    "#..ssss..#\n"
    "#........#\n"
    "#........#\n"
    "#....A...#\n"
    "##########\n";

}  // namespace

std::vector<int> builtin_levels(GameId) { return {0}; }

std::string_view builtin_level_text(GameId game, int level) {
  if (level != 0) return {};
  switch (game) {
    case GameId::Aliens: return kAliens0;
    case GameId::Brainman: return kBrainman0;
    case GameId::Camelrace: return kCamelrace0;
    case GameId::Racebet2: return kRacebet0;
    case GameId::Zenpuzzle: return kZenpuzzle0;
  }
  return {};
}

}  // namespace shadowbench
