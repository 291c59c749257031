#include <algorithm>

#include "games.hpp"

// Zenpuzzle: step on every sand tile exactly once. A sand tile becomes
// impassable the moment it is entered (+1 score); walking into walls or
// used tiles is a no-op. Winning requires covering all sand; the only loss
// is the tick cap, reached when the avatar seals itself off.

namespace shadowbench::games {

void step_zenpuzzle(GameState& s, Action a) {
  const Cell target = step_towards(s.avatar, a);
  if (is_wall(s, target) || s.tile_at(target) == Tile::SandWalked) return;

  s.avatar = target;
  if (s.tile_at(target) == Tile::Sand) {
    s.set_tile(target, Tile::SandWalked);
    s.score += 1.0;
    if (std::none_of(s.tiles.begin(), s.tiles.end(),
                     [](Tile t) { return t == Tile::Sand; })) {
      s.status = Status::Win;
    }
  }
}

}  // namespace shadowbench::games
