#include <algorithm>

#include "games.hpp"

// Brainman: collect diamonds (+2), push the key into the door to open it
// (+1), reach the exit portal to win (+1). Deterministic; the only loss is
// the tick cap. The key is the game's single movable and pushes like a
// Sokoban crate, so it can be dead-locked against a wall.

namespace shadowbench::games {

void step_brainman(GameState& s, Action a) {
  const Cell target = step_towards(s.avatar, a);
  if (is_wall(s, target) || s.tile_at(target) == Tile::Door) return;

  auto key = std::find_if(s.movables.begin(), s.movables.end(),
                          [&](const Sprite& m) { return m.pos == target; });
  if (key != s.movables.end()) {
    const Cell push = step_towards(target, a);
    if (s.in_bounds(push) && s.tile_at(push) == Tile::Door) {
      s.movables.erase(key);
      s.set_tile(push, Tile::Floor);
      s.score += 1.0;
    } else if (!is_wall(s, push) && s.tile_at(push) == Tile::Floor &&
               std::none_of(s.movables.begin(), s.movables.end(),
                            [&](const Sprite& m) { return m.pos == push; })) {
      key->pos = push;
    } else {
      return;  // push blocked, avatar stays too
    }
  }

  s.avatar = target;
  if (s.tile_at(target) == Tile::Diamond) {
    s.score += 2.0;
    s.set_tile(target, Tile::Floor);
  }
  if (std::find(s.portals.begin(), s.portals.end(), target) != s.portals.end()) {
    s.score += 1.0;
    s.status = Status::Win;
  }
}

}  // namespace shadowbench::games
