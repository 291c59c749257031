#include "games.hpp"

// Camelrace: reach the finish column before the scripted NPC camel. The
// avatar moves one cell per tick in its lane; the camel advances one cell
// every kCamelPeriod ticks. Deterministic. Avatar crossing first wins (+1),
// camel crossing first loses.

namespace shadowbench::games {

void step_camelrace(GameState& s, Action a) {
  const Cell target = step_towards(s.avatar, a);
  if (!is_wall(s, target)) s.avatar = target;
  if (s.tile_at(s.avatar) == Tile::Finish) {
    s.score += 1.0;
    s.status = Status::Win;
    return;
  }

  if (s.tick % kCamelPeriod == 0) {
    for (Sprite& camel : s.npcs) {
      const Cell ahead{camel.pos.x + 1, camel.pos.y};
      if (!is_wall(s, ahead)) camel.pos = ahead;
      if (s.tile_at(camel.pos) == Tile::Finish) {
        s.status = Status::Loss;
        return;
      }
    }
  }
}

}  // namespace shadowbench::games
