#include "games.hpp"
#include "shadowbench/rng.hpp"

// Racebet2: four camels race behind a fence while the avatar walks a small
// cross-shaped betting area with one coloured pad per camel. When the first
// camel crosses the finish, a judgment countdown starts; at judgment the
// game is won iff the avatar stands on the winning camel's pad. The camels
// are layout scenery, not NPC sprites, and the score never moves during the
// race: the only signal is the outcome itself.

namespace shadowbench::games {

namespace {

Tile bet_tile_for(int camel_kind) {
  return static_cast<Tile>(static_cast<int>(Tile::Bet0) + camel_kind);
}

}  // namespace

void step_racebet2(GameState& s, Action a) {
  auto& extra = std::get<RacebetExtra>(s.extra);

  const Cell target = step_towards(s.avatar, a);
  if (!is_wall(s, target)) s.avatar = target;

  if (extra.winner < 0) {
    for (Sprite& camel : extra.camels) {
      if (stream_chance(s.rng, kCamelStepChance)) {
        const Cell ahead{camel.pos.x + 1, camel.pos.y};
        if (!is_wall(s, ahead)) camel.pos = ahead;
      }
      if (extra.winner < 0 && s.tile_at(camel.pos) == Tile::Finish) {
        extra.winner = camel.kind;
        extra.judge_tick = s.tick + kJudgeDelay;
      }
    }
  }

  if (extra.winner >= 0 && s.tick >= extra.judge_tick) {
    if (s.tile_at(s.avatar) == bet_tile_for(extra.winner)) {
      s.score += kBetWinScore;
      s.status = Status::Win;
    } else {
      s.status = Status::Loss;
    }
  }
}

}  // namespace shadowbench::games
