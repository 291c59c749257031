#include <algorithm>

#include "games.hpp"
#include "shadowbench/rng.hpp"

// Aliens: bottom shooter. The avatar slides LEFT/RIGHT on the bottom row and
// fires missiles with USE; the alien formation marches sideways, descends at
// the walls, and drops bombs while marching. All aliens destroyed wins;
// a bomb on the avatar or an alien reaching the avatar's row loses.
//
// Tick order: avatar action, player missiles (2 cells up, kill on contact),
// bombs (1 cell down), then every kMarchPeriod-th tick the formation step
// with bomb drops.

namespace shadowbench::games {

namespace {

bool alien_at(const GameState& s, Cell c, std::size_t* idx = nullptr) {
  for (std::size_t i = 0; i < s.npcs.size(); ++i) {
    if (s.npcs[i].pos == c) {
      if (idx) *idx = i;
      return true;
    }
  }
  return false;
}

void kill_alien(GameState& s, std::size_t idx) {
  s.npcs.erase(s.npcs.begin() + static_cast<std::ptrdiff_t>(idx));
  s.score += kAlienKillScore;
}

}  // namespace

void step_aliens(GameState& s, Action a) {
  auto& extra = std::get<AliensExtra>(s.extra);

  // Avatar.
  if (a == Action::Left || a == Action::Right) {
    Cell target = step_towards(s.avatar, a);
    if (!is_wall(s, target)) s.avatar = target;
  } else if (a == Action::Use) {
    const auto missiles = std::count_if(s.movables.begin(), s.movables.end(),
                                        [](const Sprite& m) { return m.kind == kMissile; });
    Cell spawn{s.avatar.x, s.avatar.y - 1};
    if (missiles < kMaxMissiles && !is_wall(s, spawn)) {
      s.movables.push_back({spawn, kMissile});
    }
  }

  // Player missiles; a missile dies on the first alien it touches.
  for (std::size_t i = 0; i < s.movables.size();) {
    Sprite& m = s.movables[i];
    if (m.kind != kMissile) {
      ++i;
      continue;
    }
    bool dead = false;
    for (int sub = 0; sub < kMissileSpeed && !dead; ++sub) {
      m.pos.y -= 1;
      if (is_wall(s, m.pos)) {
        dead = true;
        break;
      }
      std::size_t hit = 0;
      if (alien_at(s, m.pos, &hit)) {
        kill_alien(s, hit);
        dead = true;
      }
    }
    if (dead) {
      s.movables.erase(s.movables.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  // Bombs.
  for (std::size_t i = 0; i < s.movables.size();) {
    Sprite& m = s.movables[i];
    if (m.kind != kBomb) {
      ++i;
      continue;
    }
    m.pos.y += 1;
    if (m.pos == s.avatar) {
      s.status = Status::Loss;
      return;
    }
    if (is_wall(s, m.pos)) {
      s.movables.erase(s.movables.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  // Walking into a hovering bomb is also fatal.
  for (const Sprite& m : s.movables) {
    if (m.kind == kBomb && m.pos == s.avatar) {
      s.status = Status::Loss;
      return;
    }
  }

  // Formation march.
  if (s.tick % kMarchPeriod == 0 && !s.npcs.empty()) {
    int lo = s.width, hi = -1;
    for (const Sprite& n : s.npcs) {
      lo = std::min(lo, n.pos.x);
      hi = std::max(hi, n.pos.x);
    }
    const bool at_edge = extra.march_dir > 0 ? hi >= s.width - 2 : lo <= 1;
    if (at_edge) {
      for (Sprite& n : s.npcs) n.pos.y += 1;
      extra.march_dir = -extra.march_dir;
    } else {
      for (Sprite& n : s.npcs) n.pos.x += extra.march_dir;
    }
    for (const Sprite& n : s.npcs) {
      if (n.pos.y >= s.avatar.y) {
        s.status = Status::Loss;  // invasion
        return;
      }
    }
    // Bomb drops, one chance per alien per march step.
    for (std::size_t i = 0, n_aliens = s.npcs.size(); i < n_aliens; ++i) {
      if (stream_chance(s.rng, kBombChance)) {
        Cell below{s.npcs[i].pos.x, s.npcs[i].pos.y + 1};
        if (!is_wall(s, below)) s.movables.push_back({below, kBomb});
      }
    }
  }

  if (s.npcs.empty()) s.status = Status::Win;
}

}  // namespace shadowbench::games
