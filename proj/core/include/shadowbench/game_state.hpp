#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "shadowbench/action.hpp"

namespace shadowbench {

enum class GameId : std::uint8_t { Aliens, Brainman, Camelrace, Racebet2, Zenpuzzle };

constexpr const char* to_string(GameId g) {
  switch (g) {
    case GameId::Aliens: return "aliens";
    case GameId::Brainman: return "brainman";
    case GameId::Camelrace: return "camelrace";
    case GameId::Racebet2: return "racebet2";
    case GameId::Zenpuzzle: return "zenpuzzle";
  }
  return "?";
}

std::optional<GameId> game_from_string(std::string_view s);

enum class Status : std::uint8_t { Running, Win, Loss };

constexpr const char* to_string(Status s) {
  switch (s) {
    case Status::Running: return "RUNNING";
    case Status::Win: return "WIN";
    case Status::Loss: return "LOSS";
  }
  return "?";
}

// Static-ish cell layer. Games use the subset they need.
enum class Tile : std::uint8_t {
  Floor,
  Wall,
  Diamond,      // brainman pickup
  Door,         // brainman, opened by pushing the key into it
  Sand,         // zenpuzzle tile that must be stepped on exactly once
  SandWalked,   // zenpuzzle tile already used, now impassable
  Finish,       // camelrace finish cells
  Bet0,         // racebet2 betting pads, one per camel colour
  Bet1,
  Bet2,
  Bet3,
};

// Mobile sprite. `kind` is game-specific: camel colour index in racebet2,
// missile/bomb discriminator in aliens, unused elsewhere.
struct Sprite {
  Cell pos;
  std::uint8_t kind = 0;
  bool operator==(const Sprite&) const = default;
};

struct AliensExtra {
  int march_dir = 1;  // +1 right, -1 left
  bool operator==(const AliensExtra&) const = default;
};

struct RacebetExtra {
  // Racing camels are scenery on the far side of the fence: part of the
  // game's layout, not NPC sprites the feature extractor can see.
  std::vector<Sprite> camels;
  int winner = -1;      // camel colour that crossed first, -1 while racing
  int judge_tick = -1;  // tick at which the bet is judged, -1 while racing
  bool operator==(const RacebetExtra&) const = default;
};

using GameExtra = std::variant<std::monostate, AliensExtra, RacebetExtra>;

// Full observable state of one game at one tick. Value type: advance()
// returns a fresh successor and never mutates its input.
struct GameState {
  GameId game = GameId::Aliens;
  int level = 0;
  int tick = 0;
  int width = 0;
  int height = 0;
  Cell avatar;
  std::vector<Sprite> npcs;
  std::vector<Sprite> movables;
  std::vector<Cell> portals;
  std::vector<Tile> tiles;  // width * height, row-major
  double score = 0.0;
  Status status = Status::Running;
  std::uint64_t rng = 0;  // embedded random stream; 0 and untouched in deterministic games
  GameExtra extra;

  Tile tile_at(Cell c) const { return tiles[static_cast<std::size_t>(c.y) * width + c.x]; }
  void set_tile(Cell c, Tile t) { tiles[static_cast<std::size_t>(c.y) * width + c.x] = t; }
  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool terminal() const { return status != Status::Running; }

  bool operator==(const GameState&) const = default;
};

}  // namespace shadowbench
