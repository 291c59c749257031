#include "shadowbench/engine.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

#include "games.hpp"
#include "shadowbench/rng.hpp"

namespace shadowbench {

namespace {

constexpr std::array<Action, 3> kAliensActions = {Action::Left, Action::Right, Action::Use};
constexpr std::array<Action, 4> kFourWayActions = {Action::Up, Action::Down, Action::Left,
                                                   Action::Right};

}  // namespace

std::optional<GameId> game_from_string(std::string_view s) {
  if (s == "aliens") return GameId::Aliens;
  if (s == "brainman") return GameId::Brainman;
  if (s == "camelrace") return GameId::Camelrace;
  if (s == "racebet2") return GameId::Racebet2;
  if (s == "zenpuzzle") return GameId::Zenpuzzle;
  return std::nullopt;
}

bool is_stochastic(GameId game) {
  return game == GameId::Aliens || game == GameId::Racebet2;
}

std::span<const Action> action_set(GameId game) {
  if (game == GameId::Aliens) return kAliensActions;
  return kFourWayActions;
}

std::vector<Action> legal_actions(const GameState& s) {
  if (s.terminal()) return {};
  auto set = action_set(s.game);
  return {set.begin(), set.end()};
}

StateFeatures extract_features(const GameState& s) {
  const double cap = distance_cap(s);
  StateFeatures f;
  f.min_d_mov = cap;
  for (const Sprite& m : s.movables) {
    f.min_d_mov = std::min(f.min_d_mov, static_cast<double>(manhattan(s.avatar, m.pos)));
  }
  f.n_npc = static_cast<int>(s.npcs.size());
  if (s.npcs.empty()) {
    f.min_d_npc = cap;
    f.sum_d_npc = kSumDistanceInf;
  } else {
    f.min_d_npc = cap;
    f.sum_d_npc = 0.0;
    for (const Sprite& n : s.npcs) {
      const double d = static_cast<double>(manhattan(s.avatar, n.pos));
      f.min_d_npc = std::min(f.min_d_npc, d);
      f.sum_d_npc += d;
    }
  }
  f.min_d_portal = cap;
  for (const Cell& p : s.portals) {
    f.min_d_portal = std::min(f.min_d_portal, static_cast<double>(manhattan(s.avatar, p)));
  }
  return f;
}

GameState advance(const GameState& s, Action a, BudgetMeter& meter) {
  const auto legal = action_set(s.game);
  if (s.terminal() || std::find(legal.begin(), legal.end(), a) == legal.end()) {
    throw IllegalActionError(std::string("illegal action ") + to_string(a) + " in game " +
                             to_string(s.game) +
                             (s.terminal() ? " (terminal state)" : ""));
  }
  meter.charge();

  GameState next = s;
  ++next.tick;
  switch (next.game) {
    case GameId::Aliens: games::step_aliens(next, a); break;
    case GameId::Brainman: games::step_brainman(next, a); break;
    case GameId::Camelrace: games::step_camelrace(next, a); break;
    case GameId::Racebet2: games::step_racebet2(next, a); break;
    case GameId::Zenpuzzle: games::step_zenpuzzle(next, a); break;
  }
  if (next.status == Status::Running && next.tick >= kMaxTicks) {
    next.status = Status::Loss;
  }
  return next;
}

namespace {

struct LevelLegend {
  // Returns false for characters the game does not accept.
  static bool apply(GameState& s, char c, Cell pos, int& npc_count) {
    switch (c) {
      case '.': return true;
      case '#': s.set_tile(pos, Tile::Wall); return true;
      case 'A': s.avatar = pos; return true;
      case 'n':
        s.npcs.push_back({pos, static_cast<std::uint8_t>(npc_count++)});
        return true;
      case 'm': s.movables.push_back({pos, 0}); return true;
      case 'p': s.portals.push_back(pos); return true;
      case 'd':
        if (s.game != GameId::Brainman) return false;
        s.set_tile(pos, Tile::Diamond);
        return true;
      case 'D':
        if (s.game != GameId::Brainman) return false;
        s.set_tile(pos, Tile::Door);
        return true;
      case 's':
        if (s.game != GameId::Zenpuzzle) return false;
        s.set_tile(pos, Tile::Sand);
        return true;
      case 'F':
        if (s.game != GameId::Camelrace && s.game != GameId::Racebet2) return false;
        s.set_tile(pos, Tile::Finish);
        if (s.game == GameId::Camelrace) s.portals.push_back(pos);
        return true;
      case '0':
      case '1':
      case '2':
      case '3':
        if (s.game != GameId::Racebet2) return false;
        s.set_tile(pos, static_cast<Tile>(static_cast<int>(Tile::Bet0) + (c - '0')));
        return true;
      default: return false;
    }
  }
};

}  // namespace

GameState parse_level(GameId game, std::string_view text, int level, std::uint64_t seed) {
  GameState s;
  s.game = game;
  s.level = level;
  s.rng = is_stochastic(game) ? mix_seed(seed, 0x5EEDu + static_cast<int>(game)) : 0;

  std::size_t pos = 0;
  auto next_line = [&](int line_no) -> std::string_view {
    if (pos >= text.size()) {
      throw LevelParseError("unexpected end of level text", line_no, 1);
    }
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    return line;
  };

  // Header: "W H".
  std::string_view header = next_line(1);
  int w = 0, h = 0;
  const char* b = header.data();
  const char* e = header.data() + header.size();
  auto r1 = std::from_chars(b, e, w);
  if (r1.ec != std::errc() || r1.ptr == e || *r1.ptr != ' ') {
    throw LevelParseError("expected header 'W H'", 1, 1);
  }
  auto r2 = std::from_chars(r1.ptr + 1, e, h);
  if (r2.ec != std::errc() || w <= 0 || h <= 0) {
    throw LevelParseError("expected header 'W H'", 1, 1);
  }
  s.width = w;
  s.height = h;
  s.tiles.assign(static_cast<std::size_t>(w) * h, Tile::Floor);

  bool avatar_seen = false;
  int npc_count = 0;
  for (int y = 0; y < h; ++y) {
    std::string_view row = next_line(y + 2);
    if (static_cast<int>(row.size()) != w) {
      throw LevelParseError("row has " + std::to_string(row.size()) + " cells, expected " +
                                std::to_string(w),
                            y + 2, static_cast<int>(row.size()) + 1);
    }
    for (int x = 0; x < w; ++x) {
      const char c = row[static_cast<std::size_t>(x)];
      if (c == 'A') {
        if (avatar_seen) throw LevelParseError("duplicate avatar", y + 2, x + 1);
        avatar_seen = true;
      }
      if (!LevelLegend::apply(s, c, {x, y}, npc_count)) {
        throw LevelParseError(std::string("unknown cell character '") + c + "'", y + 2, x + 1);
      }
    }
  }
  if (!avatar_seen) throw LevelParseError("level has no avatar", 1, 1);

  if (game == GameId::Aliens) {
    s.extra = AliensExtra{};
  } else if (game == GameId::Racebet2) {
    RacebetExtra extra;
    extra.camels = std::move(s.npcs);  // 'n' cells are track scenery here
    s.npcs.clear();
    s.extra = extra;
  }
  return s;
}

GameState load_level(GameId game, int level, std::uint64_t seed) {
  std::string_view text = builtin_level_text(game, level);
  if (text.empty()) {
    throw MissingLevelError("no bundled level " + std::to_string(level) + " for game " +
                            to_string(game));
  }
  return parse_level(game, text, level, seed);
}

GameState load_level(std::string_view game_id, int level, std::uint64_t seed) {
  auto game = game_from_string(game_id);
  if (!game) throw UnknownGameError("unknown game id '" + std::string(game_id) + "'");
  return load_level(*game, level, seed);
}

}  // namespace shadowbench
