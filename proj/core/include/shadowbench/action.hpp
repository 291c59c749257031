#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace shadowbench {

enum class Action : std::uint8_t { Up, Down, Left, Right, Use };

constexpr const char* to_string(Action a) {
  switch (a) {
    case Action::Up: return "UP";
    case Action::Down: return "DOWN";
    case Action::Left: return "LEFT";
    case Action::Right: return "RIGHT";
    case Action::Use: return "USE";
  }
  return "?";
}

inline std::optional<Action> action_from_string(std::string_view s) {
  if (s == "UP") return Action::Up;
  if (s == "DOWN") return Action::Down;
  if (s == "LEFT") return Action::Left;
  if (s == "RIGHT") return Action::Right;
  if (s == "USE") return Action::Use;
  return std::nullopt;
}

// Grid cell, x = column, y = row, origin top-left.
struct Cell {
  int x = 0;
  int y = 0;
  bool operator==(const Cell&) const = default;
};

inline int manhattan(Cell a, Cell b) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

inline Cell step_towards(Cell c, Action a) {
  switch (a) {
    case Action::Up: return {c.x, c.y - 1};
    case Action::Down: return {c.x, c.y + 1};
    case Action::Left: return {c.x - 1, c.y};
    case Action::Right: return {c.x + 1, c.y};
    case Action::Use: return c;
  }
  return c;
}

}  // namespace shadowbench
