#pragma once

#include <cstdint>

namespace cmotzkin {

enum class CellKind : std::uint8_t { Level = 0, Up = 1, Down = 2, Letter = 3 };

/// One cell of a working sequence: a path step (level, colored up, colored
/// down) or an output letter (a row index emitted by a conversion).
struct Token {
  CellKind kind = CellKind::Level;
  int value = 0;  // color for Up/Down, letter value for Letter, 0 for Level

  static constexpr Token level() { return {CellKind::Level, 0}; }
  static constexpr Token up(int color) { return {CellKind::Up, color}; }
  static constexpr Token down(int color) { return {CellKind::Down, color}; }
  static constexpr Token letter(int v) { return {CellKind::Letter, v}; }

  constexpr bool is_step() const { return kind != CellKind::Letter; }
  constexpr bool is_level() const { return kind == CellKind::Level; }
  constexpr bool is_letter() const { return kind == CellKind::Letter; }
  constexpr bool is_up(int color) const {
    return kind == CellKind::Up && value == color;
  }
  constexpr bool is_down(int color) const {
    return kind == CellKind::Down && value == color;
  }
  constexpr bool is_letter(int v) const {
    return kind == CellKind::Letter && value == v;
  }

  friend constexpr bool operator==(const Token&, const Token&) = default;
};

/// Code used for lexicographic step ordering: L < U1 < D1 < U2 < D2 < ...
constexpr int step_code(const Token& t) {
  switch (t.kind) {
    case CellKind::Level:
      return 0;
    case CellKind::Up:
      return 2 * t.value - 1;
    case CellKind::Down:
      return 2 * t.value;
    default:
      return -1;
  }
}

}  // namespace cmotzkin
