#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include "lds/errors.hpp"

namespace lds {

// Rows count bottom-to-top, columns left-to-right, both from 1.
// Diagonal s = row + col - 1; cells on a diagonal are numbered head (col 1)
// to tail (row 1), so the position of a cell in its diagonal equals its column.
struct Coord {
  int row = 1;
  int col = 1;

  constexpr int diagonal() const noexcept { return row + col - 1; }
  constexpr int position() const noexcept { return col; }

  // Head-to-tail position p on diagonal s.
  static constexpr Coord on_diagonal(int s, int p) noexcept { return Coord{s - p + 1, p}; }

  constexpr bool operator==(const Coord&) const noexcept = default;

  std::string to_string() const { return "(" + std::to_string(row) + "," + std::to_string(col) + ")"; }
};

inline std::ostream& operator<<(std::ostream& os, const Coord& c) { return os << c.to_string(); }

enum class Direction { U, D, L, R, UL, UR, DL, DR };

// The shape of height h is (h+3, h+2, ..., 1): row r holds h+4-r cells,
// i.e. diagonals 1..h+3.
constexpr int diagonal_count(int height) noexcept { return height + 3; }

constexpr std::size_t cell_count(int height) noexcept {
  const auto d = static_cast<std::size_t>(diagonal_count(height));
  return d * (d + 1) / 2;
}

constexpr bool in_shape(int height, Coord c) noexcept {
  return height >= 1 && c.row >= 1 && c.col >= 1 && c.row + c.col <= height + 4;
}

// Unchecked diagonal-major offset: diagonal s starts at s(s-1)/2.
constexpr std::size_t flat_offset(Coord c) noexcept {
  const auto s = static_cast<std::size_t>(c.diagonal());
  return s * (s - 1) / 2 + static_cast<std::size_t>(c.col) - 1;
}

inline std::size_t index_of(int height, Coord c) {
  if (!in_shape(height, c))
    throw addressing_error("coordinate " + c.to_string() + " outside lattice of height " +
                           std::to_string(height));
  return flat_offset(c);
}

inline Coord coord_of(int height, std::size_t index) {
  if (height < 1 || index >= cell_count(height))
    throw addressing_error("index " + std::to_string(index) + " outside lattice of height " +
                           std::to_string(height));
  // Largest s with s(s-1)/2 <= index.
  int s = 1;
  while (static_cast<std::size_t>(s + 1) * static_cast<std::size_t>(s) / 2 <= index) ++s;
  const auto p = static_cast<int>(index - static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1) / 2) + 1;
  return Coord::on_diagonal(s, p);
}

constexpr Coord step(Coord c, Direction dir) noexcept {
  switch (dir) {
  case Direction::U: return {c.row + 1, c.col};
  case Direction::D: return {c.row - 1, c.col};
  case Direction::L: return {c.row, c.col - 1};
  case Direction::R: return {c.row, c.col + 1};
  case Direction::UL: return {c.row + 1, c.col - 1};
  case Direction::UR: return {c.row + 1, c.col + 1};
  case Direction::DL: return {c.row - 1, c.col - 1};
  case Direction::DR: return {c.row - 1, c.col + 1};
  }
  return c;
}

// Adjacent cell in the given direction, or nullopt at the shape boundary.
inline std::optional<Coord> neighbor(Coord c, Direction dir, int height) {
  if (!in_shape(height, c))
    throw addressing_error("coordinate " + c.to_string() + " outside lattice of height " +
                           std::to_string(height));
  const Coord n = step(c, dir);
  if (!in_shape(height, n)) return std::nullopt;
  return n;
}

} // namespace lds
