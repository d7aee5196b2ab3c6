#pragma once

#include <cstddef>
#include <string>

#include "lds/lattice.hpp"
#include "lds/rational.hpp"

namespace lds {

// alpha = 2 flags a lattice where even the diagonal-5 boundary fails.
struct SortednessDegree {
  int alpha = 2;
  int height = 1;

  Rational beta() const { return ratio(alpha, height); }
};

struct SortStepOutcome {
  enum class Kind { AlreadyHSorted, Swapped };
  Kind kind = Kind::AlreadyHSorted;
  Coord f;  // cell on diagonal i that received the smaller key
  Coord c;  // second cell of diagonal i+1, where outward started
  std::size_t outward_swaps = 0;
  std::size_t comparisons = 0;

  bool swapped() const noexcept { return kind == Kind::Swapped; }
};

namespace detail {

// Diagonal s must hold at least one key; only diagonal h+2 can be partial.
inline CellValue first_key(const Lattice& lat, int s) { return lat[Coord::on_diagonal(s, 2)]; }

inline CellValue last_key(const Lattice& lat, int s) {
  const int last = s == lat.height() + 2 ? lat.outer_count() + 1 : s - 1;
  return lat[Coord::on_diagonal(s, last)];
}

} // namespace detail

/// Largest alpha such that for every 4 <= s <= alpha+2 the first key of
/// diagonal s exceeds the last key of diagonal s-1. Heights below 3 have no
/// checkable boundary and report alpha = h.
inline SortednessDegree degree(const Lattice& lat) {
  if (lat.is_empty()) throw argument_error("degree of sortedness needs a non-empty lattice");
  const int h = lat.height();
  if (h < 3) return {h, h};
  for (int s = 5; s <= h + 2; ++s)
    if (!(detail::first_key(lat, s) > detail::last_key(lat, s - 1))) return {s - 3, h};
  return {h, h};
}

/// One incremental sorting step: find the first boundary i in 4..h+1 where
/// the last key of diagonal i exceeds the first key C of diagonal i+1, swap C
/// with the first key F of diagonal i larger than it, then run outward from
/// C's cell.
inline SortStepOutcome sort_step(Lattice& lat) {
  SortStepOutcome out;
  if (lat.is_empty()) return out;
  const int h = lat.height();
  int i = 4;
  for (; i <= h + 1; ++i) {
    ++out.comparisons;
    if (detail::last_key(lat, i) > detail::first_key(lat, i + 1)) break;
  }
  if (i > h + 1) return out;

  out.kind = SortStepOutcome::Kind::Swapped;
  out.c = Coord::on_diagonal(i + 1, 2);
  const CellValue cv = lat[out.c];
  for (int p = 2; p <= i - 1; ++p) {
    ++out.comparisons;
    if (lat[Coord::on_diagonal(i, p)] > cv) {
      out.f = Coord::on_diagonal(i, p);
      break;
    }
  }
  lat.swap_cells(out.f, out.c);
  const auto before = lat.counters().swaps;
  lat.outward(out.c);
  out.outward_swaps = static_cast<std::size_t>(lat.counters().swaps - before);
  return out;
}

/// Repeats sort_step until the degree reaches target_alpha or the lattice is
/// h-sorted. Returns the number of calls that swapped.
inline std::size_t sort_to_degree(Lattice& lat, int target_alpha) {
  if (target_alpha < 2 || target_alpha > lat.height())
    throw argument_error("target alpha " + std::to_string(target_alpha) + " outside [2, " +
                         std::to_string(lat.height()) + "]");
  std::size_t calls = 0;
  while (degree(lat).alpha < target_alpha) {
    if (!sort_step(lat).swapped()) break;
    ++calls;
  }
  return calls;
}

} // namespace lds
