#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lds/lattice.hpp"
#include "lds/rational.hpp"

namespace lds {

// Within-line locate procedures. A line is presented in travel order and
// `keep_going(i)` is true on a prefix of it; first_stop returns the first
// index where it is false (n when it never is) and counts each probe.

struct LinearScan {
  template <class Pred>
  std::size_t first_stop(std::size_t n, Pred&& keep_going, std::size_t& probes) const {
    for (std::size_t i = 0; i < n; ++i) {
      ++probes;
      if (!keep_going(i)) return i;
    }
    return n;
  }
};

// At most ceil(log2(n+1)) probes on n cells.
struct BinaryLocate {
  template <class Pred>
  std::size_t first_stop(std::size_t n, Pred&& keep_going, std::size_t& probes) const {
    std::size_t lo = 0, len = n;
    while (len > 0) {
      const std::size_t half = len / 2;
      ++probes;
      if (keep_going(lo + half)) {
        lo += half + 1;
        len -= half + 1;
      } else {
        len = half;
      }
    }
    return lo;
  }
};

enum class JumpStrategy { LinearScan, BinaryLocate };

inline std::string_view to_string(JumpStrategy s) {
  return s == JumpStrategy::LinearScan ? "linear" : "binary";
}

struct LineHit {
  std::optional<Coord> cell;
  std::size_t probes = 0;
};

struct JumpOutcome {
  bool found = false;
  std::optional<Coord> location;
  std::size_t jumps = 0;   // downward + diagonal jumps performed
  std::size_t probes = 0;  // cell probes made by the line locates; the start-cell test is not a probe
};

/// Highest cell strictly below `from` in its column whose value is <= K.
/// Row 1 is Zero, so a cell always exists; it is returned without a probe.
template <class Strategy>
LineHit locate_down_column(const Lattice& lat, Coord from, Key k, const Strategy& strat) {
  if (!in_shape(lat.height(), from) || from.col < 2 || from.row < 2)
    throw argument_error("down-column locate needs an interior start cell, got " + from.to_string());
  if (!(lat[from].compare_key(k) < 0)) throw argument_error("down-column locate needs K < cell " + from.to_string());
  LineHit hit;
  const auto n = static_cast<std::size_t>(from.row - 2);
  const std::size_t i = strat.first_stop(
      n, [&](std::size_t j) { return lat[Coord{from.row - 1 - static_cast<int>(j), from.col}].compare_key(k) < 0; },
      hit.probes);
  hit.cell = Coord{from.row - 1 - static_cast<int>(i), from.col};
  return hit;
}

/// Nearest cell after `from` toward the diagonal tail (the Zero tail
/// excluded) whose value is >= K; nullopt if none. Infinity qualifies.
template <class Strategy>
LineHit locate_along_diagonal(const Lattice& lat, Coord from, Key k, const Strategy& strat) {
  if (!in_shape(lat.height(), from) || from.col < 1 || from.row < 2)
    throw argument_error("diagonal locate cannot start at the tail " + from.to_string());
  if (!(lat[from].compare_key(k) > 0)) throw argument_error("diagonal locate needs K > cell " + from.to_string());
  LineHit hit;
  const int s = from.diagonal();
  const int first = from.col + 1;
  const auto n = static_cast<std::size_t>(std::max(0, s - 1 - from.col));
  const std::size_t i = strat.first_stop(
      n,
      [&](std::size_t j) { return lat[Coord::on_diagonal(s, first + static_cast<int>(j))].compare_key(k) > 0; },
      hit.probes);
  if (i < n) hit.cell = Coord::on_diagonal(s, first + static_cast<int>(i));
  return hit;
}

/// Jump search: from the start cell, jump down the column when K < C and
/// along the diagonal when K > C, until C == K or a Zero is reached.
/// Each jump replaces one maximal run of identical basic-search moves.
template <class Strategy>
JumpOutcome search_jump(const Lattice& lat, Key k, const Strategy& strat) {
  JumpOutcome out;
  Coord c = lat.start();
  for (;;) {
    const CellValue v = lat[c];
    const auto ord = v.compare_key(k);
    if (ord == 0) {
      out.found = true;
      out.location = c;
      return out;
    }
    if (v.is_zero()) return out;
    ++out.jumps;
    const LineHit hit = ord < 0 ? locate_down_column(lat, c, k, strat) : locate_along_diagonal(lat, c, k, strat);
    out.probes += hit.probes;
    if (!hit.cell) return out;
    c = *hit.cell;
  }
}

inline JumpOutcome search_jump(const Lattice& lat, Key k, JumpStrategy strat) {
  if (strat == JumpStrategy::LinearScan) return search_jump(lat, k, LinearScan{});
  return search_jump(lat, k, BinaryLocate{});
}

// Number of maximal runs of identical moves.
inline std::size_t jump_factor_of_path(std::string_view path) {
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < path.size(); ++i)
    if (i == 0 || path[i] != path[i - 1]) ++blocks;
  return blocks;
}

/// One absent probe per non-empty gap between consecutive sorted keys, plus
/// one below the minimum and one above the maximum when the key domain
/// allows. Every absent key in a gap follows the same search path.
inline std::vector<Key> gap_representatives(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  std::vector<Key> reps;
  if (keys.empty()) {
    reps.push_back(KEY_MIN);
    return reps;
  }
  reps.reserve(keys.size() + 1);
  if (keys.front() > KEY_MIN) reps.push_back(keys.front() - 1);
  for (std::size_t i = 0; i + 1 < keys.size(); ++i)
    if (keys[i + 1] - keys[i] > 1) reps.push_back(keys[i] + 1);
  if (keys.back() < KEY_MAX) reps.push_back(keys.back() + 1);
  return reps;
}

struct LatticeJumpFactor {
  std::size_t max = 0;  // J(L)
  std::size_t max_present = 0;
  std::size_t max_absent = 0;
  Rational avg_present;
  Rational avg_absent_representatives;
  std::size_t present_count = 0;
  std::size_t absent_count = 0;
};

// Exact J(L) via every present key and every gap representative.
inline LatticeJumpFactor lattice_jump_factor(const Lattice& lat) {
  if (lat.is_empty()) throw argument_error("jump factor of an empty lattice is undefined");
  LatticeJumpFactor out;
  const std::vector<Key> keys = lat.keys();
  std::uint64_t sum = 0;
  for (Key k : keys) {
    const std::size_t j = jump_factor_of_path(lat.search(k).path);
    sum += j;
    out.max_present = std::max(out.max_present, j);
  }
  out.present_count = keys.size();
  out.avg_present = ratio(static_cast<std::int64_t>(sum), static_cast<std::int64_t>(keys.size()));

  const std::vector<Key> reps = gap_representatives(keys);
  std::uint64_t absent_sum = 0;
  for (Key k : reps) {
    const std::size_t j = jump_factor_of_path(lat.search(k).path);
    absent_sum += j;
    out.max_absent = std::max(out.max_absent, j);
  }
  out.absent_count = reps.size();
  if (!reps.empty())
    out.avg_absent_representatives =
        ratio(static_cast<std::int64_t>(absent_sum), static_cast<std::int64_t>(reps.size()));
  out.max = std::max(out.max_present, out.max_absent);
  return out;
}

} // namespace lds
