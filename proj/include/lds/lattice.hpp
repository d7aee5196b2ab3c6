#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lds/cell.hpp"
#include "lds/coord.hpp"
#include "lds/errors.hpp"

namespace lds {

// Instrumentation for mutating operations. Searches are const and report
// their own comparison counts instead of touching these.
struct OpCounters {
  std::uint64_t comparisons = 0;
  std::uint64_t swaps = 0;
  std::uint64_t jumps = 0;

  void reset() noexcept { *this = OpCounters{}; }

  OpCounters& operator+=(const OpCounters& o) noexcept {
    comparisons += o.comparisons;
    swaps += o.swaps;
    jumps += o.jumps;
    return *this;
  }
};

// 'D' = move down, 'd' = move down-right along the diagonal.
using SearchPath = std::string;

inline constexpr char kMoveDown = 'D';
inline constexpr char kMoveDiagonal = 'd';

struct SearchOutcome {
  bool found = false;
  Coord location;  // the key's cell when found, otherwise the terminal Zero on row 1
  SearchPath path;
  std::size_t comparisons = 0;  // one per visited cell: path.size() + 1
};

struct InsertResult {
  enum class Status { AlreadyPresent, Inserted };
  Status status = Status::AlreadyPresent;
  Coord at;  // final resting cell (Inserted only)
  bool grew = false;

  bool inserted() const noexcept { return status == Status::Inserted; }
};

struct EraseResult {
  enum class Status { Absent, Deleted };
  Status status = Status::Absent;
  bool shrank = false;

  bool deleted() const noexcept { return status == Status::Deleted; }
};

/// Ordered set of distinct keys arranged in an up-side-down Ferrers diagram
/// of shape (h+3, h+2, ..., 1) and stored diagonal by diagonal in one array.
///
/// Row 1 and column 1 hold Zero, diagonal h+3 is an Infinity wall, and
/// diagonal h+2 is the only partially filled diagonal: its first k proper
/// positions hold keys, the rest Infinity. Rows, columns and diagonals are
/// strictly increasing over their keys. Growing or shrinking the height
/// appends or truncates one diagonal, so existing cells never move.
///
/// Single writer. Const member functions may run concurrently between
/// mutations.
class Lattice {
public:
  Lattice() : Lattice(1) {}

  // Sentinels placed, every proper-capable cell Infinity, k = 0.
  static Lattice empty(int height) {
    if (height < 1) throw argument_error("lattice height must be >= 1, got " + std::to_string(height));
    return Lattice(height);
  }

  /// Places keys in diagonal-major, head-to-tail order over diagonals
  /// 3..h+2. The key count must be h(h-1)/2 + k with 1 <= k <= h (or zero
  /// keys at height 1). The arrangement is not checked; run validate().
  static Lattice from_keys(int height, std::span<const Key> keys) {
    Lattice lat = empty(height);
    const std::size_t inner = static_cast<std::size_t>(height) * static_cast<std::size_t>(height - 1) / 2;
    const std::size_t full = inner + static_cast<std::size_t>(height);
    const bool empty_set = keys.empty() && height == 1;
    if (!empty_set && (keys.size() <= inner || keys.size() > full))
      throw argument_error(std::to_string(keys.size()) + " keys do not fit a lattice of height " +
                           std::to_string(height));
    std::size_t next = 0;
    for (int s = 3; s <= height + 2 && next < keys.size(); ++s)
      for (int p = 2; p <= s - 1 && next < keys.size(); ++p)
        lat.cell(Coord::on_diagonal(s, p)) = CellValue::proper(keys[next++]);
    lat.outer_ = static_cast<int>(keys.size() - (empty_set ? 0 : inner));
    return lat;
  }

  int height() const noexcept { return height_; }
  int outer_count() const noexcept { return outer_; }
  bool is_empty() const noexcept { return size() == 0; }

  std::size_t size() const noexcept {
    if (outer_ == 0) return 0;
    const auto h = static_cast<std::size_t>(height_);
    return h * (h - 1) / 2 + static_cast<std::size_t>(outer_);
  }

  std::size_t cell_count() const noexcept { return cells_.size(); }
  std::span<const CellValue> cells() const noexcept { return cells_; }

  CellValue at(Coord c) const { return cells_[index_of(height_, c)]; }

  // Unchecked read for hot loops; c must be in shape.
  CellValue operator[](Coord c) const noexcept { return cells_[flat_offset(c)]; }

  /// Raw write with no restructuring. Writing on diagonal h+2 recounts k
  /// from the proper cells found there.
  void assign(Coord c, CellValue v) {
    cells_[index_of(height_, c)] = v;
    if (c.diagonal() == height_ + 2) recount_outer();
  }

  // Swaps two cell contents and counts one swap. No invariants maintained.
  void swap_cells(Coord a, Coord b) {
    std::swap(cells_[index_of(height_, a)], cells_[index_of(height_, b)]);
    ++counters_.swaps;
  }

  const OpCounters& counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_.reset(); }

  // Second cell of diagonal h+2: where every search starts.
  Coord start() const noexcept { return Coord::on_diagonal(height_ + 2, 2); }

  // Last proper cell of diagonal h+2 (requires k >= 1).
  Coord last_outer() const noexcept { return Coord::on_diagonal(height_ + 2, outer_ + 1); }

  // Proper keys in diagonal-major, head-to-tail order.
  std::vector<Key> keys() const {
    std::vector<Key> out;
    out.reserve(size());
    for (const CellValue& v : cells_)
      if (v.is_proper()) out.push_back(v.key());
    return out;
  }

  /// Basic search: from the start cell move DR while K > C and D while
  /// K < C, until C == K or C is the row-1 Zero.
  SearchOutcome search(Key k) const {
    SearchOutcome out;
    out.path.reserve(static_cast<std::size_t>(height_) + 1);
    out.found = walk(k, out.location, out.comparisons, [&](char m) { out.path.push_back(m); });
    return out;
  }

  bool contains(Key k) const {
    Coord c;
    std::size_t cmp = 0;
    return walk(k, c, cmp, [](char) {});
  }

  /// Moves a too-small key at c toward diagonal 1: while C < D or C < UL,
  /// swap with the larger of the two. Returns the resting cell.
  Coord inward(Coord c) {
    require_in_shape(c);
    for (;;) {
      if (c.row == 1 || c.col == 1) return c;
      const Coord down{c.row - 1, c.col};
      const Coord up_left{c.row + 1, c.col - 1};
      const CellValue v = (*this)[c];
      const CellValue dv = (*this)[down];
      const CellValue ulv = (*this)[up_left];
      counters_.comparisons += 2;
      if (!(v < dv || v < ulv)) return c;
      ++counters_.comparisons;
      const Coord target = ulv > dv ? up_left : down;
      std::swap(cell(c), cell(target));
      ++counters_.swaps;
      c = target;
    }
  }

  /// Moves a too-large key at c toward diagonal h+2: while C > U or
  /// (C > DR and DR != 0), swap with DR if DR < U and DR != 0, else with U.
  Coord outward(Coord c) {
    require_in_shape(c);
    for (;;) {
      if (c.row == 1 || c.col == 1 || c.diagonal() >= height_ + 3) return c;
      const Coord up{c.row + 1, c.col};
      const Coord down_right{c.row - 1, c.col + 1};
      const CellValue v = (*this)[c];
      const CellValue uv = (*this)[up];
      const CellValue drv = (*this)[down_right];
      counters_.comparisons += 2;
      if (!(v > uv || (v > drv && !drv.is_zero()))) return c;
      ++counters_.comparisons;
      const Coord target = (drv < uv && !drv.is_zero()) ? down_right : up;
      std::swap(cell(c), cell(target));
      ++counters_.swaps;
      c = target;
    }
  }

  /// Places K in the first Infinity cell of diagonal h+2 (growing the
  /// height first when that diagonal is full) and runs inward from there.
  InsertResult insert(Key k) {
    require_key(k);
    if (locate(k)) return {};
    InsertResult res;
    res.status = InsertResult::Status::Inserted;
    if (outer_ == height_) {
      grow();
      res.grew = true;
    }
    const Coord slot = Coord::on_diagonal(height_ + 2, outer_ + 2);
    cell(slot) = CellValue::proper(k);
    ++outer_;
    res.at = inward(slot);
    return res;
  }

  /// Fills the key's cell with the last proper key F of diagonal h+2,
  /// writes Infinity at F, then runs inward or outward from the filled cell.
  /// Shrinks the height when diagonal h+2 runs out of keys.
  EraseResult erase(Key k) {
    require_key(k);
    Coord c;
    if (!locate(k, &c)) return {};
    EraseResult res;
    res.status = EraseResult::Status::Deleted;
    const Coord last = last_outer();
    if (c == last) {
      cell(c) = CellValue::infinity();
    } else {
      cell(c) = cell(last);
      cell(last) = CellValue::infinity();
      restore(c);
    }
    --outer_;
    if (outer_ == 0 && height_ > 1) {
      shrink();
      res.shrank = true;
    }
    return res;
  }

private:
  explicit Lattice(int height) : height_(height), cells_(lds::cell_count(height)) {
    for (int s = 3; s <= height + 3; ++s)
      for (int p = 2; p <= s - 1; ++p) cell(Coord::on_diagonal(s, p)) = CellValue::infinity();
  }

  CellValue& cell(Coord c) noexcept { return cells_[flat_offset(c)]; }

  void require_in_shape(Coord c) const {
    if (!in_shape(height_, c))
      throw addressing_error("coordinate " + c.to_string() + " outside lattice of height " +
                             std::to_string(height_));
  }

  template <class OnMove>
  bool walk(Key k, Coord& c, std::size_t& comparisons, OnMove&& on_move) const {
    c = start();
    for (;;) {
      const CellValue v = (*this)[c];
      ++comparisons;
      const auto ord = v.compare_key(k);
      if (ord == 0) return true;
      if (v.is_zero()) return false;
      if (ord > 0) {
        c = Coord{c.row - 1, c.col + 1};
        on_move(kMoveDiagonal);
      } else {
        c = Coord{c.row - 1, c.col};
        on_move(kMoveDown);
      }
    }
  }

  bool locate(Key k, Coord* where = nullptr) {
    Coord c;
    std::size_t cmp = 0;
    const bool found = walk(k, c, cmp, [](char) {});
    counters_.comparisons += cmp;
    if (where) *where = c;
    return found;
  }

  void restore(Coord c) {
    const CellValue v = (*this)[c];
    const CellValue dv = (*this)[Coord{c.row - 1, c.col}];
    const CellValue ulv = (*this)[Coord{c.row + 1, c.col - 1}];
    counters_.comparisons += 2;
    if (v < dv || v < ulv)
      inward(c);
    else
      outward(c);
  }

  // Old wall (all Infinity inside) becomes the new staging diagonal; a new
  // wall is appended.
  void grow() {
    ++height_;
    cells_.resize(lds::cell_count(height_));
    const int wall = height_ + 3;
    for (int p = 2; p <= wall - 1; ++p) cell(Coord::on_diagonal(wall, p)) = CellValue::infinity();
    outer_ = 0;
  }

  // Drops the outermost diagonal; the emptied staging diagonal becomes the wall.
  void shrink() {
    --height_;
    cells_.resize(lds::cell_count(height_));
    recount_outer();
  }

  void recount_outer() {
    int k = 0;
    for (int p = 2; p <= height_ + 1; ++p)
      if ((*this)[Coord::on_diagonal(height_ + 2, p)].is_proper()) ++k;
    outer_ = k;
  }

  int height_ = 1;
  int outer_ = 0;
  std::vector<CellValue> cells_;
  OpCounters counters_;
};

} // namespace lds
