#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lds/cell.hpp"
#include "lds/errors.hpp"
#include "lds/random.hpp"

namespace lds {

struct SkipSearch {
  bool found = false;
  std::size_t comparisons = 0;
};

/// Pugh-style skip list with per-operation key-comparison counts. A key
/// comparison against the NIL terminator counts like any other, since NIL
/// stands for a key larger than every real key.
///
/// Nodes live in one arena addressed by index; erased slots are recycled.
class SkipList {
public:
  static constexpr double kDefaultP = 0.25;
  static constexpr std::uint64_t kDefaultCapacity = std::uint64_t{1} << 22;

  explicit SkipList(std::uint64_t seed, double p = kDefaultP, std::uint64_t capacity = kDefaultCapacity)
      : p_(p), max_level_(level_cap(p, capacity)), rng_(seed) {
    if (!(p > 0.0 && p < 1.0)) throw argument_error("skip list promotion probability must be in (0, 1)");
    nodes_.push_back(Node{0, std::vector<std::uint32_t>(static_cast<std::size_t>(max_level_), kNil)});
  }

  // max level = ceil(log_{1/p}(capacity)).
  static int level_cap(double p, std::uint64_t capacity) {
    const double levels = std::log(static_cast<double>(capacity)) / std::log(1.0 / p);
    return std::max(1, static_cast<int>(std::ceil(levels - 1e-9)));
  }

  SkipSearch find(Key k) const {
    SkipSearch out;
    std::uint32_t x = kHead;
    for (int i = level_ - 1; i >= 0; --i) x = advance(x, i, k, out.comparisons);
    const std::uint32_t next = nodes_[x].next[0];
    ++out.comparisons;
    out.found = next != kNil && nodes_[next].key == k;
    return out;
  }

  bool contains(Key k) const { return find(k).found; }

  bool insert(Key k) {
    require_key(k);
    std::vector<std::uint32_t> update(static_cast<std::size_t>(max_level_), kHead);
    std::uint32_t x = kHead;
    std::size_t cmp = 0;
    for (int i = level_ - 1; i >= 0; --i) {
      x = advance(x, i, k, cmp);
      update[static_cast<std::size_t>(i)] = x;
    }
    const std::uint32_t next = nodes_[x].next[0];
    ++cmp;
    comparisons_ += cmp;
    if (next != kNil && nodes_[next].key == k) return false;

    const int lvl = random_level();
    if (lvl > level_) level_ = lvl;
    const std::uint32_t node = allocate(k, lvl);
    for (int i = 0; i < lvl; ++i) {
      auto& prev = nodes_[update[static_cast<std::size_t>(i)]].next[static_cast<std::size_t>(i)];
      nodes_[node].next[static_cast<std::size_t>(i)] = prev;
      prev = node;
    }
    ++size_;
    links_ += static_cast<std::uint64_t>(lvl);
    return true;
  }

  bool erase(Key k) {
    std::vector<std::uint32_t> update(static_cast<std::size_t>(max_level_), kHead);
    std::uint32_t x = kHead;
    std::size_t cmp = 0;
    for (int i = level_ - 1; i >= 0; --i) {
      x = advance(x, i, k, cmp);
      update[static_cast<std::size_t>(i)] = x;
    }
    const std::uint32_t target = nodes_[x].next[0];
    ++cmp;
    comparisons_ += cmp;
    if (target == kNil || nodes_[target].key != k) return false;

    const auto lvl = nodes_[target].next.size();
    for (std::size_t i = 0; i < lvl; ++i) nodes_[update[i]].next[i] = nodes_[target].next[i];
    while (level_ > 1 && nodes_[kHead].next[static_cast<std::size_t>(level_ - 1)] == kNil) --level_;
    links_ -= lvl;
    --size_;
    nodes_[target].next.clear();
    free_.push_back(target);
    return true;
  }

  std::size_t size() const noexcept { return size_; }
  int level() const noexcept { return level_; }
  int max_level() const noexcept { return max_level_; }
  double promotion_probability() const noexcept { return p_; }

  // Comparisons accumulated by insert/erase.
  std::uint64_t comparisons() const noexcept { return comparisons_; }
  void reset_comparisons() noexcept { comparisons_ = 0; }

  // Mean forward pointers per node; tends to 1/(1-p).
  double mean_links() const noexcept {
    return size_ == 0 ? 0.0 : static_cast<double>(links_) / static_cast<double>(size_);
  }

  // hist[l] = number of nodes whose level is exactly l+1.
  std::vector<std::size_t> level_histogram() const {
    std::vector<std::size_t> hist(static_cast<std::size_t>(max_level_), 0);
    for (std::uint32_t x = nodes_[kHead].next[0]; x != kNil; x = nodes_[x].next[0]) ++hist[nodes_[x].next.size() - 1];
    return hist;
  }

  // Level-0 traversal, ascending.
  std::vector<Key> keys() const {
    std::vector<Key> out;
    out.reserve(size_);
    for (std::uint32_t x = nodes_[kHead].next[0]; x != kNil; x = nodes_[x].next[0]) out.push_back(nodes_[x].key);
    return out;
  }

  // Every level must be a strictly increasing subsequence of the level below.
  bool well_formed() const {
    for (int i = 0; i < max_level_; ++i) {
      const auto li = static_cast<std::size_t>(i);
      std::uint32_t below = nodes_[kHead].next[i == 0 ? 0 : li - 1];
      Key prev = 0;
      for (std::uint32_t x = nodes_[kHead].next[li]; x != kNil; x = nodes_[x].next[li]) {
        if (nodes_[x].key <= prev && prev != 0) return false;
        if (i > 0) {
          while (below != kNil && below != x) below = nodes_[below].next[li - 1];
          if (below == kNil) return false;
        }
        prev = nodes_[x].key;
      }
    }
    return true;
  }

private:
  static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kHead = 0;

  struct Node {
    Key key;
    std::vector<std::uint32_t> next;
  };

  // Moves right along level i while the next key is below k.
  std::uint32_t advance(std::uint32_t x, int i, Key k, std::size_t& cmp) const {
    const auto li = static_cast<std::size_t>(i);
    for (;;) {
      const std::uint32_t next = nodes_[x].next[li];
      ++cmp;
      if (next == kNil || !(nodes_[next].key < k)) return x;
      x = next;
    }
  }

  int random_level() {
    int lvl = 1;
    while (lvl < max_level_ && uniform_unit(rng_) < p_) ++lvl;
    return lvl;
  }

  std::uint32_t allocate(Key k, int lvl) {
    std::vector<std::uint32_t> next(static_cast<std::size_t>(lvl), kNil);
    if (!free_.empty()) {
      const std::uint32_t idx = free_.back();
      free_.pop_back();
      nodes_[idx] = Node{k, std::move(next)};
      return idx;
    }
    nodes_.push_back(Node{k, std::move(next)});
    return static_cast<std::uint32_t>(nodes_.size() - 1);
  }

  double p_;
  int max_level_;
  int level_ = 1;
  Rng rng_;
  std::vector<Node> nodes_;
  std::vector<std::uint32_t> free_;
  std::size_t size_ = 0;
  std::uint64_t links_ = 0;
  std::uint64_t comparisons_ = 0;
};

} // namespace lds
