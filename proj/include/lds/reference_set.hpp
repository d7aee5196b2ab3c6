#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lds/cell.hpp"

namespace lds {

// Sorted-vector set used as ground truth in equivalence tests. Not thread-safe:
// lookups bump a shared comparison counter.
class ReferenceSet {
public:
  ReferenceSet() = default;
  explicit ReferenceSet(std::vector<Key> keys) : keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  }

  bool contains(Key k) const {
    auto it = lower(k);
    if (it == keys_.end()) return false;
    ++comparisons_;
    return *it == k;
  }

  bool insert(Key k) {
    auto it = lower(k);
    if (it != keys_.end() && *it == k) return false;
    keys_.insert(it, k);
    return true;
  }

  bool erase(Key k) {
    auto it = lower(k);
    if (it == keys_.end() || *it != k) return false;
    keys_.erase(it);
    return true;
  }

  std::size_t size() const noexcept { return keys_.size(); }
  bool empty() const noexcept { return keys_.empty(); }
  const std::vector<Key>& keys() const noexcept { return keys_; }
  Key operator[](std::size_t i) const { return keys_[i]; }

  std::uint64_t comparisons() const noexcept { return comparisons_; }
  void reset_comparisons() noexcept { comparisons_ = 0; }

private:
  std::vector<Key>::const_iterator lower(Key k) const {
    return std::lower_bound(keys_.begin(), keys_.end(), k, [this](Key a, Key b) {
      ++comparisons_;
      return a < b;
    });
  }

  std::vector<Key> keys_;
  mutable std::uint64_t comparisons_ = 0;
};

} // namespace lds
