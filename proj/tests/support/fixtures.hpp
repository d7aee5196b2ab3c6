#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lds/lattice.hpp"
#include "lds/random.hpp"

namespace lds::testing {

// The height-4 lattice over {3,5,6,9,12,20,30,31}:
//   row 5:  0 12  inf
//   row 4:  0  9  30  inf
//   row 3:  0  5  20  inf  inf
//   row 2:  0  3   6   31  inf  inf
//   row 1:  0  0   0    0    0    0   0
inline Lattice sample4() {
  const std::vector<Key> keys{3, 5, 6, 9, 20, 31, 12, 30};
  return Lattice::from_keys(4, keys);
}

// Lattice grown by inserting n seeded random keys into an empty lattice.
inline Lattice random_lattice(std::size_t n, std::uint64_t seed, std::vector<Key>* keys_out = nullptr) {
  Rng rng(seed);
  const std::vector<Key> keys = distinct_keys(rng, n);
  Lattice lat;
  for (Key k : keys) lat.insert(k);
  if (keys_out) *keys_out = keys;
  return lat;
}

inline std::size_t full_size(int h) { return static_cast<std::size_t>(h) * static_cast<std::size_t>(h + 1) / 2; }

// Independent run counter: number of positions where the move changes, plus one.
inline std::size_t count_runs(const std::string& path) {
  if (path.empty()) return 0;
  std::string collapsed = path;
  collapsed.erase(std::unique(collapsed.begin(), collapsed.end()), collapsed.end());
  return collapsed.size();
}

} // namespace lds::testing
