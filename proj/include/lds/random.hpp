#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lds/cell.hpp"

// Seeded randomness with platform-independent draws: only raw mt19937_64
// output is used, never the implementation-defined std distributions, so a
// seed reproduces the same keys everywhere.

namespace lds {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent stream seed for trial `index` under a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) noexcept {
  return splitmix64(base ^ splitmix64(index + 1));
}

// Uniform in [0, n), n >= 1, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

// Uniform over [KEY_MIN, KEY_MAX].
inline Key uniform_key(Rng& rng) {
  for (;;) {
    const auto x = static_cast<Key>(rng() >> 33);  // 31 bits
    if (is_valid_key(x)) return x;
  }
}

// Uniform in [0, 1) with 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

// n distinct uniform keys in draw order.
inline std::vector<Key> distinct_keys(Rng& rng, std::size_t n) {
  std::unordered_set<Key> seen;
  seen.reserve(n * 2);
  std::vector<Key> out;
  out.reserve(n);
  while (out.size() < n) {
    const Key k = uniform_key(rng);
    if (seen.insert(k).second) out.push_back(k);
  }
  return out;
}

} // namespace lds
