#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "lds/jump_search.hpp"
#include "lds/lattice.hpp"
#include "lds/rational.hpp"
#include "lds/sortedness.hpp"

// Closed forms for lattice sizes, search costs and jump-factor bounds, all in
// exact integer/rational arithmetic, plus empirical measurement of a lattice.

namespace lds {

struct KeyCounts {
  std::int64_t proper = 0;
  std::int64_t improper = 0;
};

inline void require_outer_count(std::int64_t h, std::int64_t k) {
  if (h < 1) throw argument_error("height must be >= 1");
  if (k < 1 || k > h) throw argument_error("outer count k=" + std::to_string(k) + " outside [1, h]");
}

// proper = h(h-1)/2 + k, improper = 4h - k + 6.
inline KeyCounts counts(std::int64_t h, std::int64_t k) {
  require_outer_count(h, k);
  return {h * (h - 1) / 2 + k, 4 * h - k + 6};
}

inline std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n, y = n / 2 + 1;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

// Smallest height holding n keys: floor((1 + sqrt(8n - 7)) / 2).
inline std::int64_t min_height(std::int64_t n) {
  if (n < 1) throw argument_error("min_height needs N >= 1");
  if (n > (std::int64_t{1} << 58)) throw argument_error("min_height: N too large");
  return static_cast<std::int64_t>((1 + isqrt(static_cast<std::uint64_t>(8 * n - 7))) / 2);
}

struct ExpectedComparisons {
  std::int64_t absent = 0;
  Rational present_avg;
};

inline ExpectedComparisons expected_comparisons(std::int64_t h, std::int64_t k) {
  require_outer_count(h, k);
  const BigInt H = h, K = k;
  return {h + 1, Rational(2 * H * H * H - 2 * H + 3 * K * K + 3 * K, 3 * H * H - 3 * H + 6 * K)};
}

// Per-key bound from the d/D move counts u, v of a search path.
inline std::int64_t jump_bound_key(std::int64_t u, std::int64_t v, bool present, std::int64_t h) {
  const std::int64_t by_moves = u == v ? u + v : 2 * std::min(u, v) + 1;
  return std::min(by_moves, present ? h - 1 : h);
}

struct AverageJumpBounds {
  Rational present;
  Rational absent;
  // The absent bound assumes uniformly distributed terminal columns.
  bool absent_model_conditional = true;
};

// present <= h/3 + 5/6, absent <= h/2 + 1/2.
inline AverageJumpBounds avg_jump_bounds(std::int64_t h) {
  if (h < 1) throw argument_error("height must be >= 1");
  return {ratio(h, 3) + ratio(5, 6), ratio(h, 2) + ratio(1, 2), true};
}

// J(L) <= max{4, 2h - 2 alpha + 2} for an alpha-sorted lattice.
inline std::int64_t lattice_jump_bound(std::int64_t h, std::int64_t alpha) {
  if (alpha < 3 || alpha > h)
    throw argument_error("alpha " + std::to_string(alpha) + " outside [3, " + std::to_string(h) + "]");
  return std::max<std::int64_t>(4, 2 * h - 2 * alpha + 2);
}

/// Average jump-factor bounds for an alpha-sorted lattice, beta = alpha/h in [1/2, 1]:
///   present <= ((2b^3 - 4b^2 + 2b)h^2 - (3b^2 - 6b + 1)h + b - 3) / (h + 1)
///   absent  <= ((b^2 - 2b + 1)h^2 + 4h - 4) / (h + 1)   (model-conditional)
inline AverageJumpBounds avg_jump_bounds_sorted(std::int64_t h, const Rational& beta) {
  if (h < 1) throw argument_error("height must be >= 1");
  if (beta < ratio(1, 2) || beta > 1) throw argument_error("beta outside [0.5, 1]");
  const Rational H = h;
  const Rational b = beta;
  const Rational f = 2 * b * b * b - 4 * b * b + 2 * b;
  const Rational g = b * b - 2 * b + 1;
  AverageJumpBounds out;
  out.present = (f * H * H - (3 * b * b - 6 * b + 1) * H + b - 3) / (H + 1);
  out.absent = (g * H * H + 4 * H - 4) / (H + 1);
  return out;
}

// Fraction of keys in the first alpha+2 diagonals: b^2 + (b - b^2)/(h + 1).
inline Rational sorted_fraction(std::int64_t h, const Rational& beta) {
  if (h < 1) throw argument_error("height must be >= 1");
  if (beta < 0 || beta > 1) throw argument_error("beta outside [0, 1]");
  return beta * beta + (beta - beta * beta) / Rational(h + 1);
}

// alpha = floor(beta * h).
inline int alpha_for(int h, double beta) {
  return static_cast<int>(std::floor(beta * static_cast<double>(h) + 1e-9));
}

struct BoundReport {
  std::string quantity;
  Rational bound;
  Rational empirical;
  bool satisfied = false;
  bool model_conditional = false;
};

inline BoundReport check_upper(std::string quantity, Rational bound, Rational empirical, bool model_conditional = false) {
  const bool ok = empirical <= bound;
  return {std::move(quantity), std::move(bound), std::move(empirical), ok, model_conditional};
}

struct EmpiricalStats {
  Rational avg_cmp_present;
  std::size_t cmp_absent = 0;       // common cost of every gap representative
  bool cmp_absent_constant = true;  // false if representatives disagree
  Rational avg_jf_present;
  Rational avg_jf_absent;           // over gap representatives
  std::size_t max_jf_present = 0;
  std::size_t max_jf = 0;           // J(L)
  int degree = 0;
  std::size_t n = 0;
  int h = 0;
  int k = 0;
};

/// Walks the basic search for every present key and every gap representative.
inline EmpiricalStats empirical_stats(const Lattice& lat) {
  if (lat.is_empty()) throw argument_error("empirical stats need a non-empty lattice");
  EmpiricalStats st;
  st.n = lat.size();
  st.h = lat.height();
  st.k = lat.outer_count();
  st.degree = degree(lat).alpha;

  const std::vector<Key> keys = lat.keys();
  std::uint64_t cmp_sum = 0, jf_sum = 0;
  for (Key key : keys) {
    const SearchOutcome o = lat.search(key);
    const std::size_t j = jump_factor_of_path(o.path);
    cmp_sum += o.comparisons;
    jf_sum += j;
    st.max_jf_present = std::max(st.max_jf_present, j);
  }
  const auto n = static_cast<std::int64_t>(keys.size());
  st.avg_cmp_present = ratio(static_cast<std::int64_t>(cmp_sum), n);
  st.avg_jf_present = ratio(static_cast<std::int64_t>(jf_sum), n);

  const std::vector<Key> reps = gap_representatives(keys);
  std::uint64_t absent_jf = 0;
  std::size_t max_absent = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const SearchOutcome o = lat.search(reps[i]);
    if (i == 0) st.cmp_absent = o.comparisons;
    else if (o.comparisons != st.cmp_absent) st.cmp_absent_constant = false;
    const std::size_t j = jump_factor_of_path(o.path);
    absent_jf += j;
    max_absent = std::max(max_absent, j);
  }
  if (!reps.empty())
    st.avg_jf_absent = ratio(static_cast<std::int64_t>(absent_jf), static_cast<std::int64_t>(reps.size()));
  st.max_jf = std::max(st.max_jf_present, max_absent);
  return st;
}

} // namespace lds
