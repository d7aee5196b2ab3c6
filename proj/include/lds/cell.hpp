#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "lds/errors.hpp"

namespace lds {

using Key = std::uint32_t;

// Proper keys live in [KEY_MIN, KEY_MAX]; 0 and 2^31-1 are never keys.
inline constexpr Key KEY_MIN = 1;
inline constexpr Key KEY_MAX = 2147483646u;

constexpr bool is_valid_key(std::uint64_t k) noexcept { return k >= KEY_MIN && k <= KEY_MAX; }

inline void require_key(std::uint64_t k) {
  if (!is_valid_key(k))
    throw argument_error("key " + std::to_string(k) + " outside [1, " + std::to_string(KEY_MAX) + "]");
}

/// Content of one lattice cell: the Zero sentinel, a proper key, or the
/// Infinity sentinel. The encoding keeps the natural integer order, so
/// Zero < Proper(a) < Proper(b) < Infinity for a < b.
class CellValue {
public:
  constexpr CellValue() noexcept = default;

  static constexpr CellValue zero() noexcept { return CellValue(kZero); }
  static constexpr CellValue infinity() noexcept { return CellValue(kInfinity); }
  static CellValue proper(Key k) {
    require_key(k);
    return CellValue(k);
  }

  constexpr bool is_zero() const noexcept { return raw_ == kZero; }
  constexpr bool is_infinity() const noexcept { return raw_ == kInfinity; }
  constexpr bool is_proper() const noexcept { return !is_zero() && !is_infinity(); }
  constexpr bool is_sentinel() const noexcept { return !is_proper(); }

  // Only meaningful for proper cells.
  constexpr Key key() const noexcept { return raw_; }

  // Three-way comparison of a search key against this cell.
  constexpr std::strong_ordering compare_key(Key k) const noexcept { return k <=> raw_; }

  constexpr auto operator<=>(const CellValue&) const noexcept = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    if (is_infinity()) return "inf";
    return std::to_string(raw_);
  }

private:
  static constexpr std::uint32_t kZero = 0;
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();

  explicit constexpr CellValue(std::uint32_t raw) noexcept : raw_(raw) {}

  std::uint32_t raw_ = kZero;
};

static_assert(sizeof(CellValue) == sizeof(Key));

inline std::ostream& operator<<(std::ostream& os, const CellValue& v) { return os << v.to_string(); }

} // namespace lds
