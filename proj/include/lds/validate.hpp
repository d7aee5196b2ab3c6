#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lds/lattice.hpp"

namespace lds {

enum class Severity { Error, Advisory };

enum class Rule {
  RowOneZero,
  ColumnOneZero,
  WallInfinity,
  ProperRequired,
  StagingPrefix,
  OuterCount,
  RowOrder,
  ColumnOrder,
  DiagonalOrder,
  DuplicateKey,
  StagingLattice,
};

inline const char* rule_name(Rule r) {
  switch (r) {
  case Rule::RowOneZero: return "row-1 zero";
  case Rule::ColumnOneZero: return "column-1 zero";
  case Rule::WallInfinity: return "wall infinity";
  case Rule::ProperRequired: return "proper key required";
  case Rule::StagingPrefix: return "outer diagonal prefix";
  case Rule::OuterCount: return "outer count";
  case Rule::RowOrder: return "row order";
  case Rule::ColumnOrder: return "column order";
  case Rule::DiagonalOrder: return "diagonal order";
  case Rule::DuplicateKey: return "duplicate key";
  case Rule::StagingLattice: return "k=0 staging lattice";
  }
  return "?";
}

struct Violation {
  Rule rule;
  Severity severity = Severity::Error;
  Coord at;
  std::optional<Coord> other;  // second cell of an order pair or duplicate
  std::string message;
};

class ValidationReport {
public:
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  const std::vector<Violation>& items() const noexcept { return items_; }

  // No errors; advisories allowed.
  bool sound() const {
    return std::none_of(items_.begin(), items_.end(),
                        [](const Violation& v) { return v.severity == Severity::Error; });
  }

  bool has(Rule r) const {
    return std::any_of(items_.begin(), items_.end(), [r](const Violation& v) { return v.rule == r; });
  }

  std::string to_string() const {
    std::ostringstream os;
    for (const Violation& v : items_) os << v.message << '\n';
    return os.str();
  }

  void add(Violation v) { items_.push_back(std::move(v)); }

  void sort_by_index() {
    std::stable_sort(items_.begin(), items_.end(), [](const Violation& a, const Violation& b) {
      return flat_offset(a.at) < flat_offset(b.at);
    });
  }

private:
  std::vector<Violation> items_;
};

namespace detail {

inline bool ordered_pair(CellValue a, CellValue b) { return a < b || (a == b && a.is_sentinel()); }

inline void check_pair(const Lattice& lat, ValidationReport& rep, Rule rule, const char* line, int line_no,
                       Coord a, Coord b) {
  const CellValue va = lat[a], vb = lat[b];
  if (ordered_pair(va, vb)) return;
  rep.add({rule, Severity::Error, a, b,
           std::string(line) + " " + std::to_string(line_no) + " order violation at " + a.to_string() + "=" +
               va.to_string() + " / " + b.to_string() + "=" + vb.to_string()});
}

} // namespace detail

/// Checks every structural condition: Zero on row 1 and column 1, the
/// Infinity wall, proper keys everywhere inside, the proper prefix of
/// diagonal h+2 and its count k, strict order along every row, column and
/// diagonal, and global key distinctness. Reports are ordered by flat index.
inline ValidationReport validate(const Lattice& lat) {
  ValidationReport rep;
  const int h = lat.height();
  const bool staging = lat.outer_count() == 0 && h > 1;

  auto err = [&](Rule r, Coord c, std::string msg) {
    rep.add({r, Severity::Error, c, std::nullopt, rule_name(r) + std::string(" violated at ") + c.to_string() +
                                                       ": " + std::move(msg)});
  };

  int outer_prefix = 0;
  bool outer_in_prefix = true;
  for (int s = 1; s <= h + 3; ++s) {
    for (int p = 1; p <= s; ++p) {
      const Coord c = Coord::on_diagonal(s, p);
      const CellValue v = lat[c];
      if (c.row == 1) {
        if (!v.is_zero()) err(Rule::RowOneZero, c, "holds " + v.to_string());
      } else if (c.col == 1) {
        if (!v.is_zero()) err(Rule::ColumnOneZero, c, "holds " + v.to_string());
      } else if (s == h + 3) {
        if (!v.is_infinity()) err(Rule::WallInfinity, c, "holds " + v.to_string());
      } else if (s == h + 2) {
        if (outer_in_prefix && v.is_proper()) {
          ++outer_prefix;
        } else {
          outer_in_prefix = false;
          if (!v.is_infinity()) err(Rule::StagingPrefix, c, "expected infinity after the key prefix, holds " + v.to_string());
        }
      } else if (!v.is_proper() && !(staging && v.is_infinity())) {
        err(Rule::ProperRequired, c, "holds " + v.to_string());
      }
    }
  }
  if (outer_prefix != lat.outer_count())
    err(Rule::OuterCount, Coord::on_diagonal(h + 2, 2),
        "recorded k=" + std::to_string(lat.outer_count()) + ", found " + std::to_string(outer_prefix));

  for (int r = 1; r <= h + 3; ++r)
    for (int c = 1; c < h + 4 - r; ++c)
      detail::check_pair(lat, rep, Rule::RowOrder, "row", r, {r, c}, {r, c + 1});
  for (int c = 1; c <= h + 3; ++c)
    for (int r = 1; r < h + 4 - c; ++r)
      detail::check_pair(lat, rep, Rule::ColumnOrder, "column", c, {r, c}, {r + 1, c});
  for (int s = 4; s <= h + 3; ++s)
    for (int p = 2; p < s - 1; ++p)
      detail::check_pair(lat, rep, Rule::DiagonalOrder, "diagonal", s, Coord::on_diagonal(s, p),
                         Coord::on_diagonal(s, p + 1));

  std::vector<std::pair<Key, std::size_t>> keyed;
  keyed.reserve(lat.size() + 1);
  const auto cells = lat.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].is_proper()) keyed.emplace_back(cells[i].key(), i);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first != keyed[i - 1].first) continue;
    const Coord a = coord_of(h, keyed[i - 1].second), b = coord_of(h, keyed[i].second);
    rep.add({Rule::DuplicateKey, Severity::Error, b, a,
             "duplicate key " + std::to_string(keyed[i].first) + " at " + a.to_string() + " and " + b.to_string()});
  }

  if (staging)
    rep.add({Rule::StagingLattice, Severity::Advisory, Coord::on_diagonal(h + 2, 2), std::nullopt,
             "advisory: k=0 staging lattice of height " + std::to_string(h)});

  rep.sort_by_index();
  return rep;
}

} // namespace lds
