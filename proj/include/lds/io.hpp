#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "lds/errors.hpp"
#include "lds/lattice.hpp"
#include "lds/validate.hpp"

// Text format:
//   LDS 1 <h> <k>
//   one decimal key per line, diagonal-major, head to tail, diagonals 3..h+2
// Sentinels are never written; load rebuilds them and rejects any key
// sequence that does not validate.

namespace lds {

inline void save(const Lattice& lat, std::ostream& os) {
  os << "LDS 1 " << lat.height() << ' ' << lat.outer_count() << '\n';
  for (Key k : lat.keys()) os << k << '\n';
}

inline void save(const Lattice& lat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  save(lat, out);
  out.flush();
  if (!out) throw io_error("write to " + path + " failed");
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class Int>
bool parse_int(const std::string& tok, Int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && p == last && !tok.empty();
}

} // namespace detail

inline Lattice load(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw format_error("missing header line");
  std::istringstream header(line);
  std::string magic, version, hs, ks, extra;
  header >> magic >> version >> hs >> ks;
  int h = 0, k = 0;
  if (magic != "LDS" || version != "1" || !detail::parse_int(hs, h) || !detail::parse_int(ks, k) || (header >> extra))
    throw format_error("malformed header '" + line + "', expected 'LDS 1 <h> <k>'");
  if (h < 1) throw format_error("height must be >= 1, got " + std::to_string(h));
  if (k < 0 || k > h) throw format_error("outer count k=" + std::to_string(k) + " outside [0, h]");
  if (k == 0 && h != 1) throw format_error("k=0 is only valid for the empty lattice of height 1");

  const std::size_t n = k == 0 ? 0
                               : static_cast<std::size_t>(h) * static_cast<std::size_t>(h - 1) / 2 +
                                     static_cast<std::size_t>(k);
  std::vector<Key> keys;
  keys.reserve(n);
  std::unordered_set<Key> seen;
  seen.reserve(n * 2);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string tok = detail::trim(line);
    if (tok.empty()) continue;
    std::uint64_t v = 0;
    if (!detail::parse_int(tok, v)) throw format_error("line " + std::to_string(line_no) + ": non-numeric key '" + tok + "'");
    if (!is_valid_key(v)) throw format_error("line " + std::to_string(line_no) + ": key " + tok + " out of range");
    if (keys.size() == n) throw format_error("more than the " + std::to_string(n) + " keys announced by the header");
    if (!seen.insert(static_cast<Key>(v)).second)
      throw format_error("line " + std::to_string(line_no) + ": duplicate key " + tok);
    keys.push_back(static_cast<Key>(v));
  }
  if (keys.size() != n)
    throw format_error("expected " + std::to_string(n) + " keys, found " + std::to_string(keys.size()));

  Lattice lat = Lattice::from_keys(h, keys);
  const ValidationReport rep = validate(lat);
  if (!rep.sound()) throw format_error("lattice fails validation:\n" + rep.to_string());
  return lat;
}

inline Lattice load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return load(in);
}

} // namespace lds
