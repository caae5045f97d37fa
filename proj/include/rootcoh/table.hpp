#pragma once

// Two-column root listing: "(root coords) ↔ (weight coords)", one root per line.

#include "rootcoh/root_system.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace rootcoh {

inline constexpr const char* kArrow = "↔";

using RootPair = std::pair<std::vector<Int>, std::vector<Int>>;

inline std::string paren_list(std::span<const Int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string roots_table(const RootSystem& rs) {
  std::string out;
  for (const auto& r : rs.positive_roots()) out += paren_list(r.root_coords) + " " + kArrow + " " + paren_list(r.weight.coords()) + "\n";
  return out;
}

namespace detail {

inline std::optional<std::vector<Int>> parse_paren(std::string_view s) {
  const auto l = s.find('('), r = s.find(')');
  if (l == std::string_view::npos || r == std::string_view::npos || r < l) return std::nullopt;
  std::istringstream in(std::string(s.substr(l + 1, r - l - 1)));
  std::vector<Int> v;
  Int x;
  while (in >> x) v.push_back(x);
  if (!in.eof()) return std::nullopt;
  return v;
}

}  // namespace detail

// Parses "(c) ↔ (w)" lines; blank lines and '#' comments are skipped.
inline std::vector<RootPair> parse_root_pairs(std::istream& in) {
  std::vector<RootPair> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const auto arrow = line.find(kArrow);
    if (arrow == std::string::npos) throw Error("line " + std::to_string(lineno) + ": missing arrow");
    auto c = detail::parse_paren(std::string_view(line).substr(0, arrow));
    auto w = detail::parse_paren(std::string_view(line).substr(arrow));
    if (!c || !w || c->size() != w->size()) throw Error("line " + std::to_string(lineno) + ": malformed row");
    out.emplace_back(std::move(*c), std::move(*w));
  }
  return out;
}

inline std::vector<RootPair> read_root_pairs(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file.string());
  return parse_root_pairs(in);
}

}  // namespace rootcoh
