#pragma once

#include "rootcoh/core.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>

namespace rootcoh {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  // Throws Error naming the violated rank constraint.
  void validate() const {
    auto fail = [&](std::string_view rule) {
      throw Error("invalid simple type " + name() + ": " + std::string(rule));
    };
    switch (family) {
      case Family::A: if (rank < 1) fail("A_n requires n >= 1"); break;
      case Family::B: if (rank < 2) fail("B_n requires n >= 2"); break;
      case Family::C: if (rank < 2) fail("C_n requires n >= 2"); break;
      case Family::D: if (rank < 4) fail("D_n requires n >= 4"); break;
      case Family::E: if (rank < 6 || rank > 8) fail("E_n requires n in {6,7,8}"); break;
      case Family::F: if (rank != 4) fail("F_n requires n = 4"); break;
      case Family::G: if (rank != 2) fail("G_n requires n = 2"); break;
    }
  }

  // Accepts "G2", "e8", "A12". Validates rank constraints.
  static SimpleType parse(std::string_view s) {
    if (s.size() < 2) throw Error("cannot parse simple type '" + std::string(s) + "'");
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (f < 'A' || f > 'G') throw Error("unknown family in simple type '" + std::string(s) + "'");
    int r = 0;
    auto digits = s.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw Error("cannot parse rank in simple type '" + std::string(s) + "'");
    SimpleType t{static_cast<Family>(f), r};
    t.validate();
    return t;
  }

  bool is_simply_laced() const { return family == Family::A || family == Family::D || family == Family::E; }

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

}  // namespace rootcoh
