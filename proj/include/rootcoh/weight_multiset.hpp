#pragma once

#include "rootcoh/core.hpp"
#include "rootcoh/simple_type.hpp"

#include <cstdint>
#include <map>

namespace rootcoh {

enum class Sign { plus, minus };

inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }
inline const char* sign_word(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

// Weights (with multiplicity) of the sums of p distinct roots of one sign,
// optionally translated by a fixed weight (the weights of Lambda^p n^- (x) k_lambda).
struct WeightMultiset {
  SimpleType type;
  int p = 0;
  Sign sign = Sign::minus;
  Weight shift;  // zero unless translated
  std::map<Weight, std::uint64_t> entries;
  BigInt total = 0;

  std::size_t support_size() const { return entries.size(); }
  std::uint64_t multiplicity(const Weight& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }

  friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;
};

}  // namespace rootcoh
