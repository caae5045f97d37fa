#pragma once

// Independent reference models used only by the tests.

#include "rootcoh/rootcoh.hpp"

#include <set>

namespace oracle {

using rootcoh::Int;
using Vec = std::vector<Int>;

inline Int dot(const Vec& a, const Vec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec unit(std::size_t dim, std::size_t i, Int s = 1) {
  Vec v(dim, 0);
  v[i] = s;
  return v;
}

inline Vec add(Vec a, const Vec& b, Int k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

// Classical root systems in the usual epsilon coordinates.
struct Euclidean {
  std::vector<Vec> simple;
  std::set<Vec> positive;
};

inline Euclidean classical(char family, std::size_t n) {
  Euclidean e;
  const std::size_t dim = family == 'A' ? n + 1 : n;
  auto eps = [&](std::size_t i, Int s = 1) { return unit(dim, i, s); };
  for (std::size_t i = 0; i + 1 < (family == 'A' ? n + 1 : n); ++i) e.simple.push_back(add(eps(i), eps(i + 1), -1));
  if (family == 'B') e.simple.push_back(eps(n - 1));
  if (family == 'C') e.simple.push_back(eps(n - 1, 2));
  if (family == 'D') e.simple.push_back(add(eps(n - 2), eps(n - 1)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      e.positive.insert(add(eps(i), eps(j), -1));
      if (family != 'A') e.positive.insert(add(eps(i), eps(j)));
    }
  if (family == 'B')
    for (std::size_t i = 0; i < n; ++i) e.positive.insert(eps(i));
  if (family == 'C')
    for (std::size_t i = 0; i < n; ++i) e.positive.insert(eps(i, 2));
  return e;
}

// Sums of p-element subsets by bitmask, |Phi+| <= 20.
inline std::map<rootcoh::Weight, std::uint64_t> subset_sums_by_mask(const rootcoh::RootSystem& rs, int p, int sign) {
  const auto roots = rs.positive_roots();
  const std::size_t n = roots.size();
  std::map<rootcoh::Weight, std::uint64_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != p) continue;
    auto w = rootcoh::Weight::zero(rs.rank());
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1u) w += sign * roots[k].weight;
    ++out[w];
  }
  return out;
}

// Singular iff some positive coroot pairs to zero; otherwise the regularising
// element has length #{gamma > 0 : (x, gamma^vee) < 0}.
struct Regularity {
  bool singular = false;
  Int length = 0;
};

inline Regularity regularity(const rootcoh::RootSystem& rs, const rootcoh::Weight& x) {
  Regularity r;
  for (const auto& g : rs.positive_roots()) {
    const Int v = rootcoh::pairing(rs, x, g);
    if (v == 0) r.singular = true;
    if (v < 0) ++r.length;
  }
  return r;
}

}  // namespace oracle
