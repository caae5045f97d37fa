#pragma once

#include "rootcoh/exterior.hpp"
#include "rootcoh/weyl.hpp"

#include <map>
#include <sstream>

namespace rootcoh {

// Simple indices (0-based) of the two adjacent simple roots removed from 2rho.
inline std::pair<std::size_t, std::size_t> witness_pair(const RootSystem& rs) {
  const auto& t = rs.type();
  const auto n = static_cast<std::size_t>(t.rank);
  if (n < 2) throw Error("non-vanishing witness needs rank >= 2, got " + t.name());
  if (n <= 3 || t.family == Family::F) return {0, 1};
  if (t.family == Family::D) return {n - 4, n - 3};
  return {n - 3, n - 2};
}

// lambda = 2 rho - beta, beta the sum of the designated pair.
inline Weight witness_lambda(const RootSystem& rs) {
  const auto [a, b] = witness_pair(rs);
  return 2 * rs.rho() - rs.simple_root(a).weight - rs.simple_root(b).weight;
}

enum class ShiftedKind { exceptional, singular, unclassified };

inline const char* to_string(ShiftedKind k) {
  switch (k) {
    case ShiftedKind::exceptional: return "exceptional";
    case ShiftedKind::singular: return "singular";
    case ShiftedKind::unclassified: return "unclassified";
  }
  return "?";
}

struct ShiftedWeight {
  std::size_t source = 0;         // index of alpha in positive_roots()
  std::vector<Int> root_coords;   // alpha - beta over simple roots
  Weight weight;                  // alpha - beta in weight coordinates
  ShiftedKind kind = ShiftedKind::unclassified;
  std::optional<std::size_t> nu;  // positive root index of the vanishing nu

  friend bool operator==(const ShiftedWeight&, const ShiftedWeight&) = default;
};

namespace detail {

inline std::vector<Int> pair_root_coords(const RootSystem& rs, std::size_t a, std::size_t b) {
  std::vector<Int> beta(rs.rank(), 0);
  ++beta[a];
  ++beta[b];
  return beta;
}

// The designated triple {alpha_a, alpha_b, alpha_a + alpha_b} as root indices.
inline std::array<std::size_t, 3> nu_triple(const RootSystem& rs, std::size_t a, std::size_t b) {
  const auto sum = rs.find_root(pair_root_coords(rs, a, b));
  if (!sum) throw Error("designated simple roots are not adjacent in " + rs.type().name());
  return {rs.simple_index(a), rs.simple_index(b), *sum};
}

}  // namespace detail

// Weights alpha - beta (alpha > 0) of Lambda^{d-1} n^- (x) k_lambda, lambda =
// 2rho - beta, each marked exceptional, singular (with nu from the triple), or
// unclassified. Never throws on an unclassified weight.
inline std::vector<ShiftedWeight> shifted_weights(const RootSystem& rs) {
  const auto [a, b] = witness_pair(rs);
  const auto beta = detail::pair_root_coords(rs, a, b);
  const Weight beta_w = to_weight_coords(rs, beta);
  const auto triple = detail::nu_triple(rs, a, b);
  const Weight ma = -rs.simple_root(a).weight, mb = -rs.simple_root(b).weight, zero = Weight::zero(rs.rank());
  const bool g2 = rs.type().family == Family::G;
  const Weight g2_extra{0, 1};

  std::vector<ShiftedWeight> out;
  const auto roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    ShiftedWeight e;
    e.source = k;
    e.root_coords = roots[k].root_coords;
    for (std::size_t j = 0; j < rs.rank(); ++j) e.root_coords[j] -= beta[j];
    e.weight = roots[k].weight - beta_w;
    if (e.weight == ma || e.weight == mb || e.weight == zero || (g2 && e.weight == g2_extra)) {
      e.kind = ShiftedKind::exceptional;
    } else {
      const Weight shifted = e.weight + rs.rho();
      for (auto nu : triple)
        if (pairing(rs, shifted, rs.root(nu)) == 0) {
          e.kind = ShiftedKind::singular;
          e.nu = nu;
          break;
        }
    }
    out.push_back(std::move(e));
  }
  return out;
}

// Throws naming the first source root whose weight is neither exceptional nor
// killed by the triple.
inline std::vector<ShiftedWeight> classify_shifted(const RootSystem& rs, const Weight& lambda) {
  if (lambda != witness_lambda(rs))
    throw Error("classification expects lambda = " + witness_lambda(rs).str() + " for " + rs.type().name());
  auto entries = shifted_weights(rs);
  for (const auto& e : entries)
    if (e.kind == ShiftedKind::unclassified) {
      const auto& alpha = rs.root(e.source);
      throw Error("weight " + e.weight.str() + " from root " + Weight(alpha.root_coords).str() +
                  " is neither exceptional nor singular along the designated triple");
    }
  return entries;
}

struct E1Page {
  SimpleType type;
  int p = 0;
  Weight lambda;
  std::map<Int, BigInt> buckets;  // nonzero degree totals only
  BigInt euler = 0;

  bool concentrated() const { return buckets.size() <= 1; }
  bool all_zero() const { return buckets.empty(); }
  BigInt bucket(Int q) const {
    auto it = buckets.find(q);
    return it == buckets.end() ? BigInt(0) : it->second;
  }

  friend bool operator==(const E1Page&, const E1Page&) = default;
};

inline void add_to_page(E1Page& page, const BwbOutcome& o, std::uint64_t mult) {
  if (o.is_singular()) return;
  const BigInt c = o.dimension * mult;
  page.buckets[o.degree] += c;
  page.euler += (o.degree % 2 == 0) ? c : BigInt(-c);
}

// BWB applied to every weight of Lambda^p n^- (x) k_lambda, summed per degree.
inline E1Page e1_page(const RootSystem& rs, int p, const Weight& lambda, const EnumerationOptions& opt = {}) {
  const auto weights = lambda_p_weights(rs, p, lambda, opt);
  E1Page page;
  page.type = rs.type();
  page.p = p;
  page.lambda = lambda;
  for (const auto& [w, mult] : weights.entries) add_to_page(page, bwb(rs, w), mult);
  return page;
}

struct CertificateRecord {
  ShiftedWeight entry;
  BwbOutcome outcome;

  friend bool operator==(const CertificateRecord&, const CertificateRecord&) = default;
};

struct NonvanishingCertificate {
  SimpleType type;
  std::size_t d = 0;
  Weight lambda;
  std::vector<CertificateRecord> ordered;   // filtration order
  std::vector<std::size_t> exceptional;     // positions in `ordered` with non-singular outcome
  std::vector<std::string> failures;        // structural conditions that did not hold
  E1Page e1;                                // degree totals over the same weights
  bool valid = false;
  std::string conclusion;

  friend bool operator==(const NonvanishingCertificate&, const NonvanishingCertificate&) = default;
};

namespace detail {

// a <= b in the root order: b - a is a non-negative combination of simple roots.
inline bool root_order_leq(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] - a[i] < 0) return false;
  return true;
}

}  // namespace detail

inline NonvanishingCertificate build_certificate(const RootSystem& rs) {
  NonvanishingCertificate c;
  c.type = rs.type();
  c.d = rs.num_positive();
  c.lambda = witness_lambda(rs);
  auto fail = [&](std::string why) { c.failures.push_back(std::move(why)); };

  if (!c.lambda.is_strictly_dominant()) fail("lambda " + c.lambda.str() + " is not strictly dominant");

  // positive_roots() is already sorted by height, so source order is the filtration order
  for (auto& e : shifted_weights(rs)) {
    auto o = bwb(rs, e.weight);
    c.ordered.push_back({std::move(e), std::move(o)});
  }

  for (std::size_t s = 0; s < c.ordered.size(); ++s)
    for (std::size_t t = s + 1; t < c.ordered.size(); ++t)
      if (detail::root_order_leq(c.ordered[t].entry.root_coords, c.ordered[s].entry.root_coords)) {
        fail("ordering: weight " + std::to_string(t) + " <= weight " + std::to_string(s));
        s = c.ordered.size();
        break;
      }

  for (std::size_t k = 0; k < c.ordered.size(); ++k) {
    const auto& r = c.ordered[k];
    if (!r.outcome.is_singular()) c.exceptional.push_back(k);
    if (r.entry.kind == ShiftedKind::unclassified)
      fail("weight " + r.entry.weight.str() + " from root " + Weight(rs.root(r.entry.source).root_coords).str() +
           " is neither exceptional nor singular along the designated triple");
    if (r.entry.kind == ShiftedKind::singular && !r.outcome.is_singular())
      fail("weight " + r.entry.weight.str() + " has a vanishing pairing but BWB is not singular");
    add_to_page(c.e1, r.outcome, 1);
  }
  c.e1.type = rs.type();
  c.e1.p = static_cast<int>(c.d) - 1;
  c.e1.lambda = c.lambda;

  // Expected pattern: -alpha_a, -alpha_b in degree 1 (dominant 0, dim 1), then 0
  // in degree 0 (dim 1); for G2 one more degree-0 weight after the zero weight.
  const auto [a, b] = witness_pair(rs);
  const Weight zero = Weight::zero(rs.rank());
  const Weight mu1 = -rs.simple_root(a).weight, mu2 = -rs.simple_root(b).weight;
  const BwbOutcome unit1{BwbKind::concentrated, 1, zero, 1};
  const BwbOutcome unit0{BwbKind::concentrated, 0, zero, 1};
  const bool g2 = rs.type().family == Family::G;
  const std::size_t expected = g2 ? 4 : 3;
  std::optional<std::size_t> pos1, pos2, pos0;
  for (auto k : c.exceptional) {
    const auto& r = c.ordered[k];
    if (r.entry.weight == mu1) pos1 = k;
    else if (r.entry.weight == mu2) pos2 = k;
    else if (r.entry.weight == zero) pos0 = k;
  }
  if (!pos1 || c.ordered[*pos1].outcome != unit1) fail("-alpha_" + std::to_string(a + 1) + " is not a degree-1 unit");
  if (!pos2 || c.ordered[*pos2].outcome != unit1) fail("-alpha_" + std::to_string(b + 1) + " is not a degree-1 unit");
  if (!pos0 || c.ordered[*pos0].outcome != unit0) fail("the zero weight is not a degree-0 unit");
  if (pos1 && pos2 && pos0 && !(*pos1 < *pos0 && *pos2 < *pos0))
    fail("the degree-1 units do not precede the zero weight");
  if (c.exceptional.size() != expected)
    fail(std::to_string(c.exceptional.size()) + " non-singular weights, expected " + std::to_string(expected));
  if (g2) {
    const Weight extra{0, 1};
    bool seen = false;
    for (auto k : c.exceptional) {
      const auto& r = c.ordered[k];
      if (r.entry.weight == extra) {
        seen = true;
        if (r.outcome.is_singular() || r.outcome.degree != 0) fail("(0,1) is not in degree 0");
        if (pos0 && k < *pos0) fail("(0,1) precedes the zero weight");
      }
    }
    if (!seen) fail("(0,1) is missing among the non-singular weights");
  }
  for (auto k : c.exceptional) {
    const auto& w = c.ordered[k].entry.weight;
    if (w != mu1 && w != mu2 && w != zero && !(g2 && w == Weight{0, 1}))
      fail("unexpected non-singular weight " + w.str() + " (degree " + std::to_string(c.ordered[k].outcome.degree) +
           ", dim " + c.ordered[k].outcome.dimension.str() + ")");
  }

  c.valid = c.failures.empty();
  if (c.valid)
    c.conclusion = "H^{" + std::to_string(c.d - 1) + ",1} ≠ 0; Bott vanishing fails; G/B is not a toric variety";
  return c;
}

// When E1 terms sit only in degrees 0 and 1, h^0 - h^1 = chi, so chi < 0 forces
// H^{d-1,1} != 0 without the filtration pattern.
inline bool euler_forces_degree_one(const E1Page& e1) {
  for (const auto& [q, v] : e1.buckets)
    if (q > 1) return false;
  return e1.euler < 0;
}

// Schematic long exact sequences for the three (G2: four) non-singular weights.
inline std::string explain(const NonvanishingCertificate& c) {
  std::ostringstream out;
  out << "lambda = " << c.lambda.str() << ", d = " << c.d << ", filtration V_0 = Lambda^{d-1} n^- (x) k_lambda\n";
  out << "weights before and between the ones below are singular: quotienting them leaves all H^i unchanged\n";
  for (auto k : c.exceptional) {
    const auto& r = c.ordered[k];
    const auto mu = r.entry.weight.str();
    out << "\n[" << k << "] mu = " << mu;
    if (r.outcome.is_singular()) {
      out << " (singular)\n";
      continue;
    }
    out << "  -> H^" << r.outcome.degree << " = V" << r.outcome.dominant.str() << ", dim " << r.outcome.dimension
        << "\n";
    out << "  0 -> H^0(L" << mu << ") -> H^0(L(V_s)) -> H^0(L(V_{s+1}))\n"
        << "    -> H^1(L" << mu << ") -> H^1(L(V_s)) -> H^1(L(V_{s+1}))\n"
        << "    -> H^2(L" << mu << ") -> H^2(L(V_s)) -> ...\n";
  }
  out << "\n";
  if (c.valid)
    out << c.conclusion << "\n";
  else
    for (const auto& f : c.failures) out << "failed: " << f << "\n";
  return out.str();
}

}  // namespace rootcoh
