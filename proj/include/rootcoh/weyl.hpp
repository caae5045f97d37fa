#pragma once

#include "rootcoh/root_system.hpp"

#include <optional>

namespace rootcoh {

// (mu, gamma^vee), exact.
inline Int pairing(const RootSystem& rs, const Weight& mu, const Root& gamma) {
  if (mu.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  Int s = 0;
  for (std::size_t j = 0; j < rs.rank(); ++j) s += gamma.coroot[j] * mu[j];
  return s;
}

// First positive root gamma (canonical order) with (x, gamma^vee) = 0.
inline std::optional<std::size_t> vanishing_coroot(const RootSystem& rs, const Weight& x) {
  const auto roots = rs.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (pairing(rs, x, roots[k]) == 0) return k;
  return std::nullopt;
}

// s_i . mu = s_i(mu + rho) - rho = mu - ((mu, alpha_i^vee) + 1) alpha_i
inline Weight dot_reflect(const RootSystem& rs, std::size_t i, const Weight& mu) {
  if (i >= rs.rank()) throw Error("simple root index " + std::to_string(i) + " out of range");
  if (mu.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  return mu - (mu[i] + 1) * rs.simple_root(i).weight;
}

enum class BwbKind { singular, concentrated };

// Outcome of Borel-Weil-Bott: either all cohomology of L(lambda) vanishes, or
// it is concentrated in degree l(w) where it equals H^0(L(w.lambda)).
struct BwbOutcome {
  BwbKind kind = BwbKind::singular;
  Int degree = 0;
  Weight dominant;
  BigInt dimension = 0;

  bool is_singular() const { return kind == BwbKind::singular; }
  static BwbOutcome singular() { return {}; }

  friend bool operator==(const BwbOutcome&, const BwbOutcome&) = default;
};

inline BigInt weyl_dim(const RootSystem& rs, const Weight& lambda);

inline BwbOutcome bwb(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  Weight x = lambda + rs.rho();
  const auto bound = static_cast<Int>(rs.num_positive());
  for (Int steps = 0;; ++steps) {
    std::optional<std::size_t> negative;
    for (std::size_t i = 0; i < x.rank(); ++i) {
      if (x[i] == 0) return BwbOutcome::singular();
      if (x[i] < 0 && !negative) negative = i;
    }
    if (!negative) {
      Weight dom = x - rs.rho();
      BigInt dim = weyl_dim(rs, dom);
      return {BwbKind::concentrated, steps, std::move(dom), std::move(dim)};
    }
    // Each reflection at a negative coordinate shortens the regularising element.
    if (steps >= bound) throw Error("regularisation did not terminate for " + lambda.str());
    x -= x[*negative] * rs.simple_root(*negative).weight;
  }
}

// prod_{gamma > 0} (lambda + rho, gamma^vee) / (rho, gamma^vee)
inline BigInt weyl_dim(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  if (!lambda.is_dominant()) throw Error("weyl_dim requires a dominant weight, got " + lambda.str());
  const Weight shifted = lambda + rs.rho();
  const Weight rho = rs.rho();
  BigInt num = 1, den = 1;
  for (const auto& g : rs.positive_roots()) {
    num *= pairing(rs, shifted, g);
    den *= pairing(rs, rho, g);
  }
  if (num % den != 0) throw Error("Weyl dimension is not integral for " + lambda.str());
  return num / den;
}

}  // namespace rootcoh
