#pragma once

#include "rootcoh/exterior.hpp"
#include "rootcoh/weyl.hpp"

namespace rootcoh {

enum class WitnessKind { dominant, singular, violation };

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::dominant: return "dominant";
    case WitnessKind::singular: return "singular";
    case WitnessKind::violation: return "violation";
  }
  return "?";
}

struct Witness {
  Weight mu;                          // element of Phi^-_p
  WitnessKind kind = WitnessKind::violation;
  std::optional<std::size_t> gamma;   // positive root index, singular only

  friend bool operator==(const Witness&, const Witness&) = default;
};

enum class Verdict { pass, fail };

inline const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

struct VanishingReport {
  SimpleType type;
  int p = 0;
  Weight lambda;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;  // one per mu in the support, in weight order
  std::optional<Weight> first_violation;

  std::size_t count(WitnessKind k) const {
    return static_cast<std::size_t>(
        std::count_if(witnesses.begin(), witnesses.end(), [k](const Witness& w) { return w.kind == k; }));
  }
  std::string conclusion() const {
    if (verdict == Verdict::fail)
      return "hypothesis fails at mu = " + first_violation->str() + "; no vanishing conclusion";
    return "H^{" + std::to_string(p) + ",q}(G/B, L(" + lambda.str() + ")) = 0 for all q >= 1";
  }

  friend bool operator==(const VanishingReport&, const VanishingReport&) = default;
};

// Classifies one weight mu of Phi^-_p against lambda.
inline Witness classify_weight(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  const Weight sum = lambda + mu;
  if (sum.is_dominant()) return {mu, WitnessKind::dominant, std::nullopt};
  if (auto g = vanishing_coroot(rs, sum + rs.rho())) return {mu, WitnessKind::singular, g};
  return {mu, WitnessKind::violation, std::nullopt};
}

inline VanishingReport classify_support(const RootSystem& rs, int p, const Weight& lambda,
                                        const WeightMultiset& minus_sums) {
  VanishingReport r;
  r.type = rs.type();
  r.p = p;
  r.lambda = lambda;
  r.witnesses.reserve(minus_sums.entries.size());
  for (const auto& [mu, mult] : minus_sums.entries) {
    r.witnesses.push_back(classify_weight(rs, lambda, mu));
    if (r.witnesses.back().kind == WitnessKind::violation && !r.first_violation) r.first_violation = mu;
  }
  r.verdict = r.first_violation ? Verdict::fail : Verdict::pass;
  return r;
}

// Every mu in Phi^-_p: is lambda + mu dominant or lambda + mu + rho singular?
inline VanishingReport check_weights(const RootSystem& rs, int p, const Weight& lambda,
                                      const EnumerationOptions& opt = {}) {
  if (lambda.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  if (!lambda.is_dominant()) throw Error("lambda must be dominant, got " + lambda.str());
  return classify_support(rs, p, lambda, phi_sums(rs, p, Sign::minus, opt));
}

// Closed-form lower bounds on (lambda, alpha_k^vee), per band of p. Values
// below zero are clamped to zero; degrees not covered by any band get 0.
inline std::vector<Int> threshold_bands(const RootSystem& rs, int p) {
  const auto& t = rs.type();
  const Int n = t.rank;
  const Int d = static_cast<Int>(rs.num_positive());
  if (p < 0 || p > d) throw Error("p = " + std::to_string(p) + " out of range for " + t.name());
  const Int P = p;
  std::vector<Int> out(static_cast<std::size_t>(n), 0);
  auto all = [&](Int v) { std::fill(out.begin(), out.end(), v); };
  // k != n gets a, k = n gets b
  auto split_last = [&](Int a, Int b) {
    all(a);
    out.back() = b;
  };
  auto in = [&](Int lo, Int hi) { return lo <= P && P <= hi; };

  switch (t.family) {
    case Family::A:
      if (in(0, n - 1)) all(P);
      else if (in(n, (n * n - n + 2) / 2)) all(n);
      else all((n * n + n + 2 - 2 * P) / 2);
      break;
    case Family::B:
      if (in(0, n - 1)) split_last(P, 2 * P - 1);
      else if (in(n, 2 * n - 3)) split_last(P, 2 * n - 1);
      else if (in(2 * n - 2, n * n - 2 * n + 3)) split_last(2 * n - 2, 2 * n - 1);
      else if (in(n * n - 2 * n + 4, n * n - n + 1)) split_last(n * n + 1 - P, 2 * n - 1);
      else if (in(n * n - n + 2, n * n)) split_last(n * n + 1 - P, 2 * n * n + 1 - 2 * P);
      break;
    case Family::C:
      if (in(1, 2)) split_last(2 * P - 1, P);
      else if (in(3, n - 1)) split_last(P + 1, P);
      else if (in(n, 2 * n - 3)) split_last(P + 1, n);
      else if (in(2 * n - 2, n * n - 2 * n + 3)) split_last(2 * n - 1, n);
      else if (P == n * n - 2 * n + 4) split_last(2 * n - 3, n);
      else if (in(n * n - 2 * n + 5, n * n - n + 1)) split_last(n * n + 1 - P, n);
      else if (in(n * n - n + 2, n * n)) split_last(n * n + 1 - P, n * n + 1 - P);
      break;
    case Family::D:
      if (in(0, 2 * n - 4)) all(P);
      else if (in(2 * n - 3, n * n - 3 * n + 4)) all(2 * n - 3);
      else all(n * n - n + 1 - P);
      break;
    case Family::E: {
      const Int lo = n == 6 ? 10 : n == 7 ? 16 : 28;
      const Int mid = n == 6 ? 26 : n == 7 ? 47 : 92;
      if (in(0, lo)) all(P);
      else if (in(lo + 1, mid)) all(lo + 1);
      else all(d + 1 - P);
      break;
    }
    case Family::F:
      if (in(0, 4)) out = {P, P, 2 * P - 1, 2 * P - 1};
      else if (in(5, 7)) out = {P, P, P + 3, P + 3};
      else if (in(8, 17)) out = {8, 8, 11, 11};
      else if (in(18, 20)) out = {25 - P, 25 - P, 45 - 2 * P, 45 - 2 * P};
      else all(25 - P);
      break;
    case Family::G:
      if (P == 1 || P == 6) out = {1, 1};
      else if (P == 2 || P == 5) out = {2, 4};
      else if (P == 3 || P == 4) out = {3, 5};
      break;
  }
  for (auto& v : out) v = std::max<Int>(v, 0);
  return out;
}

enum class BoundKind { per_root, global };

// per_root: h_{alpha_k} - 1 in coordinate k; global: h - 1 everywhere.
inline std::vector<Int> coxeter_bound(const RootSystem& rs, BoundKind kind) {
  std::vector<Int> out(rs.rank());
  for (std::size_t k = 0; k < rs.rank(); ++k)
    out[k] = (kind == BoundKind::per_root ? rs.coxeter_per_root()[k] : rs.coxeter_number()) - 1;
  return out;
}

// Pairs (lambda, lambda + omega_i) inside the box [0, bound]^rank where the
// first passes and the second fails. Reported, not asserted: upward closure is
// not expected in general.
struct MonotonicityBreak {
  Weight passing;
  Weight failing;
};

inline std::vector<MonotonicityBreak> monotonicity_breaks(const RootSystem& rs, int p, Int bound,
                                                          const EnumerationOptions& opt = {}) {
  const auto minus = phi_sums(rs, p, Sign::minus, opt);
  auto passes = [&](const Weight& l) { return classify_support(rs, p, l, minus).verdict == Verdict::pass; };
  std::vector<MonotonicityBreak> out;
  Weight l = Weight::zero(rs.rank());
  for (;;) {
    if (passes(l))
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (l[i] == bound) continue;
        Weight up = l;
        ++up[i];
        if (!passes(up)) out.push_back({l, up});
      }
    std::size_t i = 0;
    while (i < rs.rank() && l[i] == bound) l[i++] = 0;
    if (i == rs.rank()) break;
    ++l[i];
  }
  return out;
}

}  // namespace rootcoh
