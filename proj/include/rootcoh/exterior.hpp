#pragma once

#include "rootcoh/root_system.hpp"
#include "rootcoh/weight_multiset.hpp"
#include "rootcoh/wms_cache.hpp"

#include <filesystem>
#include <optional>
#include <thread>
#include <unordered_map>

namespace rootcoh {

struct EnumerationOptions {
  std::uint64_t budget = 100'000'000;  // maximum number of p-subsets per job
  std::optional<std::filesystem::path> cache_dir;
  unsigned threads = 1;
};

namespace detail {

// Packs a weight into one 64-bit word, rank fields of `bits` bits each. Every
// partial sum of the enumerated roots stays inside [lo_i, hi_i] per column, so
// biasing by -lo_i keeps each field non-negative and below 2^bits; sums of
// packed deltas are then carry-free (mod 2^64 arithmetic is exact here).
class PackedCodec {
public:
  static std::optional<PackedCodec> make(const std::vector<Weight>& items, std::size_t rank) {
    if (rank == 0 || rank > 64) return std::nullopt;
    const unsigned bits = static_cast<unsigned>(64 / rank);
    std::vector<Int> lo(rank, 0), hi(rank, 0);
    for (const auto& w : items)
      for (std::size_t i = 0; i < rank; ++i) (w[i] < 0 ? lo[i] : hi[i]) += w[i];
    const Int limit = bits >= 63 ? INT64_MAX : (Int{1} << bits);
    for (std::size_t i = 0; i < rank; ++i)
      if (hi[i] - lo[i] >= limit) return std::nullopt;
    PackedCodec c;
    c.bits_ = bits;
    c.lo_ = lo;
    c.bias_ = 0;
    for (std::size_t i = 0; i < rank; ++i) c.bias_ += static_cast<std::uint64_t>(-lo[i]) << (bits * i);
    return c;
  }

  std::uint64_t bias() const { return bias_; }

  std::uint64_t delta(const Weight& w) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < w.rank(); ++i) d += static_cast<std::uint64_t>(w[i]) << (bits_ * i);
    return d;
  }

  Weight decode(std::uint64_t key) const {
    const std::uint64_t mask = bits_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits_) - 1);
    std::vector<Int> c(lo_.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = static_cast<Int>((key >> (bits_ * i)) & mask) + lo_[i];
    return Weight(std::move(c));
  }

private:
  unsigned bits_ = 0;
  std::vector<Int> lo_;
  std::uint64_t bias_ = 0;
};

template <class Acc, class Visit>
void subset_sums(const std::vector<Acc>& items, std::size_t from, std::size_t left, const Acc& acc, Visit& visit) {
  if (left == 0) {
    visit(acc);
    return;
  }
  for (std::size_t i = from; i + left <= items.size(); ++i) subset_sums(items, i + 1, left - 1, acc + items[i], visit);
}

// Enumerates all p-subsets of items, partitioned across workers by the index of
// the first chosen item. Partial maps are merged by adding multiplicities, so
// the result does not depend on the partition.
template <class Map, class Acc>
Map enumerate_subset_sums(const std::vector<Acc>& items, std::size_t p, const Acc& start, unsigned threads) {
  if (p == 0) {
    Map m;
    ++m[start];
    return m;
  }
  const std::size_t n = items.size();
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n - p + 1)));
  std::vector<Map> parts(workers);
  auto work = [&](unsigned t) {
    auto visit = [&](const Acc& a) { ++parts[t][a]; };
    for (std::size_t i = t; i + p <= n; i += workers) subset_sums(items, i + 1, p - 1, start + items[i], visit);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work, t);
  }
  Map merged = std::move(parts[0]);
  for (unsigned t = 1; t < workers; ++t)
    for (auto& [k, v] : parts[t]) merged[k] += v;
  return merged;
}

inline std::vector<Weight> signed_root_weights(const RootSystem& rs, Sign sign) {
  std::vector<Weight> items;
  for (const auto& r : rs.positive_roots()) items.push_back(sign == Sign::plus ? r.weight : -r.weight);
  return items;
}

}  // namespace detail

// Throws BudgetExceeded when C(|Phi+|, p) exceeds the budget.
inline void check_budget(const RootSystem& rs, int p, std::uint64_t budget) {
  const BigInt count = binomial(rs.num_positive(), static_cast<std::size_t>(p));
  if (count > budget)
    throw BudgetExceeded("refusing to enumerate C(" + std::to_string(rs.num_positive()) + "," + std::to_string(p) +
                         ") = " + count.str() + " subsets for " + rs.type().name() + ": budget is " +
                         std::to_string(budget));
}

// All sums of p distinct roots of the given sign, with multiplicity.
inline WeightMultiset phi_sums(const RootSystem& rs, int p, Sign sign, const EnumerationOptions& opt = {}) {
  const auto n = rs.num_positive();
  if (p < 0 || static_cast<std::size_t>(p) > n)
    throw Error("p = " + std::to_string(p) + " out of range [0, " + std::to_string(n) + "] for " + rs.type().name());
  check_budget(rs, p, opt.budget);
  if (opt.cache_dir)
    if (auto cached = read_wms_cache(*opt.cache_dir, rs.type(), p, sign)) return std::move(*cached);

  WeightMultiset m;
  m.type = rs.type();
  m.p = p;
  m.sign = sign;
  m.shift = Weight::zero(rs.rank());
  m.total = binomial(n, static_cast<std::size_t>(p));

  const auto items = detail::signed_root_weights(rs, sign);
  const auto up = static_cast<std::size_t>(p);
  if (auto codec = detail::PackedCodec::make(items, rs.rank())) {
    std::vector<std::uint64_t> deltas;
    deltas.reserve(items.size());
    for (const auto& w : items) deltas.push_back(codec->delta(w));
    auto packed = detail::enumerate_subset_sums<std::unordered_map<std::uint64_t, std::uint64_t>>(
        deltas, up, codec->bias(), opt.threads);
    for (const auto& [key, mult] : packed) m.entries.emplace(codec->decode(key), mult);
  } else {
    m.entries = detail::enumerate_subset_sums<std::map<Weight, std::uint64_t>>(items, up, Weight::zero(rs.rank()),
                                                                               opt.threads);
  }

  if (opt.cache_dir) write_wms_cache(*opt.cache_dir, m);
  return m;
}

// Weights of Lambda^p n^- (x) k_lambda: Phi^-_p translated by lambda.
inline WeightMultiset lambda_p_weights(const RootSystem& rs, int p, const Weight& lambda,
                                       const EnumerationOptions& opt = {}) {
  if (lambda.rank() != rs.rank()) throw Error("weight rank does not match " + rs.type().name());
  auto base = phi_sums(rs, p, Sign::minus, opt);
  WeightMultiset m;
  m.type = base.type;
  m.p = base.p;
  m.sign = Sign::minus;
  m.shift = lambda;
  m.total = base.total;
  for (const auto& [w, mult] : base.entries) m.entries.emplace(w + lambda, mult);
  return m;
}

// For each simple index i, max (mu, alpha_i^vee) over mu in the support of Phi^+_p.
inline std::vector<Int> max_column_profile(const RootSystem& rs, int p, const EnumerationOptions& opt = {}) {
  const auto sums = phi_sums(rs, p, Sign::plus, opt);
  std::vector<Int> best(rs.rank(), 0);
  bool first = true;
  for (const auto& [w, mult] : sums.entries) {
    for (std::size_t i = 0; i < rs.rank(); ++i) best[i] = first ? w[i] : std::max(best[i], w[i]);
    first = false;
  }
  return best;
}

// Same profile read off the positive roots matrix: the largest p entries of
// each column, summed. No enumeration.
inline std::vector<Int> column_profile_from_matrix(const RootSystem& rs, int p) {
  const auto n = rs.num_positive();
  if (p < 0 || static_cast<std::size_t>(p) > n) throw Error("p out of range for " + rs.type().name());
  std::vector<Int> out(rs.rank(), 0);
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    std::vector<Int> col;
    for (const auto& r : rs.positive_roots()) col.push_back(r.weight[i]);
    std::sort(col.begin(), col.end(), std::greater<>());
    for (int k = 0; k < p; ++k) out[i] += col[k];
  }
  return out;
}

}  // namespace rootcoh
