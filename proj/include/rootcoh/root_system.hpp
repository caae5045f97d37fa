#pragma once

#include "rootcoh/core.hpp"
#include "rootcoh/simple_type.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace rootcoh {

// A positive root. root_coords are coefficients over the simple roots, weight
// holds the pairings (gamma, alpha_i^vee), coroot the coefficients of gamma^vee
// over the simple coroots. half_norm is |gamma|^2 / |short|^2.
struct Root {
  std::vector<Int> root_coords;
  Weight weight;
  std::vector<Int> coroot;
  Int half_norm = 1;
  Int height = 0;

  friend bool operator==(const Root&, const Root&) = default;
};

// Immutable root system of a simple type.
//
// Simple roots follow the Bourbaki numbering: B_n has alpha_n short, C_n has
// alpha_n long, D_n branches at alpha_{n-2}, E_n has alpha_2 attached to
// alpha_4, F4 has alpha_1, alpha_2 long and G2 has alpha_1 long.
//
// cartan()[i][j] = (alpha_j, alpha_i^vee), so the weight coordinates of a root
// are cartan() * root_coords.
//
// Positive roots are ordered by height, ties broken reverse-lexicographically
// on root_coords (alpha_1 before alpha_2, alpha_1+alpha_2 before alpha_2+alpha_3).
class RootSystem {
public:
  const SimpleType& type() const noexcept { return type_; }
  std::size_t rank() const noexcept { return half_norms_.size(); }
  const std::vector<std::vector<Int>>& cartan() const noexcept { return cartan_; }
  std::span<const Root> positive_roots() const noexcept { return roots_; }
  std::size_t num_positive() const noexcept { return roots_.size(); }
  const Root& root(std::size_t k) const { return roots_.at(k); }

  // Index (into positive_roots) of the simple root alpha_i, 0-based i.
  std::size_t simple_index(std::size_t i) const { return simple_.at(i); }
  const Root& simple_root(std::size_t i) const { return roots_[simple_.at(i)]; }

  std::span<const Int> simple_half_norms() const noexcept { return half_norms_; }
  Int min_half_norm() const { return *std::min_element(half_norms_.begin(), half_norms_.end()); }
  bool is_simply_laced() const {
    return std::all_of(half_norms_.begin(), half_norms_.end(), [&](Int h) { return h == half_norms_[0]; });
  }

  Weight rho() const { return Weight::rho(rank()); }
  Int coxeter_number() const noexcept { return coxeter_; }
  std::span<const Int> coxeter_per_root() const noexcept { return coxeter_per_root_; }

  std::optional<std::size_t> find_root(std::span<const Int> root_coords) const {
    auto it = index_.find(std::vector<Int>(root_coords.begin(), root_coords.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

private:
  friend RootSystem build_root_system(const SimpleType& t);

  SimpleType type_;
  std::vector<Int> half_norms_;
  std::vector<std::vector<Int>> cartan_;
  std::vector<Root> roots_;
  std::vector<std::size_t> simple_;
  std::map<std::vector<Int>, std::size_t> index_;
  Int coxeter_ = 0;
  std::vector<Int> coxeter_per_root_;
};

namespace detail {

struct Diagram {
  std::vector<Int> half_norms;
  std::vector<std::pair<int, int>> edges;  // 0-based
};

inline Diagram dynkin_diagram(const SimpleType& t) {
  const int n = t.rank;
  Diagram d;
  d.half_norms.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A: chain(n); break;
    case Family::B:
      chain(n);
      for (int i = 0; i < n - 1; ++i) d.half_norms[i] = 2;
      break;
    case Family::C:
      chain(n);
      d.half_norms[n - 1] = 2;
      break;
    case Family::D:
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      chain(4);
      d.half_norms = {2, 2, 1, 1};
      break;
    case Family::G:
      chain(2);
      d.half_norms = {3, 1};
      break;
  }
  return d;
}

inline bool reverse_lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

inline RootSystem build_root_system(const SimpleType& t) {
  t.validate();
  const auto d = detail::dynkin_diagram(t);
  const std::size_t n = d.half_norms.size();

  // Symmetric form normalised so that (alpha, alpha) = 2 * half_norm(alpha).
  std::vector<std::vector<Int>> gram(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) gram[i][i] = 2 * d.half_norms[i];
  for (auto [i, j] : d.edges) gram[i][j] = gram[j][i] = -std::max(d.half_norms[i], d.half_norms[j]);

  RootSystem rs;
  rs.type_ = t;
  rs.half_norms_ = d.half_norms;
  rs.cartan_.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (alpha_j, alpha_i^vee) = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)
      if (gram[i][j] % d.half_norms[i] != 0) throw Error("non-integral Cartan entry");
      rs.cartan_[i][j] = gram[i][j] / d.half_norms[i];
    }

  auto pairings = [&](const std::vector<Int>& c) {
    std::vector<Int> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += rs.cartan_[i][j] * c[j];
    return w;
  };

  // Closure of the simple roots under the simple reflections. For gamma positive
  // and gamma != alpha_i, s_i(gamma) = gamma - (gamma, alpha_i^vee) alpha_i is
  // again positive, and every positive root is reached this way.
  std::set<std::vector<Int>> seen;
  std::deque<std::vector<Int>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto c = std::move(queue.front());
    queue.pop_front();
    const auto w = pairings(c);
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      auto next = c;
      next[i] -= w[i];
      if (std::any_of(next.begin(), next.end(), [](Int x) { return x < 0; })) continue;  // s_i(alpha_i)
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<std::vector<Int>> coords(seen.begin(), seen.end());
  for (const auto& c : coords) {
    Root r;
    r.root_coords = c;
    r.height = 0;
    for (auto x : c) r.height += x;
    r.weight = Weight(pairings(c));
    // |gamma|^2 = sum_i c_i (gamma, alpha_i) = sum_i c_i (gamma, alpha_i^vee) half_norm_i * 2 / 2
    Int norm2 = 0;
    for (std::size_t i = 0; i < n; ++i) norm2 += c[i] * r.weight[i] * d.half_norms[i];
    if (norm2 % 2 != 0) throw Error("odd root norm");
    r.half_norm = norm2 / 2;
    r.coroot.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      if ((c[j] * d.half_norms[j]) % r.half_norm != 0) throw Error("non-integral coroot");
      r.coroot[j] = c[j] * d.half_norms[j] / r.half_norm;
    }
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return detail::reverse_lex_less(a.root_coords, b.root_coords);
  });
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_.emplace(rs.roots_[k].root_coords, k);
  rs.simple_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    rs.simple_[i] = rs.index_.at(e);
  }

  // h = dim(G)/rank - 1 = 2|Phi^+|/rank
  const auto twice = static_cast<Int>(2 * rs.roots_.size());
  if (twice % static_cast<Int>(n) != 0) throw Error("Coxeter number is not integral");
  rs.coxeter_ = twice / static_cast<Int>(n);
  rs.coxeter_per_root_.assign(n, 0);
  for (const auto& r : rs.roots_)
    for (std::size_t i = 0; i < n; ++i)
      if (r.weight[i] > 0) rs.coxeter_per_root_[i] += r.weight[i];
  return rs;
}

// Pairing vector ((gamma, alpha_1^vee), ..., (gamma, alpha_n^vee)) of an
// arbitrary integer combination of simple roots.
inline Weight to_weight_coords(const RootSystem& rs, std::span<const Int> root_coords) {
  if (root_coords.size() != rs.rank())
    throw Error("root coordinate vector has length " + std::to_string(root_coords.size()) +
                ", expected " + std::to_string(rs.rank()));
  std::vector<Int> w(rs.rank(), 0);
  for (std::size_t i = 0; i < rs.rank(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j) w[i] += rs.cartan()[i][j] * root_coords[j];
  return Weight(std::move(w));
}

// Coefficients of gamma^vee over the simple coroots:
// c_j^vee = root_coords[j] * half_norm(alpha_j) / half_norm(gamma).
inline std::vector<Int> coroot_coords(const RootSystem& rs, const Root& gamma) {
  if (!rs.find_root(gamma.root_coords)) throw Error("root does not belong to " + rs.type().name());
  std::vector<Int> c(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j)
    c[j] = gamma.root_coords[j] * rs.simple_half_norms()[j] / gamma.half_norm;
  return c;
}

struct CoxeterNumbers {
  Int h = 0;
  std::vector<Int> per_root;  // h_alpha for each simple root
};

inline CoxeterNumbers coxeter_numbers(const RootSystem& rs) {
  auto per = rs.coxeter_per_root();
  return {rs.coxeter_number(), std::vector<Int>(per.begin(), per.end())};
}

// Per-column counts of the entries of the positive roots matrix.
struct ColumnStats {
  std::size_t zeros = 0, ones = 0, twos = 0, threes = 0;
  std::size_t minus_ones = 0, minus_twos = 0, minus_threes = 0;
  std::size_t other = 0;

  std::size_t total() const {
    return zeros + ones + twos + threes + minus_ones + minus_twos + minus_threes + other;
  }
  // Order used in tables: 0, 1, 2, 3, -1, -2, -3.
  std::array<std::size_t, 7> as_row() const {
    return {zeros, ones, twos, threes, minus_ones, minus_twos, minus_threes};
  }
  friend bool operator==(const ColumnStats&, const ColumnStats&) = default;
};

enum class ColumnClass { uniform, short_root, long_root };

inline const char* to_string(ColumnClass c) {
  switch (c) {
    case ColumnClass::uniform: return "uniform";
    case ColumnClass::short_root: return "short";
    case ColumnClass::long_root: return "long";
  }
  return "?";
}

struct PositiveRootsMatrix {
  std::vector<Weight> rows;  // weight coords in canonical root order
  std::vector<ColumnStats> column_stats;
  std::vector<ColumnClass> column_class;
};

inline PositiveRootsMatrix positive_roots_matrix(const RootSystem& rs) {
  PositiveRootsMatrix m;
  const std::size_t n = rs.rank();
  m.column_stats.resize(n);
  for (const auto& r : rs.positive_roots()) {
    m.rows.push_back(r.weight);
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = m.column_stats[i];
      switch (r.weight[i]) {
        case 0: ++s.zeros; break;
        case 1: ++s.ones; break;
        case 2: ++s.twos; break;
        case 3: ++s.threes; break;
        case -1: ++s.minus_ones; break;
        case -2: ++s.minus_twos; break;
        case -3: ++s.minus_threes; break;
        default: ++s.other; break;
      }
    }
  }
  const bool laced = rs.is_simply_laced();
  const Int shortest = rs.min_half_norm();
  for (std::size_t i = 0; i < n; ++i)
    m.column_class.push_back(laced ? ColumnClass::uniform
                                   : (rs.simple_half_norms()[i] == shortest ? ColumnClass::short_root
                                                                            : ColumnClass::long_root));
  return m;
}

}  // namespace rootcoh
