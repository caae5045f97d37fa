#pragma once

// Reproduction checks, one per acceptance criterion. Each check returns a
// single pass/fail record; tolerances (all exact) and time limits are fixed here.

#include "rootcoh/nonvanishing.hpp"
#include "rootcoh/table.hpp"
#include "rootcoh/vanishing.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace rootcoh {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // wall-clock budget; exceeding it fails the criterion
};

struct VerifyOptions {
  std::filesystem::path golden_dir;
  EnumerationOptions enumeration;
};

namespace limits {
inline constexpr double root_tables = 1.0;
inline constexpr double coxeter = 1.0;
inline constexpr double column_stats = 1.0;
inline constexpr double sufficiency_per_type = 60.0;
inline constexpr double pairing_bound = 120.0;
inline constexpr double certificate_per_type = 1.0;
inline constexpr double rho_vanishing = 1.0;
inline constexpr double weyl_oracle = 60.0;
}  // namespace limits

namespace detail {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

inline RootSystem rs_of(const char* name) { return build_root_system(SimpleType::parse(name)); }

inline std::vector<std::string> types_up_to_rank8() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) out.emplace_back(t);
  return out;
}

inline const std::vector<const char*>& brute_force_types() {
  static const std::vector<const char*> t{"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3",
                                          "C4", "D4", "D5", "F4", "G2"};
  return t;
}

inline std::string join(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline CriterionResult finish(CriterionResult r, Clock::time_point t0, std::vector<std::string> problems) {
  r.seconds = since(t0);
  if (r.seconds > r.limit_seconds)
    problems.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(r.limit_seconds) + " s");
  r.passed = problems.empty();
  if (!problems.empty()) r.detail = join(problems);
  return r;
}

struct Erratum {
  std::string type;
  std::vector<Int> root, printed, corrected;
};

inline std::vector<Erratum> read_errata(const std::filesystem::path& file) {
  std::vector<Erratum> out;
  std::ifstream in(file);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    const auto arrow = line.find(kArrow);
    const auto fix = line.find("=>");
    if (sp == std::string::npos || arrow == std::string::npos || fix == std::string::npos)
      throw Error("malformed erratum: " + line);
    auto c = parse_paren(std::string_view(line).substr(sp, arrow - sp));
    auto p = parse_paren(std::string_view(line).substr(arrow, fix - arrow));
    auto f = parse_paren(std::string_view(line).substr(fix));
    if (!c || !p || !f) throw Error("malformed erratum: " + line);
    out.push_back({line.substr(0, sp), *c, *p, *f});
  }
  return out;
}

}  // namespace detail

// 1. Root listings agree with the stored tables as sets of pairs.
inline CriterionResult check_root_tables(const VerifyOptions& opt) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{1, "root tables (G2 F4 E6 E7 E8 A3 A4 B2 B3 B4 C3 C4 D4 D5) match golden rows", false, "", 0,
                    limits::root_tables};
  std::vector<std::string> problems;
  std::vector<detail::Erratum> errata;
  try {
    errata = detail::read_errata(opt.golden_dir / "errata.txt");
  } catch (const std::exception& e) {
    problems.push_back(e.what());
  }
  std::size_t rows = 0;
  for (const char* name : {"G2", "F4", "E6", "E7", "E8", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5"}) {
    try {
      auto golden = read_root_pairs(opt.golden_dir / (std::string(name) + ".txt"));
      // Simple rows of the printed table give the Cartan columns used to vet errata.
      std::map<std::size_t, std::vector<Int>> simple_rows;
      for (const auto& [c, w] : golden)
        if (std::count(c.begin(), c.end(), 0) + 1 == static_cast<std::ptrdiff_t>(c.size()) &&
            std::count(c.begin(), c.end(), 1) == 1)
          simple_rows[static_cast<std::size_t>(std::find(c.begin(), c.end(), 1) - c.begin())] = w;
      for (const auto& e : errata) {
        if (e.type != name) continue;
        auto it = std::find(golden.begin(), golden.end(), RootPair{e.root, e.printed});
        if (it == golden.end()) {
          problems.push_back(std::string(name) + ": erratum row not present in table");
          continue;
        }
        std::vector<Int> implied(e.root.size(), 0);
        for (std::size_t j = 0; j < e.root.size(); ++j)
          for (std::size_t i = 0; i < implied.size(); ++i) implied[i] += e.root[j] * simple_rows.at(j)[i];
        if (implied != e.corrected || implied == e.printed) {
          problems.push_back(std::string(name) + ": erratum for " + paren_list(e.root) + " not implied by simple rows");
          continue;
        }
        it->second = e.corrected;
      }
      std::istringstream listing(roots_table(detail::rs_of(name)));
      auto ours = parse_root_pairs(listing);
      const std::set<RootPair> a(golden.begin(), golden.end()), b(ours.begin(), ours.end());
      rows += ours.size();
      if (a != b || golden.size() != ours.size())
        problems.push_back(std::string(name) + ": " + std::to_string(ours.size()) + " rows vs " +
                           std::to_string(golden.size()) + " golden, sets differ");
    } catch (const std::exception& e) {
      problems.push_back(std::string(name) + ": " + e.what());
    }
  }
  r.detail = std::to_string(rows) + " rows bit-exact, " + std::to_string(errata.size()) + " erratum re-derived";
  return detail::finish(r, t0, problems);
}

// 2. max h_alpha = h, attained exactly on the shortest simple roots; length
// monotonicity of h_alpha; h = dim/rank - 1 and the closed forms.
inline CriterionResult check_coxeter_table(const VerifyOptions&) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{2, "Coxeter numbers: max h_alpha = h on shortest roots, length monotone, closed forms", false, "",
                    0, limits::coxeter};
  std::vector<std::string> problems;
  const auto types = detail::types_up_to_rank8();
  for (const auto& name : types) {
    const auto rs = build_root_system(SimpleType::parse(name));
    const auto& t = rs.type();
    const Int n = t.rank, h = rs.coxeter_number();
    const Int dim = 2 * static_cast<Int>(rs.num_positive()) + n;
    Int closed = 0;
    switch (t.family) {
      case Family::A: closed = n + 1; break;
      case Family::B:
      case Family::C: closed = 2 * n; break;
      case Family::D: closed = 2 * n - 2; break;
      case Family::E: closed = n == 6 ? 12 : n == 7 ? 18 : 30; break;
      case Family::F: closed = 12; break;
      case Family::G: closed = 6; break;
    }
    if (dim % n != 0 || dim / n - 1 != h || h != closed)
      problems.push_back(name + ": h = " + std::to_string(h) + ", expected " + std::to_string(closed));
    const auto per = rs.coxeter_per_root();
    const auto hn = rs.simple_half_norms();
    if (*std::max_element(per.begin(), per.end()) != h) problems.push_back(name + ": max h_alpha != h");
    for (std::size_t i = 0; i < per.size(); ++i) {
      if ((per[i] == h) != (hn[i] == rs.min_half_norm()))
        problems.push_back(name + ": h_alpha" + std::to_string(i + 1) + " = h does not match shortness");
      for (std::size_t j = 0; j < per.size(); ++j) {
        if (hn[i] == hn[j] && per[i] != per[j]) problems.push_back(name + ": equal lengths, unequal h_alpha");
        if (hn[i] <= hn[j] && per[i] < per[j]) problems.push_back(name + ": h_alpha not monotone in length");
      }
    }
  }
  r.detail = std::to_string(types.size()) + " types";
  return detail::finish(r, t0, problems);
}

// Column-count rows (0, 1, 2, 3, -1, -2, -3) per family and column class.
inline std::optional<std::array<Int, 7>> expected_column_row(const SimpleType& t, ColumnClass cls) {
  const Int n = t.rank;
  const bool s = cls == ColumnClass::short_root;
  switch (t.family) {
    case Family::A: return std::array<Int, 7>{(n * n - 3 * n + 2) / 2, n - 1, 1, 0, n - 1, 0, 0};
    case Family::B:
      if (s) return std::array<Int, 7>{n * n - 2 * n + 1, 0, n, 0, 0, n - 1, 0};
      return std::array<Int, 7>{n * n - 4 * n + 5, 2 * n - 3, 1, 0, 2 * n - 3, 0, 0};
    case Family::C:
      if (s) return std::array<Int, 7>{n * n - 4 * n + 5, 2 * n - 4, 2, 0, 2 * n - 4, 1, 0};
      return std::array<Int, 7>{n * n - 2 * n + 1, n - 1, 1, 0, n - 1, 0, 0};
    case Family::D: return std::array<Int, 7>{n * n - 5 * n + 7, 2 * n - 4, 1, 0, 2 * n - 4, 0, 0};
    case Family::E:
      if (n == 6) return std::array<Int, 7>{15, 10, 1, 0, 10, 0, 0};
      if (n == 7) return std::array<Int, 7>{30, 16, 1, 0, 16, 0, 0};
      return std::array<Int, 7>{63, 28, 1, 0, 28, 0, 0};
    case Family::F:
      if (s) return std::array<Int, 7>{9, 4, 4, 0, 4, 3, 0};
      return std::array<Int, 7>{9, 7, 1, 0, 7, 0, 0};
    case Family::G:
      if (s) return std::array<Int, 7>{1, 1, 1, 1, 1, 0, 1};
      return std::array<Int, 7>{1, 2, 1, 0, 2, 0, 0};
  }
  return std::nullopt;
}

// 3. Column statistics of the positive roots matrix.
inline CriterionResult check_column_stats(const VerifyOptions&) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{3, "positive roots matrix column counts match the family rows", false, "", 0,
                    limits::column_stats};
  std::vector<std::string> problems;
  std::vector<std::string> names;
  for (const char f : {'A', 'B', 'C', 'D'})
    for (int n = f == 'D' ? 4 : 2; n <= 8; ++n) names.push_back(f + std::to_string(n));
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) names.emplace_back(t);
  for (const auto& name : names) {
    const auto rs = build_root_system(SimpleType::parse(name));
    const auto m = positive_roots_matrix(rs);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const auto want = expected_column_row(rs.type(), m.column_class[i]);
      const auto got = m.column_stats[i].as_row();
      bool ok = want && m.column_stats[i].other == 0;
      for (std::size_t k = 0; ok && k < 7; ++k) ok = static_cast<Int>(got[k]) == (*want)[k];
      if (!ok) problems.push_back(name + " column " + std::to_string(i + 1) + " (" + to_string(m.column_class[i]) + ")");
    }
  }
  r.detail = std::to_string(names.size()) + " types";
  return detail::finish(r, t0, problems);
}

namespace detail {

// Runs `lambda_for(rs, p)` through check_weights for every p; returns failing p's.
inline CriterionResult sufficiency(int id, std::string title, const VerifyOptions& opt,
                                   const std::function<std::vector<Int>(const RootSystem&, int)>& lambda_for) {
  const auto t0 = Clock::now();
  CriterionResult r{id, std::move(title), false, "", 0, limits::sufficiency_per_type};
  std::vector<std::string> problems, passed;
  double slowest = 0;
  for (const char* name : brute_force_types()) {
    const auto t1 = Clock::now();
    const auto rs = rs_of(name);
    std::vector<std::string> bad;
    std::string example;
    try {
      for (int p = 0; p <= static_cast<int>(rs.num_positive()); ++p) {
        const Weight lambda(lambda_for(rs, p));
        const auto rep = check_weights(rs, p, lambda, opt.enumeration);
        if (rep.verdict == Verdict::fail) {
          bad.push_back(std::to_string(p));
          if (example.empty())
            example = " e.g. p=" + std::to_string(p) + " lambda=" + lambda.str() + " mu=" + rep.first_violation->str();
        }
      }
    } catch (const std::exception& e) {
      bad.push_back(e.what());
    }
    const double dt = since(t1);
    slowest = std::max(slowest, dt);
    if (dt > limits::sufficiency_per_type) bad.push_back("took " + std::to_string(dt) + " s");
    if (bad.empty()) passed.push_back(name);
    else problems.push_back(std::string(name) + " fails at p=" + join(bad, ",") + example);
  }
  r.seconds = since(t0);
  r.limit_seconds = limits::sufficiency_per_type * static_cast<double>(brute_force_types().size());
  r.passed = problems.empty();
  r.detail = (r.passed ? "" : join(problems) + " | ") + "passing: " + join(passed, " ") +
             " | slowest type " + std::to_string(slowest) + " s";
  return r;
}

}  // namespace detail

// 4. Closed-form thresholds are sufficient for the dominant-or-singular check.
inline CriterionResult check_threshold_sufficiency(const VerifyOptions& opt) {
  return detail::sufficiency(4, "closed-form thresholds pass the weight check for every p", opt,
                             [](const RootSystem& rs, int p) { return threshold_bands(rs, p); });
}

// 5. n_k = h_{alpha_k} - 1 works for every p at once.
inline CriterionResult check_coxeter_bound_sufficiency(const VerifyOptions& opt) {
  return detail::sufficiency(5, "lambda = (h_alpha_k - 1) passes the weight check for every p", opt,
                             [](const RootSystem& rs, int) { return coxeter_bound(rs, BoundKind::per_root); });
}

// 6. max |(nu + rho, gamma^vee)| over nu in Phi^-_j equals h - 1.
inline CriterionResult check_pairing_bound(const VerifyOptions& opt) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{6, "max |(nu+rho, gamma^vee)| over all Phi^-_j is exactly h-1", false, "", 0, limits::pairing_bound};
  std::vector<std::string> problems, seen;
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) {
    const auto rs = detail::rs_of(name);
    const Int bound = rs.coxeter_number() - 1;
    Int best = 0;
    for (int j = 0; j <= static_cast<int>(rs.num_positive()); ++j)
      for (const auto& [nu, mult] : phi_sums(rs, j, Sign::minus, opt.enumeration).entries) {
        const Weight x = nu + rs.rho();
        for (const auto& g : rs.positive_roots()) best = std::max(best, std::abs(pairing(rs, x, g)));
      }
    seen.push_back(std::string(name) + ":" + std::to_string(best) + "/" + std::to_string(bound));
    if (best != bound) problems.push_back(std::string(name) + " max " + std::to_string(best) + " vs h-1 = " + std::to_string(bound));
  }
  r.detail = detail::join(seen, " ");
  return detail::finish(r, t0, problems);
}

// 7. Non-vanishing certificates for every type of rank 2..8.
inline CriterionResult check_certificates(const VerifyOptions&) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{7, "non-vanishing certificates valid for all types of rank 2-8, A2 pattern", false, "", 0,
                    limits::certificate_per_type};
  std::vector<std::string> problems;
  std::size_t count = 0;
  double slowest = 0;
  for (const auto& name : detail::types_up_to_rank8()) {
    if (name == "A1") continue;
    const auto t1 = detail::Clock::now();
    const auto rs = build_root_system(SimpleType::parse(name));
    const auto c = build_certificate(rs);
    slowest = std::max(slowest, detail::since(t1));
    ++count;
    if (!c.valid) problems.push_back(name + " invalid: " + detail::join(c.failures, ", "));
  }
  {
    const auto rs = detail::rs_of("A2");
    const auto c = build_certificate(rs);
    const Weight zero = Weight::zero(2);
    std::vector<Weight> exc;
    std::vector<BwbOutcome> outs;
    for (auto k : c.exceptional) {
      exc.push_back(c.ordered[k].entry.weight);
      outs.push_back(c.ordered[k].outcome);
    }
    // alpha_1 - beta = -alpha_2 comes first in the filtration order
    const std::vector<Weight> want{-rs.simple_root(1).weight, -rs.simple_root(0).weight, zero};
    const BwbOutcome unit1{BwbKind::concentrated, 1, zero, 1}, unit0{BwbKind::concentrated, 0, zero, 1};
    if (c.lambda != rs.rho() || exc != want || outs != std::vector<BwbOutcome>{unit1, unit1, unit0})
      problems.push_back("A2 pattern differs from rho / (-a2, -a1, 0) / degrees 1, 1, 0");
  }
  r.detail = std::to_string(count) + " types, slowest " + std::to_string(slowest) + " s";
  if (slowest > limits::certificate_per_type) problems.push_back("slowest type took " + std::to_string(slowest) + " s");
  r.limit_seconds = limits::certificate_per_type * static_cast<double>(count);
  return detail::finish(r, t0, problems);
}

// 8. lambda = rho, p = d - 1: everything singular except in type A2.
inline CriterionResult check_rho_vanishing(const VerifyOptions& opt) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{8, "lambda = rho, p = d-1: all weights singular (A3 B2 B3 C3 G2 F4), not for A2", false, "", 0,
                    limits::rho_vanishing};
  std::vector<std::string> problems;
  for (const char* name : {"A3", "B2", "B3", "C3", "G2", "F4", "A2"}) {
    const auto rs = detail::rs_of(name);
    const int p = static_cast<int>(rs.num_positive()) - 1;
    const auto weights = lambda_p_weights(rs, p, rs.rho(), opt.enumeration);
    bool all_singular = true;
    for (const auto& [w, mult] : weights.entries) all_singular = all_singular && bwb(rs, w).is_singular();
    const auto page = e1_page(rs, p, rs.rho(), opt.enumeration);
    const bool expect_zero = std::string(name) != "A2";
    if (expect_zero && (!all_singular || !page.all_zero())) problems.push_back(std::string(name) + " has a non-singular weight");
    if (!expect_zero && page.all_zero()) problems.push_back("A2 page is all zero");
  }
  return detail::finish(r, t0, problems);
}

namespace detail {

// Weyl group of a rank <= 3 type as matrices on fundamental-weight coordinates,
// each tagged with its length (BFS depth in the simple reflections).
struct WeylElement {
  std::vector<std::vector<Int>> m;
  int length = 0;
};

inline std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  const std::size_t n = rs.rank();
  auto identity = std::vector<std::vector<Int>>(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) identity[i][i] = 1;
  std::vector<std::vector<std::vector<Int>>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    auto s = identity;  // s_i(x)_j = x_j - x_i (alpha_i, alpha_j^vee)
    for (std::size_t j = 0; j < n; ++j) s[j][i] -= rs.cartan()[j][i];
    gens.push_back(std::move(s));
  }
  std::map<std::vector<std::vector<Int>>, int> seen{{identity, 0}};
  std::deque<std::vector<std::vector<Int>>> queue{identity};
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      std::vector<std::vector<Int>> sw(n, std::vector<Int>(n, 0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) sw[i][j] += s[i][k] * w[k][j];
      if (seen.emplace(sw, seen[w] + 1).second) queue.push_back(std::move(sw));
    }
  }
  std::vector<WeylElement> out;
  for (auto& [m, l] : seen) out.push_back({m, l});
  return out;
}

inline Weight apply(const WeylElement& w, const Weight& x) {
  std::vector<Int> y(x.rank(), 0);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) y[i] += w.m[i][j] * x[j];
  return Weight(std::move(y));
}

}  // namespace detail

// 9. bwb agrees with brute-force regularisation over the whole Weyl group.
inline CriterionResult check_weyl_oracle(const VerifyOptions&) {
  const auto t0 = detail::Clock::now();
  CriterionResult r{9, "bwb matches brute-force Weyl group regularisation, rank <= 3, coords in [-6,6]", false, "", 0,
                    limits::weyl_oracle};
  std::vector<std::string> problems;
  std::size_t checked = 0;
  constexpr Int lo = -6, hi = 6;
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"}) {
    const auto rs = detail::rs_of(name);
    const auto group = detail::weyl_group(rs);
    std::vector<Int> c(rs.rank(), lo);
    for (;;) {
      const Weight lambda(c);
      const Weight x = lambda + rs.rho();
      BwbOutcome want;
      std::size_t fixers = 0;
      for (const auto& w : group) {
        const Weight y = detail::apply(w, x);
        if (y == x) ++fixers;
        if (y.is_strictly_dominant()) want = {BwbKind::concentrated, w.length, y - rs.rho(), 0};
      }
      if (fixers > 1) want = BwbOutcome::singular();
      auto got = bwb(rs, lambda);
      got.dimension = 0;
      if (got != want && problems.size() < 5) problems.push_back(std::string(name) + " at " + lambda.str());
      ++checked;
      std::size_t i = 0;
      while (i < c.size() && c[i] == hi) c[i++] = lo;
      if (i == c.size()) break;
      ++c[i];
    }
  }
  r.detail = std::to_string(checked) + " weights";
  return detail::finish(r, t0, problems);
}

inline std::vector<CriterionResult> verify_all(const VerifyOptions& opt) {
  return {check_root_tables(opt),       check_coxeter_table(opt),
          check_column_stats(opt),          check_threshold_sufficiency(opt),
          check_coxeter_bound_sufficiency(opt), check_pairing_bound(opt),
          check_certificates(opt),          check_rho_vanishing(opt),
          check_weyl_oracle(opt)};
}

inline std::string result_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.3f s, limit %.0f s)", r.seconds, r.limit_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + buf +
         (r.detail.empty() ? "" : " :: " + r.detail);
}

}  // namespace rootcoh
