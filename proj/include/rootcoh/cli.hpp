#pragma once

// Command-line front end. Exit codes: 0 success, 1 a check failed (a JSON
// failure record goes to stdout), 2 usage error.

#include "rootcoh/serialize.hpp"
#include "rootcoh/table.hpp"
#include "rootcoh/verify.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iomanip>
#include <ostream>

#ifndef ROOTCOH_GOLDEN_DIR
#define ROOTCOH_GOLDEN_DIR "tests/golden"
#endif

namespace rootcoh::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

inline Weight parse_lambda(const std::string& text, std::size_t rank) {
  std::vector<Int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    Int x = 0;
    const auto* first = item.data();
    const auto* last = item.data() + item.size();
    if (!item.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (item.empty() || ec != std::errc{} || ptr != last) throw UsageError("--lambda: '" + item + "' is not an integer");
    v.push_back(x);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (v.size() != rank)
    throw UsageError("--lambda has " + std::to_string(v.size()) + " entries, rank is " + std::to_string(rank));
  return Weight(std::move(v));
}

namespace detail {

struct Settings {
  std::string type;
  int p = -1;
  std::string lambda;
  std::string format = "table";
  std::string cache_dir;
  std::uint64_t budget = EnumerationOptions{}.budget;
  unsigned threads = 1;
  bool explain = false;
  bool witnesses = false;
  bool stats = false;
  std::string sign = "-";
  std::string golden_dir = ROOTCOH_GOLDEN_DIR;

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.budget = budget;
    o.threads = std::max(1u, threads);
    if (!cache_dir.empty()) o.cache_dir = cache_dir;
    return o;
  }
  bool json() const { return format == "json"; }
};

inline void failure_record(std::ostream& out, const std::string& command, const std::string& what, Json extra = {}) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "failure";
  j["command"] = command;
  j["reason"] = what;
  if (!extra.is_null()) j["data"] = std::move(extra);
  out << j.dump() << "\n";
}

inline std::string bwb_text(const BwbOutcome& o) {
  if (o.is_singular()) return "singular";
  return "H^" + std::to_string(o.degree) + " = V" + o.dominant.str() + ", dim " + o.dimension.str();
}

inline std::string vec_text(std::span<const Int> v) { return paren_list(v); }

inline int cmd_roots(const RootSystem& rs, const Settings& s, std::ostream& out) {
  if (s.json()) {
    Json j = to_json(rs);
    if (s.stats) {
      const auto m = positive_roots_matrix(rs);
      Json cols = Json::array();
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        const auto row = m.column_stats[i].as_row();
        cols.push_back({{"class", to_string(m.column_class[i])}, {"counts", row}});
      }
      j["column_stats"] = std::move(cols);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << roots_table(rs);
  if (s.stats) {
    const auto m = positive_roots_matrix(rs);
    out << "\ncolumn  class        0   1   2   3  -1  -2  -3\n";
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      out << std::setw(6) << i + 1 << "  " << std::left << std::setw(9) << to_string(m.column_class[i]) << std::right;
      for (auto c : m.column_stats[i].as_row()) out << std::setw(4) << c;
      out << "\n";
    }
  }
  return kOk;
}

inline int cmd_coxeter(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const auto cx = coxeter_numbers(rs);
  if (s.json()) {
    Json j = rootcoh::detail::document("coxeter");
    j["type"] = rs.type().name();
    j["h"] = cx.h;
    j["h_per_root"] = cx.per_root;
    j["half_norms"] = std::vector<Int>(rs.simple_half_norms().begin(), rs.simple_half_norms().end());
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << rs.type().name() << ": h = " << cx.h << "\n";
  for (std::size_t i = 0; i < cx.per_root.size(); ++i)
    out << "  h_alpha" << i + 1 << " = " << cx.per_root[i] << (rs.simple_half_norms()[i] == rs.min_half_norm() ? "" : "  (long)")
        << "\n";
  return kOk;
}

inline int cmd_bwb(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const auto lambda = parse_lambda(s.lambda, rs.rank());
  const auto o = bwb(rs, lambda);
  if (s.json()) {
    Json j = rootcoh::detail::document("bwb");
    j["type"] = rs.type().name();
    j["lambda"] = lambda.vec();
    j["outcome"] = to_json(o);
    out << j.dump(2) << "\n";
  } else {
    out << "L" << lambda.str() << ": " << bwb_text(o) << "\n";
  }
  return kOk;
}

inline int cmd_phi(const RootSystem& rs, const Settings& s, std::ostream& out) {
  if (s.sign != "+" && s.sign != "-") throw UsageError("--sign must be + or -");
  WeightMultiset m = s.lambda.empty()
                         ? phi_sums(rs, s.p, s.sign == "+" ? Sign::plus : Sign::minus, s.enumeration())
                         : lambda_p_weights(rs, s.p, parse_lambda(s.lambda, rs.rank()), s.enumeration());
  if (s.json()) {
    out << to_json(m).dump(2) << "\n";
    return kOk;
  }
  out << "# " << rs.type().name() << " p=" << m.p << " sign " << sign_char(m.sign) << " shift " << m.shift.str()
      << ": " << m.support_size() << " distinct weights, total " << m.total << "\n";
  for (const auto& [w, mult] : m.entries) out << vec_text(w.coords()) << " x " << mult << "\n";
  return kOk;
}

inline int cmd_e1(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const auto page = e1_page(rs, s.p, parse_lambda(s.lambda, rs.rank()), s.enumeration());
  if (s.json()) {
    out << to_json(page).dump(2) << "\n";
    return kOk;
  }
  out << rs.type().name() << " p=" << page.p << " lambda=" << page.lambda.str() << "\n";
  if (page.all_zero()) out << "  all degrees 0\n";
  for (const auto& [q, v] : page.buckets) out << "  degree " << q << ": " << v << "\n";
  out << "  euler characteristic " << page.euler << (page.concentrated() ? ", concentrated" : ", not concentrated")
      << "\n";
  return kOk;
}

inline int cmd_check(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const auto lambda = parse_lambda(s.lambda, rs.rank());
  if (!lambda.is_dominant()) throw UsageError("--lambda must be dominant for check");
  const auto r = check_weights(rs, s.p, lambda, s.enumeration());
  if (s.json()) {
    out << to_json(r, rs).dump(2) << "\n";
  } else {
    out << rs.type().name() << " p=" << r.p << " lambda=" << r.lambda.str() << ": " << to_string(r.verdict) << "\n"
        << "  " << r.witnesses.size() << " weights: " << r.count(WitnessKind::dominant) << " dominant, "
        << r.count(WitnessKind::singular) << " singular, " << r.count(WitnessKind::violation) << " violations\n"
        << "  " << r.conclusion() << "\n";
    if (s.witnesses)
      for (const auto& w : r.witnesses) {
        out << "  mu=" << w.mu.str() << " " << to_string(w.kind);
        if (w.gamma) out << " gamma=" << vec_text(rs.root(*w.gamma).root_coords);
        out << "\n";
      }
    if (r.verdict == Verdict::fail)
      failure_record(out, "check", "weight condition violated",
                     {{"type", rs.type().name()}, {"p", r.p}, {"lambda", r.lambda.vec()}, {"mu", r.first_violation->vec()}});
  }
  return r.verdict == Verdict::pass ? kOk : kCheckFailed;
}

inline int cmd_thresholds(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const int d = static_cast<int>(rs.num_positive());
  const int lo = s.p >= 0 ? s.p : 0, hi = s.p >= 0 ? s.p : d;
  if (lo > d) throw UsageError("-p out of range [0, " + std::to_string(d) + "]");
  const auto per = coxeter_bound(rs, BoundKind::per_root), glob = coxeter_bound(rs, BoundKind::global);
  if (s.json()) {
    Json j = rootcoh::detail::document("thresholds");
    j["type"] = rs.type().name();
    Json rows = Json::array();
    for (int p = lo; p <= hi; ++p) {
      auto prof = column_profile_from_matrix(rs, p);
      for (auto& x : prof) x -= 1;
      rows.push_back({{"p", p}, {"threshold", threshold_bands(rs, p)}, {"profile_minus_one", prof}});
    }
    j["rows"] = std::move(rows);
    j["per_root"] = per;
    j["global"] = glob;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << rs.type().name() << "  p  threshold  column-max-1\n";
  for (int p = lo; p <= hi; ++p) {
    auto prof = column_profile_from_matrix(rs, p);
    for (auto& x : prof) x -= 1;
    const auto th = threshold_bands(rs, p);
    bool covers = true;
    for (std::size_t i = 0; i < th.size(); ++i) covers = covers && th[i] >= prof[i];
    out << std::setw(4) << p << "  " << vec_text(th) << "  " << vec_text(prof) << (covers ? "" : "  *") << "\n";
  }
  out << "per-root bound " << vec_text(per) << ", global bound " << vec_text(glob) << "\n";
  return kOk;
}

inline int cmd_certify(const RootSystem& rs, const Settings& s, std::ostream& out) {
  const auto c = build_certificate(rs);
  if (s.json()) {
    out << to_json(c, rs).dump(2) << "\n";
    return c.valid ? kOk : kCheckFailed;
  }
  out << rs.type().name() << ": d = " << c.d << ", lambda = " << c.lambda.str() << "\n";
  for (auto k : c.exceptional) {
    const auto& r = c.ordered[k];
    out << "  [" << k << "] " << r.entry.weight.str() << " from " << vec_text(rs.root(r.entry.source).root_coords)
        << ": " << bwb_text(r.outcome) << "\n";
  }
  out << "  " << c.ordered.size() - c.exceptional.size() << " singular weights, euler characteristic " << c.e1.euler
      << "\n";
  if (s.explain) out << "\n" << explain(c);
  if (c.valid) {
    out << "certificate valid: " << c.conclusion << "\n";
    return kOk;
  }
  out << "certificate invalid\n";
  for (const auto& f : c.failures) out << "  - " << f << "\n";
  if (euler_forces_degree_one(c.e1))
    out << "  (degrees 0 and 1 only with euler characteristic " << c.e1.euler << ": H^{" << c.d - 1
        << ",1} != 0 by counting)\n";
  failure_record(out, "certify", "certificate invalid",
                 {{"type", rs.type().name()}, {"failures", c.failures}, {"euler", c.e1.euler.str()}});
  return kCheckFailed;
}

inline int cmd_verify_all(const Settings& s, std::ostream& out) {
  VerifyOptions opt;
  opt.golden_dir = s.golden_dir;
  opt.enumeration = s.enumeration();
  const auto results = verify_all(opt);
  bool ok = true;
  Json failed = Json::array();
  if (s.json()) {
    Json j = rootcoh::detail::document("verify_all");
    Json rows = Json::array();
    for (const auto& r : results) {
      ok = ok && r.passed;
      rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                      {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}});
    }
    j["criteria"] = std::move(rows);
    j["passed"] = ok;
    out << j.dump(2) << "\n";
    return ok ? kOk : kCheckFailed;
  }
  for (const auto& r : results) {
    out << result_line(r) << "\n";
    if (!r.passed) {
      ok = false;
      failed.push_back({{"id", r.id}, {"detail", r.detail}});
    }
  }
  if (!ok) failure_record(out, "verify-all", "criteria failed", failed);
  return ok ? kOk : kCheckFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root system combinatorics, Borel-Weil-Bott bookkeeping and vanishing checks", "rootcoh"};
  app.require_subcommand(1);
  detail::Settings s;

  auto common = [&](CLI::App* sub, bool needs_type) {
    if (needs_type) sub->add_option("type", s.type, "simple type, e.g. A3, F4, G2")->required();
    sub->add_option("--format", s.format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--cache-dir", s.cache_dir, "directory for cached weight multisets");
    sub->add_option("--budget", s.budget, "maximum number of subsets to enumerate");
    sub->add_option("--threads", s.threads, "worker threads for enumeration")->check(CLI::Range(1u, 256u));
  };
  auto* roots = app.add_subcommand("roots", "positive roots in both coordinate systems");
  common(roots, true);
  roots->add_flag("--stats", s.stats, "append per-column counts");
  auto* coxeter = app.add_subcommand("coxeter", "Coxeter number and per-root Coxeter numbers");
  common(coxeter, true);
  auto* bwb_cmd = app.add_subcommand("bwb", "cohomology of a line bundle");
  common(bwb_cmd, true);
  bwb_cmd->add_option("--lambda", s.lambda, "weight, comma separated")->required();
  auto* phi = app.add_subcommand("phi", "sums of p distinct roots (or weights of the twisted exterior power)");
  common(phi, true);
  phi->add_option("-p", s.p, "exterior degree")->required();
  phi->add_option("--sign", s.sign, "root sign, + or -");
  phi->add_option("--lambda", s.lambda, "translate by this weight");
  auto* e1 = app.add_subcommand("e1", "per-degree totals of BWB over the weights");
  common(e1, true);
  e1->add_option("-p", s.p, "exterior degree")->required();
  e1->add_option("--lambda", s.lambda, "weight, comma separated")->required();
  auto* check = app.add_subcommand("check", "dominant-or-singular check over Phi^-_p");
  common(check, true);
  check->add_option("-p", s.p, "exterior degree")->required();
  check->add_option("--lambda", s.lambda, "dominant weight, comma separated")->required();
  check->add_flag("--witnesses", s.witnesses, "list every weight");
  auto* thresholds = app.add_subcommand("thresholds", "closed-form thresholds per exterior degree");
  common(thresholds, true);
  thresholds->add_option("-p", s.p, "single exterior degree");
  auto* certify = app.add_subcommand("certify", "non-vanishing certificate for H^{d-1,1}");
  common(certify, true);
  certify->add_flag("--explain", s.explain, "print the exact sequences schematically");
  auto* verify = app.add_subcommand("verify-all", "run every reproduction check");
  common(verify, false);
  verify->add_option("--golden-dir", s.golden_dir, "directory holding the golden root tables");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "verify-all") return detail::cmd_verify_all(s, out);
    SimpleType t;
    try {
      t = SimpleType::parse(s.type);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const auto rs = build_root_system(t);
    const int d = static_cast<int>(rs.num_positive());
    if ((name == "phi" || name == "e1" || name == "check") && (s.p < 0 || s.p > d))
      throw UsageError("-p must lie in [0, " + std::to_string(d) + "] for " + t.name());
    if (name == "roots") return detail::cmd_roots(rs, s, out);
    if (name == "coxeter") return detail::cmd_coxeter(rs, s, out);
    if (name == "bwb") return detail::cmd_bwb(rs, s, out);
    if (name == "phi") return detail::cmd_phi(rs, s, out);
    if (name == "e1") return detail::cmd_e1(rs, s, out);
    if (name == "check") return detail::cmd_check(rs, s, out);
    if (name == "thresholds") return detail::cmd_thresholds(rs, s, out);
    if (name == "certify") {
      if (t.rank < 2) throw UsageError("certify needs rank >= 2");
      return detail::cmd_certify(rs, s, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "\n";
    detail::failure_record(out, name, e.what());
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    detail::failure_record(out, name, e.what());
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace rootcoh::cli
