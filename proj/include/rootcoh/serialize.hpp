#pragma once

// JSON documents, schema "rootcoh/1". Big integers travel as decimal strings.

#include "rootcoh/nonvanishing.hpp"
#include "rootcoh/vanishing.hpp"

#include <json.hpp>

namespace rootcoh {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "rootcoh/1";

namespace detail {

inline Json document(const char* kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

inline void expect_document(const Json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", "") != kSchema) throw Error("not a rootcoh/1 document");
  if (j.value("kind", "") != kind) throw Error(std::string("expected a '") + kind + "' document");
}

inline Json weight_json(const Weight& w) { return Json(w.vec()); }
inline Weight weight_from(const Json& j) { return Weight(j.get<std::vector<Int>>()); }
inline BigInt big_from(const Json& j) { return BigInt(j.get<std::string>()); }

inline std::optional<std::size_t> opt_index(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::size_t>();
}

}  // namespace detail

// BWB outcome (no envelope, embedded in other documents).
inline Json to_json(const BwbOutcome& o) {
  if (o.is_singular()) return Json{{"kind", "singular"}};
  return Json{{"kind", "concentrated"},
              {"degree", o.degree},
              {"dominant", detail::weight_json(o.dominant)},
              {"dim", o.dimension.str()}};
}

inline BwbOutcome bwb_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "singular") return BwbOutcome::singular();
  if (kind != "concentrated") throw Error("unknown BWB outcome kind '" + kind + "'");
  return {BwbKind::concentrated, j.at("degree").get<Int>(), detail::weight_from(j.at("dominant")),
          detail::big_from(j.at("dim"))};
}

inline Json to_json(const RootSystem& rs) {
  Json j = detail::document("root_system");
  j["type"] = rs.type().name();
  j["cartan"] = rs.cartan();
  j["half_norms"] = std::vector<Int>(rs.simple_half_norms().begin(), rs.simple_half_norms().end());
  j["h"] = rs.coxeter_number();
  j["h_per_root"] = std::vector<Int>(rs.coxeter_per_root().begin(), rs.coxeter_per_root().end());
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots())
    roots.push_back({{"root", r.root_coords}, {"weight", detail::weight_json(r.weight)}, {"coroot", r.coroot},
                     {"half_norm", r.half_norm}, {"height", r.height}});
  j["roots"] = std::move(roots);
  return j;
}

// Rebuilds from the type name and rejects documents that disagree with it.
inline RootSystem root_system_from_json(const Json& j) {
  detail::expect_document(j, "root_system");
  auto rs = build_root_system(SimpleType::parse(j.at("type").get<std::string>()));
  Json expected = to_json(rs);
  if (expected != j) throw Error("root system document does not match type " + rs.type().name());
  return rs;
}

inline Json to_json(const WeightMultiset& m) {
  Json j = detail::document("weight_multiset");
  j["type"] = m.type.name();
  j["p"] = m.p;
  j["sign"] = std::string(1, sign_char(m.sign));
  j["shift"] = detail::weight_json(m.shift);
  j["total"] = m.total.str();
  Json entries = Json::array();
  for (const auto& [w, mult] : m.entries) entries.push_back({{"weight", detail::weight_json(w)}, {"mult", mult}});
  j["entries"] = std::move(entries);
  return j;
}

inline WeightMultiset multiset_from_json(const Json& j) {
  detail::expect_document(j, "weight_multiset");
  WeightMultiset m;
  m.type = SimpleType::parse(j.at("type").get<std::string>());
  m.p = j.at("p").get<int>();
  const auto s = j.at("sign").get<std::string>();
  if (s != "+" && s != "-") throw Error("sign must be '+' or '-'");
  m.sign = s == "+" ? Sign::plus : Sign::minus;
  m.shift = detail::weight_from(j.at("shift"));
  m.total = detail::big_from(j.at("total"));
  for (const auto& e : j.at("entries")) m.entries.emplace(detail::weight_from(e.at("weight")), e.at("mult").get<std::uint64_t>());
  return m;
}

inline Json to_json(const VanishingReport& r, const RootSystem& rs) {
  Json j = detail::document("vanishing_report");
  j["type"] = r.type.name();
  j["p"] = r.p;
  j["lambda"] = detail::weight_json(r.lambda);
  j["verdict"] = to_string(r.verdict);
  j["first_violation"] = r.first_violation ? detail::weight_json(*r.first_violation) : Json(nullptr);
  j["counts"] = {{"dominant", r.count(WitnessKind::dominant)},
                 {"singular", r.count(WitnessKind::singular)},
                 {"violation", r.count(WitnessKind::violation)}};
  j["conclusion"] = r.conclusion();
  Json ws = Json::array();
  for (const auto& w : r.witnesses) {
    Json x{{"mu", detail::weight_json(w.mu)}, {"kind", to_string(w.kind)}};
    if (w.gamma) {
      x["gamma"] = *w.gamma;
      x["gamma_root"] = rs.root(*w.gamma).root_coords;
    }
    ws.push_back(std::move(x));
  }
  j["witnesses"] = std::move(ws);
  return j;
}

inline VanishingReport report_from_json(const Json& j) {
  detail::expect_document(j, "vanishing_report");
  VanishingReport r;
  r.type = SimpleType::parse(j.at("type").get<std::string>());
  r.p = j.at("p").get<int>();
  r.lambda = detail::weight_from(j.at("lambda"));
  r.verdict = j.at("verdict").get<std::string>() == "pass" ? Verdict::pass : Verdict::fail;
  if (!j.at("first_violation").is_null()) r.first_violation = detail::weight_from(j["first_violation"]);
  for (const auto& x : j.at("witnesses")) {
    Witness w;
    w.mu = detail::weight_from(x.at("mu"));
    const auto k = x.at("kind").get<std::string>();
    w.kind = k == "dominant" ? WitnessKind::dominant : k == "singular" ? WitnessKind::singular : WitnessKind::violation;
    w.gamma = detail::opt_index(x, "gamma");
    r.witnesses.push_back(std::move(w));
  }
  return r;
}

inline Json to_json(const E1Page& e) {
  Json j = detail::document("e1_page");
  j["type"] = e.type.name();
  j["p"] = e.p;
  j["lambda"] = detail::weight_json(e.lambda);
  Json b = Json::array();
  for (const auto& [q, v] : e.buckets) b.push_back({{"degree", q}, {"total", v.str()}});
  j["buckets"] = std::move(b);
  j["euler"] = e.euler.str();
  j["concentrated"] = e.concentrated();
  return j;
}

inline E1Page e1_from_json(const Json& j) {
  detail::expect_document(j, "e1_page");
  E1Page e;
  e.type = SimpleType::parse(j.at("type").get<std::string>());
  e.p = j.at("p").get<int>();
  e.lambda = detail::weight_from(j.at("lambda"));
  for (const auto& b : j.at("buckets")) e.buckets[b.at("degree").get<Int>()] = detail::big_from(b.at("total"));
  e.euler = detail::big_from(j.at("euler"));
  return e;
}

inline Json to_json(const NonvanishingCertificate& c, const RootSystem& rs) {
  Json j = detail::document("certificate");
  j["type"] = c.type.name();
  j["d"] = c.d;
  j["lambda"] = detail::weight_json(c.lambda);
  j["valid"] = c.valid;
  j["conclusion"] = c.conclusion;
  j["failures"] = c.failures;
  j["exceptional"] = c.exceptional;
  Json e1 = to_json(c.e1);
  e1.erase("schema");
  e1.erase("kind");
  j["e1"] = std::move(e1);
  j["euler_forces_degree_one"] = euler_forces_degree_one(c.e1);
  Json recs = Json::array();
  for (const auto& r : c.ordered) {
    Json x{{"source", r.entry.source},
           {"source_root", rs.root(r.entry.source).root_coords},
           {"root_coords", r.entry.root_coords},
           {"weight", detail::weight_json(r.entry.weight)},
           {"class", to_string(r.entry.kind)},
           {"bwb", to_json(r.outcome)}};
    if (r.entry.nu) {
      x["nu"] = *r.entry.nu;
      x["nu_root"] = rs.root(*r.entry.nu).root_coords;
    }
    recs.push_back(std::move(x));
  }
  j["weights"] = std::move(recs);
  return j;
}

inline NonvanishingCertificate certificate_from_json(const Json& j) {
  detail::expect_document(j, "certificate");
  NonvanishingCertificate c;
  c.type = SimpleType::parse(j.at("type").get<std::string>());
  c.d = j.at("d").get<std::size_t>();
  c.lambda = detail::weight_from(j.at("lambda"));
  c.valid = j.at("valid").get<bool>();
  c.conclusion = j.at("conclusion").get<std::string>();
  c.failures = j.at("failures").get<std::vector<std::string>>();
  c.exceptional = j.at("exceptional").get<std::vector<std::size_t>>();
  Json e1 = j.at("e1");
  e1["schema"] = kSchema;
  e1["kind"] = "e1_page";
  c.e1 = e1_from_json(e1);
  for (const auto& x : j.at("weights")) {
    CertificateRecord r;
    r.entry.source = x.at("source").get<std::size_t>();
    r.entry.root_coords = x.at("root_coords").get<std::vector<Int>>();
    r.entry.weight = detail::weight_from(x.at("weight"));
    const auto k = x.at("class").get<std::string>();
    r.entry.kind = k == "exceptional" ? ShiftedKind::exceptional
                   : k == "singular"  ? ShiftedKind::singular
                                      : ShiftedKind::unclassified;
    r.entry.nu = detail::opt_index(x, "nu");
    r.outcome = bwb_from_json(x.at("bwb"));
    c.ordered.push_back(std::move(r));
  }
  return c;
}

}  // namespace rootcoh
