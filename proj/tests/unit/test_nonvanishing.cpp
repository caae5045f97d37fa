#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace rootcoh;

namespace {

RootSystem rs_of(const std::string& s) { return build_root_system(SimpleType::parse(s)); }

}  // namespace

TEST_CASE("designated lambda") {
  CHECK(witness_lambda(rs_of("A2")) == Weight{1, 1});
  CHECK(witness_lambda(rs_of("G2")) == Weight{1, 3});
  CHECK(witness_lambda(rs_of("B4")) == Weight{3, 1, 1, 4});
  CHECK(witness_pair(rs_of("D6")) == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(witness_pair(rs_of("E7")) == std::pair<std::size_t, std::size_t>{4, 5});
  CHECK(witness_pair(rs_of("F4")) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_THROWS_AS(witness_lambda(rs_of("A1")), Error);
  for (const auto& name : detail::types_up_to_rank8()) {
    const auto rs = rs_of(name);
    if (rs.rank() < 2) continue;
    CHECK(witness_lambda(rs).is_strictly_dominant());
  }
}

TEST_CASE("weight classification") {
  const auto a2 = rs_of("A2");
  const auto entries = classify_shifted(a2, Weight{1, 1});
  REQUIRE(entries.size() == 3);
  for (const auto& e : entries) CHECK(e.kind == ShiftedKind::exceptional);

  const auto b2 = rs_of("B2");
  const auto b = classify_shifted(b2, witness_lambda(b2));
  CHECK(std::count_if(b.begin(), b.end(), [](const auto& e) { return e.kind == ShiftedKind::singular; }) == 1);
  for (const auto& e : b)
    if (e.kind == ShiftedKind::singular) CHECK(pairing(b2, e.weight + b2.rho(), b2.root(*e.nu)) == 0);

  CHECK_THROWS_AS(classify_shifted(a2, Weight{2, 2}), Error);
  const auto g2 = rs_of("G2");
  try {
    classify_shifted(g2, witness_lambda(g2));
    FAIL("G2 classified");
  } catch (const Error& e) {
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("(1,3)"));
  }
}

TEST_CASE("certificates") {
  const auto a2 = build_certificate(rs_of("A2"));
  CHECK(a2.valid);
  CHECK(a2.exceptional.size() == 3);
  CHECK(a2.conclusion == "H^{2,1} ≠ 0; Bott vanishing fails; G/B is not a toric variety");

  const auto b2 = build_certificate(rs_of("B2"));
  CHECK(b2.valid);
  CHECK_THAT(b2.conclusion, Catch::Matchers::ContainsSubstring("H^{3,1} ≠ 0; Bott vanishing fails"));

  const auto e8 = build_certificate(rs_of("E8"));
  CHECK(e8.valid);
  CHECK(e8.ordered.size() == 120);
  CHECK(std::count_if(e8.ordered.begin(), e8.ordered.end(), [](const auto& r) { return r.outcome.is_singular(); }) ==
        117);

  const auto g2 = build_certificate(rs_of("G2"));
  CHECK_FALSE(g2.valid);
  CHECK(g2.conclusion.empty());
  CHECK_FALSE(g2.failures.empty());
}

TEST_CASE("every certificate of rank 2 to 8 holds except G2") {
  for (const auto& name : detail::types_up_to_rank8()) {
    const auto rs = rs_of(name);
    if (rs.rank() < 2) continue;
    const auto c = build_certificate(rs);
    INFO(name);
    CHECK(c.valid == (rs.type().family != Family::G));
    // the filtration order never puts a larger weight first
    for (std::size_t s = 0; s < c.ordered.size(); ++s)
      for (std::size_t t = s + 1; t < c.ordered.size(); ++t) {
        const auto& a = c.ordered[s].entry.root_coords;
        const auto& b = c.ordered[t].entry.root_coords;
        bool b_le_a = true;
        for (std::size_t i = 0; i < a.size(); ++i) b_le_a = b_le_a && b[i] <= a[i];
        CHECK_FALSE(b_le_a);
      }
    // singular classifications re-derived from the pairing oracle
    for (const auto& r : c.ordered) {
      CHECK(r.outcome.is_singular() == oracle::regularity(rs, r.entry.weight + rs.rho()).singular);
      if (r.entry.nu) CHECK(pairing(rs, r.entry.weight + rs.rho(), rs.root(*r.entry.nu)) == 0);
    }
    if (c.valid) {
      CHECK(c.e1.bucket(0) == 1);
      CHECK(c.e1.bucket(1) == 2);
      CHECK(euler_forces_degree_one(c.e1));
    }
  }
}

TEST_CASE("E1 degree totals") {
  const auto a2 = rs_of("A2");
  const auto page = e1_page(a2, 2, Weight{1, 1});
  CHECK(page.buckets == std::map<Int, BigInt>{{0, 1}, {1, 2}});
  CHECK(page.euler == -1);
  CHECK(euler_forces_degree_one(page));
  CHECK(page == build_certificate(a2).e1);

  const auto zero = e1_page(a2, 0, Weight{1, 1});
  CHECK(zero.buckets == std::map<Int, BigInt>{{0, 8}});
  CHECK(zero.concentrated());
  CHECK(e1_page(a2, 3, Weight{1, 1}).all_zero());

  // lambda = 2 omega_1, p = 2: everything lands in degree 1
  const auto twisted = e1_page(a2, 2, Weight{2, 0});
  CHECK(twisted.bucket(1) == 3);
  CHECK(twisted.bucket(0) == 0);
}

TEST_CASE("Euler characteristic matches the alternating oracle sum") {
  for (const char* name : {"A3", "B3", "C3", "G2"}) {
    const auto rs = rs_of(name);
    const auto lambda = witness_lambda(rs);
    for (int p = 0; p <= static_cast<int>(rs.num_positive()); ++p) {
      const auto page = e1_page(rs, p, lambda);
      BigInt chi = 0;
      for (const auto& [w, m] : lambda_p_weights(rs, p, lambda).entries) {
        const auto reg = oracle::regularity(rs, w + rs.rho());
        if (reg.singular) continue;
        const BigInt dim = bwb(rs, w).dimension * m;
        chi += reg.length % 2 == 0 ? dim : BigInt(-dim);
      }
      CHECK(page.euler == chi);
    }
  }
}

TEST_CASE("explanation text") {
  const auto text = explain(build_certificate(rs_of("A2")));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("lambda = (1,1)"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("H^1 = V(0,0), dim 1"));
  CHECK_THAT(text, Catch::Matchers::ContainsSubstring("Bott vanishing fails"));
  CHECK_THAT(explain(build_certificate(rs_of("G2"))), Catch::Matchers::ContainsSubstring("failed: "));
}
