#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <filesystem>
#include <fstream>

using namespace rootcoh;

namespace {

RootSystem rs_of(const std::string& s) { return build_root_system(SimpleType::parse(s)); }

std::filesystem::path fresh_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("rootcoh_test_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("edge degrees") {
  for (const char* name : {"A2", "B3", "G2", "D4"}) {
    const auto rs = rs_of(name);
    const auto zero = phi_sums(rs, 0, Sign::minus);
    CHECK(zero.entries == std::map<Weight, std::uint64_t>{{Weight::zero(rs.rank()), 1}});
    const auto top = phi_sums(rs, static_cast<int>(rs.num_positive()), Sign::minus);
    CHECK(top.entries == std::map<Weight, std::uint64_t>{{-2 * rs.rho(), 1}});
    CHECK_THROWS_AS(phi_sums(rs, -1, Sign::plus), Error);
    CHECK_THROWS_AS(phi_sums(rs, static_cast<int>(rs.num_positive()) + 1, Sign::plus), Error);
  }
}

TEST_CASE("G2 single roots") {
  const auto rs = rs_of("G2");
  const auto m = phi_sums(rs, 1, Sign::minus);
  std::map<Weight, std::uint64_t> want;
  for (const auto& w : {Weight{2, -3}, Weight{-1, 2}, Weight{1, -1}, Weight{0, 1}, Weight{-1, 3}, Weight{1, 0}})
    want[-w] = 1;
  CHECK(m.entries == want);
}

TEST_CASE("translated weights") {
  const auto rs = rs_of("A2");
  const auto one = lambda_p_weights(rs, 1, Weight{1, 1});
  CHECK(one.entries == std::map<Weight, std::uint64_t>{{Weight{-1, 2}, 1}, {Weight{2, -1}, 1}, {Weight{0, 0}, 1}});
  CHECK(one.shift == Weight{1, 1});
  CHECK(lambda_p_weights(rs, 0, Weight{3, 4}).entries == std::map<Weight, std::uint64_t>{{Weight{3, 4}, 1}});
  CHECK(lambda_p_weights(rs, 3, Weight{1, 1}).entries == std::map<Weight, std::uint64_t>{{Weight{-1, -1}, 1}});
  CHECK_THROWS_AS(lambda_p_weights(rs, 1, Weight{1}), Error);
}

TEST_CASE("enumeration agrees with bitmask enumeration") {
  for (const char* name : {"A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"}) {
    const auto rs = rs_of(name);
    for (int p = 0; p <= static_cast<int>(rs.num_positive()); ++p)
      for (int sign : {1, -1}) {
        INFO(name << " p=" << p << " sign " << sign);
        CHECK(phi_sums(rs, p, sign > 0 ? Sign::plus : Sign::minus).entries == oracle::subset_sums_by_mask(rs, p, sign));
      }
  }
}

TEST_CASE("packed and map accumulators agree") {
  for (const char* name : {"B4", "F4", "E6"}) {
    const auto rs = rs_of(name);
    const auto items = detail::signed_root_weights(rs, Sign::minus);
    for (int p : {1, 3, 5}) {
      auto slow = detail::enumerate_subset_sums<std::map<Weight, std::uint64_t>>(
          items, static_cast<std::size_t>(p), Weight::zero(rs.rank()), 1);
      CHECK(phi_sums(rs, p, Sign::minus).entries == slow);
    }
  }
  // a column range too wide for rank-64 packing falls back to the map path
  std::vector<Weight> wide;
  for (int k = 0; k < 6; ++k) {
    std::vector<Int> c(8, 0);
    c[0] = 1000;
    c[k + 1] = -1;
    wide.emplace_back(c);
  }
  CHECK_FALSE(detail::PackedCodec::make(wide, 8).has_value());
}

TEST_CASE("multiset invariants") {
  for (const char* name : {"A1", "A3", "B3", "C3", "G2", "D4", "F4"}) {
    const auto rs = rs_of(name);
    const int d = static_cast<int>(rs.num_positive());
    for (int p = 0; p <= d; ++p) {
      const auto minus = phi_sums(rs, p, Sign::minus);
      const auto plus = phi_sums(rs, p, Sign::plus);
      BigInt sum = 0;
      for (const auto& [w, m] : minus.entries) sum += m;
      CHECK(sum == binomial(rs.num_positive(), static_cast<std::size_t>(p)));
      CHECK(minus.total == sum);
      std::map<Weight, std::uint64_t> negated;
      for (const auto& [w, m] : plus.entries) negated[-w] = m;
      CHECK(negated == minus.entries);
      // complement: the other d - p roots sum to -2rho minus this sum
      const auto comp = phi_sums(rs, d - p, Sign::minus);
      CHECK(minus.multiplicity(Weight::zero(rs.rank())) == comp.multiplicity(-2 * rs.rho()));
      for (const auto& [w, m] : minus.entries) CHECK(comp.multiplicity(-2 * rs.rho() - w) == m);
    }
  }
}

TEST_CASE("column profile") {
  for (const char* name : {"A3", "B3", "D4", "E6"}) {
    const auto rs = rs_of(name);
    const auto prof = max_column_profile(rs, 1);
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      Int best = INT64_MIN;
      for (const auto& r : rs.positive_roots()) best = std::max(best, r.weight[i]);
      CHECK(prof[i] == best);
      if (rs.is_simply_laced()) CHECK(prof[i] == 2);
    }
    CHECK(max_column_profile(rs, static_cast<int>(rs.num_positive())) == (2 * rs.rho()).vec());
  }
  CHECK(max_column_profile(rs_of("G2"), 3)[1] == 6);
}

TEST_CASE("column profile from the matrix equals the enumerated profile") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    const auto rs = rs_of(name);
    for (int p = 0; p <= static_cast<int>(rs.num_positive()); ++p) {
      INFO(name << " p=" << p);
      CHECK(column_profile_from_matrix(rs, p) == max_column_profile(rs, p));
    }
  }
}

TEST_CASE("column maxima rise, plateau, then fall") {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"}) {
    const auto rs = rs_of(name);
    const int d = static_cast<int>(rs.num_positive());
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      bool falling = false;
      Int prev = column_profile_from_matrix(rs, 0)[i];
      for (int p = 1; p <= d; ++p) {
        const Int cur = column_profile_from_matrix(rs, p)[i];
        if (cur < prev) falling = true;
        INFO(name << " column " << i + 1 << " p=" << p);
        if (falling) CHECK(cur <= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("budget guard") {
  const auto e8 = rs_of("E8");
  CHECK_THROWS_AS(phi_sums(e8, 60, Sign::minus), BudgetExceeded);
  EnumerationOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(phi_sums(rs_of("A3"), 3, Sign::minus, tight), BudgetExceeded);
  CHECK_NOTHROW(phi_sums(rs_of("A3"), 1, Sign::minus, tight));
  CHECK(phi_sums(e8, 119, Sign::minus).support_size() == 120);
}

TEST_CASE("threaded enumeration matches single-threaded") {
  for (const char* name : {"B4", "F4", "C3"}) {
    const auto rs = rs_of(name);
    EnumerationOptions many;
    many.threads = 3;
    for (int p : {0, 1, 4, 9}) CHECK(phi_sums(rs, p, Sign::minus, many) == phi_sums(rs, p, Sign::minus));
  }
}

TEST_CASE("cache is transparent") {
  const auto dir = fresh_dir("cache");
  EnumerationOptions cached;
  cached.cache_dir = dir;
  const auto rs = rs_of("B3");
  for (int p : {0, 2, 5, 9}) {
    const auto plain = phi_sums(rs, p, Sign::minus);
    const auto first = phi_sums(rs, p, Sign::minus, cached);
    REQUIRE(std::filesystem::exists(wms_cache_path(dir, rs.type(), p, Sign::minus)));
    const auto second = phi_sums(rs, p, Sign::minus, cached);
    CHECK(first == plain);
    CHECK(second == plain);
  }
  CHECK(wms_cache_path(dir, rs.type(), 5, Sign::plus).filename() == "B3_5_+.wms");

  // damaged or mismatched files are ignored
  const auto path = wms_cache_path(dir, rs.type(), 2, Sign::minus);
  {
    std::ofstream out(path, std::ios::trunc);
    out << "rootcoh-wms 1\ntype B3\np 2\nsign -\nrank 3\nentries 1\ntotal 36\n0 0 0 36\n";
  }
  CHECK(read_wms_cache(dir, rs.type(), 2, Sign::minus).has_value());
  CHECK(phi_sums(rs, 2, Sign::minus, cached).support_size() == 1);  // a well-formed file is trusted
  {
    std::ofstream out(path, std::ios::trunc);
    out << "rootcoh-wms 1\ntype B3\np 2\nsign -\nrank 3\nentries 1\ntotal 35\n0 0 0 36\n";
  }
  CHECK_FALSE(read_wms_cache(dir, rs.type(), 2, Sign::minus).has_value());
  CHECK(phi_sums(rs, 2, Sign::minus, cached) == phi_sums(rs, 2, Sign::minus));
  {
    std::ofstream out(path, std::ios::trunc);
    out << "garbage";
  }
  CHECK_FALSE(read_wms_cache(dir, rs.type(), 2, Sign::minus).has_value());
  CHECK_FALSE(read_wms_cache(dir, rs_of("C3").type(), 2, Sign::minus).has_value());
  std::filesystem::remove_all(dir);
}
