#pragma once

// On-disk cache of unshifted weight multisets, one file per (type, p, sign):
//
//   rootcoh-wms 1
//   type F4
//   p 3
//   sign -
//   rank 4
//   entries <k>
//   total <C(|Phi+|, p)>
//   <c_1> ... <c_rank> <multiplicity>     (k lines, sorted by weight)
//
// Files are written to a temporary name and renamed into place. Anything that
// fails to parse or does not match the request is treated as a miss.

#include "rootcoh/weight_multiset.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace rootcoh {

inline constexpr int kWmsCacheVersion = 1;

inline std::filesystem::path wms_cache_path(const std::filesystem::path& dir, const SimpleType& t, int p,
                                            Sign sign) {
  return dir / (t.name() + "_" + std::to_string(p) + "_" + sign_char(sign) + ".wms");
}

inline std::optional<WeightMultiset> read_wms_cache(const std::filesystem::path& dir, const SimpleType& t,
                                                    int p, Sign sign) {
  std::ifstream in(wms_cache_path(dir, t, p, sign));
  if (!in) return std::nullopt;
  std::string magic, key, type_name, sign_str, total_str;
  int version = 0, file_p = -1;
  std::size_t rank = 0, count = 0;
  if (!(in >> magic >> version) || magic != "rootcoh-wms" || version != kWmsCacheVersion) return std::nullopt;
  if (!(in >> key >> type_name) || key != "type" || type_name != t.name()) return std::nullopt;
  if (!(in >> key >> file_p) || key != "p" || file_p != p) return std::nullopt;
  if (!(in >> key >> sign_str) || key != "sign" || sign_str != std::string(1, sign_char(sign)))
    return std::nullopt;
  if (!(in >> key >> rank) || key != "rank" || rank != static_cast<std::size_t>(t.rank)) return std::nullopt;
  if (!(in >> key >> count) || key != "entries") return std::nullopt;
  if (!(in >> key >> total_str) || key != "total") return std::nullopt;

  WeightMultiset m;
  m.type = t;
  m.p = p;
  m.sign = sign;
  m.shift = Weight::zero(rank);
  try {
    m.total = BigInt(total_str);
  } catch (...) {
    return std::nullopt;
  }
  BigInt sum = 0;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Int> c(rank);
    for (auto& x : c)
      if (!(in >> x)) return std::nullopt;
    std::uint64_t mult = 0;
    if (!(in >> mult) || mult == 0) return std::nullopt;
    sum += mult;
    m.entries.emplace(Weight(std::move(c)), mult);
  }
  if (m.entries.size() != count || sum != m.total) return std::nullopt;
  return m;
}

inline void write_wms_cache(const std::filesystem::path& dir, const WeightMultiset& m) {
  static std::atomic<unsigned> counter{0};
  std::filesystem::create_directories(dir);
  const auto final_path = wms_cache_path(dir, m.type, m.p, m.sign);
  std::ostringstream tmp_name;
  tmp_name << final_path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
           << '.' << counter++;
  const auto tmp_path = dir / tmp_name.str();
  {
    std::ofstream out(tmp_path, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp_path.string());
    out << "rootcoh-wms " << kWmsCacheVersion << '\n'
        << "type " << m.type.name() << '\n'
        << "p " << m.p << '\n'
        << "sign " << sign_char(m.sign) << '\n'
        << "rank " << m.type.rank << '\n'
        << "entries " << m.entries.size() << '\n'
        << "total " << m.total << '\n';
    for (const auto& [w, mult] : m.entries) {
      for (auto c : w.coords()) out << c << ' ';
      out << mult << '\n';
    }
    if (!out) throw Error("failed writing cache file " + tmp_path.string());
  }
  std::filesystem::rename(tmp_path, final_path);
}

}  // namespace rootcoh
