#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootcoh {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Every failure the library reports goes through this type or a subclass.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration job would exceed its subset budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A weight in fundamental-weight coordinates: coords[i] = (lambda, alpha_i^vee).
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Int> coords) : coords_(coords) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<Int>(rank, 0)); }
  static Weight rho(std::size_t rank) { return Weight(std::vector<Int>(rank, 1)); }

  std::size_t rank() const noexcept { return coords_.size(); }
  Int operator[](std::size_t i) const { return coords_[i]; }
  Int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Int> coords() const noexcept { return coords_; }
  const std::vector<Int>& vec() const noexcept { return coords_; }

  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c >= 0; });
  }
  bool is_strictly_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c > 0; });
  }
  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(Int k) {
    for (auto& c : coords_) c *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= -1; }
  friend Weight operator*(Int k, Weight a) { return a *= k; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "(a,b,c)"
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coords_[i]);
    }
    return s + ')';
  }

private:
  void check_rank(const Weight& o) const {
    if (o.rank() != rank())
      throw Error("weight rank mismatch: " + std::to_string(rank()) + " vs " +
                  std::to_string(o.rank()));
  }

  std::vector<Int> coords_;
};

// Binomial coefficient as an exact big integer.
inline BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace rootcoh

template <>
struct std::hash<rootcoh::Weight> {
  std::size_t operator()(const rootcoh::Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto c : w.coords()) h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ull;
    return h;
  }
};
