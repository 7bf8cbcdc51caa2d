#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcinv/budget.hpp"

namespace mcinv {

inline constexpr std::size_t kMaxRank = 8;

// Integer vector of fixed capacity. Used both for weights in the
// fundamental-weight basis and for plain exponent vectors.
struct Weight {
  std::array<std::int16_t, kMaxRank> c{};

  Weight() = default;
  Weight(std::initializer_list<int> xs) {
    if (xs.size() > kMaxRank) throw std::invalid_argument("weight longer than kMaxRank");
    std::size_t i = 0;
    for (int x : xs) c[i++] = static_cast<std::int16_t>(x);
  }
  static Weight from(const std::vector<int>& xs) {
    if (xs.size() > kMaxRank) throw std::invalid_argument("weight longer than kMaxRank");
    Weight w;
    for (std::size_t i = 0; i < xs.size(); ++i) w.c[i] = static_cast<std::int16_t>(xs[i]);
    return w;
  }
  static Weight unit(std::size_t i) {
    Weight w;
    w.c[i] = 1;
    return w;
  }

  int operator[](std::size_t i) const { return c[i]; }
  std::int16_t& operator[](std::size_t i) { return c[i]; }

  Weight operator+(const Weight& o) const {
    Weight r;
    for (std::size_t i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<std::int16_t>(c[i] + o.c[i]);
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r;
    for (std::size_t i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<std::int16_t>(c[i] - o.c[i]);
    return r;
  }
  Weight operator-() const { return Weight{} - *this; }
  Weight scaled(int k) const {
    Weight r;
    for (std::size_t i = 0; i < kMaxRank; ++i) r.c[i] = static_cast<std::int16_t>(c[i] * k);
    return r;
  }
  bool operator==(const Weight& o) const = default;
  auto operator<=>(const Weight& o) const = default;

  bool is_zero() const { return *this == Weight{}; }

  std::vector<int> to_vector(std::size_t n) const { return {c.begin(), c.begin() + static_cast<long>(n)}; }

  std::string str(std::size_t n) const {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + ")";
  }
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : w.c) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// A finite multiset of weights (a character in formal exponentials).
// Multiplicities are checked int64.
class WeightMultiset {
 public:
  using Map = std::unordered_map<Weight, std::int64_t, WeightHash>;

  WeightMultiset() = default;
  WeightMultiset(std::initializer_list<std::pair<Weight, std::int64_t>> xs) {
    for (const auto& [w, m] : xs) add(w, m);
  }

  static WeightMultiset one() {
    WeightMultiset r;
    r.add(Weight{}, 1);
    return r;
  }

  void add(const Weight& w, std::int64_t m) {
    if (m == 0) return;
    auto [it, inserted] = map_.try_emplace(w, m);
    if (!inserted) {
      it->second = checked_add(it->second, m);
      if (it->second == 0) map_.erase(it);
    }
  }

  std::int64_t at(const Weight& w) const {
    auto it = map_.find(w);
    return it == map_.end() ? 0 : it->second;
  }

  std::size_t distinct() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  const Map& map() const { return map_; }
  void reserve(std::size_t n) { map_.reserve(n); }

  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [w, m] : map_) t = checked_add(t, m);
    return t;
  }

  // Deterministic listing, sorted by weight.
  std::vector<std::pair<Weight, std::int64_t>> sorted() const {
    std::vector<std::pair<Weight, std::int64_t>> v(map_.begin(), map_.end());
    std::sort(v.begin(), v.end());
    return v;
  }

  WeightMultiset& operator+=(const WeightMultiset& o) {
    for (const auto& [w, m] : o.map_) add(w, m);
    return *this;
  }
  WeightMultiset& operator-=(const WeightMultiset& o) {
    for (const auto& [w, m] : o.map_) add(w, -m);
    return *this;
  }
  WeightMultiset scaled(std::int64_t k) const {
    WeightMultiset r;
    if (k == 0) return r;
    r.map_.reserve(map_.size());
    for (const auto& [w, m] : map_) r.map_.emplace(w, checked_mul(m, k));
    return r;
  }

  bool operator==(const WeightMultiset& o) const { return map_ == o.map_; }

  friend WeightMultiset multiply(const WeightMultiset& a, const WeightMultiset& b, ComputeBudget& budget) {
    const WeightMultiset& small = a.distinct() <= b.distinct() ? a : b;
    const WeightMultiset& big = a.distinct() <= b.distinct() ? b : a;
    budget.charge(static_cast<std::uint64_t>(small.distinct()) * big.distinct());
    WeightMultiset r;
    r.map_.reserve(big.distinct() * 2);
    for (const auto& [w1, m1] : small.map_) {
      for (const auto& [w2, m2] : big.map_) r.add(w1 + w2, checked_mul(m1, m2));
    }
    return r;
  }

 private:
  Map map_;
};

}  // namespace mcinv
