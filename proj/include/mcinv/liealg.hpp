#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mcinv/budget.hpp"
#include "mcinv/symfunc.hpp"
#include "mcinv/weight.hpp"

namespace mcinv {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

struct SimpleFactor {
  CartanType type;
  int rank;
  bool operator==(const SimpleFactor&) const = default;
};

// Simple or semisimple complex Lie algebra given by its Cartan data.
// Bourbaki numbering; cartan(i, j) = <alpha_i, alpha_j^vee>, so row i is the
// simple root alpha_i written in fundamental weights.
class AlgebraSpec {
 public:
  static AlgebraSpec simple(CartanType t, int rank) { return product({SimpleFactor{t, rank}}); }

  static AlgebraSpec product(std::vector<SimpleFactor> factors) {
    auto d = std::make_shared<Data>();
    d->factors = std::move(factors);
    d->build();
    AlgebraSpec a;
    a.d_ = std::move(d);
    return a;
  }

  // "E7", "C3", "A1A1A1", "D6"
  static AlgebraSpec parse(std::string_view s) {
    std::vector<SimpleFactor> fs;
    std::size_t i = 0;
    while (i < s.size()) {
      char t = s[i++];
      if (t >= 'a' && t <= 'z') t = static_cast<char>(t - 'a' + 'A');
      if (std::string_view("ABCDE").find(t) == std::string_view::npos)
        throw std::invalid_argument("unknown Cartan type in '" + std::string(s) + "'");
      int r = 0;
      std::size_t start = i;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') r = r * 10 + (s[i++] - '0');
      if (i == start) throw std::invalid_argument("missing rank in '" + std::string(s) + "'");
      fs.push_back({static_cast<CartanType>(t), r});
    }
    if (fs.empty()) throw std::invalid_argument("empty algebra name");
    return product(std::move(fs));
  }

  const std::string& name() const { return d_->name; }
  int rank() const { return d_->rank; }
  const std::vector<SimpleFactor>& factors() const { return d_->factors; }
  int cartan(int i, int j) const { return d_->simple[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Weight& simple_root(int i) const { return d_->simple[static_cast<std::size_t>(i)]; }
  const std::vector<Weight>& positive_roots() const { return d_->roots; }
  const std::vector<int>& root_heights() const { return d_->heights; }
  const Weight& rho() const { return d_->rho; }
  Weight fundamental(int i) const { return Weight::unit(static_cast<std::size_t>(i)); }

  // Invariant form on weights, scaled to integers (scale is fixed per algebra).
  std::int64_t form(const Weight& u, const Weight& v) const {
    std::int64_t s = 0;
    const int n = d_->rank;
    for (int i = 0; i < n; ++i) {
      if (u.c[static_cast<std::size_t>(i)] == 0) continue;
      std::int64_t t = 0;
      for (int j = 0; j < n; ++j) t += d_->gram[static_cast<std::size_t>(i * n + j)] * v.c[static_cast<std::size_t>(j)];
      s += t * u.c[static_cast<std::size_t>(i)];
    }
    return s;
  }

  // <mu, rho^vee> scaled by a positive constant; orders weights compatibly with dominance.
  std::int64_t height(const Weight& mu) const {
    std::int64_t s = 0;
    for (int i = 0; i < d_->rank; ++i) s += d_->height_coef[static_cast<std::size_t>(i)] * mu.c[static_cast<std::size_t>(i)];
    return s;
  }

  bool is_dominant(const Weight& w) const {
    for (int i = 0; i < d_->rank; ++i)
      if (w.c[static_cast<std::size_t>(i)] < 0) return false;
    return true;
  }

  Weight reflect(const Weight& w, int i) const {
    const int k = w.c[static_cast<std::size_t>(i)];
    if (k == 0) return w;
    Weight r = w;
    const Weight& a = d_->simple[static_cast<std::size_t>(i)];
    for (int j = 0; j < d_->rank; ++j) r.c[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(r.c[static_cast<std::size_t>(j)] - k * a.c[static_cast<std::size_t>(j)]);
    return r;
  }

  // Dominant representative of the Weyl orbit and (-1)^(number of reflections used).
  std::pair<Weight, int> to_dominant(Weight w) const {
    int sign = 1;
    for (;;) {
      int i = 0;
      while (i < d_->rank && w.c[static_cast<std::size_t>(i)] >= 0) ++i;
      if (i == d_->rank) return {w, sign};
      w = reflect(w, i);
      sign = -sign;
    }
  }

  std::size_t weight_dim() const { return static_cast<std::size_t>(d_->rank); }
  std::string weight_str(const Weight& w) const { return w.str(weight_dim()); }

  bool operator==(const AlgebraSpec& o) const { return d_->factors == o.d_->factors; }

 private:
  struct Data {
    std::vector<SimpleFactor> factors;
    std::string name;
    int rank = 0;
    std::vector<Weight> simple;
    std::vector<int> root_len;  // (alpha_i, alpha_i), short roots of type A/D/E have length 2
    std::vector<std::int64_t> gram;
    std::vector<std::int64_t> height_coef;
    std::vector<Weight> roots;
    std::vector<int> heights;
    Weight rho;

    void build() {
      for (const auto& f : factors) {
        validate(f);
        name += static_cast<char>(f.type);
        name += std::to_string(f.rank);
        rank += f.rank;
      }
      if (rank > static_cast<int>(kMaxRank)) throw std::invalid_argument("total rank exceeds kMaxRank");
      simple.assign(static_cast<std::size_t>(rank), Weight{});
      root_len.assign(static_cast<std::size_t>(rank), 2);
      int off = 0;
      for (const auto& f : factors) {
        add_factor(f, off);
        off += f.rank;
      }
      build_form();
      build_roots();
      for (int i = 0; i < rank; ++i) rho.c[static_cast<std::size_t>(i)] = 1;
    }

    static void validate(const SimpleFactor& f) {
      const int r = f.rank;
      bool ok = r >= 1;
      switch (f.type) {
        case CartanType::A: break;
        case CartanType::B: ok = r >= 2; break;
        case CartanType::C: ok = r >= 2; break;
        case CartanType::D: ok = r >= 3; break;
        case CartanType::E: ok = r >= 6 && r <= 8; break;
      }
      if (!ok) throw std::invalid_argument(std::string("unsupported simple factor ") + static_cast<char>(f.type) + std::to_string(r));
    }

    void link(int off, int i, int j, int aij, int aji) {
      simple[static_cast<std::size_t>(off + i)].c[static_cast<std::size_t>(off + j)] = static_cast<std::int16_t>(aij);
      simple[static_cast<std::size_t>(off + j)].c[static_cast<std::size_t>(off + i)] = static_cast<std::int16_t>(aji);
    }

    void add_factor(const SimpleFactor& f, int off) {
      const int n = f.rank;
      for (int i = 0; i < n; ++i) simple[static_cast<std::size_t>(off + i)].c[static_cast<std::size_t>(off + i)] = 2;
      switch (f.type) {
        case CartanType::A:
          for (int i = 0; i + 1 < n; ++i) link(off, i, i + 1, -1, -1);
          break;
        case CartanType::B:
          for (int i = 0; i + 2 < n; ++i) link(off, i, i + 1, -1, -1);
          link(off, n - 2, n - 1, -2, -1);
          root_len[static_cast<std::size_t>(off + n - 1)] = 1;
          break;
        case CartanType::C:
          for (int i = 0; i + 2 < n; ++i) link(off, i, i + 1, -1, -1);
          link(off, n - 2, n - 1, -1, -2);
          root_len[static_cast<std::size_t>(off + n - 1)] = 4;
          break;
        case CartanType::D:
          for (int i = 0; i + 2 < n; ++i) link(off, i, i + 1, -1, -1);
          link(off, n - 3, n - 1, -1, -1);
          break;
        case CartanType::E:
          link(off, 0, 2, -1, -1);
          link(off, 1, 3, -1, -1);
          for (int i = 2; i + 1 < n; ++i) link(off, i, i + 1, -1, -1);
          break;
      }
    }

    void build_form() {
      const std::size_t n = static_cast<std::size_t>(rank);
      // inverse Cartan matrix, A[i][j] = simple[i].c[j]
      std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = simple[i].c[j];
        m[i][n + i] = 1;
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        mpq_class inv = 1 / m[col][col];
        for (auto& x : m[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == col || m[r][col] == 0) continue;
          mpq_class f = m[r][col];
          for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[col][k];
        }
      }
      // (omega_i, omega_k) = Ainv[i][k] * len_k / 2
      std::vector<mpq_class> g(n * n), hc(n);
      mpz_class den = 1;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
          g[i * n + k] = m[i][n + k] * root_len[k] / 2;
          g[i * n + k].canonicalize();
          den = lcm(den, mpz_class(g[i * n + k].get_den()));
          hc[i] += m[i][n + k];
        }
      }
      mpz_class hden = 1;
      for (auto& x : hc) {
        x.canonicalize();
        hden = lcm(hden, mpz_class(x.get_den()));
      }
      gram.resize(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        mpq_class v = g[i] * den;
        gram[i] = mpz_class(v.get_num()).get_si();
      }
      height_coef.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        mpq_class v = hc[i] * hden;
        height_coef[i] = mpz_class(v.get_num()).get_si();
      }
    }

    void build_roots() {
      const std::size_t n = static_cast<std::size_t>(rank);
      // roots in simple-root coordinates, generated level by level
      using Coords = std::vector<int>;
      std::set<Coords> all;
      std::vector<Coords> level;
      for (std::size_t i = 0; i < n; ++i) {
        Coords c(n, 0);
        c[i] = 1;
        level.push_back(c);
        all.insert(c);
      }
      auto to_weight = [&](const Coords& c) {
        Weight w;
        for (std::size_t i = 0; i < n; ++i)
          if (c[i]) w = w + simple[i].scaled(c[i]);
        return w;
      };
      std::vector<Coords> ordered;
      while (!level.empty()) {
        std::sort(level.begin(), level.end(), std::greater<>());
        std::vector<Coords> next;
        for (const Coords& b : level) {
          ordered.push_back(b);
          Weight bw = to_weight(b);
          for (std::size_t i = 0; i < n; ++i) {
            int p = 0;
            Coords d = b;
            while (true) {
              if (d[i] == 0) break;
              --d[i];
              if (!all.count(d)) break;
              ++p;
            }
            int q = p - bw.c[i];
            if (q > 0) {
              Coords up = b;
              ++up[i];
              if (all.insert(up).second) next.push_back(up);
            }
          }
        }
        level = std::move(next);
      }
      for (const Coords& c : ordered) {
        roots.push_back(to_weight(c));
        heights.push_back(std::accumulate(c.begin(), c.end(), 0));
      }
    }
  };

  std::shared_ptr<const Data> d_;
};

inline std::size_t expected_positive_root_count(const SimpleFactor& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank);
  switch (f.type) {
    case CartanType::A: return n * (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
    case CartanType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return 0;
}

// ---- dimensions ------------------------------------------------------

inline mpz_class weyl_dim(const AlgebraSpec& alg, const Weight& hw) {
  if (!alg.is_dominant(hw)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  const Weight lr = hw + alg.rho();
  mpz_class num = 1, den = 1;
  for (const Weight& a : alg.positive_roots()) {
    num *= alg.form(lr, a);
    den *= alg.form(alg.rho(), a);
  }
  return num / den;
}

inline mpz_class gl_dim(const Partition& lambda, long N) {
  if (N < 1) throw std::invalid_argument("gl_dim: N must be at least 1");
  mpz_class num = 1, den = 1;
  const Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.height(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      num *= N + j - i;
      den *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    }
  }
  return num / den;
}

// ---- weights of irreducibles ---------------------------------------------

struct DominantEntry {
  Weight weight;
  std::int64_t mult;
  int depth;  // height of hw - weight
};

// Dominant weights of V(hw) with multiplicities, by Freudenthal's formula.
// Ordered by increasing depth.
inline std::vector<DominantEntry> dominant_character(const AlgebraSpec& alg, const Weight& hw, ComputeBudget& budget) {
  if (!alg.is_dominant(hw)) throw std::invalid_argument("dominant_character: weight is not dominant");
  const auto& roots = alg.positive_roots();
  const auto& hts = alg.root_heights();

  // dominant weights below hw: subtract positive roots, keep dominant ones
  std::map<int, std::vector<Weight>> buckets;
  std::unordered_map<Weight, int, WeightHash> depth;
  buckets[0].push_back(hw);
  depth[hw] = 0;
  std::vector<DominantEntry> out;
  for (auto it = buckets.begin(); it != buckets.end(); ++it) {
    std::sort(it->second.begin(), it->second.end(), std::greater<>());
    for (const Weight& mu : it->second) {
      out.push_back({mu, 0, it->first});
      for (std::size_t r = 0; r < roots.size(); ++r) {
        Weight nu = mu - roots[r];
        if (!alg.is_dominant(nu) || depth.count(nu)) continue;
        int d = it->first + hts[r];
        depth[nu] = d;
        buckets[d].push_back(nu);
      }
    }
    budget.charge(it->second.size() * roots.size());
  }

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  const Weight hr = hw + alg.rho();
  const std::int64_t top = alg.form(hr, hr);
  for (auto& e : out) {
    if (e.depth == 0) {
      e.mult = 1;
      mult[e.weight] = 1;
      continue;
    }
    const Weight mr = e.weight + alg.rho();
    const std::int64_t denom = top - alg.form(mr, mr);
    std::int64_t sum = 0;
    std::uint64_t steps = 0;
    for (const Weight& a : roots) {
      Weight nu = e.weight + a;
      for (;;) {
        ++steps;
        auto dm = mult.find(alg.to_dominant(nu).first);
        if (dm == mult.end()) break;
        sum = checked_add(sum, checked_mul(dm->second, alg.form(nu, a)));
        nu = nu + a;
      }
    }
    budget.charge(steps);
    const std::int64_t num = checked_mul(2, sum);
    if (denom <= 0 || num % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    e.mult = num / denom;
    mult[e.weight] = e.mult;
  }
  return out;
}

inline std::vector<DominantEntry> dominant_character(const AlgebraSpec& alg, const Weight& hw) {
  ComputeBudget b = ComputeBudget::unlimited();
  return dominant_character(alg, hw, b);
}

inline std::vector<Weight> weyl_orbit(const AlgebraSpec& alg, const Weight& w) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> out{w};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < alg.rank(); ++i) {
      if (out[k].c[static_cast<std::size_t>(i)] == 0) continue;
      Weight r = alg.reflect(out[k], i);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Full weight multiset of V(hw).
inline WeightMultiset weight_multiplicities(const AlgebraSpec& alg, const Weight& hw, ComputeBudget& budget) {
  WeightMultiset r;
  for (const auto& e : dominant_character(alg, hw, budget)) {
    auto orbit = weyl_orbit(alg, e.weight);
    budget.charge(orbit.size());
    for (const Weight& w : orbit) r.add(w, e.mult);
  }
  return r;
}

inline WeightMultiset weight_multiplicities(const AlgebraSpec& alg, const Weight& hw) {
  ComputeBudget b = ComputeBudget::unlimited();
  return weight_multiplicities(alg, hw, b);
}

// ---- sums of irreducibles ------------------------------------------------

struct Irreducible {
  Weight hw;
  std::int64_t mult;
  bool operator==(const Irreducible&) const = default;
};

// A direct sum of irreducibles, listed by decreasing height of the highest weight.
class Decomposition {
 public:
  Decomposition() = default;
  Decomposition(const AlgebraSpec& alg, std::map<Weight, std::int64_t> m) {
    for (const auto& [w, k] : m)
      if (k != 0) terms_.push_back({w, k});
    std::sort(terms_.begin(), terms_.end(), [&](const Irreducible& a, const Irreducible& b) {
      auto ha = alg.height(a.hw), hb = alg.height(b.hw);
      if (ha != hb) return ha > hb;
      return a.hw > b.hw;
    });
  }

  const std::vector<Irreducible>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  std::int64_t multiplicity(const Weight& hw) const {
    for (const auto& t : terms_)
      if (t.hw == hw) return t.mult;
    return 0;
  }
  std::int64_t trivial() const { return multiplicity(Weight{}); }

  mpz_class dimension(const AlgebraSpec& alg) const {
    mpz_class d = 0;
    for (const auto& t : terms_) d += weyl_dim(alg, t.hw) * t.mult;
    return d;
  }

  bool operator==(const Decomposition&) const = default;

 private:
  std::vector<Irreducible> terms_;
};

// Splits a Weyl-invariant weight multiset into irreducibles by peeling off
// the character of the highest remaining dominant weight.
inline Decomposition decompose_character(const AlgebraSpec& alg, const WeightMultiset& ch, ComputeBudget& budget) {
  std::unordered_map<Weight, std::int64_t, WeightHash> dom;
  for (const auto& [w, m] : ch.map())
    if (alg.is_dominant(w)) dom.emplace(w, m);
  std::vector<Weight> order;
  order.reserve(dom.size());
  for (const auto& [w, m] : dom) order.push_back(w);
  std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
    auto ha = alg.height(a), hb = alg.height(b);
    if (ha != hb) return ha > hb;
    return a > b;
  });
  std::map<Weight, std::int64_t> result;
  for (const Weight& mu : order) {
    const std::int64_t m = dom[mu];
    if (m == 0) continue;
    if (m < 0) throw std::logic_error("decompose_character: input is not a character (negative remainder at " + alg.weight_str(mu) + ")");
    result[mu] = m;
    for (const auto& e : dominant_character(alg, mu, budget)) {
      auto it = dom.find(e.weight);
      if (it == dom.end()) throw std::logic_error("decompose_character: input is not a character (missing weight " + alg.weight_str(e.weight) + ")");
      it->second = checked_add(it->second, -checked_mul(m, e.mult));
    }
  }
  return Decomposition(alg, std::move(result));
}

inline Decomposition decompose_character(const AlgebraSpec& alg, const WeightMultiset& ch) {
  ComputeBudget b = ComputeBudget::unlimited();
  return decompose_character(alg, ch, b);
}

// Independent route: each weight nu contributes sign(w) * mult to the
// irreducible with highest weight w(nu + rho) - rho when that is regular.
inline Decomposition decompose_by_reflection(const AlgebraSpec& alg, const WeightMultiset& ch) {
  std::map<Weight, std::int64_t> acc;
  for (const auto& [w, m] : ch.map()) {
    auto [d, s] = alg.to_dominant(w + alg.rho());
    bool regular = true;
    for (int i = 0; i < alg.rank(); ++i) regular = regular && d.c[static_cast<std::size_t>(i)] > 0;
    if (regular) acc[d - alg.rho()] += s * m;
  }
  for (const auto& [w, m] : acc)
    if (m < 0) throw std::logic_error("decompose_by_reflection: input is not a character");
  return Decomposition(alg, std::move(acc));
}

inline void check_dimension(const AlgebraSpec& alg, const Decomposition& d, const mpz_class& expected, const char* what) {
  if (d.dimension(alg) != expected)
    throw std::logic_error(std::string(what) + ": dimension conservation failed");
}

// V(hw1) (x) V(hw2) by shifting the weights of the smaller factor onto the
// larger highest weight and reflecting into the dominant chamber.
inline Decomposition tensor_decompose(const AlgebraSpec& alg, const Weight& hw1, const Weight& hw2, ComputeBudget& budget) {
  const mpz_class d1 = weyl_dim(alg, hw1), d2 = weyl_dim(alg, hw2);
  const Weight& small = d1 <= d2 ? hw1 : hw2;
  const Weight& big = d1 <= d2 ? hw2 : hw1;
  std::map<Weight, std::int64_t> acc;
  const Weight shift = big + alg.rho();
  const WeightMultiset weights = weight_multiplicities(alg, small, budget);
  for (const auto& [w, m] : weights.map()) {
    auto [d, s] = alg.to_dominant(w + shift);
    bool regular = true;
    for (int i = 0; i < alg.rank(); ++i) regular = regular && d.c[static_cast<std::size_t>(i)] > 0;
    if (regular) acc[d - alg.rho()] += s * m;
  }
  for (const auto& [w, m] : acc)
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
  Decomposition r(alg, std::move(acc));
  check_dimension(alg, r, d1 * d2, "tensor_decompose");
  return r;
}

inline Decomposition tensor_decompose(const AlgebraSpec& alg, const Weight& hw1, const Weight& hw2) {
  ComputeBudget b = ComputeBudget::unlimited();
  return tensor_decompose(alg, hw1, hw2, b);
}

// S_lambda(V(hw)) as a sum of irreducibles.
inline Decomposition schur_power(const AlgebraSpec& alg, const Partition& lambda, const Weight& hw, ComputeBudget& budget) {
  WeightMultiset v = weight_multiplicities(alg, hw, budget);
  WeightMultiset s = plethysm_into_monomials(lambda, v, budget);
  Decomposition r = decompose_character(alg, s, budget);
  check_dimension(alg, r, gl_dim(lambda, weyl_dim(alg, hw).get_si()), "schur_power");
  return r;
}

inline Decomposition schur_power(const AlgebraSpec& alg, const Partition& lambda, const Weight& hw) {
  ComputeBudget b = ComputeBudget::unlimited();
  return schur_power(alg, lambda, hw, b);
}

}  // namespace mcinv
