#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcinv/budget.hpp"
#include "mcinv/weight.hpp"

namespace mcinv {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  static Partition rectangle(int a, int p) {
    if (a <= 0 || p <= 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(p), a));
  }

  // "4,4" / "3" / "0" / "" / "(2,1)"
  static Partition parse(std::string_view s) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      std::size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument("bad partition token '" + cur + "'");
      parts.push_back(v);
      cur.clear();
    };
    for (char ch : s) {
      if (ch == ',' || ch == ' ') {
        flush();
      } else if (ch == '(' || ch == ')' || ch == '[' || ch == ']') {
        continue;
      } else if ((ch >= '0' && ch <= '9') || ch == '-') {
        cur += ch;
      } else {
        throw std::invalid_argument(std::string("bad character in partition: ") + ch);
      }
    }
    flush();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  Partition conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition{};
    for (int j = 0; j < parts_[0]; ++j) {
      int cnt = 0;
      for (int x : parts_) cnt += (x > j);
      c.push_back(cnt);
    }
    return Partition(std::move(c));
  }

  bool is_rectangle() const {
    return parts_.empty() || std::all_of(parts_.begin(), parts_.end(), [&](int x) { return x == parts_[0]; });
  }

  std::string str() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions of m with at most max_height parts, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int m, int max_height = INT_MAX) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) >= max_height) return;
    for (int x = std::min(rest, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(rest - x, x);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

// Sparse polynomial with integer coefficients in a runtime number of
// variables. Terms are kept in a map ordered so that begin() is the
// lexicographically largest exponent vector.
class Poly {
 public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, mpz_class, std::greater<Exponent>>;

  explicit Poly(std::size_t nvars = 0) : n_(nvars) {}

  static Poly constant(std::size_t nvars, const mpz_class& c) {
    Poly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static Poly monomial(const Exponent& e, const mpz_class& c = 1) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpz_class coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  void add_term(const Exponent& e, const mpz_class& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check(b);
    Poly r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend Poly operator*(const mpz_class& k, const Poly& a) {
    Poly r(a.n_);
    if (k == 0) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, k * c);
    return r;
  }
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  // Total degree if homogeneous, -1 for the zero polynomial, -2 if mixed.
  int homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = std::accumulate(e.begin(), e.end(), 0);
      if (d == -1) d = s;
      else if (d != s) return -2;
    }
    return d;
  }

  // Variables renamed: x_i -> x_{perm[i]}.
  Poly permuted(const std::vector<std::size_t>& perm) const {
    Poly r(n_);
    Exponent f(n_);
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < n_; ++i) f[perm[i]] = e[i];
      r.add_term(f, c);
    }
    return r;
  }

  // Keep only terms whose exponents restricted to [lo, hi) sum to at most deg.
  Poly truncated(std::size_t lo, std::size_t hi, int deg) const {
    Poly r(n_);
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (std::size_t i = lo; i < hi; ++i) s += e[i];
      if (s <= deg) r.terms_.emplace(e, c);
    }
    return r;
  }

  // Embed into a larger variable set, variable i -> offset + i.
  Poly embedded(std::size_t nvars, std::size_t offset) const {
    Poly r(nvars);
    for (const auto& [e, c] : terms_) {
      Exponent f(nvars, 0);
      for (std::size_t i = 0; i < n_; ++i) f[offset + i] = e[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  // Exact division; throws if b does not divide *this.
  Poly divided_exact(const Poly& b) const {
    check(b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    Poly q(n_);
    const auto& [lb, cb] = *b.terms_.begin();
    while (!rem.is_zero()) {
      const auto [lr, cr] = *rem.terms_.begin();
      Exponent e(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        e[i] = lr[i] - lb[i];
        if (e[i] < 0) throw std::domain_error("inexact polynomial division");
      }
      if (!mpz_divisible_p(cr.get_mpz_t(), cb.get_mpz_t())) throw std::domain_error("inexact polynomial division");
      mpz_class k = cr / cb;
      q.add_term(e, k);
      for (const auto& [eb, c] : b.terms_) {
        Exponent f(n_);
        for (std::size_t i = 0; i < n_; ++i) f[i] = e[i] + eb[i];
        rem.add_term(f, -k * c);
      }
    }
    return q;
  }

 private:
  void check(const Poly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomials over different variable counts");
  }

  std::size_t n_;
  Terms terms_;
};

using SymPoly = Poly;

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// sum over permutations of sgn * prod x_{sigma(i)}^{exps[i]}
inline Poly alternant(const std::vector<int>& exps) {
  const std::size_t n = exps.size();
  Poly a(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Poly::Exponent e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[perm[i]] = exps[i];
    a.add_term(e, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a;
}

}  // namespace detail

// Bialternant quotient A_{lambda+rho} / A_rho.
inline SymPoly schur(const Partition& lambda, std::size_t N) {
  if (N < 1) throw std::invalid_argument("schur: N must be at least 1");
  if (static_cast<std::size_t>(lambda.height()) > N) return SymPoly(N);
  std::vector<int> num(N), rho(N);
  for (std::size_t i = 0; i < N; ++i) {
    rho[i] = static_cast<int>(N - 1 - i);
    num[i] = lambda[i] + rho[i];
  }
  Poly a = detail::alternant(num);
  // divide by each factor (x_i - x_j), i < j
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      Poly f = Poly::variable(N, i) - Poly::variable(N, j);
      a = a.divided_exact(f);
    }
  }
  return a;
}

inline SymPoly complete_homogeneous(int k, std::size_t N) {
  if (k < 0) return SymPoly(N);
  return schur(Partition({k}), N);
}

inline SymPoly elementary(int k, std::size_t N) {
  if (k < 0 || static_cast<std::size_t>(k) > N) return SymPoly(N);
  return schur(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)), N);
}

// ---- plethysm on characters -------------------------------------------

namespace detail {

inline std::int64_t binomial_i64(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // exact at every step: r * (n - k + i) / i
    __int128 t = static_cast<__int128>(r) * (n - k + i);
    t /= i;
    if (t > INT64_MAX) throw std::overflow_error("binomial overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

// Series of prod over weights w of (sum_i coef(m, i) e^{iw} t^i), up to t^kmax.
template <class Coef>
std::vector<WeightMultiset> series_plethysms(const WeightMultiset& ch, int kmax, ComputeBudget& budget, Coef coef) {
  std::vector<WeightMultiset> h(static_cast<std::size_t>(kmax) + 1);
  h[0] = WeightMultiset::one();
  for (const auto& [w, m] : ch.sorted()) {
    if (m < 0) throw std::invalid_argument("character has a negative multiplicity");
    std::vector<WeightMultiset> next(h.size());
    for (int d = 0; d <= kmax; ++d) {
      WeightMultiset& out = next[static_cast<std::size_t>(d)];
      for (int i = 0; i <= d; ++i) {
        std::int64_t c = coef(m, i);
        if (c == 0) continue;
        const WeightMultiset& src = h[static_cast<std::size_t>(d - i)];
        budget.charge(src.distinct());
        Weight shift = w.scaled(i);
        for (const auto& [v, mv] : src.map()) out.add(v + shift, checked_mul(mv, c));
      }
    }
    h = std::move(next);
  }
  return h;
}

// Determinant of a square matrix of characters by Laplace expansion with
// memoised column-subset minors. entry(r, j) returns nullptr for zero.
inline WeightMultiset character_determinant(
    int n, const std::function<const WeightMultiset*(int, int)>& entry, ComputeBudget& budget) {
  if (n == 0) return WeightMultiset::one();
  if (n > 20) throw std::invalid_argument("determinant too large");
  const std::uint32_t full = (1u << n) - 1;
  std::unordered_map<std::uint32_t, WeightMultiset> prev, cur;
  prev.emplace(0u, WeightMultiset::one());
  for (int r = n - 1; r >= 0; --r) {
    const int size = n - r;
    cur.clear();
    for (std::uint32_t S = 0; S <= full; ++S) {
      if (__builtin_popcount(S) != size) continue;
      WeightMultiset acc;
      int pos = 0;
      for (int j = 0; j < n; ++j) {
        if (!(S >> j & 1u)) continue;
        const int sign = (pos % 2 == 0) ? 1 : -1;
        ++pos;
        const WeightMultiset* e = entry(r, j);
        if (e == nullptr || e->empty()) continue;
        auto it = prev.find(S & ~(1u << j));
        if (it == prev.end() || it->second.empty()) continue;
        WeightMultiset term = multiply(*e, it->second, budget);
        if (sign > 0) acc += term;
        else acc -= term;
      }
      if (!acc.empty()) cur.emplace(S, std::move(acc));
    }
    std::swap(prev, cur);
  }
  auto it = prev.find(full);
  return it == prev.end() ? WeightMultiset{} : it->second;
}

}  // namespace detail

// h_0[ch], ..., h_kmax[ch]: characters of the symmetric powers.
inline std::vector<WeightMultiset> complete_plethysms(const WeightMultiset& ch, int kmax, ComputeBudget& budget) {
  return detail::series_plethysms(ch, kmax, budget,
                                  [](std::int64_t m, int i) { return detail::binomial_i64(m + i - 1, i); });
}

// e_0[ch], ..., e_kmax[ch]: characters of the exterior powers.
inline std::vector<WeightMultiset> elementary_plethysms(const WeightMultiset& ch, int kmax, ComputeBudget& budget) {
  return detail::series_plethysms(ch, kmax, budget,
                                  [](std::int64_t m, int i) { return detail::binomial_i64(m, i); });
}

enum class PlethysmRoute { Automatic, Complete, Elementary };

// Character of S_lambda(V) where ch is the character of V, via the
// Jacobi-Trudi determinant in h_k[ch] (or its dual in e_k[ch] when the
// conjugate partition gives a smaller determinant).
inline WeightMultiset plethysm_into_monomials(const Partition& lambda, const WeightMultiset& ch, ComputeBudget& budget,
                                              PlethysmRoute route = PlethysmRoute::Automatic) {
  if (lambda.empty()) return WeightMultiset::one();
  bool use_e = false;
  if (route == PlethysmRoute::Elementary) use_e = true;
  else if (route == PlethysmRoute::Automatic) use_e = lambda[0] < lambda.height();
  const Partition mu = use_e ? lambda.conjugate() : lambda;
  const int n = mu.height();
  const int kmax = mu[0] + n - 1;
  std::vector<WeightMultiset> series =
      use_e ? elementary_plethysms(ch, kmax, budget) : complete_plethysms(ch, kmax, budget);
  auto entry = [&](int r, int j) -> const WeightMultiset* {
    int k = mu[static_cast<std::size_t>(r)] - r + j;
    if (k < 0 || k > kmax) return nullptr;
    return &series[static_cast<std::size_t>(k)];
  };
  return detail::character_determinant(n, entry, budget);
}

inline WeightMultiset plethysm_into_monomials(const Partition& lambda, const WeightMultiset& ch) {
  ComputeBudget b = ComputeBudget::unlimited();
  return plethysm_into_monomials(lambda, ch, b);
}

// ---- formal series identities ----------------------------------------

namespace detail {

// 1 + z + ... + z^deg for z a monomial given by an exponent vector
inline Poly truncated_geometric(const Poly::Exponent& z, int deg) {
  Poly r(z.size());
  Poly::Exponent e(z.size(), 0);
  for (int k = 0; k <= deg; ++k) {
    for (std::size_t i = 0; i < z.size(); ++i) e[i] = z[i] * k;
    r.add_term(e, 1);
  }
  return r;
}

}  // namespace detail

// prod_{i<=m, j<=n} 1/(1 - x_i y_j) against sum_lambda S_lambda(x) S_lambda(y),
// both truncated at |lambda| <= deg (x-degree).
inline bool verify_cauchy(int m, int n, int deg) {
  if (m < 1 || n < m || deg < 0) throw std::invalid_argument("verify_cauchy: need 1 <= m <= n, deg >= 0");
  const std::size_t N = static_cast<std::size_t>(m + n);
  Poly lhs = Poly::constant(N, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly::Exponent z(N, 0);
      z[static_cast<std::size_t>(i)] = 1;
      z[static_cast<std::size_t>(m + j)] = 1;
      lhs = (lhs * detail::truncated_geometric(z, deg)).truncated(0, static_cast<std::size_t>(m), deg);
    }
  }
  Poly rhs(N);
  for (int k = 0; k <= deg; ++k) {
    for (const Partition& lam : partitions_of(k, m)) {
      Poly sx = schur(lam, static_cast<std::size_t>(m)).embedded(N, 0);
      Poly sy = schur(lam, static_cast<std::size_t>(n)).embedded(N, static_cast<std::size_t>(m));
      rhs += sx * sy;
    }
  }
  return lhs == rhs;
}

// prod_j 1/(1 - y_j t) against sum_k S_k(y) t^k up to t^deg.
inline bool verify_molien(int N, int deg) {
  if (N < 1 || deg < 0) throw std::invalid_argument("verify_molien: need N >= 1, deg >= 0");
  const std::size_t V = static_cast<std::size_t>(N + 1);
  const std::size_t t = static_cast<std::size_t>(N);
  Poly lhs = Poly::constant(V, 1);
  for (int j = 0; j < N; ++j) {
    Poly::Exponent z(V, 0);
    z[static_cast<std::size_t>(j)] = 1;
    z[t] = 1;
    lhs = (lhs * detail::truncated_geometric(z, deg)).truncated(t, V, deg);
  }
  Poly rhs(V);
  for (int k = 0; k <= deg; ++k) {
    Poly sk = complete_homogeneous(k, static_cast<std::size_t>(N)).embedded(V, 0);
    Poly::Exponent tk(V, 0);
    tk[t] = k;
    rhs += sk * Poly::monomial(tk);
  }
  return lhs == rhs;
}

}  // namespace mcinv
