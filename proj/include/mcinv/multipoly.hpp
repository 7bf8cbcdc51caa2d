#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mcinv {

template <std::size_t N>
using Monomial = std::array<std::uint8_t, N>;

template <std::size_t N>
int degree_of(const Monomial<N>& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

// Canonical monomial order: by total degree, then lexicographic on the
// exponent vector (ascending). Terms are stored in this order.
template <std::size_t N>
bool canonical_less(const Monomial<N>& a, const Monomial<N>& b) {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

template <std::size_t N>
struct MonomialHash {
  std::size_t operator()(const Monomial<N>& m) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto e : m) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

inline bool is_small_integer(const mpq_class& q) {
  return mpz_cmp_ui(mpq_denref(q.get_mpq_t()), 1) == 0 && mpz_fits_slong_p(mpq_numref(q.get_mpq_t()));
}
inline long small_integer(const mpq_class& q) { return mpz_get_si(mpq_numref(q.get_mpq_t())); }

inline constexpr int kZeroPolynomial = -1;
inline constexpr int kMixedDegree = -2;

template <std::size_t N>
class MultiPoly {
 public:
  using Mono = Monomial<N>;
  using Term = std::pair<Mono, mpq_class>;
  using Accumulator = std::unordered_map<Mono, mpq_class, MonomialHash<N>>;
  static constexpr std::size_t nvars = N;

  MultiPoly() = default;

  static MultiPoly constant(const mpq_class& c) { return monomial(Mono{}, c); }
  static MultiPoly variable(std::size_t i, const mpq_class& c = 1) {
    if (i >= N) throw std::out_of_range("variable index out of range");
    Mono m{};
    m[i] = 1;
    return monomial(m, c);
  }
  static MultiPoly monomial(const Mono& m, const mpq_class& c = 1) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }
  static MultiPoly from_terms(std::vector<Term> terms) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> key(terms.size());  // (degree, index)
    for (std::size_t i = 0; i < terms.size(); ++i)
      key[i] = {static_cast<std::uint32_t>(degree_of<N>(terms[i].first)), static_cast<std::uint32_t>(i)};
    std::sort(key.begin(), key.end(), [&](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return terms[a.second].first < terms[b.second].first;
    });
    MultiPoly p;
    p.terms_.reserve(terms.size());
    for (const auto& [d, i] : key) {
      Term& t = terms[i];
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
      } else {
        if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
    return p;
  }
  // Terms already in canonical order, distinct and nonzero.
  static MultiPoly from_sorted_terms(std::vector<Term> terms) {
    MultiPoly p;
    p.terms_ = std::move(terms);
    return p;
  }
  static MultiPoly from_accumulator(Accumulator&& acc) {
    MultiPoly p;
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.emplace_back(m, std::move(c));
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return canonical_less<N>(a.first, b.first); });
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // First term in canonical order.
  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  mpq_class coefficient(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& x) { return canonical_less<N>(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  int homogeneous_degree() const {
    if (terms_.empty()) return kZeroPolynomial;
    int d = degree_of<N>(terms_.front().first);
    if (degree_of<N>(terms_.back().first) != d) return kMixedDegree;
    return d;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, 1); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, -1); }
  MultiPoly& operator+=(const MultiPoly& o) { return *this = combine(*this, o, 1); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = combine(*this, o, -1); }

  friend MultiPoly operator*(const mpq_class& k, const MultiPoly& a) {
    MultiPoly r;
    if (k == 0) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_back(m, k * c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Accumulator acc;
    acc.reserve(std::max(a.size(), b.size()) * 4);
    Mono m;
    mpq_class prod;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < N; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
        mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
        auto [it, ins] = acc.try_emplace(m, prod);
        if (!ins) it->second += prod;
      }
    }
    return from_accumulator(std::move(acc));
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Rename variables: x_i -> x_{perm[i]}.
  MultiPoly permuted(const std::array<std::size_t, N>& perm) const {
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Mono f{};
      for (std::size_t i = 0; i < N; ++i) f[perm[i]] = m[i];
      t.emplace_back(f, c);
    }
    return from_terms(std::move(t));
  }

  // Replace x_i by images[i].
  template <std::size_t M>
  MultiPoly<M> substitute(const std::array<MultiPoly<M>, N>& images) const {
    std::array<std::vector<MultiPoly<M>>, N> powers;
    typename MultiPoly<M>::Accumulator acc;
    for (const auto& [m, c] : terms_) {
      MultiPoly<M> prod = MultiPoly<M>::constant(c);
      for (std::size_t i = 0; i < N; ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(MultiPoly<M>::constant(1));
        while (pw.size() <= m[i]) pw.push_back(pw.back() * images[i]);
        prod = prod * pw[m[i]];
      }
      for (const auto& [mm, cc] : prod.terms()) {
        auto [it, ins] = acc.try_emplace(mm, cc);
        if (!ins) it->second += cc;
      }
    }
    return MultiPoly<M>::from_accumulator(std::move(acc));
  }

  mpq_class evaluate(const std::array<mpq_class, N>& x) const {
    mpq_class s = 0;
    for (const auto& [m, c] : terms_) {
      mpq_class t = c;
      for (std::size_t i = 0; i < N; ++i)
        for (int k = 0; k < m[i]; ++k) t *= x[i];
      s += t;
    }
    return s;
  }

  // Scaled so that the first coefficient in canonical order is 1.
  MultiPoly monic() const {
    if (is_zero()) return *this;
    return mpq_class(1 / terms_.front().second) * *this;
  }

 private:
  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, int sign) {
    MultiPoly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && canonical_less<N>(a.terms_[i].first, b.terms_[j].first))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || canonical_less<N>(b.terms_[j].first, a.terms_[i].first)) {
        r.terms_.emplace_back(b.terms_[j].first, sign > 0 ? b.terms_[j].second : mpq_class(-b.terms_[j].second));
        ++j;
      } else {
        mpq_class c = sign > 0 ? mpq_class(a.terms_[i].second + b.terms_[j].second)
                               : mpq_class(a.terms_[i].second - b.terms_[j].second);
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// A derivation given by its values on the variables: D(x_v) = sum coef * x_u.
template <std::size_t N>
struct Derivation {
  std::array<std::vector<std::pair<std::uint16_t, mpq_class>>, N> images;

  // true when every variable is an eigenvector
  bool diagonal() const {
    for (std::size_t v = 0; v < N; ++v)
      for (const auto& [u, c] : images[v])
        if (u != v) return false;
    return true;
  }

  MultiPoly<N> apply(const MultiPoly<N>& f) const {
    using Term = typename MultiPoly<N>::Term;
    if (diagonal()) {
      // same monomials, rescaled by the eigenvalue
      std::vector<Term> out;
      out.reserve(f.size());
      std::array<long, N> small{};
      bool all_small = true;
      for (std::size_t v = 0; v < N; ++v) {
        if (images[v].empty()) continue;
        all_small = all_small && is_small_integer(images[v][0].second);
        if (all_small) small[v] = small_integer(images[v][0].second);
      }
      for (const auto& [m, c] : f.terms()) {
        if (all_small) {
          long ev = 0;
          for (std::size_t v = 0; v < N; ++v) ev += small[v] * m[v];
          if (ev != 0) out.emplace_back(m, mpq_class(c * ev));
          continue;
        }
        mpq_class ev = 0;
        for (std::size_t v = 0; v < N; ++v)
          if (m[v] && !images[v].empty()) ev += images[v][0].second * m[v];
        if (ev != 0) out.emplace_back(m, ev * c);
      }
      return MultiPoly<N>::from_sorted_terms(std::move(out));
    }
    if (auto fast = apply_small(f)) return std::move(*fast);
    std::vector<Term> out;
    out.reserve(f.size() * 4);
    for (const auto& [m, c] : f.terms()) {
      for (std::size_t v = 0; v < N; ++v) {
        if (m[v] == 0) continue;
        for (const auto& [u, coef] : images[v]) {
          Monomial<N> g = m;
          --g[v];
          ++g[u];
          mpq_class k = c * coef;
          k *= m[v];
          out.emplace_back(g, std::move(k));
        }
      }
    }
    return MultiPoly<N>::from_terms(std::move(out));
  }

 private:
  // Integer coefficients that fit in machine words; nullopt on overflow or
  // when some coefficient is not integral.
  std::optional<MultiPoly<N>> apply_small(const MultiPoly<N>& f) const {
    std::array<std::vector<std::pair<std::uint16_t, long>>, N> img;
    for (std::size_t v = 0; v < N; ++v)
      for (const auto& [u, coef] : images[v]) {
        if (!is_small_integer(coef)) return std::nullopt;
        img[v].emplace_back(u, small_integer(coef));
      }
    for (const auto& [m, c] : f.terms())
      if (!is_small_integer(c)) return std::nullopt;
    struct Entry {
      int deg;
      Monomial<N> m;
      std::int64_t c;
    };
    std::vector<Entry> out;
    out.reserve(f.size() * 4);
    for (const auto& [m, c] : f.terms()) {
      const std::int64_t cc = small_integer(c);
      const int deg = degree_of<N>(m);
      for (std::size_t v = 0; v < N; ++v) {
        if (m[v] == 0) continue;
        for (const auto& [u, coef] : img[v]) {
          Entry e{deg, m, 0};
          --e.m[v];
          ++e.m[u];
          if (__builtin_mul_overflow(cc, coef * m[v], &e.c)) return std::nullopt;
          out.push_back(e);
        }
      }
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      if (a.deg != b.deg) return a.deg < b.deg;
      return std::memcmp(a.m.data(), b.m.data(), N) < 0;
    });
    std::vector<typename MultiPoly<N>::Term> terms;
    for (std::size_t i = 0; i < out.size();) {
      std::int64_t sum = 0;
      std::size_t j = i;
      for (; j < out.size() && out[j].m == out[i].m; ++j)
        if (__builtin_add_overflow(sum, out[j].c, &sum)) return std::nullopt;
      if (sum != 0) terms.emplace_back(out[i].m, mpq_class(static_cast<long>(sum)));
      i = j;
    }
    return MultiPoly<N>::from_sorted_terms(std::move(terms));
  }
};

// ---- serialization -------------------------------------------------------

// One term per line: `num/den; e_0 e_1 ... e_{N-1}`, canonical order.
template <std::size_t N>
void write_poly(std::ostream& os, const MultiPoly<N>& p) {
  for (const auto& [m, c] : p.terms()) {
    os << c.get_num() << '/' << c.get_den() << ';';
    for (auto e : m) os << ' ' << static_cast<int>(e);
    os << '\n';
  }
}

template <std::size_t N>
std::string poly_to_string(const MultiPoly<N>& p) {
  std::ostringstream os;
  write_poly(os, p);
  return os.str();
}

// Reads terms until end of stream or a blank line; lines starting with '#' are skipped.
template <std::size_t N>
MultiPoly<N> read_poly(std::istream& is) {
  std::vector<typename MultiPoly<N>::Term> terms;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) break;
    if (line[0] == '#') continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("malformed term line: " + line);
    mpq_class c;
    if (c.set_str(line.substr(0, semi), 10) != 0) throw std::invalid_argument("malformed coefficient: " + line);
    c.canonicalize();
    std::istringstream es(line.substr(semi + 1));
    Monomial<N> m{};
    for (std::size_t i = 0; i < N; ++i) {
      int e;
      if (!(es >> e) || e < 0 || e > 255) throw std::invalid_argument("malformed exponent vector: " + line);
      m[i] = static_cast<std::uint8_t>(e);
    }
    int extra;
    if (es >> extra) throw std::invalid_argument("exponent vector too long: " + line);
    terms.emplace_back(m, c);
  }
  return MultiPoly<N>::from_terms(std::move(terms));
}

// 64-bit FNV-1a of the serialized polynomial.
template <std::size_t N>
std::uint64_t poly_hash(const MultiPoly<N>& p) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char ch : poly_to_string(p)) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace mcinv
