#pragma once
// Brute-force invariant oracles: joint kernels of Lie algebra derivations on
// monomial spaces, exact over Q for tiny models and modulo a prime otherwise.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcinv/linalg.hpp"
#include "mcinv/multipoly.hpp"
#include "mcinv/polyalg.hpp"

namespace mcinv::oracle {

// Derivation with small integer images: x_v -> sum c * x_u.
template <std::size_t N>
struct IntDerivation {
  std::array<std::vector<std::pair<std::uint16_t, std::int64_t>>, N> images;
};

// Variables laid out as x_{r,c} at index r * cols + c.
template <std::size_t N>
IntDerivation<N> column_action(std::size_t cols, const std::vector<std::vector<std::int64_t>>& m) {
  IntDerivation<N> d;
  for (std::size_t v = 0; v < N; ++v) {
    const std::size_t r = v / cols, c = v % cols;
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (m[c2][c] != 0) d.images[v].emplace_back(static_cast<std::uint16_t>(r * cols + c2), m[c2][c]);
  }
  return d;
}

// E_ij of gl(rows): x_{j,c} -> x_{i,c}
template <std::size_t N>
IntDerivation<N> row_action(std::size_t cols, std::size_t i, std::size_t j) {
  IntDerivation<N> d;
  for (std::size_t c = 0; c < cols; ++c) d.images[j * cols + c].emplace_back(static_cast<std::uint16_t>(i * cols + c), 1);
  return d;
}

// One of the nine qubit generators acting on every row of 8 labels.
template <std::size_t N>
IntDerivation<N> qubit_action(Generator g) {
  static_assert(N % 8 == 0);
  std::vector<std::vector<std::int64_t>> m(8, std::vector<std::int64_t>(8, 0));
  for (int l = 0; l < 8; ++l)
    for (auto [u, c] : generator_on_label(g, l)) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(l)] += c;
  return column_action<N>(8, m);
}

// Monomials with the given degree in each row of width cols.
template <std::size_t N>
std::vector<Monomial<N>> row_graded_monomials(std::size_t cols, const std::vector<int>& row_degree) {
  std::vector<Monomial<N>> out{Monomial<N>{}};
  for (std::size_t r = 0; r < row_degree.size(); ++r) {
    std::vector<Monomial<N>> next;
    for (const auto& base : out) {
      // distribute row_degree[r] among cols variables
      std::vector<int> e(cols, 0);
      auto rec = [&](auto&& self, std::size_t c, int left) -> void {
        if (c + 1 == cols) {
          Monomial<N> m = base;
          e[c] = left;
          for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = static_cast<std::uint8_t>(e[k]);
          next.push_back(m);
          return;
        }
        for (int x = left; x >= 0; --x) {
          e[c] = x;
          self(self, c + 1, left - x);
        }
      };
      rec(rec, 0, row_degree[r]);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), canonical_less<N>);
  return out;
}

// Row-graded charge monomials of qubit weight (0,0,0).
template <std::size_t N>
std::vector<Monomial<N>> zero_weight_monomials(int degree_per_row) {
  constexpr std::size_t rows = N / 8;
  // per-row candidates bucketed by weight
  std::vector<Monomial<8>> single = row_graded_monomials<8>(8, {degree_per_row});
  std::map<Weight3, std::vector<std::size_t>> by_weight;
  std::vector<Weight3> w(single.size());
  for (std::size_t i = 0; i < single.size(); ++i) {
    w[i] = monomial_weight<kQubitVars>(single[i]);
    by_weight[w[i]].push_back(i);
  }
  std::vector<Monomial<N>> out;
  std::vector<std::size_t> pick(rows);
  auto rec = [&](auto&& self, std::size_t r, Weight3 acc) -> void {
    if (r + 1 == rows) {
      Weight3 need{-acc[0], -acc[1], -acc[2]};
      auto it = by_weight.find(need);
      if (it == by_weight.end()) return;
      for (std::size_t i : it->second) {
        pick[r] = i;
        Monomial<N> m{};
        for (std::size_t q = 0; q < rows; ++q)
          for (std::size_t k = 0; k < 8; ++k) m[q * 8 + k] = single[pick[q]][k];
        out.push_back(m);
      }
      return;
    }
    for (std::size_t i = 0; i < single.size(); ++i) {
      pick[r] = i;
      self(self, r + 1, Weight3{acc[0] + w[i][0], acc[1] + w[i][1], acc[2] + w[i][2]});
    }
  };
  rec(rec, 0, Weight3{});
  std::sort(out.begin(), out.end(), canonical_less<N>);
  return out;
}

// ---- exact brute force ----------------------------------------------------------

// Dimension of the joint kernel over Q on all monomials of the given space.
template <std::size_t N>
std::size_t exact_kernel_dimension(const std::vector<Monomial<N>>& space, const std::vector<IntDerivation<N>>& ops) {
  if (space.empty()) return 0;
  std::unordered_map<Monomial<N>, std::size_t, MonomialHash<N>> row_of;
  std::vector<std::unordered_map<std::size_t, mpq_class>> rows;
  for (const auto& d : ops) {
    row_of.clear();
    for (std::size_t j = 0; j < space.size(); ++j) {
      const auto& m = space[j];
      for (std::size_t v = 0; v < N; ++v) {
        if (!m[v]) continue;
        for (auto [u, c] : d.images[v]) {
          Monomial<N> g = m;
          --g[v];
          ++g[u];
          auto [it, fresh] = row_of.try_emplace(g, rows.size());
          if (fresh) rows.emplace_back();
          rows[it->second][j] += static_cast<long>(c * m[v]);
        }
      }
    }
  }
  QMatrix a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    QVector row(space.size());
    bool any = false;
    for (const auto& [j, c] : r)
      if (c != 0) {
        row[j] = c;
        any = true;
      }
    if (any) a.push_back(std::move(row));
  }
  return space.size() - rank(a, space.size());
}

// ---- modular sequential kernel ------------------------------------------------

inline constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1

inline std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

inline std::uint32_t reduce_mod(const mpq_class& q, std::uint32_t p) {
  mpz_class n = q.get_num() % p, d = q.get_den() % p;
  if (n < 0) n += p;
  if (d == 0) throw std::domain_error("denominator divisible by the oracle prime");
  return static_cast<std::uint32_t>(n.get_ui() * static_cast<std::uint64_t>(mod_inv(static_cast<std::uint32_t>(d.get_ui()), p)) % p);
}

inline std::uint32_t reduce_mod(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

using SparseVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (index, value), sorted

// Dense matrix mod p reduced to row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> echelon_mod(std::vector<std::vector<std::uint32_t>>& a, std::size_t ncols, std::uint32_t p,
                                            bool reduced) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t s = r;
    while (s < a.size() && a[s][c] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    const std::uint64_t inv = mod_inv(a[r][c], p);
    for (std::size_t k = c; k < ncols; ++k) a[r][k] = static_cast<std::uint32_t>(a[r][k] * inv % p);
    for (std::size_t i = reduced ? 0 : r + 1; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::uint64_t f = p - a[i][c];
      std::uint32_t* dst = a[i].data();
      const std::uint32_t* src = a[r].data();
      for (std::size_t k = c; k < ncols; ++k) dst[k] = static_cast<std::uint32_t>((dst[k] + f * src[k]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Nullspace basis (as dense vectors) of a dense matrix mod p.
inline std::vector<std::vector<std::uint32_t>> nullspace_mod(std::vector<std::vector<std::uint32_t>> a, std::size_t ncols,
                                                             std::uint32_t p) {
  auto piv = echelon_mod(a, ncols, p, false);
  // back substitution to reduced form
  for (std::size_t r = piv.size(); r-- > 0;) {
    const std::size_t c = piv[r];
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = p - a[i][c];
      for (std::size_t k = c; k < ncols; ++k) a[i][k] = static_cast<std::uint32_t>((a[i][k] + f * a[r][k]) % p);
    }
  }
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : piv) is_pivot[c] = 1;
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = a[r][f] ? p - a[r][f] : 0;
    out.push_back(std::move(v));
  }
  return out;
}

struct StageReport {
  std::size_t dimension = 0;   // kernel dimension after the stage
  std::size_t blocks = 0;
  std::size_t largest_block = 0;
  std::size_t sketched_blocks = 0;
};

// Joint kernel of derivations on the span of a monomial space, computed modulo a
// prime one operator at a time. Each stage splits the current basis into blocks
// linked through shared image monomials. Blocks with many more image rows than
// columns are compressed by a random sparse sketch. Reduction mod p and
// sketching can only enlarge a kernel, so the dimension is an upper bound for
// the rational joint kernel.
template <std::size_t N>
class ModularKernel {
 public:
  explicit ModularKernel(std::vector<Monomial<N>> space, std::uint32_t prime = kDefaultPrime, std::uint64_t seed = 1)
      : space_(std::move(space)), p_(prime), rng_(seed) {
    basis_.reserve(space_.size());
    for (std::uint32_t i = 0; i < space_.size(); ++i) basis_.push_back({{i, 1u}});
    for (std::uint32_t i = 0; i < space_.size(); ++i) index_.emplace(space_[i], i);
  }

  std::size_t dimension() const { return basis_.size(); }
  std::size_t space_dimension() const { return space_.size(); }
  std::uint32_t prime() const { return p_; }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<StageReport>& stages() const { return stages_; }

  void impose(const IntDerivation<N>& d) {
    // images of the space monomials
    std::unordered_map<Monomial<N>, std::uint32_t, MonomialHash<N>> row_of;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> img(space_.size());
    for (std::size_t i = 0; i < space_.size(); ++i) {
      const auto& m = space_[i];
      for (std::size_t v = 0; v < N; ++v) {
        if (!m[v]) continue;
        for (auto [u, c] : d.images[v]) {
          Monomial<N> g = m;
          --g[v];
          ++g[u];
          auto [it, fresh] = row_of.try_emplace(g, static_cast<std::uint32_t>(row_of.size()));
          img[i].emplace_back(it->second, reduce_mod(c * m[v], p_));
        }
      }
    }
    const std::size_t nrows = row_of.size();
    row_of.clear();

    // image of each basis vector, and blocks by shared rows
    std::vector<SparseVec> images(basis_.size());
    std::vector<std::uint64_t> acc(nrows, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      for (auto [i, x] : basis_[j])
        for (auto [r, c] : img[i]) {
          if (acc[r] == 0) touched.push_back(r);
          acc[r] = (acc[r] + static_cast<std::uint64_t>(x) * c) % p_ + p_;  // + p keeps touched entries nonzero
        }
      std::sort(touched.begin(), touched.end());
      for (auto r : touched) {
        const auto v = static_cast<std::uint32_t>(acc[r] % p_);
        if (v) images[j].emplace_back(r, v);
        acc[r] = 0;
      }
      touched.clear();
    }
    img.clear();
    img.shrink_to_fit();

    std::vector<std::uint32_t> parent(basis_.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    {
      std::vector<std::uint32_t> owner(nrows, UINT32_MAX);
      for (std::uint32_t j = 0; j < images.size(); ++j)
        for (auto [r, v] : images[j]) {
          if (owner[r] == UINT32_MAX) owner[r] = j;
          else parent[find(j)] = find(owner[r]);
        }
    }
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> blocks;
    for (std::uint32_t j = 0; j < images.size(); ++j) blocks[find(j)].push_back(j);
    std::vector<std::vector<std::uint32_t>> ordered;
    for (auto& [root, cols] : blocks) ordered.push_back(std::move(cols));
    std::sort(ordered.begin(), ordered.end());

    StageReport rep;
    rep.blocks = ordered.size();
    std::vector<SparseVec> next;
    std::vector<std::uint64_t> dense(space_.size(), 0);
    std::vector<std::uint32_t> dtouched;
    for (const auto& cols : ordered) {
      rep.largest_block = std::max(rep.largest_block, cols.size());
      std::unordered_map<std::uint32_t, std::uint32_t> local;
      for (auto j : cols)
        for (auto [r, v] : images[j]) local.try_emplace(r, static_cast<std::uint32_t>(local.size()));
      if (local.empty()) {
        // every column already in the kernel
        for (auto j : cols) next.push_back(std::move(basis_[j]));
        continue;
      }
      const std::size_t c = cols.size();
      const std::size_t want = c + 8;
      const bool sketch = local.size() > want;
      const std::size_t h = sketch ? want : local.size();
      if (sketch) ++rep.sketched_blocks;
      std::vector<std::uint32_t> target_a(local.size()), target_b(local.size()), coef_a(local.size()), coef_b(local.size());
      if (sketch) {
        std::uniform_int_distribution<std::size_t> pick(0, h - 1);
        std::uniform_int_distribution<std::uint32_t> val(1, p_ - 1);
        for (std::size_t r = 0; r < local.size(); ++r) {
          target_a[r] = static_cast<std::uint32_t>(pick(rng_));
          target_b[r] = static_cast<std::uint32_t>(pick(rng_));
          coef_a[r] = val(rng_);
          coef_b[r] = val(rng_);
        }
      }
      std::vector<std::vector<std::uint32_t>> a(h, std::vector<std::uint32_t>(c, 0));
      for (std::size_t k = 0; k < c; ++k)
        for (auto [r, v] : images[cols[k]]) {
          const std::uint32_t lr = local.at(r);
          if (!sketch) {
            a[lr][k] = v;
            continue;
          }
          a[target_a[lr]][k] = static_cast<std::uint32_t>((a[target_a[lr]][k] + static_cast<std::uint64_t>(v) * coef_a[lr]) % p_);
          a[target_b[lr]][k] = static_cast<std::uint32_t>((a[target_b[lr]][k] + static_cast<std::uint64_t>(v) * coef_b[lr]) % p_);
        }
      for (const auto& z : nullspace_mod(std::move(a), c, p_)) {
        for (std::size_t k = 0; k < c; ++k) {
          if (!z[k]) continue;
          for (auto [i, x] : basis_[cols[k]]) {
            if (dense[i] == 0) dtouched.push_back(i);
            dense[i] = (dense[i] + static_cast<std::uint64_t>(x) * z[k]) % p_ + p_;
          }
        }
        std::sort(dtouched.begin(), dtouched.end());
        SparseVec v;
        for (auto i : dtouched) {
          const auto x = static_cast<std::uint32_t>(dense[i] % p_);
          if (x) v.emplace_back(i, x);
          dense[i] = 0;
        }
        dtouched.clear();
        if (!v.empty()) next.push_back(std::move(v));
      }
    }
    basis_ = std::move(next);
    rep.dimension = basis_.size();
    stages_.push_back(rep);
  }

  // Dense reduction of a rational polynomial; nullopt if it leaves the space.
  std::optional<SparseVec> reduce(const MultiPoly<N>& f) const {
    SparseVec v;
    for (const auto& [m, c] : f.terms()) {
      auto it = index_.find(m);
      if (it == index_.end()) return std::nullopt;
      const auto x = reduce_mod(c, p_);
      if (x) v.emplace_back(it->second, x);
    }
    std::sort(v.begin(), v.end());
    return v;
  }

  // Rank of a family of sparse vectors over the space.
  std::size_t rank_of(const std::vector<SparseVec>& vs) const {
    std::vector<std::vector<std::uint32_t>> a;
    for (const auto& s : vs) {
      std::vector<std::uint32_t> row(space_.size(), 0);
      for (auto [i, x] : s) row[i] = x;
      a.push_back(std::move(row));
    }
    return compressed_rank(a);
  }

  // Number of polynomials in the family that reduce into the kernel span, and
  // the rank of the family on its own.
  std::pair<std::size_t, std::size_t> containment(const std::vector<MultiPoly<N>>& polys) const {
    std::vector<SparseVec> fam;
    for (const auto& f : polys) {
      auto r = reduce(f);
      if (!r) return {0, 0};
      fam.push_back(std::move(*r));
    }
    std::size_t inside = 0;
    const std::size_t base = rank_of(basis_);
    for (const auto& v : fam) {
      auto with = basis_;
      with.push_back(v);
      if (rank_of(with) == base) ++inside;
    }
    return {inside, rank_of(fam)};
  }

  // Dimension of the subspace fixed by the given permutations of the variables.
  std::size_t fixed_dimension(const std::vector<std::array<std::size_t, N>>& perms) const {
    // columns (sigma - 1) v_j stacked over sigma; rows of a = basis vectors
    std::vector<std::vector<std::uint32_t>> a;
    const std::size_t n = space_.size();
    std::vector<std::vector<std::uint32_t>> where(perms.size(), std::vector<std::uint32_t>(n));
    for (std::size_t s = 0; s < perms.size(); ++s)
      for (std::size_t i = 0; i < n; ++i) {
        Monomial<N> m{};
        for (std::size_t v = 0; v < N; ++v) m[perms[s][v]] = space_[i][v];
        auto it = index_.find(m);
        if (it == index_.end()) throw std::invalid_argument("permutation does not preserve the space");
        where[s][i] = it->second;
      }
    for (const auto& b : basis_) {
      std::vector<std::uint32_t> row(n * perms.size(), 0);
      for (std::size_t s = 0; s < perms.size(); ++s)
        for (auto [i, x] : b) {
          auto& t = row[s * n + where[s][i]];
          t = static_cast<std::uint32_t>((t + x) % p_);
          auto& u = row[s * n + i];
          u = static_cast<std::uint32_t>((u + p_ - x) % p_);
        }
      a.push_back(std::move(row));
    }
    return basis_.size() - compressed_rank(a);
  }

 private:
  // rank of a few long rows: project onto the union of their supports first
  std::size_t compressed_rank(const std::vector<std::vector<std::uint32_t>>& rows) const {
    if (rows.empty()) return 0;
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < rows[0].size(); ++k)
      for (const auto& r : rows)
        if (r[k]) {
          support.push_back(k);
          break;
        }
    std::vector<std::vector<std::uint32_t>> a;
    for (const auto& r : rows) {
      std::vector<std::uint32_t> s(support.size());
      for (std::size_t k = 0; k < support.size(); ++k) s[k] = r[support[k]];
      a.push_back(std::move(s));
    }
    return echelon_mod(a, support.size(), p_, false).size();
  }

  std::vector<Monomial<N>> space_;
  std::unordered_map<Monomial<N>, std::uint32_t, MonomialHash<N>> index_;
  std::uint32_t p_;
  std::mt19937_64 rng_;
  std::vector<SparseVec> basis_;
  std::vector<StageReport> stages_;
};

// ---- model-specific drivers -------------------------------------------------------

// Raising operators whose joint kernel on a zero-weight space with equal row
// degrees is the invariant subspace: X1, X2, X3 and E_{r,r+1} for the rows.
template <std::size_t N>
std::vector<IntDerivation<N>> stu_raising_operators() {
  std::vector<IntDerivation<N>> ops;
  for (Generator g : kRaising) ops.push_back(qubit_action<N>(g));
  for (std::size_t r = 0; r + 1 < N / 8; ++r) ops.push_back(row_action<N>(8, r, r + 1));
  return ops;
}

struct OracleResult {
  std::size_t space_dimension = 0;
  std::vector<std::size_t> stage_dimensions;
  std::size_t dimension = 0;            // upper bound for the rational invariant dimension
  std::size_t certificates_inside = 0;  // certificates lying in the computed kernel
  std::size_t certificate_rank = 0;     // rank of the certificates mod p
  std::size_t s3_fixed_dimension = 0;
  std::size_t largest_block = 0;
};

// Invariants of degree a in each of the N/8 rows of stu charges.
template <std::size_t N>
ModularKernel<N> stu_kernel(int a, std::uint32_t prime = kDefaultPrime) {
  ModularKernel<N> k(zero_weight_monomials<N>(a), prime);
  for (const auto& d : stu_raising_operators<N>()) k.impose(d);
  return k;
}

// Variable permutations realising S3 on the qubit slots of every row.
template <std::size_t N>
std::vector<std::array<std::size_t, N>> slot_permutations(const std::vector<std::array<int, 3>>& sigmas) {
  std::vector<std::array<std::size_t, N>> out;
  for (const auto& sigma : sigmas) {
    std::array<std::size_t, N> perm{};
    for (std::size_t v = 0; v < N; ++v) {
      const int l = static_cast<int>(v % 8);
      int t = 0;
      for (int s = 1; s <= 3; ++s)
        if (l & slot_bit(s)) t |= slot_bit(sigma[static_cast<std::size_t>(s - 1)]);
      perm[v] = (v / 8) * 8 + static_cast<std::size_t>(t);
    }
    out.push_back(perm);
  }
  return out;
}

// Degree-12 stu oracle on (4,4,4) zero-weight charge monomials.
inline OracleResult degree12_oracle(const std::vector<ChargePoly>& certificates, std::uint32_t prime = kDefaultPrime) {
  ModularKernel<kChargeVars> k(zero_weight_monomials<kChargeVars>(4), prime);
  OracleResult res;
  res.space_dimension = k.space_dimension();
  for (const auto& d : stu_raising_operators<kChargeVars>()) {
    k.impose(d);
    res.stage_dimensions.push_back(k.dimension());
    res.largest_block = std::max(res.largest_block, k.stages().back().largest_block);
  }
  res.dimension = k.dimension();
  auto [inside, rk] = k.containment(certificates);
  res.certificates_inside = inside;
  res.certificate_rank = rk;
  res.s3_fixed_dimension = k.fixed_dimension(slot_permutations<kChargeVars>({{2, 1, 3}, {2, 3, 1}}));
  return res;
}

// Invariant count for two stu charges at row degree a.
inline std::size_t stu_two_center_dimension(int a, std::uint32_t prime = kDefaultPrime) {
  return stu_kernel<16>(a, prime).dimension();
}

// Tiny model: SL(2) on C^2 with p = rows copies, SL(rows) horizontally. Exact
// count of invariants of total degree k by brute force over all monomials.
template <std::size_t Rows>
std::size_t a1_toy_invariant_dim(int k) {
  constexpr std::size_t N = Rows * 2;
  std::vector<IntDerivation<N>> ops;
  ops.push_back(column_action<N>(2, {{0, 1}, {0, 0}}));
  ops.push_back(column_action<N>(2, {{0, 0}, {1, 0}}));
  for (std::size_t i = 0; i < Rows; ++i)
    for (std::size_t j = 0; j < Rows; ++j)
      if (i != j) ops.push_back(row_action<N>(2, i, j));
  // every monomial of total degree k
  std::vector<Monomial<N>> space;
  std::vector<int> e(N, 0);
  auto rec = [&](auto&& self, std::size_t v, int left) -> void {
    if (v + 1 == N) {
      e[v] = left;
      Monomial<N> m{};
      for (std::size_t i = 0; i < N; ++i) m[i] = static_cast<std::uint8_t>(e[i]);
      space.push_back(m);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[v] = x;
      self(self, v + 1, left - x);
    }
  };
  rec(rec, 0, k);
  if (k == 0) return 1;
  return exact_kernel_dimension<N>(space, ops);
}

}  // namespace mcinv::oracle
