#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcinv/linalg.hpp"
#include "mcinv/multipoly.hpp"

namespace mcinv {

// Variable sets:
//   qubit    x_l, l = 4a + 2b + c for x_abc (8 variables)
//   charge   c_ij, row i = 1..3, column j = 1..8, index 8(i-1) + (j-1)
//   plucker  p_I, I = (i1 < i2 < i3) in 1..8, lexicographic (56 variables)
inline constexpr std::size_t kQubitVars = 8;
inline constexpr std::size_t kChargeVars = 24;
inline constexpr std::size_t kPluckerVars = 56;

using QubitPoly = MultiPoly<kQubitVars>;
using ChargePoly = MultiPoly<kChargeVars>;
using PluckerPoly = MultiPoly<kPluckerVars>;

using ChargeTensor = std::array<std::array<mpq_class, 8>, 3>;

inline constexpr std::size_t charge_var(int row, int col) {
  return static_cast<std::size_t>(8 * (row - 1) + (col - 1));
}

struct PluckerIndex {
  std::array<int, 3> idx;  // 1-based, strictly increasing

  static const std::array<PluckerIndex, 56>& all() {
    static const std::array<PluckerIndex, 56> table = [] {
      std::array<PluckerIndex, 56> t{};
      std::size_t k = 0;
      for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
          for (int l = j + 1; l <= 8; ++l) t[k++] = PluckerIndex{{i, j, l}};
      return t;
    }();
    return table;
  }

  std::size_t ordinal() const {
    const auto& t = all();
    for (std::size_t k = 0; k < t.size(); ++k)
      if (t[k].idx == idx) return k;
    throw std::invalid_argument("not a Plucker index");
  }

  std::string name() const {
    return "p" + std::to_string(idx[0]) + std::to_string(idx[1]) + std::to_string(idx[2]);
  }

  static PluckerIndex parse(std::string_view s) {
    if (s.size() != 4 || s[0] != 'p') throw std::invalid_argument("Plucker symbol must look like p127");
    PluckerIndex p{{s[1] - '0', s[2] - '0', s[3] - '0'}};
    if (!(1 <= p.idx[0] && p.idx[0] < p.idx[1] && p.idx[1] < p.idx[2] && p.idx[2] <= 8))
      throw std::invalid_argument("Plucker index must be strictly increasing in 1..8");
    return p;
  }

  bool operator==(const PluckerIndex&) const = default;
};

// ---- generators ----------------------------------------------------------

enum class Generator { X1, Y1, H1, X2, Y2, H2, X3, Y3, H3 };

inline constexpr std::array<Generator, 9> kAllGenerators = {Generator::X1, Generator::Y1, Generator::H1,
                                                            Generator::X2, Generator::Y2, Generator::H2,
                                                            Generator::X3, Generator::Y3, Generator::H3};
inline constexpr std::array<Generator, 3> kRaising = {Generator::X1, Generator::X2, Generator::X3};

inline int generator_slot(Generator g) { return static_cast<int>(g) / 3 + 1; }
inline char generator_kind(Generator g) { return "XYH"[static_cast<int>(g) % 3]; }
inline std::string generator_name(Generator g) { return std::string(1, generator_kind(g)) + std::to_string(generator_slot(g)); }

inline Generator parse_generator(std::string_view s) {
  for (Generator g : kAllGenerators)
    if (generator_name(g) == s) return g;
  throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
}

// qubit index bit for slot 1, 2, 3
inline constexpr int slot_bit(int slot) { return 1 << (3 - slot); }

inline int qubit_weight(int label, int slot) { return (label & slot_bit(slot)) ? -1 : 1; }

// Action on a qubit label: list of (label', coefficient).
inline std::vector<std::pair<int, int>> generator_on_label(Generator g, int label) {
  const int bit = slot_bit(generator_slot(g));
  switch (generator_kind(g)) {
    case 'X':
      if (label & bit) return {{label & ~bit, 1}};
      return {};
    case 'Y':
      if (!(label & bit)) return {{label | bit, 1}};
      return {};
    default:
      return {{label, qubit_weight(label, generator_slot(g))}};
  }
}

namespace detail {

inline Derivation<kQubitVars> make_qubit_derivation(Generator g) {
  Derivation<kQubitVars> d;
  for (int l = 0; l < 8; ++l)
    for (auto [u, c] : generator_on_label(g, l)) d.images[static_cast<std::size_t>(l)].emplace_back(u, c);
  return d;
}

inline Derivation<kChargeVars> make_charge_derivation(Generator g) {
  Derivation<kChargeVars> d;
  for (int row = 1; row <= 3; ++row)
    for (int l = 0; l < 8; ++l)
      for (auto [u, c] : generator_on_label(g, l))
        d.images[charge_var(row, l + 1)].emplace_back(static_cast<std::uint16_t>(charge_var(row, u + 1)), c);
  return d;
}

// sign and ordinal of p with the given (unsorted) labels; sign 0 if repeated
inline std::pair<int, std::size_t> sorted_plucker(std::array<int, 3> v) {
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
  if (v[0] == v[1] || v[1] == v[2]) return {0, 0};
  return {sign, PluckerIndex{v}.ordinal()};
}

inline Derivation<kPluckerVars> make_plucker_derivation(Generator g) {
  Derivation<kPluckerVars> d;
  const auto& all = PluckerIndex::all();
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::array<mpq_class, kPluckerVars> acc{};
    for (int pos = 0; pos < 3; ++pos) {
      for (auto [u, c] : generator_on_label(g, all[k].idx[static_cast<std::size_t>(pos)] - 1)) {
        std::array<int, 3> v = all[k].idx;
        v[static_cast<std::size_t>(pos)] = u + 1;
        auto [s, o] = sorted_plucker(v);
        if (s != 0) acc[o] += s * c;
      }
    }
    for (std::size_t o = 0; o < kPluckerVars; ++o)
      if (acc[o] != 0) d.images[k].emplace_back(static_cast<std::uint16_t>(o), acc[o]);
  }
  return d;
}

template <std::size_t N>
const Derivation<N>& generator_derivation(Generator g) {
  static const std::array<Derivation<N>, 9> table = [] {
    std::array<Derivation<N>, 9> t;
    for (Generator h : kAllGenerators) {
      if constexpr (N == kQubitVars) t[static_cast<std::size_t>(h)] = make_qubit_derivation(h);
      else if constexpr (N == kChargeVars) t[static_cast<std::size_t>(h)] = make_charge_derivation(h);
      else t[static_cast<std::size_t>(h)] = make_plucker_derivation(h);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(g)];
}

}  // namespace detail

// Generator acting as a derivation on polynomials over any of the three variable sets.
template <std::size_t N>
MultiPoly<N> act(Generator g, const MultiPoly<N>& f) {
  static_assert(N == kQubitVars || N == kChargeVars || N == kPluckerVars, "unsupported variable set");
  return detail::generator_derivation<N>(g).apply(f);
}

// ---- weights -------------------------------------------------------------

using Weight3 = std::array<int, 3>;

template <std::size_t N>
Weight3 variable_weight(std::size_t v) {
  Weight3 w{};
  for (int s = 1; s <= 3; ++s) {
    if constexpr (N == kQubitVars) {
      w[static_cast<std::size_t>(s - 1)] = qubit_weight(static_cast<int>(v), s);
    } else if constexpr (N == kChargeVars) {
      w[static_cast<std::size_t>(s - 1)] = qubit_weight(static_cast<int>(v % 8), s);
    } else {
      for (int i : PluckerIndex::all()[v].idx) w[static_cast<std::size_t>(s - 1)] += qubit_weight(i - 1, s);
    }
  }
  return w;
}

template <std::size_t N>
Weight3 monomial_weight(const Monomial<N>& m) {
  Weight3 w{};
  for (std::size_t v = 0; v < N; ++v) {
    if (!m[v]) continue;
    Weight3 x = variable_weight<N>(v);
    for (int s = 0; s < 3; ++s) w[static_cast<std::size_t>(s)] += m[v] * x[static_cast<std::size_t>(s)];
  }
  return w;
}

// Degrees in the three rows of t for a charge monomial.
inline Weight3 row_degrees(const Monomial<kChargeVars>& m) {
  Weight3 d{};
  for (std::size_t v = 0; v < kChargeVars; ++v) d[v / 8] += m[v];
  return d;
}

// ---- Plucker coordinates -------------------------------------------------

inline mpq_class det3(const std::array<std::array<mpq_class, 3>, 3>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

// p_{i1 i2 i3}(t): determinant of rows i1, i2, i3 of the 8x3 matrix [r1 r2 r3].
inline std::array<mpq_class, kPluckerVars> plucker_evaluate(const ChargeTensor& t) {
  std::array<mpq_class, kPluckerVars> out;
  const auto& all = PluckerIndex::all();
  for (std::size_t k = 0; k < all.size(); ++k) {
    std::array<std::array<mpq_class, 3>, 3> m;
    for (int r = 0; r < 3; ++r)
      for (int col = 0; col < 3; ++col)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
            t[static_cast<std::size_t>(col)][static_cast<std::size_t>(all[k].idx[static_cast<std::size_t>(r)] - 1)];
    out[k] = det3(m);
  }
  return out;
}

inline const std::array<ChargePoly, kPluckerVars>& plucker_as_polynomials() {
  static const std::array<ChargePoly, kPluckerVars> table = [] {
    std::array<ChargePoly, kPluckerVars> t;
    const auto& all = PluckerIndex::all();
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const std::array<int, 6> signs = {1, -1, -1, 1, 1, -1};
    for (std::size_t k = 0; k < all.size(); ++k) {
      std::vector<ChargePoly::Term> terms;
      for (std::size_t s = 0; s < 6; ++s) {
        Monomial<kChargeVars> m{};
        // entry (row r of the 8x3 matrix, column col) is c_{col+1, i_r}
        for (int r = 0; r < 3; ++r) {
          int col = perms[s][static_cast<std::size_t>(r)];
          ++m[charge_var(col + 1, all[k].idx[static_cast<std::size_t>(r)])];
        }
        terms.emplace_back(m, signs[s]);
      }
      t[k] = ChargePoly::from_terms(std::move(terms));
    }
    return t;
  }();
  return table;
}

inline ChargePoly substitute_plucker(const PluckerPoly& f) { return f.substitute(plucker_as_polynomials()); }

// ---- weight spaces and highest weight vectors -----------------------------

// Monomials of degree deg in the Plucker variables with H-weight w, in canonical order.
inline std::vector<PluckerPoly> weight_space(int deg, const Weight3& w) {
  if (deg < 1) throw std::invalid_argument("weight_space: degree must be at least 1");
  std::array<Weight3, kPluckerVars> vw;
  for (std::size_t v = 0; v < kPluckerVars; ++v) vw[v] = variable_weight<kPluckerVars>(v);
  std::vector<Monomial<kPluckerVars>> monos;
  Monomial<kPluckerVars> cur{};
  std::function<void(std::size_t, int, Weight3)> rec = [&](std::size_t start, int left, Weight3 acc) {
    if (left == 0) {
      if (acc == w) monos.push_back(cur);
      return;
    }
    for (std::size_t v = start; v < kPluckerVars; ++v) {
      ++cur[v];
      Weight3 next = acc;
      for (int s = 0; s < 3; ++s) next[static_cast<std::size_t>(s)] += vw[v][static_cast<std::size_t>(s)];
      rec(v, left - 1, next);
      --cur[v];
    }
  };
  rec(0, deg, Weight3{});
  std::sort(monos.begin(), monos.end(), canonical_less<kPluckerVars>);
  std::vector<PluckerPoly> out;
  out.reserve(monos.size());
  for (const auto& m : monos) out.push_back(PluckerPoly::monomial(m));
  return out;
}

// Kernel of a list of derivations restricted to span(space), as a reduced
// echelon basis (first coefficient in canonical order equal to 1).
template <std::size_t N>
std::vector<MultiPoly<N>> joint_kernel(const std::vector<MultiPoly<N>>& space, const std::vector<Generator>& ops) {
  // rows: (operator, image monomial); columns: elements of space
  std::vector<std::unordered_map<Monomial<N>, std::size_t, MonomialHash<N>>> row_of(ops.size());
  std::size_t nrows = 0;
  std::vector<std::vector<std::pair<std::size_t, mpq_class>>> entries(space.size());
  for (std::size_t o = 0; o < ops.size(); ++o) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      MultiPoly<N> img = act(ops[o], space[j]);
      for (const auto& [m, c] : img.terms()) {
        auto [it, ins] = row_of[o].try_emplace(m, nrows);
        if (ins) ++nrows;
        entries[j].emplace_back(it->second, c);
      }
    }
  }
  QMatrix a(nrows, QVector(space.size()));
  for (std::size_t j = 0; j < space.size(); ++j)
    for (const auto& [r, c] : entries[j]) a[r][j] = c;
  QMatrix ker = nrows == 0 ? QMatrix{} : nullspace(a, space.size());
  if (nrows == 0) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      QVector e(space.size());
      e[j] = 1;
      ker.push_back(e);
    }
  }
  std::vector<MultiPoly<N>> out;
  for (const auto& x : ker) {
    MultiPoly<N> v;
    for (std::size_t j = 0; j < space.size(); ++j)
      if (x[j] != 0) v += x[j] * space[j];
    out.push_back(std::move(v));
  }
  return span_basis(out);
}

inline std::vector<PluckerPoly> highest_weight_vectors(const std::vector<PluckerPoly>& space) {
  return joint_kernel(space, std::vector<Generator>(kRaising.begin(), kRaising.end()));
}

// ---- printing ------------------------------------------------------------

inline std::string format_rational(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

// Human-readable Plucker polynomial, e.g. "p145 - p136 - p127". Terms are
// listed in canonical order with positive coefficients first.
inline std::string format_plucker(const PluckerPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<const PluckerPoly::Term*> order;
  for (const auto& t : f.terms())
    if (t.second > 0) order.push_back(&t);
  for (const auto& t : f.terms())
    if (t.second < 0) order.push_back(&t);
  std::string s;
  bool first = true;
  for (const auto* t : order) {
    mpq_class c = t->second;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    mpq_class ac = abs(c);
    std::string mono;
    for (std::size_t v = 0; v < kPluckerVars; ++v) {
      if (!t->first[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += PluckerIndex::all()[v].name();
      if (t->first[v] > 1) mono += "^" + std::to_string(t->first[v]);
    }
    if (mono.empty()) mono = format_rational(ac);
    else if (ac != 1) mono = format_rational(ac) + "*" + mono;
    s += mono;
    first = false;
  }
  return s;
}

inline PluckerPoly plucker_variable(std::string_view name) {
  return PluckerPoly::variable(PluckerIndex::parse(name).ordinal());
}

}  // namespace mcinv
