#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcinv/linalg.hpp"
#include "mcinv/multipoly.hpp"
#include "mcinv/polyalg.hpp"

namespace mcinv {

// ---- symplectic spaces ---------------------------------------------------

inline mpq_class pfaffian(const QMatrix& a) {
  const std::size_t n = a.size();
  if (n % 2) return 0;
  if (n > 20) throw std::invalid_argument("pfaffian: matrix too large");
  std::unordered_map<std::uint32_t, mpq_class> memo;
  std::function<mpq_class(std::uint32_t)> pf = [&](std::uint32_t s) -> mpq_class {
    if (s == 0) return 1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    const int i = __builtin_ctz(s);
    const std::uint32_t rest = s & ~(1u << i);
    mpq_class total = 0;
    int pos = 0;
    for (int j = 0; j < static_cast<int>(n); ++j) {
      if (!(rest >> j & 1u)) continue;
      const mpq_class& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (aij != 0) {
        mpq_class sub = pf(rest & ~(1u << j));
        if (pos % 2 == 0) total += aij * sub;
        else total -= aij * sub;
      }
      ++pos;
    }
    memo.emplace(s, total);
    return total;
  };
  return pf(n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1));
}

class SymplecticSpace {
 public:
  explicit SymplecticSpace(QMatrix form) : form_(std::move(form)) {
    const std::size_t n = form_.size();
    if (n == 0 || n % 2) throw std::invalid_argument("symplectic space must have even positive dimension");
    for (const auto& row : form_)
      if (row.size() != n) throw std::invalid_argument("symplectic form must be square");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (form_[i][j] != -form_[j][i]) throw std::invalid_argument("symplectic form must be antisymmetric");
    if (pfaffian(form_) == 0) throw std::invalid_argument("symplectic form is degenerate");
  }

  // Basis (e_1, f_1, ..., e_n, f_n) with (e_i, f_i) = 1.
  static SymplecticSpace canonical(std::size_t n) {
    QMatrix m(2 * n, QVector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      m[2 * i][2 * i + 1] = 1;
      m[2 * i + 1][2 * i] = -1;
    }
    return SymplecticSpace(std::move(m));
  }

  // Product of the three epsilon forms on (2,2,2); basis e_l, l = 4a + 2b + c.
  static SymplecticSpace stu() {
    auto eps = [](int x, int y) { return x == y ? 0 : (x == 0 ? 1 : -1); };
    QMatrix m(8, QVector(8));
    for (int l = 0; l < 8; ++l)
      for (int k = 0; k < 8; ++k) {
        int v = 1;
        for (int s = 1; s <= 3; ++s) v *= eps((l & slot_bit(s)) ? 1 : 0, (k & slot_bit(s)) ? 1 : 0);
        m[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = v;
      }
    return SymplecticSpace(std::move(m));
  }

  std::size_t dim() const { return form_.size(); }
  const QMatrix& form() const { return form_; }

 private:
  QMatrix form_;
};

inline mpq_class symplectic_pairing(const SymplecticSpace& space, const QVector& u, const QVector& v) {
  if (u.size() != space.dim() || v.size() != space.dim())
    throw std::invalid_argument("symplectic_pairing: dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < space.dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < space.dim(); ++j)
      if (space.form()[i][j] != 0 && v[j] != 0) s += u[i] * space.form()[i][j] * v[j];
  }
  return s;
}

// (1/p!) sum over permutations sigma of sgn(sigma) prod_k (Q_sigma(2k-1), Q_sigma(2k)),
// evaluated as 2^(p/2) (p/2)! / p! times the Pfaffian of the Gram matrix.
inline mpq_class antisym_symplectic_invariant(const SymplecticSpace& space, const std::vector<QVector>& vectors) {
  const std::size_t p = vectors.size();
  if (p == 0 || p % 2 || p > space.dim())
    throw std::invalid_argument("antisym_symplectic_invariant: need an even number of vectors, at most dim");
  QMatrix gram(p, QVector(p));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) {
      gram[a][b] = symplectic_pairing(space, vectors[a], vectors[b]);
      gram[b][a] = -gram[a][b];
    }
  mpz_class num = 1, den = 1;
  for (std::size_t k = 1; k <= p / 2; ++k) num *= 2 * k;  // 2^(p/2) (p/2)!
  for (std::size_t k = 1; k <= p; ++k) den *= k;
  mpq_class scale(num, den);
  scale.canonicalize();
  return scale * pfaffian(gram);
}

// ---- kernel vector and hyperdeterminant ------------------------------------

inline QVector tensor_row(const ChargeTensor& t, int i) {
  return QVector(t[static_cast<std::size_t>(i)].begin(), t[static_cast<std::size_t>(i)].end());
}

// v_t = (r2,r3) r1 + (r3,r1) r2 + (r1,r2) r3
inline QVector kernel_vector(const ChargeTensor& t) {
  static const SymplecticSpace space = SymplecticSpace::stu();
  const QVector r1 = tensor_row(t, 0), r2 = tensor_row(t, 1), r3 = tensor_row(t, 2);
  const mpq_class w23 = symplectic_pairing(space, r2, r3);
  const mpq_class w31 = symplectic_pairing(space, r3, r1);
  const mpq_class w12 = symplectic_pairing(space, r1, r2);
  QVector v(8);
  for (std::size_t l = 0; l < 8; ++l) v[l] = w23 * r1[l] + w31 * r2[l] + w12 * r3[l];
  return v;
}

// Components of v_t as cubics in the c_ij.
inline const std::array<ChargePoly, 8>& kernel_vector_polys() {
  static const std::array<ChargePoly, 8> table = [] {
    const SymplecticSpace space = SymplecticSpace::stu();
    auto pairing = [&](int i, int j) {
      ChargePoly s;
      for (int l = 0; l < 8; ++l)
        for (int k = 0; k < 8; ++k) {
          const mpq_class& c = space.form()[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
          if (c == 0) continue;
          s += c * (ChargePoly::variable(charge_var(i, l + 1)) * ChargePoly::variable(charge_var(j, k + 1)));
        }
      return s;
    };
    const ChargePoly w23 = pairing(2, 3), w31 = pairing(3, 1), w12 = pairing(1, 2);
    std::array<ChargePoly, 8> v;
    for (int l = 0; l < 8; ++l)
      v[static_cast<std::size_t>(l)] = w23 * ChargePoly::variable(charge_var(1, l + 1)) +
                                       w31 * ChargePoly::variable(charge_var(2, l + 1)) +
                                       w12 * ChargePoly::variable(charge_var(3, l + 1));
    return v;
  }();
  return table;
}

// Cayley hyperdeterminant of x_abc (x[4a+2b+c]), normalized by I4(x000 = x111 = 1) = 1.
template <class T>
T cayley_I4_generic(const std::array<T, 8>& x) {
  const T p0 = x[0] * x[7], p1 = x[1] * x[6], p2 = x[2] * x[5], p3 = x[3] * x[4];
  T sq = p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3;
  T cross = p0 * p1 + p0 * p2 + p0 * p3 + p1 * p2 + p1 * p3 + p2 * p3;
  T quad = (x[0] * x[3]) * (x[5] * x[6]) + (x[1] * x[2]) * (x[4] * x[7]);
  return sq - T(mpq_class(2) * cross) + T(mpq_class(4) * quad);
}

inline mpq_class cayley_I4(const QVector& x) {
  if (x.size() != 8) throw std::invalid_argument("cayley_I4: expected 8 components");
  std::array<mpq_class, 8> a;
  std::copy(x.begin(), x.end(), a.begin());
  return cayley_I4_generic(a);
}

template <std::size_t N>
MultiPoly<N> cayley_I4_of(const std::array<MultiPoly<N>, 8>& x) {
  return cayley_I4_generic(x);
}

inline QubitPoly cayley_I4_poly() {
  std::array<QubitPoly, 8> x;
  for (std::size_t l = 0; l < 8; ++l) x[l] = QubitPoly::variable(l);
  return cayley_I4_of(x);
}

inline mpq_class F0(const ChargeTensor& t) { return cayley_I4(kernel_vector(t)); }

inline const ChargePoly& F0_poly() {
  static const ChargePoly f = cayley_I4_of(kernel_vector_polys());
  return f;
}

// I4(x) with x_klm = Y1^k Y2^l Y3^m v, v the highest weight vector of weight
// (1,1,1) in degree one, then written in the c_ij.
inline ChargePoly F0_from_highest_weight() {
  auto hw = highest_weight_vectors(weight_space(1, {1, 1, 1}));
  if (hw.size() != 1) throw std::logic_error("expected a single highest weight vector of weight (1,1,1)");
  std::array<PluckerPoly, 8> x;
  for (int l = 0; l < 8; ++l) {
    PluckerPoly f = hw[0];
    if (l & 4) f = act(Generator::Y1, f);
    if (l & 2) f = act(Generator::Y2, f);
    if (l & 1) f = act(Generator::Y3, f);
    x[static_cast<std::size_t>(l)] = f;
  }
  return substitute_plucker(cayley_I4_of(x));
}

// ---- slot permutations -------------------------------------------------------

using SlotPermutation = std::array<int, 3>;  // sigma[s-1] = sigma(s)

inline const std::array<SlotPermutation, 6>& s3_elements() {
  static const std::array<SlotPermutation, 6> e = {
      {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}}};
  return e;
}

inline int permutation_sign(const SlotPermutation& s) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) inv += s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)];
  return inv % 2 ? -1 : 1;
}

// The bit in slot s moves to slot sigma(s); (12) sends x_abc to x_bac.
inline int permute_label(const SlotPermutation& sigma, int label) {
  int out = 0;
  for (int s = 1; s <= 3; ++s)
    if (label & slot_bit(s)) out |= slot_bit(sigma[static_cast<std::size_t>(s - 1)]);
  return out;
}

inline ChargePoly apply_slot_permutation(const SlotPermutation& sigma, const ChargePoly& f) {
  std::array<std::size_t, kChargeVars> perm;
  for (int row = 1; row <= 3; ++row)
    for (int l = 0; l < 8; ++l) perm[charge_var(row, l + 1)] = charge_var(row, permute_label(sigma, l) + 1);
  return f.permuted(perm);
}

// ---- certificates ------------------------------------------------------------

struct InvariantCertificate {
  std::string label;
  ChargePoly poly;
  int degree = 0;
  std::vector<Generator> annihilators;  // generators verified to kill poly
  std::optional<QVector> coordinates;   // against a declared monomial set
  bool s3_fixed = false;
};

inline bool annihilated_by(const ChargePoly& f, Generator g) { return act(g, f).is_zero(); }

inline std::vector<Generator> verify_annihilation(const ChargePoly& f) {
  std::vector<Generator> ok;
  for (Generator g : kAllGenerators)
    if (annihilated_by(f, g)) ok.push_back(g);
  return ok;
}

inline bool is_s3_fixed(const ChargePoly& f) {
  for (const auto& s : s3_elements())
    if (!(apply_slot_permutation(s, f) == f)) return false;
  return true;
}

inline InvariantCertificate make_certificate(std::string label, ChargePoly f) {
  InvariantCertificate c;
  c.label = std::move(label);
  c.degree = f.homogeneous_degree();
  c.annihilators = verify_annihilation(f);
  c.s3_fixed = is_s3_fixed(f);
  c.poly = std::move(f);
  return c;
}

// Homogeneous of the declared degree, equal degree in each row, killed by all nine generators.
inline bool certificate_valid(const InvariantCertificate& c) {
  if (c.poly.is_zero() || c.poly.homogeneous_degree() != c.degree || c.degree % 3) return false;
  for (const auto& [m, coef] : c.poly.terms()) {
    Weight3 d = row_degrees(m);
    if (d[0] != c.degree / 3 || d[1] != c.degree / 3 || d[2] != c.degree / 3) return false;
  }
  for (Generator g : kAllGenerators)
    if (!annihilated_by(c.poly, g)) return false;
  return true;
}

struct Degree12Construction {
  std::vector<PluckerPoly> hw_002;  // highest weight vectors of weight (0,0,2), Plucker degree 2
  std::vector<ChargePoly> g;        // basis of their image in the c_ij
  std::vector<InvariantCertificate> basis;
};

// 2 g Y3^2(g) - (Y3 g)^2
inline ChargePoly killing_combination(const ChargePoly& g) {
  ChargePoly y = act(Generator::Y3, g);
  ChargePoly yy = act(Generator::Y3, y);
  return mpq_class(2) * (g * yy) - y * y;
}

inline Degree12Construction construct_degree12() {
  Degree12Construction out;
  out.hw_002 = highest_weight_vectors(weight_space(2, {0, 0, 2}));
  // g_k: images of the first highest weight vectors whose substitutions are
  // independent, made monic and sorted by leading monomial. (The reduced
  // echelon basis of the image is unsuitable: its first element squares to a
  // multiple of F0 under the Killing combination.)
  std::vector<ChargePoly> independent;
  for (const auto& h : out.hw_002) {
    ChargePoly s = substitute_plucker(h);
    std::vector<ChargePoly> trial = independent;
    trial.push_back(s);
    if (poly_rank(trial) > independent.size()) independent.push_back(s.monic());
  }
  std::sort(independent.begin(), independent.end(), [](const ChargePoly& a, const ChargePoly& b) {
    return canonical_less<kChargeVars>(a.leading().first, b.leading().first);
  });
  out.g = std::move(independent);

  out.basis.push_back(make_certificate("F0", F0_poly()));
  std::vector<ChargePoly> k113;
  for (const auto& g : out.g) k113.push_back(killing_combination(g));
  // (1,1,3), then its images under (13) -> (3,1,1) and (23) -> (1,3,1)
  const std::array<std::pair<const char*, SlotPermutation>, 3> images = {
      {{"K113_", {1, 2, 3}}, {"K311_", {3, 2, 1}}, {"K131_", {1, 3, 2}}}};
  for (const auto& [prefix, sigma] : images)
    for (std::size_t k = 0; k < k113.size(); ++k)
      out.basis.push_back(make_certificate(prefix + std::to_string(k + 1), apply_slot_permutation(sigma, k113[k])));

  std::vector<ChargePoly> polys;
  for (const auto& c : out.basis) polys.push_back(c.poly);
  const std::size_t r = poly_rank(polys);
  if (r != 10) throw std::runtime_error("degree-12 construction has rank " + std::to_string(r) + ", expected 10");
  for (const auto& c : out.basis)
    if (c.annihilators.size() != kAllGenerators.size())
      throw std::runtime_error("certificate " + c.label + " is not annihilated by all generators");
  return out;
}

inline std::vector<InvariantCertificate> build_degree12_basis() { return construct_degree12().basis; }

inline ChargePoly s3_average(const ChargePoly& f, bool signed_average = false) {
  ChargePoly s;
  for (const auto& sigma : s3_elements()) {
    ChargePoly img = apply_slot_permutation(sigma, f);
    if (signed_average && permutation_sign(sigma) < 0) s -= img;
    else s += img;
  }
  return mpq_class(1, 6) * s;
}

// Basis of the S3-fixed part of an S3-stable span.
inline std::vector<InvariantCertificate> triality_project(const std::vector<InvariantCertificate>& basis) {
  std::vector<ChargePoly> avg;
  for (const auto& c : basis) avg.push_back(s3_average(c.poly));
  std::vector<InvariantCertificate> out;
  std::size_t k = 0;
  for (auto& f : span_basis(avg)) out.push_back(make_certificate("T" + std::to_string(++k), std::move(f)));
  return out;
}

struct S3Isotypic {
  std::size_t trivial = 0, sign = 0, standard = 0;  // dimensions of the isotypic parts
};

inline S3Isotypic s3_isotypic_dimensions(const std::vector<InvariantCertificate>& basis) {
  std::vector<ChargePoly> triv, sgn, stdp;
  for (const auto& c : basis) {
    ChargePoly t = s3_average(c.poly), s = s3_average(c.poly, true);
    triv.push_back(t);
    sgn.push_back(s);
    stdp.push_back(c.poly - t - s);
  }
  return {poly_rank(triv), poly_rank(sgn), poly_rank(stdp)};
}

// ---- monomial coordinates ------------------------------------------------------

// "c18^4 c23^2 c25" -> exponent vector over the c_ij
inline Monomial<kChargeVars> parse_charge_monomial(std::string_view s) {
  Monomial<kChargeVars> m{};
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) {
    if (tok.size() < 3 || tok[0] != 'c') throw std::invalid_argument("bad charge variable '" + tok + "'");
    int row = tok[1] - '0', col = tok[2] - '0';
    if (row < 1 || row > 3 || col < 1 || col > 8) throw std::invalid_argument("bad charge variable '" + tok + "'");
    int e = 1;
    if (tok.size() > 3) {
      if (tok[3] != '^') throw std::invalid_argument("bad charge variable '" + tok + "'");
      e = std::stoi(tok.substr(4));
    }
    m[charge_var(row, col)] = static_cast<std::uint8_t>(m[charge_var(row, col)] + e);
  }
  return m;
}

inline std::string format_charge_monomial(const Monomial<kChargeVars>& m) {
  std::string s;
  for (int row = 1; row <= 3; ++row)
    for (int col = 1; col <= 8; ++col) {
      int e = m[charge_var(row, col)];
      if (!e) continue;
      if (!s.empty()) s += ' ';
      s += "c" + std::to_string(row) + std::to_string(col);
      if (e > 1) s += "^" + std::to_string(e);
    }
  return s;
}

inline const std::vector<Monomial<kChargeVars>>& reference_monomials() {
  static const std::vector<Monomial<kChargeVars>> m = [] {
    const char* src[] = {
        "c18^4 c23^2 c25 c26 c31^3 c32",     "c18^4 c23^2 c25^2 c31^2 c32^2",
        "c18^4 c22 c24 c25^2 c31^3 c33",     "c18^4 c22 c23 c26 c27 c31^4",
        "c18^4 c22 c23 c25 c27 c31^3 c32",   "c18^4 c22^2 c27^2 c31^4",
        "c11^3 c16 c22^2 c27^2 c33 c38^3",   "c11^3 c14 c22^2 c27^2 c35 c38^3",
        "c11^3 c14 c22 c23 c26 c27 c35 c38^3", "c11^3 c14 c23^2 c26^2 c35 c38^3",
    };
    std::vector<Monomial<kChargeVars>> v;
    for (const char* s : src) v.push_back(parse_charge_monomial(s));
    return v;
  }();
  return m;
}

inline QVector monomial_coordinates(const ChargePoly& f, const std::vector<Monomial<kChargeVars>>& monomials) {
  QVector v;
  v.reserve(monomials.size());
  for (const auto& m : monomials) v.push_back(f.coefficient(m));
  return v;
}

inline QVector monomial_coordinates(const InvariantCertificate& c, const std::vector<Monomial<kChargeVars>>& monomials) {
  return monomial_coordinates(c.poly, monomials);
}

inline QMatrix coefficient_matrix(const std::vector<InvariantCertificate>& basis,
                                  const std::vector<Monomial<kChargeVars>>& monomials) {
  QMatrix c;
  for (const auto& b : basis) c.push_back(monomial_coordinates(b, monomials));
  return c;
}

// Integer vector (a_1..a_n, a_{n+1}) with sum a_i basis_i + a_{n+1} f = 0 and
// a_{n+1} > 0, or nothing if f is outside the span. Coefficients are found
// from the monomial coordinates and then checked on the full polynomials.
inline std::optional<std::vector<mpz_class>> relation_vector(const std::vector<InvariantCertificate>& basis,
                                                              const ChargePoly& f,
                                                              const std::vector<Monomial<kChargeVars>>& monomials) {
  const std::size_t n = basis.size();
  QMatrix ct(monomials.size(), QVector(n));
  for (std::size_t a = 0; a < n; ++a) {
    QVector col = monomial_coordinates(basis[a], monomials);
    for (std::size_t b = 0; b < monomials.size(); ++b) ct[b][a] = col[b];
  }
  auto x = solve(ct, monomial_coordinates(f, monomials), n);
  if (!x) return std::nullopt;
  ChargePoly combo;
  for (std::size_t a = 0; a < n; ++a)
    if ((*x)[a] != 0) combo += (*x)[a] * basis[a].poly;
  if (!(combo == f)) return std::nullopt;
  mpz_class den = 1;
  for (const auto& q : *x) den = lcm(den, mpz_class(q.get_den()));
  std::vector<mpz_class> out;
  for (const auto& q : *x) out.push_back(-mpz_class(q * den));
  out.push_back(den);
  return out;
}

inline void write_certificate(std::ostream& os, const InvariantCertificate& c) {
  os << "# certificate " << c.label << '\n';
  os << "# degree " << c.degree << '\n';
  os << "# variables c11..c18 c21..c28 c31..c38\n";
  for (Generator g : kAllGenerators) {
    ChargePoly img = act(g, c.poly);
    os << "# check " << generator_name(g) << ' ' << (img.is_zero() ? "zero" : "nonzero") << ' ' << std::hex
       << std::setw(16) << std::setfill('0') << poly_hash(img) << std::dec << std::setfill(' ') << '\n';
  }
  os << "# s3_fixed " << (c.s3_fixed ? "true" : "false") << '\n';
  if (c.coordinates) {
    os << "# coordinates";
    for (const auto& q : *c.coordinates) os << ' ' << format_rational(q);
    os << '\n';
  }
  os << "# terms " << c.poly.size() << '\n';
  write_poly(os, c.poly);
}

}  // namespace mcinv
