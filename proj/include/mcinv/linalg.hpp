#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcinv/multipoly.hpp"

namespace mcinv {

using QVector = std::vector<mpq_class>;
using QMatrix = std::vector<QVector>;
using ZMatrix = std::vector<std::vector<mpz_class>>;

struct Echelon {
  ZMatrix rows;                     // fraction-free row echelon form, rank rows
  std::vector<std::size_t> pivots;  // pivot column of each row
};

// Bareiss fraction-free elimination. Rows are first cleared of denominators.
inline Echelon bareiss_echelon(const QMatrix& a, std::size_t ncols) {
  ZMatrix m;
  m.reserve(a.size());
  for (const auto& row : a) {
    if (row.size() != ncols) throw std::invalid_argument("bareiss_echelon: ragged matrix");
    mpz_class den = 1;
    for (const auto& x : row) den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> z(ncols);
    for (std::size_t j = 0; j < ncols; ++j) z[j] = mpz_class(row[j].get_num()) * (den / mpz_class(row[j].get_den()));
    m.push_back(std::move(z));
  }
  Echelon out;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& a, std::size_t ncols) { return bareiss_echelon(a, ncols).pivots.size(); }

// Reduced row echelon form over Q; zero rows dropped.
inline QMatrix rref(QMatrix m, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

// Basis of {x : a x = 0}, returned in reduced echelon form (each vector's
// first nonzero entry is 1).
inline QMatrix nullspace(const QMatrix& a, std::size_t ncols) {
  Echelon e = bareiss_echelon(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVector x(ncols);
    x[f] = 1;
    for (std::size_t k = e.pivots.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      mpq_class s = 0;
      for (std::size_t j = e.pivots[k] + 1; j < ncols; ++j)
        if (x[j] != 0 && row[j] != 0) s += mpq_class(row[j]) * x[j];
      x[e.pivots[k]] = -s / mpq_class(row[e.pivots[k]]);
    }
    basis.push_back(std::move(x));
  }
  return rref(std::move(basis), ncols);
}

// Some solution of a x = b, if any.
inline std::optional<QVector> solve(const QMatrix& a, const QVector& b, std::size_t ncols) {
  QMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  QMatrix r = rref(std::move(aug), ncols + 1);
  QVector x(ncols);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (c < ncols + 1 && row[c] == 0) ++c;
    if (c == ncols) return std::nullopt;
    x[c] = row[ncols];
  }
  return x;
}

// Fully reduced echelon basis of the span of polynomials: each basis element
// has leading coefficient 1 and vanishes at the leading monomials of the others.
template <std::size_t N>
std::vector<MultiPoly<N>> span_basis(const std::vector<MultiPoly<N>>& polys) {
  std::vector<MultiPoly<N>> basis;
  for (MultiPoly<N> p : polys) {
    for (const auto& b : basis) {
      mpq_class c = p.coefficient(b.leading().first);
      if (c != 0) p -= c * b;
    }
    if (p.is_zero()) continue;
    p = p.monic();
    for (auto& b : basis) {
      mpq_class c = b.coefficient(p.leading().first);
      if (c != 0) b -= c * p;
    }
    basis.push_back(std::move(p));
  }
  std::sort(basis.begin(), basis.end(), [](const MultiPoly<N>& a, const MultiPoly<N>& b) {
    return canonical_less<N>(a.leading().first, b.leading().first);
  });
  return basis;
}

template <std::size_t N>
std::size_t poly_rank(const std::vector<MultiPoly<N>>& polys) {
  return span_basis(polys).size();
}

}  // namespace mcinv
