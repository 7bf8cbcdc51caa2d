#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "mcinv/liealg.hpp"
#include "mcinv/symfunc.hpp"

using namespace mcinv;

namespace {

// determinant by the Leibniz sum over permutations
Poly leibniz_det(const std::vector<std::vector<Poly>>& m, std::size_t nvars) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(nvars);
  do {
    Poly term = Poly::constant(nvars, 1);
    for (std::size_t i = 0; i < n; ++i) term = term * m[i][perm[i]];
    if (detail::permutation_sign(perm) > 0) det += term;
    else det -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// sum of all monomials of degree k in N variables
Poly all_monomials(int k, std::size_t N, bool squarefree) {
  Poly out(N);
  Poly::Exponent e(N, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == N) {
      e[i] = left;
      if (!squarefree || left <= 1) out.add_term(e, 1);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      if (squarefree && x > 1) break;
      e[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (k >= 0) rec(rec, 0, k);
  return out;
}

Poly h_or_zero(int k, std::size_t N) { return k < 0 ? Poly(N) : (k == 0 ? Poly::constant(N, 1) : complete_homogeneous(k, N)); }
Poly e_or_zero(int k, std::size_t N) { return k < 0 ? Poly(N) : (k == 0 ? Poly::constant(N, 1) : elementary(k, N)); }

// brute-force character of S^k or Lambda^k of a weight multiset
WeightMultiset power_character(const WeightMultiset& ch, int k, bool exterior) {
  std::vector<Weight> basis;
  for (const auto& [w, m] : ch.sorted())
    for (std::int64_t i = 0; i < m; ++i) basis.push_back(w);
  WeightMultiset out;
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start, int left, Weight acc) -> void {
    if (left == 0) {
      out.add(acc, 1);
      return;
    }
    for (std::size_t i = start; i < basis.size(); ++i) self(self, exterior ? i + 1 : i, left - 1, acc + basis[i]);
  };
  rec(rec, 0, k, Weight{});
  return out;
}

}  // namespace

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("4,4").str(), "4,4");
  EXPECT_EQ(Partition::parse("3").parts(), std::vector<int>({3}));
  EXPECT_TRUE(Partition::parse("0").empty());
  EXPECT_EQ(Partition::parse("0").str(), "0");
  EXPECT_EQ(Partition::parse("[2,1,0]").parts(), std::vector<int>({2, 1}));
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("-1"), std::invalid_argument);
}

TEST(Partition, ConjugateAndRectangle) {
  EXPECT_EQ(Partition({4, 2, 1}).conjugate().parts(), std::vector<int>({3, 2, 1, 1}));
  for (int m = 0; m <= 8; ++m)
    for (const auto& p : partitions_of(m)) EXPECT_EQ(p.conjugate().conjugate(), p);
  Partition r = Partition::rectangle(4, 3);
  EXPECT_EQ(r.parts(), std::vector<int>({4, 4, 4}));
  EXPECT_TRUE(r.is_rectangle());
  EXPECT_FALSE(Partition({2, 1}).is_rectangle());
  EXPECT_EQ(r.weight(), 12);
}

TEST(Partition, Counts) {
  const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int m = 0; m < 10; ++m) EXPECT_EQ(partitions_of(m).size(), p[static_cast<std::size_t>(m)]) << m;
  EXPECT_EQ(partitions_of(6, 2).size(), 4u);
  for (const auto& lam : partitions_of(7, 3)) EXPECT_LE(lam.height(), 3);
}

TEST(Schur, SmallCases) {
  EXPECT_EQ(schur(Partition({1}), 3), all_monomials(1, 3, false));
  EXPECT_TRUE(schur(Partition({1, 1, 1, 1}), 3).is_zero());
  EXPECT_EQ(schur(Partition(), 2), Poly::constant(2, 1));
  // s_{2,1}(x1,x2) = x1^2 x2 + x1 x2^2
  Poly s21 = schur(Partition({2, 1}), 2);
  EXPECT_EQ(s21.size(), 2u);
  EXPECT_EQ(s21.coefficient({2, 1}), 1);
  EXPECT_EQ(s21.coefficient({1, 2}), 1);
}

TEST(Schur, RowAndColumnShapes) {
  for (std::size_t N = 1; N <= 4; ++N)
    for (int k = 1; k <= 5; ++k) {
      EXPECT_EQ(complete_homogeneous(k, N), all_monomials(k, N, false)) << N << ' ' << k;
      EXPECT_EQ(elementary(k, N), all_monomials(k, N, true)) << N << ' ' << k;
    }
}

TEST(Schur, JacobiTrudiOracle) {
  for (std::size_t N = 1; N <= 4; ++N)
    for (int m = 0; m <= 6; ++m)
      for (const auto& lam : partitions_of(m)) {
        const std::size_t n = static_cast<std::size_t>(lam.height());
        std::vector<std::vector<Poly>> h(n, std::vector<Poly>(n, Poly(N)));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) h[i][j] = h_or_zero(lam[i] - static_cast<int>(i) + static_cast<int>(j), N);
        Poly jt = n == 0 ? Poly::constant(N, 1) : leibniz_det(h, N);
        EXPECT_EQ(schur(lam, N), jt) << lam.str() << " N=" << N;
        // dual form in the elementary polynomials
        const Partition mu = lam.conjugate();
        const std::size_t q = static_cast<std::size_t>(mu.height());
        std::vector<std::vector<Poly>> e(q, std::vector<Poly>(q, Poly(N)));
        for (std::size_t i = 0; i < q; ++i)
          for (std::size_t j = 0; j < q; ++j) e[i][j] = e_or_zero(mu[i] - static_cast<int>(i) + static_cast<int>(j), N);
        Poly dual = q == 0 ? Poly::constant(N, 1) : leibniz_det(e, N);
        EXPECT_EQ(schur(lam, N), dual) << lam.str() << " N=" << N;
      }
}

TEST(Schur, SymmetricUnderVariablePermutations) {
  Poly s = schur(Partition({3, 1, 1}), 4);
  std::vector<std::size_t> perm = {0, 1, 2, 3};
  do {
    EXPECT_EQ(s.permuted(perm), s);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Schur, GlDimensionIsNumberOfTerms) {
  // the value at (1,...,1) is the sum of the coefficients
  for (std::size_t N = 1; N <= 4; ++N)
    for (int m = 0; m <= 6; ++m)
      for (const auto& lam : partitions_of(m)) {
        mpz_class total = 0;
        const SymPoly s = schur(lam, N);
        for (const auto& [e, c] : s.terms()) total += c;
        EXPECT_EQ(gl_dim(lam, static_cast<long>(N)), total) << lam.str() << " N=" << N;
      }
  EXPECT_EQ(gl_dim(Partition({1, 1, 1}), 8), 56);
  EXPECT_EQ(gl_dim(Partition({2, 2, 2}), 8), 1176);  // 8*9*7*8*6*7 / (4*3*3*2*2*1)
}

TEST(Identities, Cauchy) {
  for (int m = 1; m <= 2; ++m)
    for (int n = m; n <= 3; ++n)
      for (int deg = 0; deg <= 6; ++deg) EXPECT_TRUE(verify_cauchy(m, n, deg)) << m << ' ' << n << ' ' << deg;
}

TEST(Identities, Molien) {
  for (int N = 1; N <= 3; ++N)
    for (int deg = 0; deg <= 6; ++deg) EXPECT_TRUE(verify_molien(N, deg)) << N << ' ' << deg;
}

TEST(Identities, RejectBadArguments) {
  EXPECT_THROW(verify_cauchy(0, 1, 2), std::invalid_argument);
  EXPECT_THROW(verify_molien(0, 2), std::invalid_argument);
  EXPECT_THROW(schur(Partition({1}), 0), std::invalid_argument);
}

TEST(Plethysm, SymmetricAndExteriorPowersMatchBruteForce) {
  const AlgebraSpec stu = AlgebraSpec::parse("A1A1A1");
  const WeightMultiset ch = weight_multiplicities(stu, Weight{1, 1, 1});
  ComputeBudget b = ComputeBudget::unlimited();
  auto h = complete_plethysms(ch, 4, b);
  auto e = elementary_plethysms(ch, 4, b);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(h[static_cast<std::size_t>(k)], power_character(ch, k, false)) << k;
    EXPECT_EQ(e[static_cast<std::size_t>(k)], power_character(ch, k, true)) << k;
  }
}

TEST(Plethysm, RoutesAgree) {
  const AlgebraSpec a2 = AlgebraSpec::parse("A2");
  const WeightMultiset ch = weight_multiplicities(a2, Weight{1, 1});
  for (int m = 1; m <= 4; ++m)
    for (const auto& lam : partitions_of(m)) {
      ComputeBudget b = ComputeBudget::unlimited();
      auto viaH = plethysm_into_monomials(lam, ch, b, PlethysmRoute::Complete);
      auto viaE = plethysm_into_monomials(lam, ch, b, PlethysmRoute::Elementary);
      EXPECT_EQ(viaH, viaE) << lam.str();
      EXPECT_EQ(mpz_class(viaH.total()), gl_dim(lam, 8)) << lam.str();
    }
}

TEST(Plethysm, TensorCubeSplitsIntoSchurFunctors) {
  // V^{(x)3} = S^3 + 2 S_{21} + Lambda^3 on characters
  const AlgebraSpec c3 = AlgebraSpec::parse("C3");
  const WeightMultiset v = weight_multiplicities(c3, Weight::unit(2));
  ComputeBudget b = ComputeBudget::unlimited();
  WeightMultiset cube = multiply(multiply(v, v, b), v, b);
  WeightMultiset sum = plethysm_into_monomials(Partition({3}), v);
  sum += plethysm_into_monomials(Partition({2, 1}), v).scaled(2);
  sum += plethysm_into_monomials(Partition({1, 1, 1}), v);
  EXPECT_EQ(cube, sum);
}

TEST(Plethysm, BudgetIsEnforced) {
  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  const WeightMultiset v = weight_multiplicities(e7, Weight::unit(6));
  ComputeBudget tiny(1000);
  EXPECT_THROW(plethysm_into_monomials(Partition({2, 2}), v, tiny), ResourceLimitError);
  EXPECT_GT(tiny.used(), 0u);
}
