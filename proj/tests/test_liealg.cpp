#include <gtest/gtest.h>

#include <map>
#include <set>

#include "mcinv/liealg.hpp"

using namespace mcinv;

namespace {

// dims of the summands, largest first
std::vector<long> dims(const AlgebraSpec& alg, const Decomposition& d) {
  std::vector<long> out;
  for (const auto& t : d.terms())
    for (std::int64_t k = 0; k < t.mult; ++k) out.push_back(weyl_dim(alg, t.hw).get_si());
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace

TEST(Roots, PositiveRootCounts) {
  const std::map<std::string, std::size_t> want = {{"A1", 1},  {"A5", 15}, {"B3", 9},  {"C3", 9},  {"D4", 12}, {"D6", 30},
                                                   {"E6", 36}, {"E7", 63}, {"E8", 120}, {"A1A1A1", 3}, {"B2", 4}};
  for (const auto& [name, n] : want) {
    AlgebraSpec a = AlgebraSpec::parse(name);
    EXPECT_EQ(a.positive_roots().size(), n) << name;
    std::size_t expect = 0;
    for (const auto& f : a.factors()) expect += expected_positive_root_count(f);
    EXPECT_EQ(expect, n) << name;
  }
}

TEST(Roots, RhoIsHalfSumOfPositiveRoots) {
  for (const char* name : {"A3", "B3", "C3", "D5", "E6", "E7"}) {
    AlgebraSpec a = AlgebraSpec::parse(name);
    Weight s{};
    for (const auto& r : a.positive_roots()) s = s + r;
    EXPECT_EQ(s, a.rho().scaled(2)) << name;
    for (int i = 0; i < a.rank(); ++i) EXPECT_EQ(a.rho()[static_cast<std::size_t>(i)], 1);
  }
}

TEST(Roots, ParseRejectsUnknown) {
  EXPECT_THROW(AlgebraSpec::parse("F4"), std::invalid_argument);
  EXPECT_THROW(AlgebraSpec::parse("E"), std::invalid_argument);
  EXPECT_THROW(AlgebraSpec::parse(""), std::invalid_argument);
  EXPECT_THROW(AlgebraSpec::parse("E9"), std::invalid_argument);
}

TEST(WeylDim, KnownValues) {
  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  const std::vector<long> fund = {133, 912, 8645, 365750, 27664, 1539, 56};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_EQ(weyl_dim(e7, Weight::unit(i)), fund[i]) << i;
  EXPECT_EQ(weyl_dim(AlgebraSpec::parse("A1"), Weight{3}), 4);
  EXPECT_EQ(weyl_dim(AlgebraSpec::parse("C3"), Weight::unit(2)), 14);
  EXPECT_EQ(weyl_dim(AlgebraSpec::parse("D6"), Weight::unit(5)), 32);
  EXPECT_EQ(weyl_dim(AlgebraSpec::parse("A5"), Weight::unit(2)), 20);
  EXPECT_EQ(weyl_dim(AlgebraSpec::parse("A1A1A1"), Weight{1, 1, 1}), 8);
  EXPECT_THROW(weyl_dim(AlgebraSpec::parse("A2"), Weight{-1, 0}), std::invalid_argument);
}

TEST(GlDim, ProductFormula) {
  EXPECT_EQ(gl_dim(Partition({2, 1}), 3), 8);
  EXPECT_EQ(gl_dim(Partition({5}), 1), 1);
  EXPECT_EQ(gl_dim(Partition({1, 1, 1}), 2), 0);
  for (int h = 0; h <= 6; ++h) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), 6, static_cast<unsigned long>(h));
    EXPECT_EQ(gl_dim(Partition(std::vector<int>(static_cast<std::size_t>(h), 1)), 6), b);
  }
}

TEST(Freudenthal, TotalMultiplicityIsWeylDimension) {
  const std::vector<std::pair<std::string, Weight>> cases = {
      {"A2", Weight{2, 1}}, {"B3", Weight{1, 0, 1}}, {"C3", Weight{0, 1, 1}}, {"D4", Weight{1, 0, 0, 1}},
      {"E6", Weight::unit(0)}, {"E7", Weight::unit(0)}, {"A1A1A1", Weight{2, 1, 3}}};
  for (const auto& [name, hw] : cases) {
    AlgebraSpec a = AlgebraSpec::parse(name);
    EXPECT_EQ(mpz_class(weight_multiplicities(a, hw).total()), weyl_dim(a, hw)) << name;
  }
}

TEST(Freudenthal, Examples) {
  const AlgebraSpec a1 = AlgebraSpec::parse("A1");
  WeightMultiset adj = weight_multiplicities(a1, Weight{2});
  EXPECT_EQ(adj.distinct(), 3u);
  EXPECT_EQ(adj.at(Weight{2}), 1);
  EXPECT_EQ(adj.at(Weight{0}), 1);
  EXPECT_EQ(adj.at(Weight{-2}), 1);

  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  WeightMultiset v = weight_multiplicities(e7, Weight::unit(6));
  EXPECT_EQ(v.distinct(), 56u);
  for (const auto& [w, m] : v.map()) EXPECT_EQ(m, 1);
  EXPECT_EQ(weight_multiplicities(e7, Weight::unit(0)).at(Weight{}), 7);
  for (const char* name : {"A4", "B3", "C4", "D5", "E6"}) {
    AlgebraSpec a = AlgebraSpec::parse(name);
    // adjoint = highest root
    Weight top = a.positive_roots().front();
    for (const auto& r : a.positive_roots())
      if (a.height(r) > a.height(top)) top = r;
    EXPECT_EQ(weight_multiplicities(a, top).at(Weight{}), a.rank()) << name;
  }
}

TEST(Freudenthal, WeylInvariance) {
  const std::vector<std::pair<std::string, Weight>> cases = {{"A1", Weight{4}},          {"A2", Weight{2, 1}},
                                                             {"B2", Weight{1, 2}},       {"C2", Weight{2, 1}},
                                                             {"A3", Weight{1, 0, 2}},    {"B3", Weight{0, 1, 1}},
                                                             {"C3", Weight{1, 1, 0}},    {"A1A1A1", Weight{1, 2, 1}},
                                                             {"A1A1", Weight{3, 1}},     {"A2A1", Weight{1, 1, 2}}};
  for (const auto& [name, hw] : cases) {
    AlgebraSpec a = AlgebraSpec::parse(name);
    WeightMultiset ch = weight_multiplicities(a, hw);
    for (int i = 0; i < a.rank(); ++i)
      for (const auto& [w, m] : ch.map()) EXPECT_EQ(ch.at(a.reflect(w, i)), m) << name << " s" << i;
  }
}

TEST(Weyl, OrbitsAndDominance) {
  const AlgebraSpec a2 = AlgebraSpec::parse("A2");
  EXPECT_EQ(weyl_orbit(a2, Weight{1, 0}).size(), 3u);
  EXPECT_EQ(weyl_orbit(a2, Weight{1, 1}).size(), 6u);
  EXPECT_EQ(weyl_orbit(AlgebraSpec::parse("E7"), Weight::unit(6)).size(), 56u);
  auto [dom, sign] = a2.to_dominant(Weight{-1, 2});
  EXPECT_TRUE(a2.is_dominant(dom));
  EXPECT_EQ(dom, (Weight{1, 1}));
  EXPECT_EQ(sign, -1);
}

TEST(Tensor, A1) {
  const AlgebraSpec a1 = AlgebraSpec::parse("A1");
  Decomposition d = tensor_decompose(a1, Weight{1}, Weight{1});
  EXPECT_EQ(d.multiplicity(Weight{2}), 1);
  EXPECT_EQ(d.multiplicity(Weight{0}), 1);
  EXPECT_EQ(d.size(), 2u);
}

TEST(Tensor, E7Products) {
  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  const Weight l7 = Weight::unit(6);
  Decomposition d = tensor_decompose(e7, l7, l7);
  EXPECT_EQ(dims(e7, d), (std::vector<long>{1539, 1463, 133, 1}));
  EXPECT_EQ(d.multiplicity(l7.scaled(2)), 1);
  EXPECT_EQ(d.multiplicity(Weight::unit(0)), 1);
  EXPECT_EQ(d.multiplicity(Weight::unit(5)), 1);
  EXPECT_EQ(d.trivial(), 1);
  Decomposition d2 = tensor_decompose(e7, l7.scaled(2), l7);
  EXPECT_EQ(dims(e7, d2), (std::vector<long>{51072, 24320, 6480, 56}));
  EXPECT_EQ(d2.multiplicity(l7.scaled(3)), 1);
  EXPECT_EQ(d2.multiplicity(Weight::unit(5) + l7), 1);
  EXPECT_EQ(d2.multiplicity(Weight::unit(0) + l7), 1);
  EXPECT_EQ(d2.multiplicity(l7), 1);
}

TEST(Tensor, ReflectionAgreesWithPeeling) {
  const std::vector<std::tuple<std::string, Weight, Weight>> cases = {
      {"A2", Weight{1, 1}, Weight{2, 0}}, {"B3", Weight{1, 0, 0}, Weight{0, 0, 1}}, {"C3", Weight{0, 0, 1}, Weight{0, 1, 0}},
      {"A1A1A1", Weight{1, 1, 1}, Weight{1, 1, 1}}};
  for (const auto& [name, a, b] : cases) {
    AlgebraSpec alg = AlgebraSpec::parse(name);
    ComputeBudget budget = ComputeBudget::unlimited();
    WeightMultiset prod = multiply(weight_multiplicities(alg, a), weight_multiplicities(alg, b), budget);
    EXPECT_EQ(decompose_character(alg, prod), decompose_by_reflection(alg, prod)) << name;
    EXPECT_EQ(decompose_character(alg, prod).dimension(alg), weyl_dim(alg, a) * weyl_dim(alg, b)) << name;
  }
}

TEST(SchurPower, E7CubicDecompositions) {
  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  const Weight l7 = Weight::unit(6);
  Decomposition s3 = schur_power(e7, Partition({3}), l7);
  EXPECT_EQ(dims(e7, s3), (std::vector<long>{24320, 6480, 56}));
  EXPECT_EQ(s3.multiplicity(l7.scaled(3)), 1);
  EXPECT_EQ(s3.multiplicity(Weight::unit(0) + l7), 1);
  Decomposition l3 = schur_power(e7, Partition({1, 1, 1}), l7);
  EXPECT_EQ(dims(e7, l3), (std::vector<long>{27664, 56}));
  EXPECT_EQ(l3.multiplicity(Weight::unit(4)), 1);
  Decomposition s21 = schur_power(e7, Partition({2, 1}), l7);
  EXPECT_EQ(dims(e7, s21), (std::vector<long>{51072, 6480, 912, 56}));
  EXPECT_EQ(s21.multiplicity(Weight::unit(1)), 1);
  // the 912 forced by the sum rule 133 * 56 = 7448
  EXPECT_EQ(133 * 56, 6480 + 912 + 56);
}

TEST(SchurPower, TripleTensorPowerConsistency) {
  for (const auto& [name, hw] : std::vector<std::pair<std::string, Weight>>{{"A1", Weight{1}}, {"E7", Weight::unit(6)}}) {
    AlgebraSpec alg = AlgebraSpec::parse(name);
    ComputeBudget budget = ComputeBudget::unlimited();
    WeightMultiset v = weight_multiplicities(alg, hw);
    Decomposition cube = decompose_character(alg, multiply(multiply(v, v, budget), v, budget));
    std::map<Weight, std::int64_t> sum;
    for (const auto& [lam, k] : std::vector<std::pair<Partition, int>>{
             {Partition({3}), 1}, {Partition({2, 1}), 2}, {Partition({1, 1, 1}), 1}}) {
      if (lam.height() > weyl_dim(alg, hw)) continue;
      const Decomposition part = schur_power(alg, lam, hw);
      for (const auto& t : part.terms()) sum[t.hw] += k * t.mult;
    }
    EXPECT_EQ(cube, Decomposition(alg, sum)) << name;
  }
}

TEST(SchurPower, DeterminantRowsAreTrivial) {
  // (k^N) on an N-dimensional unimodular representation is trivial, and
  // adding full columns does not change the decomposition
  const AlgebraSpec a1 = AlgebraSpec::parse("A1");
  for (int k = 1; k <= 3; ++k) {
    Decomposition d = schur_power(a1, Partition({k, k}), Weight{1});
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(d.trivial(), 1);
  }
  const AlgebraSpec a2 = AlgebraSpec::parse("A2");
  EXPECT_EQ(schur_power(a2, Partition({3, 2, 1}), Weight{1, 0}), schur_power(a2, Partition({2, 1}), Weight{1, 0}));
  EXPECT_EQ(schur_power(a2, Partition({2, 2, 2}), Weight{1, 0}).trivial(), 1);
}

TEST(SchurPower, DimensionConservation) {
  const AlgebraSpec c3 = AlgebraSpec::parse("C3");
  for (int m = 1; m <= 4; ++m)
    for (const auto& lam : partitions_of(m)) {
      Decomposition d = schur_power(c3, lam, Weight::unit(2));
      EXPECT_EQ(d.dimension(c3), gl_dim(lam, 14)) << lam.str();
    }
}

TEST(SchurPower, BudgetExhaustionIsClean) {
  const AlgebraSpec e7 = AlgebraSpec::parse("E7");
  ComputeBudget tiny(10'000);
  EXPECT_THROW(schur_power(e7, Partition({2, 2}), Weight::unit(6), tiny), ResourceLimitError);
}
