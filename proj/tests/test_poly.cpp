#include <gtest/gtest.h>

#include <random>

#include "jointinv/identities.hpp"
#include "jointinv/poly.hpp"
#include "oracles.hpp"

using namespace jointinv;

namespace {

MultiPoly a(std::size_t i, std::size_t j) { return pair_var(i, j); }

MultiPoly random_poly(std::mt19937_64& rng, std::size_t m, int terms, unsigned maxdeg) {
  std::uniform_int_distribution<std::size_t> idx(1, m);
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    MultiPoly mono(oracle::small_rat(rng));
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) {
      std::size_t i = idx(rng), j = idx(rng);
      while (j == i) j = idx(rng);
      mono = mono * a(std::min(i, j), std::max(i, j));
    }
    p += mono;
  }
  return p;
}

}  // namespace

TEST(VarId, OrderingAndNames) {
  EXPECT_LT(VarId::pairwise(1, 2), VarId::pairwise(1, 3));
  EXPECT_LT(VarId::pairwise(1, 3), VarId::pairwise(2, 3));
  EXPECT_LT(VarId::pairwise(2, 3), VarId::contact_point(1));
  EXPECT_LT(VarId::contact_point(1), VarId::auxiliary("t"));
  EXPECT_EQ(VarId::pairwise(1, 2).str(), "a12");
  EXPECT_EQ(VarId::pairwise(3, 12).str(), "a3_12");
  EXPECT_THROW(VarId::pairwise(2, 2), InputError);
  EXPECT_THROW(VarId::pairwise(3, 1), InputError);
}

TEST(MultiPoly, SkewConventionAndZeroTerms) {
  EXPECT_EQ(pair_var(2, 1), -a(1, 2));
  EXPECT_TRUE(pair_var(3, 3).is_zero());
  MultiPoly p = a(1, 2) + a(1, 3);
  p -= a(1, 3);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(MultiPoly(0), MultiPoly());
}

TEST(MultiPoly, LexLeadingMonomial) {
  // a12 > a13 > a23
  const MultiPoly p = a(2, 3) * a(2, 3) + a(1, 3) * a(2, 3) + a(1, 2) * a(2, 3);
  EXPECT_EQ(p.leading_monomial(), (a(1, 2) * a(2, 3)).leading_monomial());
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + MultiPoly(1)).is_homogeneous());
}

TEST(MultiPoly, RingAxioms) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly p = random_poly(rng, 4, 4, 3);
    const MultiPoly q = random_poly(rng, 4, 4, 3);
    const MultiPoly r = random_poly(rng, 4, 4, 2);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p + MultiPoly(), p);
    EXPECT_EQ(p * MultiPoly(1), p);
    EXPECT_TRUE((p * MultiPoly()).is_zero());
  }
}

TEST(MultiPoly, PowerAndDerivative) {
  const MultiPoly x = a(1, 2);
  EXPECT_EQ(x.pow(3), x * x * x);
  EXPECT_EQ(x.pow(0), MultiPoly(1));
  const MultiPoly p = x.pow(3) * a(3, 4) + Rat(5) * a(3, 4);
  EXPECT_EQ(p.derivative(VarId::pairwise(1, 2)), Rat(3) * x * x * a(3, 4));
  EXPECT_EQ(p.derivative(VarId::pairwise(3, 4)), x.pow(3) + MultiPoly(5));
  EXPECT_TRUE(p.derivative(VarId::pairwise(1, 3)).is_zero());
}

TEST(MultiPoly, PrimitivePart) {
  const MultiPoly p = Rat(-2, 3) * a(1, 2) + Rat(4, 9) * a(1, 3);
  const MultiPoly pp = primitive_part(p);
  EXPECT_EQ(pp, Rat(3) * a(1, 2) - Rat(2) * a(1, 3));
}

TEST(Evaluate, SmallCases) {
  std::mt19937_64 rng(32);
  const GramTable g = oracle::random_table(4, rng);
  EXPECT_EQ(evaluate(MultiPoly(7), g), 7);
  GramTable h(4);
  h.set(1, 2, 5);
  h.set(3, 4, 3);
  EXPECT_EQ(evaluate(a(1, 2) * a(3, 4), h), 15);
  EXPECT_EQ(evaluate(pfaffian_poly({1, 2, 3, 4}, 1), gram(oracle::random_points(4, 1, rng))), 0);
  EXPECT_THROW(evaluate(a(1, 5), h), InputError);
  EXPECT_THROW(evaluate(MultiPoly(VarId::auxiliary("t")), h), InputError);
}

TEST(Evaluate, IsRingHomomorphism) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly p = random_poly(rng, 4, 4, 3);
    const MultiPoly q = random_poly(rng, 4, 4, 3);
    const GramTable g = oracle::random_table(4, rng);
    EXPECT_EQ(evaluate(p * q, g), evaluate(p, g) * evaluate(q, g));
    EXPECT_EQ(evaluate(p + q, g), evaluate(p, g) + evaluate(q, g));
  }
}

TEST(PfaffianPoly, FourIndexPluecker) {
  EXPECT_EQ(pfaffian_poly({1, 2, 3, 4}, 1), a(1, 2) * a(3, 4) - a(1, 3) * a(2, 4) + a(1, 4) * a(2, 3));
}

TEST(PfaffianPoly, SixIndexFifteenTerms) {
  const MultiPoly expected =
      a(1, 2) * a(3, 4) * a(5, 6) - a(1, 2) * a(3, 5) * a(4, 6) + a(1, 2) * a(3, 6) * a(4, 5) -
      a(1, 3) * a(2, 4) * a(5, 6) + a(1, 3) * a(2, 5) * a(4, 6) - a(1, 3) * a(2, 6) * a(4, 5) +
      a(1, 4) * a(2, 3) * a(5, 6) - a(1, 4) * a(2, 5) * a(3, 6) + a(1, 4) * a(2, 6) * a(3, 5) -
      a(1, 5) * a(2, 3) * a(4, 6) + a(1, 5) * a(2, 4) * a(3, 6) - a(1, 5) * a(2, 6) * a(3, 4) +
      a(1, 6) * a(2, 3) * a(4, 5) - a(1, 6) * a(2, 4) * a(3, 5) + a(1, 6) * a(2, 5) * a(3, 4);
  const MultiPoly b = pfaffian_poly({1, 2, 3, 4, 5, 6}, 2);
  EXPECT_EQ(b.size(), 15u);
  EXPECT_EQ(b, expected);
}

TEST(PfaffianPoly, AgreesWithNumericSyzygy) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 20; ++trial) {
    const GramTable g = oracle::random_table(7, rng);
    EXPECT_EQ(evaluate(pfaffian_poly({1, 3, 4, 7}, 1), g), syzygy_value(g, {1, 3, 4, 7}));
    EXPECT_EQ(evaluate(pfaffian_poly({2, 3, 4, 5, 6, 7}, 2), g), syzygy_value(g, {2, 3, 4, 5, 6, 7}));
  }
}

TEST(PfaffianPoly, RejectsMalformedTuples) {
  EXPECT_THROW(pfaffian_poly({1, 2, 3}, 1), InputError);
  EXPECT_THROW(pfaffian_poly({1, 3, 2, 4}, 1), InputError);
  EXPECT_THROW(pfaffian_poly({1, 2, 3, 4}, 2), InputError);
  EXPECT_THROW(pfaffian_poly(IndexTuple{1, 2, 3}), InputError);
}

TEST(Identities, PfaffianExpansion) {
  EXPECT_TRUE(verify_pfaffian_expansion(1));
  EXPECT_TRUE(verify_pfaffian_expansion(2));
  EXPECT_THROW(verify_pfaffian_expansion(3), CostGuardError);
}

TEST(Identities, ExpansionNeedsFactorialOfTwoN) {
  // Each b-term appears (2n)! times in the sum over S_{2n+1}; 1/n! is too small a correction.
  for (std::size_t n : {1u, 2u}) {
    IndexTuple idx(2 * n + 2);
    std::iota(idx.begin(), idx.end(), 1);
    const MultiPoly lhs = pfaffian_poly(idx, n);
    const MultiPoly sum = pfaffian_expansion_sum(n);
    EXPECT_EQ(sum, lhs * Rat(static_cast<long>(detail::factorial(2 * n))));
    EXPECT_NE(lhs, sum * Rat(1, static_cast<unsigned long>(detail::factorial(n))));
  }
}

TEST(Identities, PerturbedExpansionFails) {
  IndexTuple idx{1, 2, 3, 4};
  MultiPoly rhs = pfaffian_expansion_sum(1) * Rat(1, 2);
  rhs += a(1, 2) * a(3, 4);
  EXPECT_NE(pfaffian_poly(idx, 1), rhs);
}

TEST(Identities, WeylReduction) {
  EXPECT_TRUE(verify_weyl_reduction());
  for (std::size_t j = 2; j <= 8; ++j) EXPECT_NE(pfaffian_poly({1, 2, 3, 4, 5, 6, 7, 8}), weyl_reduction_rhs(j));
}

TEST(Identities, WeylReductionVanishesOnPoints) {
  std::mt19937_64 rng(35);
  const MultiPoly lhs = pfaffian_poly({1, 2, 3, 4, 5, 6, 7, 8});
  const MultiPoly rhs = weyl_reduction_rhs();
  for (int trial = 0; trial < 10; ++trial) {
    const GramTable g = gram(oracle::random_points(8, 2, rng));
    EXPECT_EQ(evaluate(lhs, g), 0);
    EXPECT_EQ(evaluate(rhs, g), 0);
  }
}

TEST(Identities, QReduction) {
  EXPECT_TRUE(verify_q_reduction());
  EXPECT_NE(q_poly({1, 2, 3, 4, 5, 6}), q_reduction_rhs(true));
  std::mt19937_64 rng(36);
  const MultiPoly rhs = q_reduction_rhs();
  for (int trial = 0; trial < 10; ++trial) {
    const GramTable g = oracle::random_table(6, rng);
    EXPECT_EQ(evaluate(rhs, g), q_value(g, {1, 2, 3, 4, 5, 6}));
  }
}

TEST(Identities, DeterminantPolyMatchesNumeric) {
  std::mt19937_64 rng(37);
  const MultiPoly q = q_poly({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  for (int trial = 0; trial < 3; ++trial) {
    const GramTable g = oracle::random_table(10, rng);
    EXPECT_EQ(evaluate(q, g), q_value(g, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  }
}

TEST(ResolutionTower, FourPoints) {
  const TowerReport r = verify_resolution_tower(4);
  EXPECT_TRUE(r.first_syzygies_vanish);
  EXPECT_TRUE(r.ok());
}

TEST(ResolutionTower, FivePoints) {
  const TowerReport r = verify_resolution_tower(5);
  ASSERT_EQ(r.second_syzygies_zero.size(), 5u);
  for (bool z : r.second_syzygies_zero) EXPECT_TRUE(z);
  EXPECT_TRUE(r.third_syzygy_zero);
  EXPECT_TRUE(r.nonzero_components.empty());
  EXPECT_TRUE(r.ok());
}

TEST(ResolutionTower, SecondSyzygyFirstComponentLayout) {
  // c_1 = a12 b1345 - a13 b1245 + a14 b1235 - a15 b1234
  const FreeModuleElt c1 = second_syzygy(1);
  ASSERT_EQ(c1.components().size(), 4u);
  EXPECT_EQ(c1.components().at({1, 3, 4, 5}), a(1, 2));
  EXPECT_EQ(c1.components().at({1, 2, 4, 5}), -a(1, 3));
  EXPECT_EQ(c1.components().at({1, 2, 3, 5}), a(1, 4));
  EXPECT_EQ(c1.components().at({1, 2, 3, 4}), -a(1, 5));
}

TEST(ResolutionTower, NegatedCoefficientIsDetected) {
  for (std::size_t k = 0; k < 5; ++k) {
    auto coeffs = third_syzygy_coefficients();
    coeffs[k] = -coeffs[k];
    const TowerReport r = verify_resolution_tower(5, coeffs);
    EXPECT_FALSE(r.third_syzygy_zero);
    EXPECT_FALSE(r.nonzero_components.empty());
    EXPECT_FALSE(r.ok());
  }
  EXPECT_THROW(verify_resolution_tower(6), InputError);
}

TEST(ResolutionTower, IdentitySuiteNames) {
  const auto suite = identity_suite();
  ASSERT_EQ(suite.size(), 6u);
  for (const auto& r : suite) EXPECT_TRUE(r.holds) << r.name;
  EXPECT_EQ(suite.front().name, "pfaffian-expansion-n1");
  EXPECT_EQ(suite.back().name, "resolution-tower-m5");
}
