#include <gtest/gtest.h>

#include "galg/cyclo.hpp"

namespace galg {
namespace {

TEST(CyclotomicUnit, TrivialSubgroup) {
  EXPECT_EQ(cyclotomic_unit({5, {1}}), CycloNum(1) - CycloNum::zeta(5));
}

TEST(CyclotomicUnit, FullNormToRationals) {
  // Reference values: Phi_p(1) = p and Phi_12(1) = 1.
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    AbelianFieldSpec spec{p, {}};
    for (long a = 1; a < p; ++a) spec.h.push_back(a);
    EXPECT_EQ(cyclotomic_unit(spec), CycloNum(p)) << p;
  }
  EXPECT_EQ(cyclotomic_unit({12, {1, 5, 7, 11}}), CycloNum(1));
}

TEST(CyclotomicUnit, FixedBySubgroup) {
  auto u = cyclotomic_unit({13, {1, 3, 9}});
  for (long h : {3L, 9L}) EXPECT_EQ(galois_apply(h, u), u);
  EXPECT_NE(galois_apply(2, u), u);
}

TEST(CyclotomicUnit, Errors) {
  EXPECT_THROW(cyclotomic_unit({1, {1}}), std::invalid_argument);
  EXPECT_THROW(cyclotomic_unit({7, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(cyclotomic_unit({8, {1, 2}}), std::invalid_argument);
}

// Left-hand sides from the sympy reference model in tools/oracles.
TEST(Distribution, ReferenceNorms) {
  struct Case {
    long f, ell;
    std::vector<Rational> coeffs;
  };
  std::vector<Case> cases{{3, 2, {0, -1}}, {4, 3, {0, -1}}, {5, 2, {1, 0, 0, 1}}, {7, 3, {1, 0, 0, 1, 0, 1}}};
  for (const auto& c : cases) {
    auto row = distribution_check(c.f, c.ell);
    EXPECT_TRUE(row.pass) << c.f << "," << c.ell;
    EXPECT_EQ(row.lhs, cyclo_make(c.f, c.coeffs)) << c.f << "," << c.ell;
  }
}

TEST(Distribution, SmallestCaseByHand) {
  auto z = CycloNum::zeta(3);
  auto row = distribution_check(3, 2);
  EXPECT_EQ(row.lhs, CycloNum(1) + z * z);
  EXPECT_EQ((CycloNum(1) + z * z) * (CycloNum(1) + z), CycloNum(1));
}

TEST(Distribution, Errors) {
  EXPECT_THROW(distribution_check(6, 3), std::invalid_argument);
  EXPECT_THROW(distribution_check(5, 4), std::invalid_argument);
  EXPECT_THROW(distribution_check(1, 2), std::invalid_argument);
}

TEST(Distribution, FlippedConventionFailsSomewhere) {
  EXPECT_FALSE(distribution_check(5, 2, true).pass);
  // ell = ell^{-1} mod f makes both conventions agree.
  EXPECT_TRUE(distribution_check(8, 3, true).pass);
}

TEST(EulerFamily, RangesAndVerdicts) {
  auto rows = euler_family_check(30, 13);
  EXPECT_EQ(rows.size(), 135u);
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.f << "," << r.ell;
  auto single = euler_family_check(3, 2);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].pass);
  EXPECT_TRUE(euler_family_check(2, 2).empty());
  EXPECT_THROW(euler_family_check(1, 5), std::invalid_argument);
}

TEST(RelativeNorm, Transitivity) {
  for (auto [f, l1, l2] : std::vector<std::array<long, 3>>{{3, 2, 5}, {4, 3, 5}, {5, 2, 3}}) {
    const long n = f * l1 * l2;
    auto x = CycloNum(1) - CycloNum::zeta(n);
    auto two = relative_norm(relative_norm(x, n, f * l1), f * l1, f);
    EXPECT_EQ(relative_norm(x, n, f), two);
  }
  EXPECT_THROW(relative_norm(CycloNum(1), 6, 4), std::invalid_argument);
}

}  // namespace
}  // namespace galg
