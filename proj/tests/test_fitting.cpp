#include <gtest/gtest.h>

#include "galg/fitting.hpp"
#include "galg/sampling.hpp"
#include "helpers.hpp"

namespace galg {
namespace {

using testing::central;
using testing::elt;
using testing::find_element;
using testing::mat1;

GroupAlgebraMatrix diag23() {
  auto g = group_from_catalog("C1");
  GroupAlgebraMatrix m(g, 2, 2);
  m(0, 0) = elt(g, {{0, 2}});
  m(1, 1) = elt(g, {{0, 3}});
  return m;
}

CentralLattice ideal(const GroupPtr& g, long n) { return CentralLattice::from_elements(g, {CentralElement::scalar(g, CycloNum(n))}); }

TEST(Xi, TrivialGroupIsIntegers) {
  auto g = group_from_catalog("C1");
  auto xi = xi_approx(g, Budget{});
  EXPECT_EQ(xi, CentralLattice::unit(g));
  EXPECT_TRUE(xi.exact);
}

TEST(Xi, AbelianEqualsGroupRingImage) {
  for (const char* name : {"C2", "C5", "C6", "C2xC2", "C2xC4"}) {
    auto g = group_from_catalog(name);
    auto xi = xi_approx(g, Budget{});
    EXPECT_TRUE(xi.exact) << name;
    EXPECT_EQ(xi, group_ring_image(g)) << name;
  }
}

TEST(Xi, QuaternionContainsNormOfOnePlusI) {
  auto g = group_from_catalog("Q8");
  auto xi = xi_approx(g, Budget{});
  EXPECT_TRUE(xi.stable);
  EXPECT_FALSE(xi.exact);
  EXPECT_TRUE(xi.contains(central(g, {2, 0, 2, 0, 2})));
  EXPECT_TRUE(xi.contains(CentralElement::one(g)));
  for (const auto& b : xi.basis_elements()) {
    EXPECT_TRUE(b.is_galois_consistent());
    EXPECT_TRUE(b.is_algebraic_integer());
  }
}

TEST(Xi, MonotoneInBudget) {
  auto g = group_from_catalog("S3");
  Budget small;
  small.rounds = 1;
  small.samples = 4;
  auto a = xi_approx(g, small), b = xi_approx(g, Budget{});
  EXPECT_TRUE(b.contains(a));
}

TEST(Delta, AbelianOneIsExactYes) {
  auto g = group_from_catalog("C4");
  EXPECT_EQ(delta_check(CentralElement::one(g), Budget{}).verdict, Verdict::ExactYes);
}

TEST(Delta, GroupOrderPassesOnCatalog) {
  for (const char* name : {"C1", "C6", "S3", "D4", "Q8", "A4"}) {
    auto g = group_from_catalog(name);
    auto r = delta_check(CentralElement::scalar(g, CycloNum(g->order())), Budget{});
    EXPECT_NE(r.verdict, Verdict::CertifiedNo) << name;
  }
}

TEST(Delta, NonCentralRejected) {
  auto g = group_from_catalog("Q8");
  auto r = delta_check(GroupAlgebraElement::basis(g, find_element(g, 4)), Budget{});
  EXPECT_EQ(r.verdict, Verdict::CertifiedNo);
}

TEST(Delta, NonAbelianOneHasCounterexample) {
  auto g = group_from_catalog("S3");
  auto r = delta_check(CentralElement::one(g), Budget{});
  EXPECT_EQ(r.verdict, Verdict::CertifiedNo);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_FALSE(adjoint_star(*r.witness).is_integral());
}

TEST(Fit, DiagonalOverTrivialGroup) {
  auto g = group_from_catalog("C1");
  auto m = diag23();
  EXPECT_EQ(fit_matrix(m, 0, Budget{}), ideal(g, 6));
  EXPECT_EQ(fit_matrix(m, 1, Budget{}), ideal(g, 1));
  EXPECT_EQ(fit_classical_oracle(m, 0), ideal(g, 6));
  EXPECT_EQ(fit_classical_oracle(m, 1), ideal(g, 1));
  EXPECT_EQ(fit_classical_oracle(m, 2), CentralLattice::unit(g));
}

TEST(Fit, ErrorsAndUnitIdeal) {
  auto g = group_from_catalog("C3");
  Rng rng(1);
  auto m = random_matrix(g, 3, 2, rng, 3);
  EXPECT_THROW(fit_matrix(m, -1, Budget{}), std::invalid_argument);
  EXPECT_THROW(fit_classical_oracle(random_matrix(group_from_catalog("S3"), 2, 2, rng, 2), 0), std::invalid_argument);
  EXPECT_EQ(fit_matrix(m, 2, Budget{}), group_ring_image(g));
}

TEST(Fit, SquareNonAbelianIsNrdTimesXi) {
  auto g = group_from_catalog("S3");
  Rng rng(6);
  Budget b;
  auto xi = xi_approx(g, b);
  auto m = random_matrix(g, 2, 2, rng, 2, 3);
  auto expected = xi * CentralLattice::from_elements(g, {nrd(m)});
  EXPECT_EQ(fit_matrix(m, 0, b), expected);
}

TEST(Fit, OracleAgreementAndMonotonicity) {
  Rng rng(99);
  for (int t = 0; t < 25; ++t) {
    auto g = group_from_catalog("C", {static_cast<int>(rng.uniform(1, 6))});
    auto cols = static_cast<std::size_t>(rng.uniform(1, 3));
    auto rows = cols + static_cast<std::size_t>(rng.uniform(0, 1));
    auto m = random_matrix(g, rows, cols, rng, 4);
    CentralLattice prev;
    for (int a = 0; a <= 2; ++a) {
      auto f = fit_matrix(m, a, Budget{});
      EXPECT_EQ(f, fit_classical_oracle(m, a));
      if (a > 0) EXPECT_TRUE(f.contains(prev));
      prev = f;
    }
  }
}

TEST(Fit, NonAbelianMonotoneInA) {
  Rng rng(12);
  auto g = group_from_catalog("S3");
  auto m = random_matrix(g, 2, 2, rng, 2, 2);
  auto f0 = fit_matrix(m, 0, Budget{}), f1 = fit_matrix(m, 1, Budget{});
  EXPECT_TRUE(f1.contains(f0));
}

TEST(FitTranspose, AbelianAndSquareCases) {
  Rng rng(31);
  auto c6 = group_from_catalog("C6");
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(c6, 2, 2, rng, 3);
    EXPECT_EQ(fit_transpose(m, 1, Budget{}), fit_matrix(m, 1, Budget{}).hash());
  }
  auto d4 = group_from_catalog("D4");
  for (int t = 0; t < 3; ++t) {
    auto m = random_matrix(d4, 2, 2, rng, 2, 3);
    EXPECT_EQ(fit_transpose(m, 0, Budget{}), fit_matrix(m, 0, Budget{}).hash());
  }
}

TEST(FitTranspose, SelfDualMatrix) {
  auto g = group_from_catalog("C4");
  GroupAlgebraMatrix m(g, 2, 2);
  m(0, 0) = elt(g, {{0, 2}});
  m(0, 1) = elt(g, {{1, 1}});
  m(1, 0) = elt(g, {{3, 1}});
  m(1, 1) = elt(g, {{0, 3}});
  ASSERT_EQ(hash_transpose(m), m);
  EXPECT_EQ(fit_transpose(m, 0, Budget{}), fit_matrix(m, 0, Budget{}));
}

TEST(Annihilation, TrivialGroupDeterminant) {
  auto g = group_from_catalog("C1");
  auto r = annihilation_check(diag23(), CentralElement::one(g));
  EXPECT_TRUE(r.annihilates);
  EXPECT_EQ(r.invariants, (IntVec{Integer(6)}));
}

TEST(Annihilation, CyclicOfOrderTwo) {
  auto g = group_from_catalog("C2");
  auto r = annihilation_check(mat1(elt(g, {{0, 2}, {1, 1}})), CentralElement::one(g));
  EXPECT_TRUE(r.annihilates);
  EXPECT_EQ(r.invariants, (IntVec{Integer(3)}));
  EXPECT_EQ(r.nrd, central(g, {3, 1}));
}

TEST(Annihilation, RandomSymmetricGroupBatch) {
  auto g = group_from_catalog("S3");
  Rng rng(50);
  auto x = CentralElement::scalar(g, CycloNum(6));
  for (int t = 0; t < 50; ++t) {
    GroupAlgebraMatrix m;
    do m = random_matrix(g, 2, 2, rng, 2, 3);
    while (!nrd(m).invertible());
    EXPECT_TRUE(annihilation_check(m, x).annihilates);
  }
}

TEST(Annihilation, Errors) {
  auto g = group_from_catalog("C2");
  EXPECT_THROW(annihilation_check(mat1(elt(g, {{0, 1}, {1, 1}})), CentralElement::one(g)), std::invalid_argument);
  auto s3 = group_from_catalog("S3");
  auto m = mat1(elt(s3, {{0, 2}, {find_element(s3, 3), 1}}));
  EXPECT_THROW(annihilation_check(m, CentralElement::scalar(s3, CycloNum(Rational(1, 7)))), std::invalid_argument);
}

TEST(CentralLattice, IdealProductAndHash) {
  auto g = group_from_catalog("C3");
  auto a = ideal(g, 2), b = ideal(g, 3);
  EXPECT_EQ(a * b, ideal(g, 6));
  auto z = CentralElement(g, {CycloNum(1), CycloNum::zeta(3), CycloNum::zeta(3, 2)});
  auto l = CentralLattice::from_elements(g, {z});
  EXPECT_TRUE(l.hash().contains(hash_involution(z)));
  EXPECT_EQ(l.hash().hash(), l);
}

}  // namespace
}  // namespace galg
