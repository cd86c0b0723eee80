#include <gtest/gtest.h>

#include "galg/detfun.hpp"
#include "galg/sampling.hpp"
#include "helpers.hpp"

namespace galg {
namespace {

using testing::central;

TEST(DetFree, RankOneAndGrading) {
  auto g = group_from_catalog("S3");
  auto x = det_free(GroupAlgebraMatrix::identity(g, 1));
  EXPECT_EQ(x.grading, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(x.gen, top_wedge(g, 1));
  EXPECT_EQ(det_free(GroupAlgebraMatrix::identity(g, 2)).grading, (std::vector<int>{2, 2, 4}));
}

TEST(DetFree, BasisChangeMultipliesByNrd) {
  Rng rng(5);
  auto g = group_from_catalog("D4");
  auto b = random_unimodular(g, 2, rng, 2);
  auto u = random_unimodular(g, 2, rng, 2);
  auto x = det_free(b), y = det_free(u * b);
  EXPECT_EQ(y.gen, scale(nrd(u), x.gen));
  EXPECT_TRUE(nrd(u).inverse().is_algebraic_integer());
}

TEST(DetFree, RejectsNonBasis) {
  auto g = group_from_catalog("C2");
  GroupAlgebraMatrix m(g, 1, 1);
  m(0, 0) = GroupAlgebraElement::one(g) + GroupAlgebraElement::basis(g, 1);
  EXPECT_THROW(det_free(m), std::invalid_argument);
  EXPECT_THROW(det_free(GroupAlgebraMatrix(g, 1, 2)), std::invalid_argument);
}

TEST(Tensor, UnitIsNeutralAndGradingAdds) {
  auto g = group_from_catalog("Q8");
  auto x = det_free(GroupAlgebraMatrix::identity(g, 2));
  auto u = det_unit(g);
  EXPECT_EQ(tensor(u, x), x);
  EXPECT_EQ(tensor(x, u), x);
  auto y = det_free(GroupAlgebraMatrix::identity(g, 1));
  EXPECT_EQ(tensor(x, y).grading, (std::vector<int>{3, 3, 3, 3, 6}));
}

TEST(Tensor, DirectSumMatchesProduct) {
  Rng rng(8);
  auto g = group_from_catalog("S3");
  auto b1 = random_unimodular(g, 2, rng, 2);
  GroupAlgebraMatrix b2(g, 1, 1);
  b2(0, 0) = GroupAlgebraElement::basis(g, 2);
  GroupAlgebraMatrix sum(g, 3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) sum(i, j) = b1(i, j);
  sum(2, 2) = b2(0, 0);
  EXPECT_EQ(det_free(sum), tensor(det_free(b1), det_free(b2)));
}

TEST(Tensor, SwapSignOddGradings) {
  auto g = group_from_catalog("S3");
  auto x = det_free(GroupAlgebraMatrix::identity(g, 1));
  EXPECT_EQ(swap_sign(x, x), central(g, {-1, -1, 1}));
  EXPECT_TRUE(swap_commutes(x, x));
  auto y = det_free(GroupAlgebraMatrix::identity(g, 2));
  EXPECT_EQ(swap_sign(x, y), CentralElement::one(g));
  EXPECT_TRUE(swap_commutes(x, y));
}

TEST(Tensor, Associative) {
  Rng rng(9);
  auto g = group_from_catalog("C3");
  auto a = det_free(random_unimodular(g, 2, rng, 2));
  auto b = det_free(GroupAlgebraMatrix::identity(g, 1));
  auto c = det_free(random_unimodular(g, 2, rng, 2));
  EXPECT_EQ(tensor(tensor(a, b), c), tensor(a, tensor(b, c)));
}

TEST(Inverse, EvaluationGivesUnit) {
  Rng rng(3);
  auto g = group_from_catalog("Q8");
  auto x = det_free(random_unimodular(g, 2, rng, 2));
  auto xi = inverse(x);
  EXPECT_TRUE(xi.dual);
  EXPECT_EQ(evaluate(xi, x), CentralElement::one(g));
  EXPECT_THROW(evaluate(x, x), std::invalid_argument);
  EXPECT_THROW(tensor(x, xi), std::invalid_argument);
  auto w = wedge_elements(g, 2, {matrix_rows(GroupAlgebraMatrix::identity(g, 2))[0]});
  EXPECT_THROW(inverse(GradedInvertible{w, {1, 1, 1, 1, 2}, false}), std::invalid_argument);
}

struct Sequence {
  GroupAlgebraMatrix theta, phi, section;
};

Sequence random_sequence(const GroupPtr& g, int r1, int r3, Rng& rng) {
  const int r2 = r1 + r3;
  auto G = random_unimodular(g, r2, rng, 2, 4);
  auto Gi = *matrix_inverse(G);
  GroupAlgebraMatrix left(g, r1, r2), right(g, r2, r3), lift(g, r3, r2);
  for (int a = 0; a < r1; ++a) left(a, a) = GroupAlgebraElement::one(g);
  for (int a = 0; a < r3; ++a) {
    right(r1 + a, a) = GroupAlgebraElement::one(g);
    lift(a, r1 + a) = GroupAlgebraElement::one(g);
  }
  return {left * G, Gi * right, lift * G};
}

TEST(SesIso, DirectSumWithIdentitySection) {
  auto g = group_from_catalog("S3");
  GroupAlgebraMatrix theta(g, 1, 2), phi(g, 2, 1), s(g, 1, 2);
  theta(0, 0) = GroupAlgebraElement::one(g);
  phi(1, 0) = GroupAlgebraElement::one(g);
  s(0, 1) = GroupAlgebraElement::one(g);
  auto iso = ses_iso(theta, phi, s);
  EXPECT_EQ(iso.factor, CentralElement::one(g));
  EXPECT_EQ(iso.image.gen, iso.source.gen);
}

TEST(SesIso, SectionIndependenceOverD4) {
  Rng rng(77);
  auto g = group_from_catalog("D4");
  for (int t = 0; t < 6; ++t) {
    auto seq = random_sequence(g, 1, 1 + t % 2, rng);
    auto s2 = seq.section + random_matrix(g, seq.section.rows(), seq.theta.rows(), rng, 2, 2) * seq.theta;
    EXPECT_EQ(ses_iso(seq.theta, seq.phi, seq.section).factor, ses_iso(seq.theta, seq.phi, s2).factor);
  }
}

TEST(SesIso, OrderSwapSign) {
  Rng rng(78);
  for (const char* name : {"C3", "S3", "Q8"}) {
    auto g = group_from_catalog(name);
    auto seq = random_sequence(g, 1, 1, rng);
    auto a = ses_iso(seq.theta, seq.phi, seq.section), c = ses_iso(seq.theta, seq.phi, seq.section, true);
    std::vector<CycloNum> alpha;
    for (int chi = 0; chi < g->num_irreps(); ++chi) alpha.emplace_back(g->degree(chi) % 2 ? -1 : 1);
    EXPECT_EQ(c.factor, CentralElement(g, alpha) * a.factor);
  }
}

TEST(SesIso, NonExactInputRejected) {
  auto g = group_from_catalog("C2");
  GroupAlgebraMatrix theta(g, 1, 2), phi(g, 2, 1), s(g, 1, 2);
  theta(0, 0) = GroupAlgebraElement::one(g);
  phi(0, 0) = GroupAlgebraElement::one(g);
  s(0, 0) = GroupAlgebraElement::one(g);
  EXPECT_THROW(ses_iso(theta, phi, s), std::invalid_argument);
  phi(0, 0) = GroupAlgebraElement(g);
  phi(1, 0) = GroupAlgebraElement::one(g) + GroupAlgebraElement::basis(g, 1);
  EXPECT_THROW(ses_iso(theta, phi, s), std::invalid_argument);
}

TEST(TwoTermNrd, InvertibleAndZeroMaps) {
  Rng rng(4);
  auto g = group_from_catalog("S3");
  GroupAlgebraMatrix theta;
  do theta = random_matrix(g, 2, 2, rng, 2);
  while (!nrd(theta).invertible());
  auto zero = GroupAlgebraMatrix(g, 2, 2), one = GroupAlgebraMatrix::identity(g, 2);
  EXPECT_EQ(two_term_nrd(theta, zero, zero, one), nrd(theta));
  EXPECT_EQ(two_term_nrd(theta, zero, zero, random_matrix(g, 2, 2, rng, 3)), nrd(theta));
  EXPECT_EQ(two_term_nrd(zero, one, one, one), CentralElement::one(g));
}

TEST(TwoTermNrd, PartialKernel) {
  auto g = group_from_catalog("C2");
  // theta = diag(0, 3): kernel and cokernel are the first coordinate.
  GroupAlgebraMatrix theta(g, 2, 2), p(g, 2, 2), c(g, 2, 2);
  theta(1, 1) = GroupAlgebraElement::basis(g, 0, Rational(3));
  p(0, 0) = GroupAlgebraElement::one(g);
  c(0, 0) = GroupAlgebraElement::basis(g, 0, Rational(5));
  EXPECT_EQ(two_term_nrd(theta, p, p, c), central(g, {15, 15}));
  EXPECT_THROW(two_term_nrd(theta, GroupAlgebraMatrix(g, 2, 2), p, c), std::invalid_argument);
  EXPECT_THROW(two_term_nrd(theta, p, p, GroupAlgebraMatrix(g, 2, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace galg
