#include <gtest/gtest.h>

#include "galg/exterior.hpp"
#include "galg/sampling.hpp"
#include "helpers.hpp"

namespace galg {
namespace {

using testing::central;
using testing::elt;

ModuleVector unit_vector(const GroupPtr& g, int k, int i) {
  ModuleVector v(k, GroupAlgebraElement(g));
  v[i] = GroupAlgebraElement::one(g);
  return v;
}

TEST(Subsets, RankMatchesEnumeration) {
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      auto all = all_subsets(n, k);
      ASSERT_EQ(all.size(), binomial(n, k));
      for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(subset_rank(n, all[i]), i);
    }
}

TEST(Wedge, StandardBasisIsCoordinateOneTop) {
  for (const char* name : {"C3", "S3", "Q8"}) {
    auto g = group_from_catalog(name);
    auto w = wedge_elements(g, 2, matrix_rows(GroupAlgebraMatrix::identity(g, 2)));
    EXPECT_EQ(w, top_wedge(g, 2));
    auto h = wedge_homs(g, 2, matrix_rows(GroupAlgebraMatrix::identity(g, 2)));
    for (const auto& c : h.coords) EXPECT_EQ(c, std::vector<CycloNum>{CycloNum(1)});
  }
}

TEST(Wedge, TooManyVectorsRejected) {
  auto g = group_from_catalog("C2");
  std::vector<ModuleVector> v{unit_vector(g, 1, 0), unit_vector(g, 1, 0)};
  EXPECT_THROW(wedge_elements(g, 1, v), std::invalid_argument);
  EXPECT_THROW(wedge_homs(g, 1, v), std::invalid_argument);
  EXPECT_THROW(wedge_elements(g, 2, {ModuleVector{GroupAlgebraElement::one(g)}}), std::invalid_argument);
}

TEST(Wedge, SingleHomIsItsSplitRows) {
  auto g = group_from_catalog("S3");
  Rng rng(3);
  ModuleVector f{random_element(g, rng, 2), random_element(g, rng, 2)};
  auto h = wedge_homs(g, 2, {f});
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    auto rows = split_hom(f, chi);
    if (g->degree(chi) == 1)
      for (std::size_t c = 0; c < rows.cols; ++c) EXPECT_EQ(h.coords[chi][c], rows(0, c));
  }
}

TEST(Wedge, SwapSignDependsOnDegree) {
  auto g = group_from_catalog("Q8");
  Rng rng(4);
  ModuleVector a{random_element(g, rng, 2), random_element(g, rng, 2), random_element(g, rng, 2)};
  ModuleVector b{random_element(g, rng, 2), random_element(g, rng, 2), random_element(g, rng, 2)};
  auto ab = wedge_elements(g, 3, {a, b}), ba = wedge_elements(g, 3, {b, a});
  // Swapping two vectors swaps two blocks of chi(1) split rows.
  std::vector<CycloNum> sign;
  for (int chi = 0; chi < g->num_irreps(); ++chi) sign.emplace_back(g->degree(chi) % 2 ? -1 : 1);
  EXPECT_EQ(ab, scale(CentralElement(g, sign), ba));
  EXPECT_TRUE(wedge_elements(g, 3, {a, a}).is_zero());
}

TEST(Pair, DegreeZeroIsIdentity) {
  auto g = group_from_catalog("S3");
  Rng rng(2);
  auto w = wedge_elements(g, 2, matrix_rows(random_matrix(g, 1, 2, rng, 2)));
  EXPECT_EQ(pair(wedge_homs(g, 2, {}), w), w);
  EXPECT_THROW(pair(wedge_homs(g, 2, matrix_rows(GroupAlgebraMatrix::identity(g, 2))), w), std::invalid_argument);
}

TEST(Pair, MatchesGramReducedNorm) {
  Rng rng(7);
  for (const char* name : {"C4", "S3", "D4", "Q8", "A4"}) {
    auto g = group_from_catalog(name);
    for (int r = 1; r <= 2; ++r) {
      auto w = random_matrix(g, r, 3, rng, 2, 2), h = random_matrix(g, r, 3, rng, 2, 2);
      auto wr = matrix_rows(w), hr = matrix_rows(h);
      GroupAlgebraMatrix gram(g, r, r);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) gram(a, b) = hom_apply(hr[a], wr[b]);
      EXPECT_EQ(to_central(pair(wedge_homs(g, 3, hr), wedge_elements(g, 3, wr))), nrd(gram.transpose())) << name;
    }
  }
}

TEST(Pair, DualBasisNormalization) {
  Rng rng(10);
  auto g = group_from_catalog("D4");
  auto b = random_unimodular(g, 3, rng, 2);
  auto v = pair(wedge_homs(g, 3, dual_basis_homs(b)), wedge_elements(g, 3, matrix_rows(b)));
  EXPECT_EQ(to_central(v), CentralElement::one(g));
}

TEST(Functoriality, EndomorphismScalesByNrd) {
  Rng rng(15);
  for (const char* name : {"S3", "Q8"}) {
    auto g = group_from_catalog(name);
    auto b = random_matrix(g, 2, 2, rng, 2, 2), phi = random_matrix(g, 2, 2, rng, 2, 2);
    auto wb = wedge_elements(g, 2, matrix_rows(b));
    EXPECT_EQ(wedge_elements(g, 2, matrix_rows(b * phi)), scale(nrd(phi), wb));
    EXPECT_EQ(apply_map(wb, phi), scale(nrd(phi), wb));
    auto m = random_matrix(g, 1, 2, rng, 2, 2), psi = random_matrix(g, 2, 3, rng, 2, 2);
    EXPECT_EQ(apply_map(wedge_elements(g, 2, matrix_rows(m)), psi), wedge_elements(g, 3, matrix_rows(m * psi)));
  }
}

TEST(ThetaB, SectionRoundTrip) {
  Rng rng(20);
  for (const char* name : {"C6", "S3", "Q8"}) {
    auto g = group_from_catalog(name);
    for (int r = 0; r <= 2; ++r) {
      std::vector<CentralElement> c;
      for (std::size_t s = 0; s < binomial(2, r); ++s) c.push_back(CentralElement::scalar(g, CycloNum(rng.uniform(-5, 5))));
      EXPECT_EQ(theta_b(theta_b_section(g, 2, r, c), 2), c);
      auto basis = random_unimodular(g, 2, rng, 2);
      EXPECT_EQ(theta_b(theta_b_section(basis, r, c), basis), c);
    }
  }
}

TEST(ThetaB, BijectivityGrid) {
  for (const char* name : {"C1", "C6", "C2xC2", "S3", "Q8", "A4"}) {
    auto g = group_from_catalog(name);
    for (int d = 1; d <= 3; ++d)
      for (int r = 1; r <= d; ++r) EXPECT_EQ(theta_b_bijective(*g, d, r), g->is_abelian() || r == d) << name;
    EXPECT_TRUE(theta_b_bijective(*g, 2, 0));
  }
  EXPECT_THROW(theta_b_bijective(*group_from_catalog("C2"), 1, 2), std::invalid_argument);
}

TEST(ThetaB, NotInjectiveForNonAbelianMiddleDegree) {
  // A wedge with vanishing basis coordinates that is itself nonzero.
  auto g = group_from_catalog("S3");
  auto xe = zero_exterior(g, 2, 1);
  xe.coords[2][1] = CycloNum(1);
  for (const auto& c : theta_b(xe, 2)) EXPECT_TRUE(c.is_zero());
  EXPECT_FALSE(xe.is_zero());
}

TEST(Rubin, BasisWedgeIsExactYes) {
  for (const char* name : {"C3", "S3"}) {
    auto g = group_from_catalog(name);
    Budget b;
    auto xi = xi_approx(g, b);
    Rng rng(1);
    auto basis = random_unimodular(g, 2, rng, 1);
    auto gens = matrix_rows(basis);
    auto r = rubin_membership(wedge_elements(g, 2, gens), gens, 2, xi, b);
    EXPECT_EQ(r.verdict, Verdict::ExactYes) << name;
  }
}

TEST(Rubin, FractionOfBasisWedgeIsCertifiedNo) {
  auto g = group_from_catalog("C4");
  Budget b;
  auto gens = matrix_rows(GroupAlgebraMatrix::identity(g, 2));
  auto xe = scale(CentralElement::scalar(g, CycloNum(Rational(1, 3))), wedge_elements(g, 2, {gens[0]}));
  auto r = rubin_membership(xe, gens, 1, xi_approx(g, b), b);
  ASSERT_EQ(r.verdict, Verdict::CertifiedNo);
  ASSERT_EQ(r.witness.size(), 1u);
  EXPECT_FALSE(r.witness_value.is_algebraic_integer());
}

TEST(Rubin, NonFreeLatticeEnumeration) {
  auto g = group_from_catalog("C2");
  Budget b;
  std::vector<ModuleVector> gens{unit_vector(g, 2, 0), unit_vector(g, 2, 1), unit_vector(g, 2, 1)};
  auto r = rubin_membership(wedge_elements(g, 2, {gens[0]}), gens, 1, xi_approx(g, b), b);
  EXPECT_EQ(r.verdict, Verdict::ExactYes);
  EXPECT_GT(r.tried, 0);
}

TEST(Rubin, DegenerateLatticeRejected) {
  auto g = group_from_catalog("C2");
  Budget b;
  std::vector<ModuleVector> gens{unit_vector(g, 2, 0)};
  EXPECT_THROW(rubin_membership(wedge_elements(g, 2, gens), gens, 1, xi_approx(g, b), b), std::invalid_argument);
}

TEST(Epsilon, TrivialGroupColumn) {
  auto g = group_from_catalog("C1");
  GroupAlgebraMatrix m(g, 2, 1);
  m(0, 0) = elt(g, {{0, 2}});
  m(1, 0) = elt(g, {{0, 3}});
  auto eps = epsilon_M(m);
  // Up to sign, 2 b_2 - 3 b_1.
  ASSERT_EQ(eps.coords[0].size(), 2u);
  EXPECT_EQ(eps.coords[0][0] * CycloNum(2), eps.coords[0][1] * CycloNum(-3));
  EXPECT_EQ(eps.coords[0][1] * eps.coords[0][1], CycloNum(4));
  EXPECT_TRUE(in_kernel_wedge(eps, m));
}

TEST(Epsilon, ValueAndVanishing) {
  Rng rng(41);
  for (const char* name : {"C6", "S3", "Q8"}) {
    auto g = group_from_catalog(name);
    auto m = random_matrix(g, 3, 1, rng, 2, 2), mp = random_matrix(g, 3, 2, rng, 2, 2);
    std::vector<ModuleVector> homs;
    for (int c = 0; c < 2; ++c) homs.push_back({mp(0, c), mp(1, c), mp(2, c)});
    EXPECT_EQ(to_central(pair(wedge_homs(g, 3, homs), epsilon_M(m))), nrd(hconcat(mp, m)));

    // Killing the trivial component of the only column.
    auto k = GroupAlgebraElement::one(g) - GroupAlgebraElement::basis(g, 1);
    for (int l = 0; l < 3; ++l) m(l, 0) = m(l, 0) * k;
    auto eps = epsilon_M(m);
    EXPECT_TRUE(eps.is_zero_at(0));
    EXPECT_TRUE(in_kernel_wedge(eps, m));
  }
}

TEST(Epsilon, ShapeError) {
  auto g = group_from_catalog("C2");
  EXPECT_THROW(epsilon_M(GroupAlgebraMatrix::identity(g, 2)), std::invalid_argument);
}

}  // namespace
}  // namespace galg
