#include <gtest/gtest.h>

#include "galg/group.hpp"

namespace galg {
namespace {

struct CatalogCase {
  const char* name;
  int order;
  long exponent;
  bool abelian;
  std::vector<int> degrees;
};

class CatalogTest : public ::testing::TestWithParam<CatalogCase> {};

TEST_P(CatalogTest, BasicInvariants) {
  const auto& c = GetParam();
  auto g = group_from_catalog(c.name);
  EXPECT_EQ(g->order(), c.order);
  EXPECT_EQ(g->exponent(), c.exponent);
  EXPECT_EQ(g->is_abelian(), c.abelian);
  std::vector<int> deg;
  for (int chi = 0; chi < g->num_irreps(); ++chi) deg.push_back(g->degree(chi));
  EXPECT_EQ(deg, c.degrees);
  EXPECT_EQ(g->num_irreps(), g->num_classes());
}

TEST_P(CatalogTest, RepresentationsAreHomomorphisms) {
  auto g = group_from_catalog(GetParam().name);
  for (const auto& rep : g->irreps())
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) ASSERT_EQ(rep.matrices[g->mul(a, b)], rep.matrices[a] * rep.matrices[b]);
}

TEST_P(CatalogTest, CharacterOrthogonality) {
  auto g = group_from_catalog(GetParam().name);
  for (int x = 0; x < g->num_irreps(); ++x)
    for (int y = 0; y < g->num_irreps(); ++y) {
      CycloNum s;
      for (int h = 0; h < g->order(); ++h) s += g->character(x, h) * g->character(y, g->inv(h));
      EXPECT_EQ(s, CycloNum(x == y ? g->order() : 0));
    }
}

TEST_P(CatalogTest, DualAndGaloisPermuteCharacters) {
  auto g = group_from_catalog(GetParam().name);
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    int d = g->dual_index(chi);
    for (int h = 0; h < g->order(); ++h) EXPECT_EQ(g->character(d, h), g->character(chi, g->inv(h)));
    for (long a : g->galois_residues()) {
      int s = g->galois_index(a, chi);
      for (int h = 0; h < g->order(); ++h) EXPECT_EQ(g->character(s, h), galois_apply(a, g->character(chi, h)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Catalog, CatalogTest,
    ::testing::Values(CatalogCase{"C1", 1, 1, true, {1}}, CatalogCase{"C2", 2, 2, true, {1, 1}},
                      CatalogCase{"C6", 6, 6, true, {1, 1, 1, 1, 1, 1}},
                      CatalogCase{"C2xC2", 4, 2, true, {1, 1, 1, 1}}, CatalogCase{"S3", 6, 6, false, {1, 1, 2}},
                      CatalogCase{"D4", 8, 4, false, {1, 1, 1, 1, 2}}, CatalogCase{"Q8", 8, 4, false, {1, 1, 1, 1, 2}},
                      CatalogCase{"D5", 10, 10, false, {1, 1, 2, 2}}, CatalogCase{"A4", 12, 6, false, {1, 1, 1, 3}},
                      CatalogCase{"S4", 24, 12, false, {1, 1, 2, 3, 3}},
                      CatalogCase{"S3xC2", 12, 6, false, {1, 1, 1, 1, 2, 2}}),
    [](const auto& info) {
      std::string n = info.param.name;
      for (auto& ch : n)
        if (ch == 'x') ch = '_';
      return n;
    });

TEST(Catalog, UnknownNamesRejected) {
  EXPECT_THROW(group_from_catalog("NoSuchGroup"), std::invalid_argument);
  EXPECT_THROW(group_from_catalog("D2"), std::invalid_argument);
  EXPECT_THROW(group_from_catalog("C0"), std::invalid_argument);
  EXPECT_THROW(group_from_catalog("S3xD4"), std::invalid_argument);
  EXPECT_THROW(group_from_catalog("C", {}), std::invalid_argument);
}

TEST(Catalog, FamilyParameters) {
  EXPECT_EQ(group_from_catalog("C", {7})->order(), 7);
  EXPECT_EQ(group_from_catalog("C", {2, 3})->order(), 6);
  EXPECT_EQ(group_from_catalog("D", {6})->order(), 12);
  EXPECT_EQ(group_from_catalog("C6"), group_from_catalog("C6"));
}

TEST(Irreps, CyclicOfOrderTwo) {
  auto g = group_from_catalog("C2");
  EXPECT_EQ(g->character(0, 1), CycloNum(1));
  EXPECT_EQ(g->character(1, 1), CycloNum(-1));
}

TEST(Irreps, QuaternionElementOrders) {
  auto g = group_from_catalog("Q8");
  int order4 = 0;
  for (int h = 0; h < 8; ++h) order4 += g->element_order(h) == 4;
  EXPECT_EQ(order4, 6);
}

TEST(Contragredient, RealAndComplexCharacters) {
  auto s3 = group_from_catalog("S3");
  auto d = contragredient(*s3, s3->irreps()[2]);
  EXPECT_EQ(d.character, s3->irreps()[2].character);

  auto c3 = group_from_catalog("C3");
  auto chi = c3->irreps()[1];
  auto dual = contragredient(*c3, chi);
  for (int h = 0; h < 3; ++h) EXPECT_EQ(dual.character[h], chi.character[h] * chi.character[h]);
  EXPECT_NE(dual.character, chi.character);
}

}  // namespace
}  // namespace galg
