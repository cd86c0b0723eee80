#include <gtest/gtest.h>

#include "galg/lattice.hpp"
#include "galg/sampling.hpp"

namespace galg {
namespace {

IntVec v(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TEST(Hnf, DiagonalStaysPut) {
  auto L = hnf({v({2, 0}), v({0, 2})});
  EXPECT_EQ(L.basis(), (IntMat{v({2, 0}), v({0, 2})}));
  EXPECT_EQ(L.index(), 4);
}

TEST(Hnf, GeneratorsSpanEverything) {
  auto L = hnf({v({2, 0}), v({0, 3}), v({1, 1})});
  EXPECT_EQ(L.basis(), (IntMat{v({1, 0}), v({0, 1})}));
  EXPECT_EQ(L.index(), 1);
}

TEST(Hnf, EmptyIsZeroLattice) {
  auto L = hnf({}, 3);
  EXPECT_EQ(L.rank(), 0u);
  EXPECT_EQ(L.ambient_rank(), 3u);
  EXPECT_TRUE(L.contains(v({0, 0, 0})));
  EXPECT_FALSE(L.contains(v({1, 0, 0})));
  EXPECT_EQ(L.index(), 0);
}

TEST(Hnf, CanonicalUnderRowOperations) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    IntMat g;
    for (int i = 0; i < 3; ++i) g.push_back(v({rng.uniform(-9, 9), rng.uniform(-9, 9), rng.uniform(-9, 9)}));
    IntMat h = g;
    long c = rng.uniform(-3, 3);
    for (std::size_t j = 0; j < 3; ++j) h[0][j] += c * h[1][j];
    std::swap(h[1], h[2]);
    for (auto& x : h[2]) x = -x;
    EXPECT_EQ(hnf(g, 3), hnf(h, 3));
  }
}

TEST(Hnf, Membership) {
  auto L = hnf({v({2, 1}), v({0, 3})});
  EXPECT_TRUE(L.contains(v({2, 4})));
  EXPECT_FALSE(L.contains(v({1, 0})));
  EXPECT_TRUE(L.contains(hnf({v({4, 2})})));
  EXPECT_FALSE(L.contains(hnf({v({1, 0})}, 2)));
  // (1, 1/2) has denominator 2, so it lies in the localization at 3 only if 2 * it does.
  std::vector<Rational> q{Rational(1), Rational(1, 2)};
  EXPECT_FALSE(L.contains(q));
  std::vector<Rational> w{Rational(1), Rational(1, 2)};
  EXPECT_TRUE(hnf({v({2, 1})}, 2).contains(w, 3));
  EXPECT_THROW(L.contains(v({1})), std::invalid_argument);
}

TEST(Hnf, SumOfLattices) {
  auto a = hnf({v({2, 0})}, 2), b = hnf({v({3, 0}), v({0, 5})}, 2);
  EXPECT_EQ(lattice_sum(a, b), hnf({v({1, 0}), v({0, 5})}));
}

TEST(Smith, KnownInvariants) {
  EXPECT_EQ(smith_normal_form({v({2, 0}), v({0, 3})}).invariants, v({1, 6}));
  EXPECT_EQ(smith_normal_form({v({2, 1}), v({1, 2})}).invariants, v({1, 3}));
  EXPECT_EQ(smith_normal_form({v({1, 0}), v({0, 1})}).invariants, v({1, 1}));
  EXPECT_EQ(smith_normal_form({v({0, 0}), v({0, 0})}).invariants, v({0, 0}));
}

TEST(Smith, TransformsDiagonalize) {
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    IntMat m;
    for (int i = 0; i < 3; ++i) m.push_back(v({rng.uniform(-6, 6), rng.uniform(-6, 6), rng.uniform(-6, 6)}));
    auto s = smith_normal_form(m);
    auto d = int_mat_mul(int_mat_mul(s.U, m), s.V);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) EXPECT_EQ(d[i][j], 0);
        else EXPECT_EQ(abs(d[i][i]), s.invariants[i]);
    for (std::size_t i = 0; i + 1 < 3; ++i)
      if (s.invariants[i] != 0) EXPECT_EQ(s.invariants[i + 1] % s.invariants[i], 0);
  }
}

}  // namespace
}  // namespace galg
