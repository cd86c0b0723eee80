#pragma once

#include "galg/budget.hpp"
#include "galg/group_algebra.hpp"

namespace galg {

// Integral element with at most `support` nonzero coefficients in [-height, height].
// support <= 0 means every coefficient is drawn.
GroupAlgebraElement random_element(const GroupPtr& g, Rng& rng, long height, int support = 0);
GroupAlgebraMatrix random_matrix(const GroupPtr& g, std::size_t rows, std::size_t cols, Rng& rng, long height,
                                 int support = 0);
// Product of elementary matrices with random integral off-diagonal entries; invertible over Z[G].
GroupAlgebraMatrix random_unimodular(const GroupPtr& g, std::size_t n, Rng& rng, long height, int steps = 3);

// Visits every k-subset of {0..n-1} in lexicographic order; stops when f returns false.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(s))) return;
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace galg
