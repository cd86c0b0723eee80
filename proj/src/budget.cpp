#include "galg/budget.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "galg/sampling.hpp"

namespace galg {

Budget Budget::parse(const std::string& spec) {
  Budget b;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("budget entry without '=': " + item);
    std::string key = item.substr(0, eq);
    long long val = 0;
    try {
      val = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("budget value is not an integer: " + item);
    }
    if (val < 0) throw std::invalid_argument("budget values must be nonnegative: " + item);
    if (key == "rounds") b.rounds = static_cast<int>(val);
    else if (key == "height") b.height = static_cast<int>(val);
    else if (key == "samples") b.samples = static_cast<int>(val);
    else if (key == "max_size") b.max_size = static_cast<int>(val);
    else if (key == "pool_extra") b.pool_extra = static_cast<int>(val);
    else if (key == "max_minors") b.max_minors = static_cast<int>(val);
    else if (key == "max_tuples") b.max_tuples = static_cast<int>(val);
    else if (key == "seed") b.seed = static_cast<std::uint64_t>(val);
    else throw std::invalid_argument("unknown budget key: " + key);
  }
  return b;
}

Budget Budget::from_env() {
  const char* s = std::getenv("GALG_BUDGET");
  if (!s) return Budget{};
  return parse(s);
}

std::string Budget::to_string() const {
  std::ostringstream os;
  os << "rounds=" << rounds << ",height=" << height << ",samples=" << samples << ",max_size=" << max_size
     << ",pool_extra=" << pool_extra << ",max_minors=" << max_minors << ",max_tuples=" << max_tuples
     << ",seed=" << seed;
  return os.str();
}

Rng::Rng(std::uint64_t seed, std::uint64_t counter) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(counter), static_cast<std::uint32_t>(counter >> 32)};
  eng_.seed(seq);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

GroupAlgebraElement random_element(const GroupPtr& g, Rng& rng, long height, int support) {
  GroupAlgebraElement x(g);
  if (support <= 0 || support >= g->order()) {
    for (int h = 0; h < g->order(); ++h) x[h] = rng.uniform(-height, height);
    return x;
  }
  for (int s = 0; s < support; ++s) x[static_cast<int>(rng.uniform(0, g->order() - 1))] = rng.uniform(-height, height);
  return x;
}

GroupAlgebraMatrix random_matrix(const GroupPtr& g, std::size_t rows, std::size_t cols, Rng& rng, long height,
                                 int support) {
  GroupAlgebraMatrix m(g, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(g, rng, height, support);
  return m;
}

GroupAlgebraMatrix random_unimodular(const GroupPtr& g, std::size_t n, Rng& rng, long height, int steps) {
  GroupAlgebraMatrix m = GroupAlgebraMatrix::identity(g, n);
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    GroupAlgebraMatrix e = GroupAlgebraMatrix::identity(g, n);
    e(i, j) = random_element(g, rng, height, 2);
    m = m * e;
  }
  return m;
}

}  // namespace galg
