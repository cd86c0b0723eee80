#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace galg {

// Enumeration bounds shared by the budgeted approximations.
struct Budget {
  int rounds = 6;        // xi enumeration rounds
  int height = 2;        // coefficient bound for enumerated entries
  int samples = 32;      // random candidates per round
  int max_size = 2;      // largest matrix size enumerated for xi and delta
  int pool_extra = 1;    // add e_i + e_j columns to the replacement pool
  int max_minors = 20000;
  int max_tuples = 4000;  // hom tuples tried by Rubin membership
  std::uint64_t seed = 1;

  // "key=value,key=value" with the field names above.
  static Budget parse(const std::string& spec);
  // Reads GALG_BUDGET; defaults when unset.
  static Budget from_env();
  std::string to_string() const;
};

// Deterministic generator; per-case streams are derived from (seed, counter).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t counter = 0);
  std::uint64_t next() { return eng_(); }
  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 eng_;
};

}  // namespace galg
