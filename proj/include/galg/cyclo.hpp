#pragma once

#include <vector>

#include "galg/arith.hpp"

namespace galg {

// Fixed field of H inside Q(zeta_f).
struct AbelianFieldSpec {
  long f = 2;
  std::vector<long> h{1};
};

// Validates f >= 2 and that H is a subgroup of (Z/f)^*; returns H sorted, reduced mod f.
std::vector<long> checked_subgroup(const AbelianFieldSpec& spec);

// prod_{h in H} (1 - zeta_f^h); checks the result is H-fixed.
CycloNum cyclotomic_unit(const AbelianFieldSpec& spec);

// Norm from Q(zeta_n) down to Q(zeta_m), m | n, expressed in Q(zeta_m).
CycloNum relative_norm(const CycloNum& x, long n, long m);

struct DistributionRow {
  long f = 0;
  long ell = 0;
  CycloNum lhs;
  CycloNum rhs;
  bool pass = false;
};

// Norm_{Q(zeta_{f ell})/Q(zeta_f)}(1 - zeta_{f ell}) against (1 - zeta_f)/(1 - zeta_f^{ell^{-1}}).
// With flipped = true the exponent ell replaces ell^{-1}.
DistributionRow distribution_check(long f, long ell, bool flipped = false);

bool is_prime(long n);
std::vector<DistributionRow> euler_family_check(long fmax, long ellmax, bool flipped = false);

}  // namespace galg
