#include "galg/cyclo.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace galg {

std::vector<long> checked_subgroup(const AbelianFieldSpec& spec) {
  if (spec.f < 2) throw std::invalid_argument("conductor must be at least 2");
  std::set<long> h;
  for (long x : spec.h) {
    long r = ((x % spec.f) + spec.f) % spec.f;
    if (gcd_long(r, spec.f) != 1) throw std::invalid_argument("subgroup element not a unit mod f");
    h.insert(r);
  }
  if (h.empty() || !h.count(1 % spec.f)) throw std::invalid_argument("subgroup must contain 1");
  for (long a : h)
    for (long b : h)
      if (!h.count(a * b % spec.f)) throw std::invalid_argument("H is not closed under multiplication");
  return {h.begin(), h.end()};
}

CycloNum cyclotomic_unit(const AbelianFieldSpec& spec) {
  auto h = checked_subgroup(spec);
  CycloNum u(1);
  for (long a : h) u *= CycloNum(1) - CycloNum::zeta(spec.f, a);
  for (long a : h)
    if (galois_apply(a, u) != u) throw InternalError("cyclotomic unit is not fixed by H");
  return u;
}

CycloNum relative_norm(const CycloNum& x, long n, long m) {
  if (m < 1 || n % m != 0) throw std::invalid_argument("relative_norm: m must divide n");
  CycloNum y = x.lift(n);
  CycloNum out(1);
  for (long a = 1; a <= n; ++a)
    if (a % m == 1 % m && gcd_long(a, n) == 1) out *= galois_apply(a, y);
  auto d = descend(out, m);
  if (!d.in_subfield) throw InternalError("norm does not descend to the subfield");
  return d.value;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

DistributionRow distribution_check(long f, long ell, bool flipped) {
  if (f < 2) throw std::invalid_argument("conductor must be at least 2");
  if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
  if (f % ell == 0) throw std::invalid_argument("ell divides f");
  DistributionRow row;
  row.f = f;
  row.ell = ell;
  const long n = f * ell;
  row.lhs = relative_norm(CycloNum(1) - CycloNum::zeta(n), n, f);
  const long e = flipped ? ell % f : mod_inverse(ell % f, f);
  row.rhs = (CycloNum(1) - CycloNum::zeta(f)) / (CycloNum(1) - CycloNum::zeta(f, e));
  row.pass = row.lhs == row.rhs;
  return row;
}

std::vector<DistributionRow> euler_family_check(long fmax, long ellmax, bool flipped) {
  if (fmax < 2 || ellmax < 2) throw std::invalid_argument("bounds must be at least 2");
  std::vector<DistributionRow> rows;
  for (long f = 2; f <= fmax; ++f)
    for (long ell = 2; ell <= ellmax; ++ell)
      if (is_prime(ell) && f % ell != 0) rows.push_back(distribution_check(f, ell, flipped));
  return rows;
}

}  // namespace galg
