#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galg {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a certificate that should hold by construction fails.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

long euler_phi(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);
long mod_inverse(long a, long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// An element of Q(zeta_n) in the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long v);  // NOLINT(google-explicit-constructor)
  CycloNum(const Rational& q);  // NOLINT(google-explicit-constructor)
  // Reduces an arbitrary-length coefficient vector modulo Phi_n.
  CycloNum(long n, std::vector<Rational> coeffs);

  static CycloNum zeta(long n, long k = 1);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;
  bool is_algebraic_integer() const;

  // Re-express in Q(zeta_m); requires n | m.
  CycloNum lift(long m) const;
  CycloNum inverse() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  CycloNum operator-() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  std::string to_string() const;

 private:
  long n_;
  std::vector<Rational> c_;
};

CycloNum cyclo_make(long n, const std::vector<Rational>& coeffs);
CycloNum cyclo_inverse(const CycloNum& x);
CycloNum galois_apply(long a, const CycloNum& x);

struct DescendResult {
  bool in_subfield = false;
  CycloNum value;    // valid when in_subfield
  long witness = 0;  // automorphism index moving x otherwise
};

DescendResult descend(const CycloNum& x, long m);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const CycloNum& x) { return x.is_zero(); }

}  // namespace galg
