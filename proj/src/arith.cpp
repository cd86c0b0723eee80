#include "galg/arith.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "galg/matrix.hpp"

namespace galg {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string t = s;
  if (t[0] == '+') t.erase(0, 1);
  for (char ch : t)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw std::invalid_argument("malformed rational literal: " + s);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  long r = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

long mod_inverse(long a, long n) {
  if (n == 1) return 0;
  long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
  while (nr) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return ((t % n) + n) % n;
}

namespace {

struct CycloContext {
  long n;
  long phi;
  std::vector<Integer> poly;  // Phi_n, monic, length phi + 1
};

std::vector<Integer> poly_exact_div(std::vector<Integer> num, const std::vector<Integer>& den) {
  // den monic
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw InternalError("cyclotomic polynomial division not exact");
  return q;
}

std::mutex& ctx_mutex() {
  static std::mutex m;
  return m;
}

std::map<long, std::unique_ptr<CycloContext>>& ctx_map() {
  static std::map<long, std::unique_ptr<CycloContext>> m;
  return m;
}

const CycloContext* context_locked(long n) {
  auto& mp = ctx_map();
  auto it = mp.find(n);
  if (it != mp.end()) return it->second.get();
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d) continue;
    num = poly_exact_div(num, context_locked(d)->poly);
  }
  auto ctx = std::make_unique<CycloContext>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  ctx->poly = std::move(num);
  if (static_cast<long>(ctx->poly.size()) != ctx->phi + 1)
    throw InternalError("cyclotomic polynomial has wrong degree");
  const CycloContext* p = ctx.get();
  mp.emplace(n, std::move(ctx));
  return p;
}

const CycloContext* context(long n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  std::lock_guard<std::mutex> lock(ctx_mutex());
  return context_locked(n);
}

// Reduces a polynomial modulo Phi_n in place and truncates to length phi(n).
void reduce(const CycloContext* ctx, std::vector<Rational>& p) {
  const std::size_t phi = ctx->phi;
  for (std::size_t i = p.size(); i-- > phi;) {
    if (sgn(p[i]) == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j < phi; ++j) {
      if (ctx->poly[j] != 0) p[i - phi + j] -= c * ctx->poly[j];
    }
    p[i] = 0;
  }
  p.resize(phi, Rational(0));
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    Rational c = r.back() / lead;
    std::size_t shift = r.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) { return context(n)->poly; }

CycloNum::CycloNum() : n_(1), c_(1, Rational(0)) {}
CycloNum::CycloNum(long v) : n_(1), c_(1, Rational(v)) {}
CycloNum::CycloNum(const Rational& q) : n_(1), c_(1, q) {}

CycloNum::CycloNum(long n, std::vector<Rational> coeffs) : n_(n), c_(std::move(coeffs)) {
  reduce(context(n), c_);
}

CycloNum CycloNum::zeta(long n, long k) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> c(k + 1, Rational(0));
  c[k] = 1;
  return CycloNum(n, std::move(c));
}

bool CycloNum::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) throw std::invalid_argument("cyclotomic number is not rational");
  return c_[0];
}

bool CycloNum::is_algebraic_integer() const {
  // Z[zeta_n] is the full ring of integers and has the power basis.
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

CycloNum CycloNum::lift(long m) const {
  if (m % n_ != 0) throw std::invalid_argument("lift: target conductor must be a multiple");
  if (m == n_) return *this;
  const long step = m / n_;
  std::vector<Rational> p(static_cast<std::size_t>((c_.size() - 1) * step + 1), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  return CycloNum(m, std::move(p));
}

namespace {

void align(CycloNum& a, CycloNum& b) {
  if (a.conductor() == b.conductor()) return;
  long l = lcm_long(a.conductor(), b.conductor());
  a = a.lift(l);
  b = b.lift(l);
}

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    c_[0] += s;
    return *this;
  }
  if (n_ != o.n_) {
    CycloNum b = o;
    align(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.n_ == 1) {
    if (sgn(o.c_[0]) == 0) {
      c_.assign(c_.size(), Rational(0));
      return *this;
    }
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto& x : c_) x *= s;
    return *this;
  }
  if (n_ != o.n_) {
    CycloNum b = o;
    align(*this, b);
    return *this *= b;
  }
  std::vector<Rational> p = poly_mul(c_, o.c_);
  reduce(context(n_), p);
  c_ = std::move(p);
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  if (n_ == 1) return CycloNum(Rational(1) / c_[0]);
  const CycloContext* ctx = context(n_);
  Poly r0(ctx->poly.begin(), ctx->poly.end());
  Poly r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, q, r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw InternalError("cyclotomic polynomial is not irreducible");
  for (auto& x : s0) x /= r0[0];
  if (s0.empty()) s0.push_back(Rational(0));
  return CycloNum(n_, std::move(s0));
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  CycloNum x = a, y = b;
  align(x, y);
  return x.c_ == y.c_;
}

std::string CycloNum::to_string() const {
  if (is_rational()) return format_rational(c_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    if (!first) os << (sgn(v) < 0 ? " - " : " + ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    Rational av = abs(v);
    if (i == 0) {
      os << av.get_str();
      continue;
    }
    if (av != 1) os << av.get_str() << "*";
    os << "z" << n_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

CycloNum cyclo_make(long n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw std::invalid_argument("cyclo_make: conductor must be positive");
  if (static_cast<long>(coeffs.size()) != euler_phi(n))
    throw std::invalid_argument("cyclo_make: coefficient count must equal phi(n)");
  return CycloNum(n, coeffs);
}

CycloNum cyclo_inverse(const CycloNum& x) { return x.inverse(); }

CycloNum galois_apply(long a, const CycloNum& x) {
  const long n = x.conductor();
  if (gcd_long(a, n) != 1) throw std::invalid_argument("galois_apply: residue not coprime to conductor");
  if (n == 1) return x;
  long am = ((a % n) + n) % n;
  std::vector<Rational> p(n, Rational(0));
  const auto& c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) p[(am * static_cast<long>(i)) % n] += c[i];
  return CycloNum(n, std::move(p));
}

DescendResult descend(const CycloNum& x, long m) {
  const long n = x.conductor();
  if (m < 1 || n % m != 0) throw std::invalid_argument("descend: m must divide the conductor");
  DescendResult res;
  for (long a = 1; a < n; ++a) {
    if (gcd_long(a, n) != 1 || a % m != 1 % m) continue;
    if (galois_apply(a, x) != x) {
      res.witness = a;
      return res;
    }
  }
  const long pm = euler_phi(m);
  Mat<Rational> basis(pm, euler_phi(n));
  for (long i = 0; i < pm; ++i) {
    CycloNum z = CycloNum::zeta(m, i).lift(n);
    for (std::size_t j = 0; j < z.coeffs().size(); ++j) basis(i, j) = z.coeffs()[j];
  }
  auto sol = solve_left(basis, x.coeffs());
  if (!sol) throw InternalError("descend: Galois-fixed element not in subfield span");
  res.in_subfield = true;
  res.value = CycloNum(m, *sol);
  return res;
}

}  // namespace galg
