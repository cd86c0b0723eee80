#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "galg/arith.hpp"
#include "galg/group.hpp"
#include "galg/matrix.hpp"

namespace galg {

enum class BaseRing { Integers, Rationals, Cyclotomic };

// Element sum_g c_g g of R[G], coefficients indexed by element label.
template <class R>
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr g) : g_(std::move(g)), c_(g_->order(), R(0)) {}
  GroupRingElement(GroupPtr g, std::vector<R> c) : g_(std::move(g)), c_(std::move(c)) {
    if (static_cast<int>(c_.size()) != g_->order()) throw std::invalid_argument("coefficient count differs from group order");
  }

  static GroupRingElement basis(const GroupPtr& g, int label, R coeff = R(1)) {
    GroupRingElement x(g);
    x.c_.at(label) = coeff;
    return x;
  }
  static GroupRingElement one(const GroupPtr& g) { return basis(g, 0); }

  const GroupPtr& group() const { return g_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int g) const { return c_[g]; }
  R& operator[](int g) { return c_[g]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!galg::is_zero(x)) return false;
    return true;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  GroupRingElement operator-() const {
    GroupRingElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    a.check(b);
    GroupRingElement r(a.g_);
    const int n = a.g_->order();
    for (int x = 0; x < n; ++x) {
      if (galg::is_zero(a.c_[x])) continue;
      for (int y = 0; y < n; ++y) {
        if (galg::is_zero(b.c_[y])) continue;
        r.c_[a.g_->mul(x, y)] += a.c_[x] * b.c_[y];
      }
    }
    return r;
  }
  friend GroupRingElement operator*(const R& s, GroupRingElement a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.g_ == b.g_ && a.c_ == b.c_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) { return !(a == b); }

 private:
  void check(const GroupRingElement& o) const {
    if (g_ != o.g_) throw std::invalid_argument("group algebra elements over different groups");
  }
  GroupPtr g_;
  std::vector<R> c_;
};

using GroupAlgebraElement = GroupRingElement<Rational>;
using EGroupAlgebraElement = GroupRingElement<CycloNum>;

BaseRing base_ring(const GroupAlgebraElement& x);
BaseRing base_ring(const EGroupAlgebraElement& x);
bool is_integral(const GroupAlgebraElement& x);
bool is_central(const GroupAlgebraElement& x);
EGroupAlgebraElement to_cyclotomic(const GroupAlgebraElement& x);
// Hard descent to rational coefficients; throws InternalError on failure.
GroupAlgebraElement descend_to_rational(const EGroupAlgebraElement& x);

class GroupAlgebraMatrix {
 public:
  GroupAlgebraMatrix() = default;
  GroupAlgebraMatrix(GroupPtr g, std::size_t rows, std::size_t cols);

  static GroupAlgebraMatrix identity(const GroupPtr& g, std::size_t n);

  const GroupPtr& group() const { return g_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GroupAlgebraElement& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const GroupAlgebraElement& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  GroupAlgebraMatrix transpose() const;
  GroupAlgebraMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  GroupAlgebraMatrix row(std::size_t i) const;
  GroupAlgebraMatrix col(std::size_t j) const;
  bool is_integral() const;

  friend GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
  friend GroupAlgebraMatrix operator+(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
  friend GroupAlgebraMatrix operator-(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
  friend bool operator==(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
  friend bool operator!=(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) { return !(a == b); }

 private:
  GroupPtr g_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GroupAlgebraElement> e_;
};

// Horizontal concatenation (a | b).
GroupAlgebraMatrix hconcat(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
// Vertical concatenation (a ; b).
GroupAlgebraMatrix vconcat(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b);
GroupAlgebraMatrix scale(const GroupAlgebraElement& s, const GroupAlgebraMatrix& m);

// Element of the centre, stored through its values on the simple components.
class CentralElement {
 public:
  CentralElement() = default;
  CentralElement(GroupPtr g, std::vector<CycloNum> values);

  static CentralElement one(const GroupPtr& g);
  static CentralElement zero(const GroupPtr& g);
  static CentralElement scalar(const GroupPtr& g, const CycloNum& s);
  // Requires x central.
  static CentralElement from_group_algebra(const GroupAlgebraElement& x);
  static CentralElement from_class_coords(const GroupPtr& g, const std::vector<Rational>& coords);

  const GroupPtr& group() const { return g_; }
  const std::vector<CycloNum>& values() const { return v_; }
  const CycloNum& operator[](int chi) const { return v_[chi]; }

  bool is_galois_consistent() const;
  bool is_algebraic_integer() const;
  bool is_zero() const;
  bool invertible() const;
  CentralElement inverse() const;

  // Coordinates in the class-sum basis of the centre of Q[G]; throws if not rational.
  std::vector<Rational> class_coords() const;
  GroupAlgebraElement to_group_algebra() const;

  CentralElement& operator+=(const CentralElement& o);
  CentralElement& operator-=(const CentralElement& o);
  CentralElement& operator*=(const CentralElement& o);
  CentralElement operator-() const;
  friend CentralElement operator+(CentralElement a, const CentralElement& b) { return a += b; }
  friend CentralElement operator-(CentralElement a, const CentralElement& b) { return a -= b; }
  friend CentralElement operator*(CentralElement a, const CentralElement& b) { return a *= b; }
  friend bool operator==(const CentralElement& a, const CentralElement& b);
  friend bool operator!=(const CentralElement& a, const CentralElement& b) { return !(a == b); }

 private:
  void check(const CentralElement& o) const;
  GroupPtr g_;
  std::vector<CycloNum> v_;
};

template <class R>
Mat<CycloNum> wedderburn_component(const GroupRingElement<R>& x, int chi) {
  const auto& rep = x.group()->irreps()[chi];
  Mat<CycloNum> m(rep.degree, rep.degree);
  for (int g = 0; g < x.group()->order(); ++g) {
    if (galg::is_zero(x[g])) continue;
    const CycloNum c(x[g]);
    const auto& rg = rep.matrices[g];
    for (std::size_t i = 0; i < rg.a.size(); ++i)
      if (!rg.a[i].is_zero()) m.a[i] += c * rg.a[i];
  }
  return m;
}

template <class R>
std::vector<Mat<CycloNum>> wedderburn(const GroupRingElement<R>& x) {
  std::vector<Mat<CycloNum>> out;
  for (int chi = 0; chi < x.group()->num_irreps(); ++chi) out.push_back(wedderburn_component(x, chi));
  return out;
}

EGroupAlgebraElement wedderburn_inverse(const GroupPtr& g, const std::vector<Mat<CycloNum>>& blocks);

EGroupAlgebraElement central_idempotent(const GroupPtr& g, int chi);

// The (rows*chi(1)) x (cols*chi(1)) matrix obtained by applying rho_chi entrywise.
Mat<CycloNum> block_matrix(const GroupAlgebraMatrix& m, int chi);
// Inverse of block_matrix across all characters, with hard descent to Q.
GroupAlgebraMatrix from_blocks(const GroupPtr& g, std::size_t rows, std::size_t cols,
                               const std::vector<Mat<CycloNum>>& blocks);

CentralElement nrd(const GroupAlgebraMatrix& m);
GroupAlgebraMatrix adjoint_star(const GroupAlgebraMatrix& m);
// Inverse over Q[G]; nullopt when some component is singular.
std::optional<GroupAlgebraMatrix> matrix_inverse(const GroupAlgebraMatrix& m);

CentralElement hash_involution(const CentralElement& x);
GroupAlgebraElement hash_involution(const GroupAlgebraElement& x);
// iota_#(M^tr): transpose and invert group elements entrywise.
GroupAlgebraMatrix hash_transpose(const GroupAlgebraMatrix& m);

struct ModuleShape {
  int free_rank = 1;
  int chi = -1;  // when >= 0, the cut e_chi * A^free_rank
};

std::vector<int> reduced_rank(const FiniteGroup& g, const ModuleShape& shape);

}  // namespace galg
