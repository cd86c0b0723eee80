#include "galg/group_algebra.hpp"

#include <algorithm>

namespace galg {

BaseRing base_ring(const GroupAlgebraElement& x) {
  return is_integral(x) ? BaseRing::Integers : BaseRing::Rationals;
}

BaseRing base_ring(const EGroupAlgebraElement& x) {
  for (const auto& c : x.coeffs())
    if (!c.is_rational()) return BaseRing::Cyclotomic;
  for (const auto& c : x.coeffs())
    if (c.rational_value().get_den() != 1) return BaseRing::Rationals;
  return BaseRing::Integers;
}

bool is_integral(const GroupAlgebraElement& x) {
  return std::all_of(x.coeffs().begin(), x.coeffs().end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool is_central(const GroupAlgebraElement& x) {
  const auto& G = *x.group();
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (x[G.mul(G.mul(h, g), G.inv(h))] != x[g]) return false;
  return true;
}

EGroupAlgebraElement to_cyclotomic(const GroupAlgebraElement& x) {
  std::vector<CycloNum> c(x.coeffs().begin(), x.coeffs().end());
  return EGroupAlgebraElement(x.group(), std::move(c));
}

GroupAlgebraElement descend_to_rational(const EGroupAlgebraElement& x) {
  std::vector<Rational> c;
  c.reserve(x.coeffs().size());
  for (const auto& v : x.coeffs()) {
    if (!v.is_rational()) throw InternalError("group algebra element does not descend to Q");
    c.push_back(v.rational_value());
  }
  return GroupAlgebraElement(x.group(), std::move(c));
}

// ---------------------------------------------------------------- matrices

GroupAlgebraMatrix::GroupAlgebraMatrix(GroupPtr g, std::size_t rows, std::size_t cols)
    : g_(std::move(g)), rows_(rows), cols_(cols), e_(rows * cols, GroupAlgebraElement(g_)) {}

GroupAlgebraMatrix GroupAlgebraMatrix::identity(const GroupPtr& g, std::size_t n) {
  GroupAlgebraMatrix m(g, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupAlgebraElement::one(g);
  return m;
}

GroupAlgebraMatrix GroupAlgebraMatrix::transpose() const {
  GroupAlgebraMatrix t(g_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GroupAlgebraMatrix GroupAlgebraMatrix::select(const std::vector<std::size_t>& rs,
                                              const std::vector<std::size_t>& cs) const {
  GroupAlgebraMatrix s(g_, rs.size(), cs.size());
  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs.at(i), cs.at(j));
  return s;
}

GroupAlgebraMatrix GroupAlgebraMatrix::row(std::size_t i) const {
  std::vector<std::size_t> cs(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cs[j] = j;
  return select({i}, cs);
}

GroupAlgebraMatrix GroupAlgebraMatrix::col(std::size_t j) const {
  std::vector<std::size_t> rs(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rs[i] = i;
  return select(rs, {j});
}

bool GroupAlgebraMatrix::is_integral() const {
  return std::all_of(e_.begin(), e_.end(), [](const GroupAlgebraElement& x) { return galg::is_integral(x); });
}

GroupAlgebraMatrix operator*(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.cols_ != b.rows_ || a.g_ != b.g_) throw std::invalid_argument("group algebra matrix shape mismatch");
  GroupAlgebraMatrix c(a.g_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

GroupAlgebraMatrix operator+(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("group algebra matrix shape mismatch");
  GroupAlgebraMatrix c = a;
  for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
  return c;
}

GroupAlgebraMatrix operator-(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("group algebra matrix shape mismatch");
  GroupAlgebraMatrix c = a;
  for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] -= b.e_[i];
  return c;
}

bool operator==(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  return a.g_ == b.g_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

GroupAlgebraMatrix hconcat(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  GroupAlgebraMatrix c(a.group(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

GroupAlgebraMatrix vconcat(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vconcat: column counts differ");
  GroupAlgebraMatrix c(a.group(), a.rows() + b.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) c(a.rows() + i, j) = b(i, j);
  }
  return c;
}

GroupAlgebraMatrix scale(const GroupAlgebraElement& s, const GroupAlgebraMatrix& m) {
  GroupAlgebraMatrix c(m.group(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = s * m(i, j);
  return c;
}

// ---------------------------------------------------------------- centre

CentralElement::CentralElement(GroupPtr g, std::vector<CycloNum> values) : g_(std::move(g)), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g_->num_irreps())
    throw std::invalid_argument("central element needs one value per irreducible character");
}

CentralElement CentralElement::one(const GroupPtr& g) { return scalar(g, CycloNum(1)); }
CentralElement CentralElement::zero(const GroupPtr& g) { return scalar(g, CycloNum(0)); }
CentralElement CentralElement::scalar(const GroupPtr& g, const CycloNum& s) {
  return CentralElement(g, std::vector<CycloNum>(g->num_irreps(), s));
}

CentralElement CentralElement::from_group_algebra(const GroupAlgebraElement& x) {
  const auto& G = x.group();
  std::vector<CycloNum> v(G->num_irreps());
  for (int chi = 0; chi < G->num_irreps(); ++chi) {
    CycloNum s;
    for (int g = 0; g < G->order(); ++g)
      if (sgn(x[g]) != 0) s += CycloNum(x[g]) * G->character(chi, g);
    v[chi] = s / CycloNum(G->degree(chi));
  }
  return CentralElement(G, std::move(v));
}

CentralElement CentralElement::from_class_coords(const GroupPtr& g, const std::vector<Rational>& coords) {
  if (static_cast<int>(coords.size()) != g->num_classes()) throw std::invalid_argument("class coordinate count mismatch");
  std::vector<CycloNum> v(g->num_irreps());
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    CycloNum s;
    for (int c = 0; c < g->num_classes(); ++c) {
      if (sgn(coords[c]) == 0) continue;
      const auto& cls = g->classes()[c];
      s += CycloNum(coords[c] * static_cast<long>(cls.size())) * g->character(chi, cls.front());
    }
    v[chi] = s / CycloNum(g->degree(chi));
  }
  return CentralElement(g, std::move(v));
}

bool CentralElement::is_galois_consistent() const {
  for (long a : g_->galois_residues())
    for (int chi = 0; chi < g_->num_irreps(); ++chi) {
      const CycloNum& x = v_[chi];
      long n = x.conductor();
      if (v_[g_->galois_index(a, chi)] != galois_apply(a % n, x)) return false;
    }
  return true;
}

bool CentralElement::is_algebraic_integer() const {
  return std::all_of(v_.begin(), v_.end(), [](const CycloNum& x) { return x.is_algebraic_integer(); });
}

bool CentralElement::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

bool CentralElement::invertible() const {
  return std::none_of(v_.begin(), v_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

CentralElement CentralElement::inverse() const {
  std::vector<CycloNum> v;
  for (const auto& x : v_) v.push_back(x.inverse());
  return CentralElement(g_, std::move(v));
}

std::vector<Rational> CentralElement::class_coords() const {
  const auto& G = *g_;
  std::vector<Rational> out(G.num_classes());
  for (int c = 0; c < G.num_classes(); ++c) {
    int ginv = G.inv(G.classes()[c].front());
    CycloNum s;
    for (int chi = 0; chi < G.num_irreps(); ++chi) {
      if (v_[chi].is_zero()) continue;
      s += CycloNum(G.degree(chi)) * G.character(chi, ginv) * v_[chi];
    }
    if (!s.is_rational()) throw std::domain_error("central tuple is not Galois consistent");
    out[c] = s.rational_value() / G.order();
  }
  return out;
}

GroupAlgebraElement CentralElement::to_group_algebra() const {
  auto cc = class_coords();
  GroupAlgebraElement x(g_);
  for (int c = 0; c < g_->num_classes(); ++c)
    for (int g : g_->classes()[c]) x[g] = cc[c];
  return x;
}

void CentralElement::check(const CentralElement& o) const {
  if (g_ != o.g_) throw std::invalid_argument("central elements over different groups");
}

CentralElement& CentralElement::operator+=(const CentralElement& o) {
  check(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

CentralElement& CentralElement::operator-=(const CentralElement& o) {
  check(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

CentralElement& CentralElement::operator*=(const CentralElement& o) {
  check(o);
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] *= o.v_[i];
  return *this;
}

CentralElement CentralElement::operator-() const {
  CentralElement r = *this;
  for (auto& x : r.v_) x = -x;
  return r;
}

bool operator==(const CentralElement& a, const CentralElement& b) { return a.g_ == b.g_ && a.v_ == b.v_; }

// ---------------------------------------------------------------- Wedderburn

EGroupAlgebraElement wedderburn_inverse(const GroupPtr& g, const std::vector<Mat<CycloNum>>& blocks) {
  const auto& G = *g;
  if (static_cast<int>(blocks.size()) != G.num_irreps()) throw std::invalid_argument("wedderburn_inverse: block count");
  for (int chi = 0; chi < G.num_irreps(); ++chi) {
    const auto d = static_cast<std::size_t>(G.degree(chi));
    if (blocks[chi].rows != d || blocks[chi].cols != d) throw std::invalid_argument("wedderburn_inverse: block shape");
  }
  EGroupAlgebraElement x(g);
  for (int h = 0; h < G.order(); ++h) {
    int hinv = G.inv(h);
    CycloNum s;
    for (int chi = 0; chi < G.num_irreps(); ++chi) {
      const auto& A = blocks[chi];
      if (A.is_zero()) continue;
      const auto& R = G.irreps()[chi].matrices[hinv];
      const std::size_t d = A.rows;
      CycloNum tr;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (!A(i, j).is_zero() && !R(j, i).is_zero()) tr += A(i, j) * R(j, i);
      s += CycloNum(G.degree(chi)) * tr;
    }
    x[h] = s / CycloNum(G.order());
  }
  return x;
}

EGroupAlgebraElement central_idempotent(const GroupPtr& g, int chi) {
  EGroupAlgebraElement x(g);
  Rational w(g->degree(chi), g->order());
  w.canonicalize();
  CycloNum f = CycloNum(w);
  for (int h = 0; h < g->order(); ++h) x[g->inv(h)] = f * g->character(chi, h);
  return x;
}

Mat<CycloNum> block_matrix(const GroupAlgebraMatrix& m, int chi) {
  const auto d = static_cast<std::size_t>(m.group()->degree(chi));
  Mat<CycloNum> b(m.rows() * d, m.cols() * d);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      auto w = wedderburn_component(m(i, j), chi);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) b(i * d + a, j * d + c) = w(a, c);
    }
  return b;
}

GroupAlgebraMatrix from_blocks(const GroupPtr& g, std::size_t rows, std::size_t cols,
                               const std::vector<Mat<CycloNum>>& blocks) {
  GroupAlgebraMatrix out(g, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Mat<CycloNum>> entry;
      for (int chi = 0; chi < g->num_irreps(); ++chi) {
        const auto d = static_cast<std::size_t>(g->degree(chi));
        Mat<CycloNum> e(d, d);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t c = 0; c < d; ++c) e(a, c) = blocks[chi](i * d + a, j * d + c);
        entry.push_back(std::move(e));
      }
      out(i, j) = descend_to_rational(wedderburn_inverse(g, entry));
    }
  return out;
}

CentralElement nrd(const GroupAlgebraMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("nrd: matrix must be square");
  const auto& g = m.group();
  std::vector<CycloNum> v(g->num_irreps());
  for (int chi = 0; chi < g->num_irreps(); ++chi) v[chi] = det(block_matrix(m, chi));
  CentralElement out(g, std::move(v));
  if (!out.is_galois_consistent()) throw InternalError("reduced norm is not Galois consistent");
  return out;
}

GroupAlgebraMatrix adjoint_star(const GroupAlgebraMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("adjoint_star: matrix must be square");
  const auto& g = m.group();
  std::vector<Mat<CycloNum>> blocks;
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    auto b = block_matrix(m, chi);
    auto inv = inverse(b);
    if (!inv) {
      blocks.emplace_back(b.rows, b.cols);
      continue;
    }
    CycloNum d = det(b);
    blocks.push_back(d * *inv);
  }
  return from_blocks(g, m.rows(), m.cols(), blocks);
}

std::optional<GroupAlgebraMatrix> matrix_inverse(const GroupAlgebraMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_inverse: matrix must be square");
  const auto& g = m.group();
  std::vector<Mat<CycloNum>> blocks;
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    auto inv = inverse(block_matrix(m, chi));
    if (!inv) return std::nullopt;
    blocks.push_back(std::move(*inv));
  }
  return from_blocks(g, m.rows(), m.cols(), blocks);
}

CentralElement hash_involution(const CentralElement& x) {
  const auto& g = x.group();
  std::vector<CycloNum> v(g->num_irreps());
  for (int chi = 0; chi < g->num_irreps(); ++chi) v[chi] = x[g->dual_index(chi)];
  return CentralElement(g, std::move(v));
}

GroupAlgebraElement hash_involution(const GroupAlgebraElement& x) {
  GroupAlgebraElement y(x.group());
  for (int h = 0; h < x.group()->order(); ++h) y[x.group()->inv(h)] = x[h];
  return y;
}

GroupAlgebraMatrix hash_transpose(const GroupAlgebraMatrix& m) {
  GroupAlgebraMatrix t(m.group(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = hash_involution(m(i, j));
  return t;
}

std::vector<int> reduced_rank(const FiniteGroup& g, const ModuleShape& shape) {
  if (shape.free_rank < 0) throw std::invalid_argument("reduced_rank: negative rank");
  if (shape.chi >= g.num_irreps()) throw std::invalid_argument("reduced_rank: unknown character");
  std::vector<int> rr(g.num_irreps(), 0);
  for (int chi = 0; chi < g.num_irreps(); ++chi) {
    if (shape.chi >= 0 && chi != shape.chi) continue;
    rr[chi] = shape.free_rank * g.degree(chi);
  }
  return rr;
}

}  // namespace galg
