#include "galg/detfun.hpp"

#include <stdexcept>

namespace galg {

bool operator==(const GradedInvertible& a, const GradedInvertible& b) {
  return a.gen == b.gen && a.grading == b.grading && a.dual == b.dual;
}

GradedInvertible det_unit(const GroupPtr& g) {
  GradedInvertible x;
  x.gen = top_wedge(g, 0);
  x.grading.assign(g->num_irreps(), 0);
  return x;
}

GradedInvertible det_free(const GroupAlgebraMatrix& basis) {
  const GroupPtr& g = basis.group();
  if (basis.rows() != basis.cols()) throw std::invalid_argument("det_free: basis matrix must be square");
  if (!matrix_inverse(basis)) throw std::invalid_argument("det_free: rows do not form a basis");
  GradedInvertible x;
  x.gen = wedge_elements(g, static_cast<int>(basis.rows()), matrix_rows(basis));
  x.grading = reduced_rank(*g, ModuleShape{static_cast<int>(basis.rows()), -1});
  return x;
}

GradedInvertible tensor(const GradedInvertible& x, const GradedInvertible& y) {
  if (x.group() != y.group()) throw std::invalid_argument("tensor: objects over different groups");
  if (x.dual != y.dual) throw std::invalid_argument("tensor: mixed primal and dual objects");
  const GroupPtr& g = x.group();
  GradedInvertible out;
  out.dual = x.dual;
  out.gen = zero_exterior(g, x.gen.k + y.gen.k, x.gen.r + y.gen.r);
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    const std::size_t off = x.gen.k * n, N = (x.gen.k + y.gen.k) * n;
    auto Sx = all_subsets(x.gen.k * n, x.gen.r * n);
    auto Sy = all_subsets(y.gen.k * n, y.gen.r * n);
    for (std::size_t i = 0; i < Sx.size(); ++i) {
      if (x.gen.coords[chi][i].is_zero()) continue;
      for (std::size_t j = 0; j < Sy.size(); ++j) {
        if (y.gen.coords[chi][j].is_zero()) continue;
        auto S = Sx[i];
        for (auto t : Sy[j]) S.push_back(t + off);
        out.gen.coords[chi][subset_rank(N, S)] += x.gen.coords[chi][i] * y.gen.coords[chi][j];
      }
    }
    out.grading.push_back(x.grading[chi] + y.grading[chi]);
  }
  return out;
}

CentralElement swap_sign(const GradedInvertible& x, const GradedInvertible& y) {
  if (x.group() != y.group()) throw std::invalid_argument("swap_sign: objects over different groups");
  std::vector<CycloNum> s;
  for (std::size_t chi = 0; chi < x.grading.size(); ++chi)
    s.emplace_back((x.grading[chi] * y.grading[chi]) % 2 ? -1 : 1);
  return CentralElement(x.group(), std::move(s));
}

bool swap_commutes(const GradedInvertible& x, const GradedInvertible& y) {
  if (x.dual || y.dual) throw std::invalid_argument("swap_commutes: primal objects only");
  const GroupPtr& g = x.group();
  const int a = x.gen.k, b = y.gen.k;
  GroupAlgebraMatrix p(g, a + b, a + b);
  for (int i = 0; i < a; ++i) p(i, b + i) = GroupAlgebraElement::one(g);
  for (int j = 0; j < b; ++j) p(a + j, j) = GroupAlgebraElement::one(g);
  return apply_map(tensor(x, y).gen, p) == scale(swap_sign(x, y), tensor(y, x).gen);
}

GradedInvertible scale(const CentralElement& c, const GradedInvertible& x) {
  GradedInvertible out = x;
  out.gen = scale(c, x.gen);
  return out;
}

GradedInvertible inverse(const GradedInvertible& x) {
  if (x.gen.r != x.gen.k) throw std::invalid_argument("inverse: generator is not of top degree");
  GradedInvertible out = x;
  out.dual = !x.dual;
  for (auto& c : out.gen.coords) {
    if (c[0].is_zero()) throw std::invalid_argument("inverse: generator vanishes at a component");
    c[0] = c[0].inverse();
  }
  for (auto& r : out.grading) r = -r;
  return out;
}

CentralElement evaluate(const GradedInvertible& d, const GradedInvertible& x) {
  if (!d.dual || x.dual) throw std::invalid_argument("evaluate: needs a dual and a primal object");
  if (d.gen.k != x.gen.k || d.gen.r != x.gen.k || x.gen.r != x.gen.k)
    throw std::invalid_argument("evaluate: shape mismatch");
  std::vector<CycloNum> v;
  for (std::size_t chi = 0; chi < x.gen.coords.size(); ++chi) v.push_back(d.gen.coords[chi][0] * x.gen.coords[chi][0]);
  return CentralElement(x.group(), std::move(v));
}

SesIso ses_iso(const GroupAlgebraMatrix& theta, const GroupAlgebraMatrix& phi, const GroupAlgebraMatrix& section,
               bool swapped) {
  const GroupPtr& g = theta.group();
  const std::size_t r1 = theta.rows(), r2 = theta.cols(), r3 = phi.cols();
  if (phi.rows() != r2 || section.rows() != r3 || section.cols() != r2)
    throw std::invalid_argument("ses_iso: incompatible matrix shapes");
  if (r1 + r3 != r2) throw std::invalid_argument("ses_iso: ranks do not add up");
  if (!(theta * phi == GroupAlgebraMatrix(g, r1, r3))) throw std::invalid_argument("ses_iso: composite is not zero");
  if (!(section * phi == GroupAlgebraMatrix::identity(g, r3)))
    throw std::invalid_argument("ses_iso: section does not split the surjection");
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const int n = g->degree(chi);
    if (static_cast<int>(rank(block_matrix(theta, chi))) != static_cast<int>(r1) * n)
      throw std::invalid_argument("ses_iso: map is not injective");
    if (static_cast<int>(rank(block_matrix(phi, chi))) != static_cast<int>(r3) * n)
      throw std::invalid_argument("ses_iso: map is not surjective");
  }
  GroupAlgebraMatrix c = swapped ? vconcat(section, theta) : vconcat(theta, section);
  CentralElement n = nrd(c);
  if (!n.invertible()) throw std::invalid_argument("ses_iso: sequence is not exact");
  SesIso out;
  out.factor = n.inverse();
  out.source = det_free(GroupAlgebraMatrix::identity(g, r2));
  auto d1 = det_free(GroupAlgebraMatrix::identity(g, r1));
  auto d3 = det_free(GroupAlgebraMatrix::identity(g, r3));
  out.image = scale(out.factor, swapped ? tensor(d3, d1) : tensor(d1, d3));
  return out;
}

CentralElement two_term_nrd(const GroupAlgebraMatrix& theta, const GroupAlgebraMatrix& pk, const GroupAlgebraMatrix& q,
                            const GroupAlgebraMatrix& c) {
  const GroupPtr& g = theta.group();
  const std::size_t k = theta.rows();
  auto square = [&](const GroupAlgebraMatrix& m) { return m.rows() == k && m.cols() == k; };
  if (theta.cols() != k || !square(pk) || !square(q) || !square(c))
    throw std::invalid_argument("two_term_nrd: all matrices must be square of the same size");
  const GroupAlgebraMatrix zero(g, k, k);
  if (!(pk * pk == pk) || !(pk * theta == zero)) throw std::invalid_argument("two_term_nrd: kernel section does not split");
  if (!(q * q == q) || !(theta * q == zero)) throw std::invalid_argument("two_term_nrd: cokernel section does not split");
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const std::size_t im = rank(block_matrix(theta, chi));
    const std::size_t full = k * g->degree(chi);
    if (rank(block_matrix(pk, chi)) != full - im || rank(block_matrix(q, chi)) != full - im)
      throw std::invalid_argument("two_term_nrd: sections do not match the kernel and cokernel");
  }
  auto one = GroupAlgebraMatrix::identity(g, k);
  auto psi = (one - pk) * theta + pk * c * q;
  CentralElement n = nrd(psi);
  if (!n.invertible()) throw std::invalid_argument("two_term_nrd: comparison is not invertible");
  return n;
}

}  // namespace galg
