#include "galg/exterior.hpp"

#include <algorithm>
#include <map>

#include "galg/sampling.hpp"

namespace galg {

bool WedgeData::is_zero() const {
  for (std::size_t chi = 0; chi < coords.size(); ++chi)
    if (!is_zero_at(static_cast<int>(chi))) return false;
  return true;
}

bool WedgeData::is_zero_at(int chi) const {
  return std::all_of(coords[chi].begin(), coords[chi].end(), [](const CycloNum& x) { return x.is_zero(); });
}

bool operator==(const WedgeData& a, const WedgeData& b) {
  return a.group == b.group && a.k == b.k && a.r == b.r && a.coords == b.coords;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::size_t subset_rank(std::size_t n, const std::vector<std::size_t>& s) {
  const std::size_t k = s.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = start; v < s[i]; ++v) rank += binomial(n - v - 1, k - i - 1);
    start = s[i] + 1;
  }
  return rank;
}

namespace {

void check_vector(const GroupPtr& g, int k, const ModuleVector& v) {
  if (static_cast<int>(v.size()) != k) throw std::invalid_argument("module vector has the wrong length");
  for (const auto& x : v)
    if (x.group() != g) throw std::invalid_argument("module vector over a different group");
}

std::vector<CycloNum> maximal_minors(const Mat<CycloNum>& rows) {
  std::vector<CycloNum> out;
  const std::size_t m = rows.rows;
  for_each_subset(rows.cols, m, [&](const std::vector<std::size_t>& S) {
    Mat<CycloNum> sub(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) sub(i, j) = rows(i, S[j]);
    out.push_back(det(sub));
    return true;
  });
  return out;
}

Mat<CycloNum> stack(const std::vector<Mat<CycloNum>>& parts, std::size_t cols) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.rows;
  Mat<CycloNum> out(total, cols);
  std::size_t r = 0;
  for (const auto& p : parts)
    for (std::size_t i = 0; i < p.rows; ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = p(i, j);
  return out;
}

// Contraction of e_S coordinates (degree q) by e*_T coordinates (degree p) in dimension N.
std::vector<CycloNum> contract(const std::vector<CycloNum>& h, std::size_t p, const std::vector<CycloNum>& x,
                               std::size_t q, std::size_t N) {
  std::vector<CycloNum> out(binomial(N, q - p));
  auto Ss = all_subsets(N, q);
  for (std::size_t si = 0; si < Ss.size(); ++si) {
    if (x[si].is_zero()) continue;
    const auto& S = Ss[si];
    for_each_subset(q, p, [&](const std::vector<std::size_t>& pos) {
      std::vector<std::size_t> T(p);
      for (std::size_t i = 0; i < p; ++i) T[i] = S[pos[i]];
      const CycloNum& hv = h[subset_rank(N, T)];
      if (hv.is_zero()) return true;
      std::size_t parity = 0;
      for (std::size_t i = 0; i < p; ++i) parity += pos[i] - i;
      std::vector<std::size_t> rest;
      std::size_t pi = 0;
      for (std::size_t i = 0; i < q; ++i) {
        if (pi < p && pos[pi] == i) {
          ++pi;
          continue;
        }
        rest.push_back(S[i]);
      }
      CycloNum term = hv * x[si];
      if (parity % 2) out[subset_rank(N, rest)] -= term;
      else out[subset_rank(N, rest)] += term;
      return true;
    });
  }
  return out;
}

}  // namespace

Mat<CycloNum> split_element(const ModuleVector& m, int chi) {
  const GroupPtr& g = m.front().group();
  const auto n = static_cast<std::size_t>(g->degree(chi));
  const std::size_t k = m.size();
  Mat<CycloNum> out(n, k * n);
  for (std::size_t l = 0; l < k; ++l) {
    if (m[l].is_zero()) continue;
    auto w = wedderburn_component(m[l], chi);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < n; ++u) out(j, l * n + u) = w(j, u);
  }
  return out;
}

Mat<CycloNum> split_hom(const ModuleVector& f, int chi) {
  const GroupPtr& g = f.front().group();
  const auto n = static_cast<std::size_t>(g->degree(chi));
  const std::size_t k = f.size();
  Mat<CycloNum> out(n, k * n);
  for (std::size_t l = 0; l < k; ++l) {
    if (f[l].is_zero()) continue;
    auto w = wedderburn_component(f[l], chi);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t u = 0; u < n; ++u) out(j, l * n + u) = w(u, j);
  }
  return out;
}

ExteriorElement wedge_elements(const GroupPtr& g, int k, const std::vector<ModuleVector>& elems) {
  if (k < 0) throw std::invalid_argument("wedge_elements: negative rank");
  if (static_cast<int>(elems.size()) > k) throw std::invalid_argument("wedge_elements: more elements than the rank");
  for (const auto& m : elems) check_vector(g, k, m);
  ExteriorElement xe;
  xe.group = g;
  xe.k = k;
  xe.r = static_cast<int>(elems.size());
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    std::vector<Mat<CycloNum>> parts;
    for (const auto& m : elems) parts.push_back(split_element(m, chi));
    xe.coords.push_back(maximal_minors(stack(parts, k * n)));
  }
  return xe;
}

HomWedge wedge_homs(const GroupPtr& g, int k, const std::vector<ModuleVector>& homs) {
  if (k < 0) throw std::invalid_argument("wedge_homs: negative rank");
  if (static_cast<int>(homs.size()) > k) throw std::invalid_argument("wedge_homs: more homs than the rank");
  for (const auto& f : homs) check_vector(g, k, f);
  HomWedge hw;
  hw.group = g;
  hw.k = k;
  hw.r = static_cast<int>(homs.size());
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    std::vector<Mat<CycloNum>> parts;
    for (const auto& f : homs) parts.push_back(split_hom(f, chi));
    hw.coords.push_back(maximal_minors(stack(parts, k * n)));
  }
  return hw;
}

ExteriorElement zero_exterior(const GroupPtr& g, int k, int r) {
  ExteriorElement xe;
  xe.group = g;
  xe.k = k;
  xe.r = r;
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    xe.coords.emplace_back(binomial(k * n, r * n));
  }
  return xe;
}

ExteriorElement top_wedge(const GroupPtr& g, int k) {
  ExteriorElement xe = zero_exterior(g, k, k);
  for (auto& c : xe.coords) c[0] = CycloNum(1);
  return xe;
}

ExteriorElement pair(const HomWedge& hw, const ExteriorElement& xe) {
  if (hw.group != xe.group || hw.k != xe.k) throw std::invalid_argument("pair: group or ambient rank mismatch");
  if (hw.r > xe.r) throw std::invalid_argument("pair: hom degree exceeds element degree");
  const GroupPtr& g = xe.group;
  ExteriorElement out;
  out.group = g;
  out.k = xe.k;
  out.r = xe.r - hw.r;
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    out.coords.push_back(contract(hw.coords[chi], hw.r * n, xe.coords[chi], xe.r * n, xe.k * n));
  }
  return out;
}

CentralElement to_central(const ExteriorElement& xe) {
  if (xe.r != 0) throw std::invalid_argument("to_central: element has positive degree");
  std::vector<CycloNum> v;
  for (const auto& c : xe.coords) v.push_back(c.at(0));
  return CentralElement(xe.group, std::move(v));
}

ExteriorElement scale(const CentralElement& c, const ExteriorElement& xe) {
  ExteriorElement out = xe;
  for (std::size_t chi = 0; chi < out.coords.size(); ++chi)
    for (auto& x : out.coords[chi]) x *= c[static_cast<int>(chi)];
  return out;
}

ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.group != b.group || a.k != b.k || a.r != b.r) throw std::invalid_argument("exterior sum: shape mismatch");
  ExteriorElement out = a;
  for (std::size_t chi = 0; chi < out.coords.size(); ++chi)
    for (std::size_t i = 0; i < out.coords[chi].size(); ++i) out.coords[chi][i] += b.coords[chi][i];
  return out;
}

GroupAlgebraElement hom_apply(const ModuleVector& f, const ModuleVector& m) {
  if (f.size() != m.size() || f.empty()) throw std::invalid_argument("hom_apply: length mismatch");
  GroupAlgebraElement s(f.front().group());
  for (std::size_t l = 0; l < f.size(); ++l) s += m[l] * f[l];
  return s;
}

ExteriorElement apply_map(const ExteriorElement& xe, const GroupAlgebraMatrix& phi) {
  if (static_cast<int>(phi.rows()) != xe.k) throw std::invalid_argument("apply_map: row count must equal the rank");
  const GroupPtr& g = xe.group;
  const int kp = static_cast<int>(phi.cols());
  if (xe.r > kp) throw std::invalid_argument("apply_map: target rank below the degree");
  ExteriorElement out = zero_exterior(g, kp, xe.r);
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    const std::size_t m = xe.r * n;
    auto F = block_matrix(phi, chi);
    auto Ss = all_subsets(xe.k * n, m);
    auto Ts = all_subsets(kp * n, m);
    for (std::size_t si = 0; si < Ss.size(); ++si) {
      const CycloNum& xs = xe.coords[chi][si];
      if (xs.is_zero()) continue;
      for (std::size_t ti = 0; ti < Ts.size(); ++ti) {
        Mat<CycloNum> sub(m, m);
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) sub(a, b) = F(Ss[si][a], Ts[ti][b]);
        CycloNum d = det(sub);
        if (!d.is_zero()) out.coords[chi][ti] += xs * d;
      }
    }
  }
  return out;
}

std::vector<ModuleVector> matrix_rows(const GroupAlgebraMatrix& m) {
  std::vector<ModuleVector> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

std::vector<ModuleVector> dual_basis_homs(const GroupAlgebraMatrix& b) {
  auto inv = matrix_inverse(b);
  if (!inv) throw std::invalid_argument("dual_basis_homs: rows do not form a basis");
  return matrix_rows(inv->transpose());
}

// ---------------------------------------------------------------- theta_b

std::vector<CentralElement> theta_b(const ExteriorElement& xe, int d) {
  if (xe.k != d) throw std::invalid_argument("theta_b: ambient rank must equal the basis size");
  if (xe.r > d) throw std::invalid_argument("theta_b: degree exceeds the basis size");
  const GroupPtr& g = xe.group;
  std::vector<CentralElement> out;
  for (const auto& sigma : all_subsets(d, xe.r)) {
    std::vector<CycloNum> v;
    for (int chi = 0; chi < g->num_irreps(); ++chi) {
      const auto n = static_cast<std::size_t>(g->degree(chi));
      std::vector<std::size_t> S;
      for (auto i : sigma)
        for (std::size_t j = 0; j < n; ++j) S.push_back(i * n + j);
      v.push_back(xe.coords[chi][subset_rank(d * n, S)]);
    }
    out.emplace_back(g, std::move(v));
  }
  return out;
}

ExteriorElement theta_b_section(const GroupPtr& g, int d, int r, const std::vector<CentralElement>& c) {
  if (c.size() != binomial(d, r)) throw std::invalid_argument("theta_b_section: wrong tuple length");
  ExteriorElement xe = zero_exterior(g, d, r);
  auto sigmas = all_subsets(d, r);
  for (std::size_t s = 0; s < sigmas.size(); ++s)
    for (int chi = 0; chi < g->num_irreps(); ++chi) {
      const auto n = static_cast<std::size_t>(g->degree(chi));
      std::vector<std::size_t> S;
      for (auto i : sigmas[s])
        for (std::size_t j = 0; j < n; ++j) S.push_back(i * n + j);
      xe.coords[chi][subset_rank(d * n, S)] += c[s][chi];
    }
  return xe;
}

std::vector<CentralElement> theta_b(const ExteriorElement& xe, const GroupAlgebraMatrix& basis) {
  const int d = static_cast<int>(basis.rows());
  if (xe.k != d || static_cast<int>(basis.cols()) != d) throw std::invalid_argument("theta_b: basis shape");
  auto duals = dual_basis_homs(basis);
  std::vector<CentralElement> out;
  for (const auto& sigma : all_subsets(d, xe.r)) {
    std::vector<ModuleVector> hs;
    for (auto i : sigma) hs.push_back(duals[i]);
    out.push_back(to_central(pair(wedge_homs(xe.group, d, hs), xe)));
  }
  return out;
}

ExteriorElement theta_b_section(const GroupAlgebraMatrix& basis, int r, const std::vector<CentralElement>& c) {
  const int d = static_cast<int>(basis.rows());
  const GroupPtr& g = basis.group();
  auto rows = matrix_rows(basis);
  auto sigmas = all_subsets(d, r);
  if (c.size() != sigmas.size()) throw std::invalid_argument("theta_b_section: wrong tuple length");
  ExteriorElement xe = zero_exterior(g, d, r);
  for (std::size_t s = 0; s < sigmas.size(); ++s) {
    std::vector<ModuleVector> bs;
    for (auto i : sigmas[s]) bs.push_back(rows[i]);
    xe = xe + scale(c[s], wedge_elements(g, d, bs));
  }
  return xe;
}

bool theta_b_bijective(const FiniteGroup& g, int d, int r) {
  if (r < 0 || r > d) throw std::invalid_argument("theta_b_bijective: need 0 <= r <= d");
  for (int chi = 0; chi < g.num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g.degree(chi));
    if (binomial(d * n, r * n) != binomial(d, r)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Rubin lattice

namespace {

IntVec z_coords(const ModuleVector& m) {
  const GroupPtr& g = m.front().group();
  const int n = g->order();
  IntVec v(m.size() * n, 0);
  for (std::size_t l = 0; l < m.size(); ++l)
    for (int e = 0; e < n; ++e) {
      if (m[l][e].get_den() != 1) throw std::invalid_argument("lattice generators must be integral");
      v[l * n + e] = m[l][e].get_num();
    }
  return v;
}

ModuleVector left_mult(const GroupAlgebraElement& a, const ModuleVector& m) {
  ModuleVector out;
  for (const auto& x : m) out.push_back(a * x);
  return out;
}

}  // namespace

RubinResult rubin_membership(const ExteriorElement& xe, const std::vector<ModuleVector>& gens, int r,
                             const CentralLattice& xi, const Budget& budget) {
  const GroupPtr& g = xe.group;
  const int k = xe.k;
  if (xe.r != r) throw std::invalid_argument("rubin_membership: degree mismatch");
  if (gens.empty()) throw std::invalid_argument("rubin_membership: degenerate lattice");
  for (const auto& m : gens) check_vector(g, k, m);
  const int n = g->order();
  IntMat zgens;
  for (const auto& m : gens)
    for (int h = 0; h < n; ++h) zgens.push_back(z_coords(left_mult(GroupAlgebraElement::basis(g, h), m)));
  const std::size_t N = static_cast<std::size_t>(k) * n;
  IntLattice L = hnf(zgens, N);
  if (L.rank() != N) throw std::invalid_argument("rubin_membership: degenerate lattice");

  RubinResult res;
  if (static_cast<int>(gens.size()) == k) {
    GroupAlgebraMatrix B(g, k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) B(i, j) = gens[i][j];
    auto c = theta_b(xe, B);
    bool in_xi = std::all_of(c.begin(), c.end(), [&](const CentralElement& v) { return xi.contains(v); });
    if (in_xi && theta_b_section(B, r, c) == xe) {
      res.verdict = Verdict::ExactYes;
      res.reason = "xi-combination of basis wedges";
      return res;
    }
  }

  // Dual Z-basis: columns of the inverse of the HNF basis matrix, turned into homs.
  Mat<Rational> BZ(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) BZ(i, j) = L.basis()[i][j];
  auto BZinv = inverse(BZ);
  std::vector<ModuleVector> duals;
  for (std::size_t t = 0; t < N; ++t) {
    ModuleVector f(k, GroupAlgebraElement(g));
    for (int l = 0; l < k; ++l)
      for (int e = 0; e < n; ++e) f[l][g->inv(e)] = (*BZinv)(l * n + e, t);
    duals.push_back(std::move(f));
  }

  bool inconclusive = false;
  bool complete = true;
  auto test = [&](const std::vector<ModuleVector>& tuple) {
    ++res.tried;
    CentralElement v = to_central(pair(wedge_homs(g, k, tuple), xe));
    std::string why;
    if (!v.is_galois_consistent()) why = "pairing value outside the centre of Q[G]";
    else if (!v.is_algebraic_integer()) why = "pairing value is not integral";
    else if (!xi.contains(v)) {
      if (xi.exact) why = "pairing value outside xi";
      else inconclusive = true;
    }
    if (!why.empty()) {
      res.verdict = Verdict::CertifiedNo;
      res.reason = why;
      res.witness = tuple;
      res.witness_value = v;
      return false;
    }
    return true;
  };

  bool stop = false;
  for_each_subset(N, static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& S) {
    if (res.tried >= budget.max_tuples) {
      complete = false;
      return false;
    }
    std::vector<ModuleVector> tuple;
    for (auto i : S) tuple.push_back(duals[i]);
    if (!test(tuple)) {
      stop = true;
      return false;
    }
    return true;
  });
  if (stop) return res;

  if (!g->is_abelian() && r > 0) {
    // The pairing is not multilinear over Z here, so also try integer combinations.
    Rng rng(budget.seed ^ 0x7ab1eULL, 0);
    for (int s = 0; s < budget.samples && res.tried < budget.max_tuples; ++s) {
      std::vector<ModuleVector> tuple;
      for (int i = 0; i < r; ++i) {
        ModuleVector f(k, GroupAlgebraElement(g));
        for (int t = 0; t < 2; ++t) {
          long coef = rng.uniform(-budget.height, budget.height);
          const auto& d = duals[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(N) - 1))];
          for (int l = 0; l < k; ++l) f[l] += GroupAlgebraElement::basis(g, 0, Rational(coef)) * d[l];
        }
        tuple.push_back(std::move(f));
      }
      if (!test(tuple)) return res;
    }
  }

  if (g->is_abelian() && complete && !inconclusive && xi.exact) {
    res.verdict = Verdict::ExactYes;
    res.reason = "all dual-basis tuples pair into xi";
  } else {
    res.verdict = Verdict::PassedBudget;
    res.reason = inconclusive ? "some values lie outside the xi approximation" : "enumerated tuples pair into xi";
  }
  return res;
}

// ---------------------------------------------------------------- epsilon_M

ExteriorElement epsilon_M(const GroupAlgebraMatrix& m) {
  const int dp = static_cast<int>(m.rows()), d = static_cast<int>(m.cols());
  if (dp <= d) throw std::invalid_argument("epsilon_M: needs more rows than columns");
  const GroupPtr& g = m.group();
  std::vector<ModuleVector> homs;
  for (int i = 0; i < d; ++i) {
    ModuleVector f;
    for (int l = 0; l < dp; ++l) f.push_back(m(l, i));
    homs.push_back(std::move(f));
  }
  ExteriorElement eps = pair(wedge_homs(g, dp, homs), top_wedge(g, dp));
  const int r = dp - d;
  std::vector<CycloNum> sign;
  for (int chi = 0; chi < g->num_irreps(); ++chi) sign.emplace_back((r * d * g->degree(chi)) % 2 ? -1 : 1);
  return scale(CentralElement(g, sign), eps);
}

bool in_kernel_wedge(const ExteriorElement& xe, const GroupAlgebraMatrix& m) {
  const GroupPtr& g = xe.group;
  if (static_cast<int>(m.rows()) != xe.k) throw std::invalid_argument("in_kernel_wedge: rank mismatch");
  if (xe.r == 0) return true;
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    const auto n = static_cast<std::size_t>(g->degree(chi));
    const std::size_t N = xe.k * n;
    auto F = block_matrix(m, chi);
    for (std::size_t c = 0; c < F.cols; ++c) {
      std::vector<CycloNum> f(N);
      for (std::size_t i = 0; i < N; ++i) f[i] = F(i, c);
      auto out = contract(f, 1, xe.coords[chi], xe.r * n, N);
      for (const auto& x : out)
        if (!x.is_zero()) return false;
    }
  }
  return true;
}

int split_kernel_dim(const GroupAlgebraMatrix& m, int chi) {
  auto F = block_matrix(m, chi);
  return static_cast<int>(F.rows - rank(F));
}

}  // namespace galg
