#include "galg/fitting.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "galg/sampling.hpp"

namespace galg {

// ---------------------------------------------------------------- CentralLattice

CentralLattice::CentralLattice(GroupPtr g) : g_(std::move(g)), lat_(g_->num_classes()) {}

CentralLattice CentralLattice::from_elements(const GroupPtr& g, const std::vector<CentralElement>& gens) {
  CentralLattice L(g);
  L.add(gens);
  return L;
}

CentralLattice CentralLattice::from_coords(const GroupPtr& g, const IntMat& scaled) {
  CentralLattice L(g);
  L.add_coords(scaled);
  return L;
}

CentralLattice CentralLattice::unit(const GroupPtr& g) {
  return from_elements(g, {CentralElement::one(g)});
}

std::optional<IntVec> CentralLattice::encode(const CentralElement& x) const {
  if (x.group() != g_) throw std::invalid_argument("central element over a different group");
  std::vector<Rational> cc;
  try {
    cc = x.class_coords();
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  IntVec v(cc.size());
  for (std::size_t i = 0; i < cc.size(); ++i) {
    Rational s = cc[i] * scale();
    if (s.get_den() != 1) return std::nullopt;
    v[i] = s.get_num();
  }
  return v;
}

CentralElement CentralLattice::decode(const IntVec& v) const {
  std::vector<Rational> cc(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) cc[i] = Rational(v[i], scale());
  for (auto& q : cc) q.canonicalize();
  return CentralElement::from_class_coords(g_, cc);
}

bool CentralLattice::contains(const CentralElement& x) const {
  auto v = encode(x);
  return v && lat_.contains(*v);
}

bool CentralLattice::contains(const CentralLattice& sub) const {
  if (sub.g_ != g_) throw std::invalid_argument("lattices over different groups");
  return lat_.contains(sub.lat_);
}

std::vector<CentralElement> CentralLattice::basis_elements() const {
  std::vector<CentralElement> out;
  for (const auto& b : lat_.basis()) out.push_back(decode(b));
  return out;
}

bool CentralLattice::add_coords(const IntMat& coords) {
  if (coords.empty()) return false;
  IntMat g = lat_.basis();
  g.insert(g.end(), coords.begin(), coords.end());
  IntLattice next = hnf(g, lat_.ambient_rank());
  bool grew = next != lat_;
  lat_ = std::move(next);
  return grew;
}

bool CentralLattice::add(const std::vector<CentralElement>& gens) {
  IntMat coords;
  for (const auto& x : gens) {
    auto v = encode(x);
    if (!v) throw InternalError("generator is not an element of the maximal order of the centre");
    coords.push_back(std::move(*v));
  }
  return add_coords(coords);
}

CentralLattice CentralLattice::hash() const {
  IntMat rows;
  for (const auto& b : lat_.basis()) {
    IntVec v(b.size());
    for (std::size_t c = 0; c < b.size(); ++c) v[g_->inverse_class(static_cast<int>(c))] = b[c];
    rows.push_back(std::move(v));
  }
  CentralLattice out = from_coords(g_, rows);
  out.stable = stable;
  out.exact = exact;
  out.provenance = provenance;
  out.provenance.push_back("hash involution");
  return out;
}

CentralLattice operator*(const CentralLattice& a, const CentralLattice& b) {
  if (a.g_ != b.g_) throw std::invalid_argument("lattices over different groups");
  auto ea = a.basis_elements();
  auto eb = b.basis_elements();
  std::vector<CentralElement> prods;
  for (const auto& x : ea)
    for (const auto& y : eb) prods.push_back(x * y);
  CentralLattice out = CentralLattice::from_elements(a.g_, prods);
  out.exact = a.exact && b.exact;
  out.stable = a.stable && b.stable;
  return out;
}

// ---------------------------------------------------------------- xi

CentralLattice group_ring_image(const GroupPtr& g) {
  IntMat rows;
  for (int h = 0; h < g->order(); ++h) {
    IntVec v(g->num_classes(), 0);
    v[g->class_of(h)] = g->order();
    rows.push_back(std::move(v));
  }
  CentralLattice L = CentralLattice::from_coords(g, rows);
  L.provenance.push_back("image of Z[G]");
  return L;
}

namespace {

CentralElement checked_nrd(const GroupAlgebraMatrix& m) {
  CentralElement n = nrd(m);
  if (!n.is_algebraic_integer()) throw InternalError("reduced norm of an integral matrix is not integral");
  return n;
}

// Adds products of basis elements until the lattice is multiplicatively closed.
void close_under_products(CentralLattice& L, int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    auto basis = L.basis_elements();
    std::vector<CentralElement> prods;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) prods.push_back(basis[i] * basis[j]);
    if (!L.add(prods)) return;
  }
}

CentralLattice xi_compute(const GroupPtr& g, const Budget& budget) {
  if (g->is_abelian()) {
    CentralLattice L = group_ring_image(g);
    L.exact = true;
    L.stable = true;
    return L;
  }
  CentralLattice L(g);
  std::vector<CentralElement> gens{CentralElement::one(g)};
  for (int h = 1; h < g->order(); ++h) {
    GroupAlgebraMatrix m(g, 1, 1);
    m(0, 0) = GroupAlgebraElement::basis(g, h);
    gens.push_back(checked_nrd(m));
  }
  L.add(gens);
  L.provenance.push_back("Nrd of group elements");
  const long h = budget.height;
  for (int round = 1; round <= budget.rounds; ++round) {
    IntLattice before = L.lattice();
    std::vector<CentralElement> found;
    if (round == 1) {
      for (int e = 1; e < g->order(); ++e)
        for (long a = -h; a <= h; ++a)
          for (long b = -h; b <= h; ++b) {
            if (b == 0) continue;
            GroupAlgebraMatrix m(g, 1, 1);
            m(0, 0)[0] = a;
            m(0, 0)[e] = b;
            found.push_back(checked_nrd(m));
          }
    }
    Rng rng(budget.seed, static_cast<std::uint64_t>(round));
    for (int s = 0; s < budget.samples; ++s) {
      found.push_back(checked_nrd(random_matrix(g, 1, 1, rng, h, 3)));
      if (budget.max_size >= 2) found.push_back(checked_nrd(random_matrix(g, 2, 2, rng, h, 2)));
    }
    std::size_t base = found.size();
    for (std::size_t i = 0; i < base; ++i) found.push_back(hash_involution(found[i]));
    L.add(found);
    close_under_products(L, 4);
    L.provenance.push_back("round " + std::to_string(round) + ": " + std::to_string(base) + " reduced norms");
    if (round >= 2 && L.lattice() == before) {
      L.stable = true;
      break;
    }
  }
  return L;
}

}  // namespace

CentralLattice xi_approx(const GroupPtr& g, const Budget& budget) {
  static std::mutex mu;
  static std::map<std::string, CentralLattice> cache;
  const std::string key = g->name() + "|" + budget.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CentralLattice L = xi_compute(g, budget);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, L);
  return L;
}

// ---------------------------------------------------------------- delta

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertifiedNo:
      return "certified-no";
    case Verdict::PassedBudget:
      return "passed-budget";
    case Verdict::ExactYes:
      return "exact-yes";
  }
  return "unknown";
}

DeltaResult delta_check(const CentralElement& x, const Budget& budget) {
  const GroupPtr& g = x.group();
  DeltaResult res;
  GroupAlgebraMatrix one = GroupAlgebraMatrix::identity(g, 1);
  if (!x.is_galois_consistent()) {
    res.verdict = Verdict::CertifiedNo;
    res.reason = "tuple does not lie in the centre of Q[G]";
    res.witness = one;
    return res;
  }
  GroupAlgebraElement y = x.to_group_algebra();
  res.checked = 1;
  if (!is_integral(y)) {
    res.verdict = Verdict::CertifiedNo;
    res.reason = "x * I* is not integral";
    res.witness = one;
    return res;
  }
  if (g->is_abelian()) {
    res.verdict = Verdict::ExactYes;
    res.reason = "commutative: delta equals Z[G]";
    return res;
  }
  auto test = [&](const GroupAlgebraMatrix& m) {
    ++res.checked;
    GroupAlgebraMatrix s = adjoint_star(m);
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (std::size_t j = 0; j < s.cols(); ++j)
        if (!is_integral(y * s(i, j))) {
          res.verdict = Verdict::CertifiedNo;
          res.reason = "x * M* is not integral";
          res.witness = m;
          return false;
        }
    return true;
  };
  const long h = budget.height;
  for (int e = 1; e < g->order(); ++e)
    for (long a = -h; a <= h; ++a)
      for (long b = -h; b <= h; ++b) {
        if (b == 0) continue;
        GroupAlgebraMatrix m(g, 1, 1);
        m(0, 0)[0] = a;
        m(0, 0)[e] = b;
        if (!test(m)) return res;
      }
  for (int round = 1; round <= budget.rounds; ++round) {
    Rng rng(budget.seed ^ 0x5eedULL, static_cast<std::uint64_t>(round));
    for (int s = 0; s < budget.samples; ++s) {
      if (!test(random_matrix(g, 1, 1, rng, h, 3))) return res;
      if (budget.max_size >= 2 && !test(random_matrix(g, 2, 2, rng, h, 2))) return res;
    }
  }
  res.verdict = Verdict::PassedBudget;
  res.reason = "all enumerated adjoints integral";
  return res;
}

DeltaResult delta_check(const GroupAlgebraElement& x, const Budget& budget) {
  if (!is_central(x)) {
    DeltaResult res;
    res.verdict = Verdict::CertifiedNo;
    res.reason = "element is not central";
    res.witness = GroupAlgebraMatrix::identity(x.group(), 1);
    res.checked = 1;
    return res;
  }
  return delta_check(CentralElement::from_group_algebra(x), budget);
}

// ---------------------------------------------------------------- Fitting invariants

namespace {

using Column = std::vector<GroupAlgebraElement>;

std::vector<Column> replacement_pool(const GroupPtr& g, std::size_t rows, const Budget& budget) {
  std::vector<Column> pool;
  const int reps = g->is_abelian() ? 1 : g->order();
  for (std::size_t i = 0; i < rows; ++i)
    for (int h = 0; h < reps; ++h) {
      Column c(rows, GroupAlgebraElement(g));
      c[i] = GroupAlgebraElement::basis(g, h);
      pool.push_back(std::move(c));
    }
  if (!g->is_abelian() && budget.pool_extra > 0) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = i + 1; j < rows; ++j) {
        Column c(rows, GroupAlgebraElement(g));
        c[i] = GroupAlgebraElement::one(g);
        c[j] = GroupAlgebraElement::one(g);
        pool.push_back(std::move(c));
      }
  }
  return pool;
}

}  // namespace

CentralLattice fit_matrix(const GroupAlgebraMatrix& m, int a, const Budget& budget) {
  return fit_matrix(m, a, budget, xi_approx(m.group(), budget));
}

CentralLattice fit_matrix(const GroupAlgebraMatrix& m, int a, const Budget& budget, const CentralLattice& xi) {
  if (a < 0) throw std::invalid_argument("fit_matrix: a must be nonnegative");
  if (m.rows() < m.cols()) throw std::invalid_argument("fit_matrix: needs rows >= cols");
  if (!m.is_integral()) throw std::invalid_argument("fit_matrix: matrix must be integral");
  const GroupPtr& g = m.group();
  const std::size_t d = m.cols(), dp = m.rows();
  auto pool = replacement_pool(g, dp, budget);
  std::vector<CentralElement> gens;
  bool complete = true;
  long minors = 0;
  const std::size_t tmax = std::min<std::size_t>(static_cast<std::size_t>(a), d);
  for (std::size_t t = 0; t <= tmax && complete; ++t) {
    for_each_subset(d, t, [&](const std::vector<std::size_t>& J) {
      for_each_subset(pool.size(), t, [&](const std::vector<std::size_t>& P) {
        GroupAlgebraMatrix n = m;
        for (std::size_t q = 0; q < t; ++q)
          for (std::size_t i = 0; i < dp; ++i) n(i, J[q]) = pool[P[q]][i];
        std::vector<std::size_t> all_cols(d);
        for (std::size_t j = 0; j < d; ++j) all_cols[j] = j;
        for_each_subset(dp, d, [&](const std::vector<std::size_t>& R) {
          if (++minors > budget.max_minors) {
            complete = false;
            return false;
          }
          gens.push_back(nrd(n.select(R, all_cols)));
          return true;
        });
        return complete;
      });
      return complete;
    });
  }
  CentralLattice span = CentralLattice::from_elements(g, gens);
  CentralLattice out = span * xi;
  out.exact = xi.exact && complete && (g->is_abelian() || a == 0);
  out.stable = xi.stable;
  out.provenance.push_back("Fit^" + std::to_string(a) + ": " + std::to_string(gens.size()) + " reduced-norm minors" +
                           (complete ? "" : " (minor budget exhausted)") +
                           (g->is_abelian() || a == 0 ? "" : "; replacement pool restricted"));
  return out;
}

namespace {

GroupAlgebraElement leibniz_det(const std::vector<std::vector<GroupAlgebraElement>>& m) {
  const std::size_t k = m.size();
  const GroupPtr& g = m[0][0].group();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i) perm[i] = i;
  GroupAlgebraElement sum(g);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    GroupAlgebraElement term = GroupAlgebraElement::one(g);
    for (std::size_t i = 0; i < k; ++i) term = term * m[i][perm[i]];
    if (sign > 0) sum += term;
    else sum -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

CentralLattice fit_classical_oracle(const GroupAlgebraMatrix& m, int a) {
  const GroupPtr& g = m.group();
  if (!g->is_abelian()) throw std::invalid_argument("fit_classical_oracle: abelian groups only");
  if (a < 0) throw std::invalid_argument("fit_classical_oracle: a must be nonnegative");
  const long k = static_cast<long>(m.cols()) - a;
  if (k <= 0) {
    CentralLattice L = group_ring_image(g);
    L.exact = true;
    L.stable = true;
    return L;
  }
  IntMat rows;
  auto ks = static_cast<std::size_t>(k);
  for_each_subset(m.rows(), ks, [&](const std::vector<std::size_t>& R) {
    for_each_subset(m.cols(), ks, [&](const std::vector<std::size_t>& C) {
      std::vector<std::vector<GroupAlgebraElement>> sub(ks);
      for (std::size_t i = 0; i < ks; ++i)
        for (std::size_t j = 0; j < ks; ++j) sub[i].push_back(m(R[i], C[j]));
      GroupAlgebraElement minor = leibniz_det(sub);
      for (int h = 0; h < g->order(); ++h) {
        GroupAlgebraElement x = GroupAlgebraElement::basis(g, h) * minor;
        IntVec v(g->num_classes(), 0);
        for (int e = 0; e < g->order(); ++e) {
          if (x[e].get_den() != 1) throw std::invalid_argument("fit_classical_oracle: matrix must be integral");
          v[g->class_of(e)] += x[e].get_num() * g->order();
        }
        rows.push_back(std::move(v));
      }
      return true;
    });
    return true;
  });
  CentralLattice L = CentralLattice::from_coords(g, rows);
  L.exact = true;
  L.stable = true;
  L.provenance.push_back("classical minors of size " + std::to_string(k));
  return L;
}

CentralLattice fit_transpose(const GroupAlgebraMatrix& m, int a, const Budget& budget) {
  return fit_transpose(m, a, budget, xi_approx(m.group(), budget));
}

CentralLattice fit_transpose(const GroupAlgebraMatrix& m, int a, const Budget& budget, const CentralLattice& xi) {
  GroupAlgebraMatrix t = hash_transpose(m);
  if (t.rows() < t.cols()) t = vconcat(t, GroupAlgebraMatrix(m.group(), t.cols() - t.rows(), t.cols()));
  return fit_matrix(t, a, budget, xi);
}

// ---------------------------------------------------------------- annihilation

IntMat left_multiplication_matrix(const GroupAlgebraMatrix& m) {
  const GroupPtr& g = m.group();
  const int n = g->order();
  IntMat R(m.rows() * n, IntVec(m.cols() * n, 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (int h = 0; h < n; ++h) {
      IntVec& row = R[i * n + h];
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const auto& e = m(i, j);
        for (int x = 0; x < n; ++x) {
          if (sgn(e[x]) == 0) continue;
          if (e[x].get_den() != 1) throw std::invalid_argument("matrix must be integral");
          row[j * n + g->mul(h, x)] += e[x].get_num();
        }
      }
    }
  return R;
}

AnnihilationResult annihilation_check(const GroupAlgebraMatrix& m, const CentralElement& x) {
  if (m.rows() != m.cols()) throw std::invalid_argument("annihilation_check: matrix must be square");
  if (!m.is_integral()) throw std::invalid_argument("annihilation_check: matrix must be integral");
  const GroupPtr& g = m.group();
  AnnihilationResult res;
  res.nrd = nrd(m);
  if (!res.nrd.invertible()) throw std::invalid_argument("annihilation_check: cokernel is infinite");
  CentralElement prod = x * res.nrd;
  try {
    res.y = prod.to_group_algebra();
  } catch (const std::domain_error&) {
    throw std::invalid_argument("annihilation_check: x * Nrd(M) is not central");
  }
  if (!is_integral(res.y)) throw std::invalid_argument("annihilation_check: x * Nrd(M) is not integral");
  IntMat R = left_multiplication_matrix(m);
  IntLattice image = hnf(R, R.empty() ? 0 : R.front().size());
  auto snf = smith_normal_form(R);
  for (const auto& d : snf.invariants)
    if (d != 1) res.invariants.push_back(d);
  const int n = g->order();
  res.annihilates = true;
  for (std::size_t j = 0; j < m.cols() && res.annihilates; ++j)
    for (int h = 0; h < n; ++h) {
      GroupAlgebraElement v = res.y * GroupAlgebraElement::basis(g, h);
      IntVec vec(m.cols() * n, 0);
      for (int e = 0; e < n; ++e) vec[j * n + e] = v[e].get_num();
      if (!image.contains(vec)) {
        res.annihilates = false;
        break;
      }
    }
  return res;
}

}  // namespace galg
