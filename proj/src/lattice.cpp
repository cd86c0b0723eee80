#include "galg/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace galg {

namespace {

void row_axpy(IntVec& dst, const Integer& q, const IntVec& src) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace

IntLattice hnf(const IntMat& generators, std::size_t n) {
  IntMat rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("hnf: generator length differs from ambient rank");
    bool nz = std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; });
    if (nz) rows.push_back(g);
  }
  IntLattice L(n);
  std::size_t prow = 0;
  for (std::size_t col = 0; col < n && prow < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = prow; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[prow], rows[best]);
      bool clean = true;
      for (std::size_t i = prow + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[prow][col].get_mpz_t());
        row_axpy(rows[i], q, rows[prow]);
        if (rows[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[prow][col] == 0) continue;
    if (rows[prow][col] < 0)
      for (auto& x : rows[prow]) x = -x;
    for (std::size_t i = 0; i < prow; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[prow][col].get_mpz_t());
      if (q != 0) row_axpy(rows[i], q, rows[prow]);
    }
    L.pivots_.push_back(col);
    ++prow;
  }
  rows.resize(prow);
  L.basis_ = std::move(rows);
  return L;
}

IntLattice hnf(const IntMat& generators) {
  if (generators.empty()) return IntLattice(0);
  return hnf(generators, generators.front().size());
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice_sum: rank mismatch");
  IntMat g = a.basis();
  g.insert(g.end(), b.basis().begin(), b.basis().end());
  return hnf(g, a.ambient_rank());
}

bool IntLattice::contains(const IntVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("contains: length mismatch");
  IntVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Integer& p = basis_[i][pivots_[i]];
    if (w[pivots_[i]] == 0) continue;
    if (!mpz_divisible_p(w[pivots_[i]].get_mpz_t(), p.get_mpz_t())) return false;
    Integer q = w[pivots_[i]] / p;
    row_axpy(w, q, basis_[i]);
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return x == 0; });
}

bool IntLattice::contains(const std::vector<Rational>& v, std::optional<long> p) const {
  if (v.size() != n_) throw std::invalid_argument("contains: length mismatch");
  std::vector<Rational> w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (sgn(w[c]) == 0) continue;
    Rational q = w[c] / Rational(basis_[i][c]);
    if (q.get_den() != 1) {
      if (!p) return false;
      if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(*p))) return false;
    }
    for (std::size_t j = 0; j < n_; ++j)
      if (basis_[i][j] != 0) w[j] -= q * basis_[i][j];
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool IntLattice::contains(const IntLattice& sub) const {
  for (const auto& b : sub.basis())
    if (!contains(b)) return false;
  return true;
}

Integer IntLattice::index() const {
  if (basis_.size() != n_) return 0;
  Integer d = 1;
  for (std::size_t i = 0; i < n_; ++i) d *= basis_[i][pivots_[i]];
  return d;
}

IntMat int_mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  const std::size_t k = b.size();
  const std::size_t m = k ? b.front().size() : 0;
  IntMat c(a.size(), IntVec(m, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != k) throw std::invalid_argument("int_mat_mul: shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

SmithResult smith_normal_form(const IntMat& m) {
  const std::size_t r = m.size();
  const std::size_t c = r ? m.front().size() : 0;
  for (const auto& row : m)
    if (row.size() != c) throw std::invalid_argument("smith_normal_form: ragged matrix");
  IntMat A = m;
  IntMat U(r, IntVec(r, 0)), V(c, IntVec(c, 0));
  for (std::size_t i = 0; i < r; ++i) U[i][i] = 1;
  for (std::size_t j = 0; j < c; ++j) V[j][j] = 1;

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(A[a], A[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : A) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  };
  // col_j -= q * col_t
  auto col_axpy = [&](std::size_t j, const Integer& q, std::size_t t) {
    for (auto& row : A) row[j] -= q * row[t];
    for (auto& row : V) row[j] -= q * row[t];
  };

  const std::size_t n = std::min(r, c);
  for (std::size_t t = 0; t < n; ++t) {
    bool zero_rest = false;
    while (true) {
      std::size_t bi = r, bj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (A[i][j] == 0) continue;
          if (bi == r || abs(A[i][j]) < abs(A[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      if (bi == r) {
        zero_rest = true;
        break;
      }
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool done = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (A[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][t].get_mpz_t(), A[t][t].get_mpz_t());
        row_axpy(A[i], q, A[t]);
        row_axpy(U[i], q, U[t]);
        if (A[i][t] != 0) done = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (A[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[t][j].get_mpz_t(), A[t][t].get_mpz_t());
        col_axpy(j, q, t);
        if (A[t][j] != 0) done = false;
      }
      if (!done) continue;
      for (std::size_t i = t + 1; i < r && done; ++i)
        for (std::size_t j = t + 1; j < c; ++j) {
          if (!mpz_divisible_p(A[i][j].get_mpz_t(), A[t][t].get_mpz_t())) {
            for (std::size_t k = 0; k < c; ++k) A[t][k] += A[i][k];
            for (std::size_t k = 0; k < r; ++k) U[t][k] += U[i][k];
            done = false;
            break;
          }
        }
      if (done) break;
    }
    if (zero_rest) break;
    if (A[t][t] < 0) {
      for (auto& x : A[t]) x = -x;
      for (auto& x : U[t]) x = -x;
    }
  }
  SmithResult res;
  res.invariants.resize(n);
  for (std::size_t t = 0; t < n; ++t) res.invariants[t] = A[t][t];
  res.U = std::move(U);
  res.V = std::move(V);
  return res;
}

}  // namespace galg
