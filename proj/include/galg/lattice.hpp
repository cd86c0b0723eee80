#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "galg/arith.hpp"

namespace galg {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;

// Integer lattice with its basis in row-style Hermite normal form.
class IntLattice {
 public:
  IntLattice() = default;
  explicit IntLattice(std::size_t ambient_rank) : n_(ambient_rank) {}

  std::size_t ambient_rank() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const IntVec& v) const;
  // Membership in the localization at p: coefficients may carry prime-to-p denominators.
  bool contains(const std::vector<Rational>& v, std::optional<long> p = std::nullopt) const;
  bool contains(const IntLattice& sub) const;

  // Index in Z^n when of full rank, otherwise 0.
  Integer index() const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const IntLattice& a, const IntLattice& b) { return !(a == b); }

 private:
  friend IntLattice hnf(const IntMat& generators, std::size_t ambient_rank);
  std::size_t n_ = 0;
  IntMat basis_;
  std::vector<std::size_t> pivots_;
};

IntLattice hnf(const IntMat& generators, std::size_t ambient_rank);
IntLattice hnf(const IntMat& generators);
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

struct SmithResult {
  IntVec invariants;  // min(rows, cols) diagonal entries, each dividing the next
  IntMat U;           // rows x rows, unimodular
  IntMat V;           // cols x cols, unimodular
};

SmithResult smith_normal_form(const IntMat& m);

IntMat int_mat_mul(const IntMat& a, const IntMat& b);

}  // namespace galg
