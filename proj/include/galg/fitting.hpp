#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galg/budget.hpp"
#include "galg/group_algebra.hpp"
#include "galg/lattice.hpp"

namespace galg {

// Integer lattice of central elements, stored in class-sum coordinates
// scaled by |G| (the maximal order of the centre lies in |G|^{-1} Z[G]).
class CentralLattice {
 public:
  CentralLattice() = default;
  explicit CentralLattice(GroupPtr g);

  static CentralLattice from_elements(const GroupPtr& g, const std::vector<CentralElement>& gens);
  static CentralLattice from_coords(const GroupPtr& g, const IntMat& scaled_coords);
  static CentralLattice unit(const GroupPtr& g);

  const GroupPtr& group() const { return g_; }
  const IntLattice& lattice() const { return lat_; }
  long scale() const { return g_->order(); }

  // Scaled class coordinates, or nullopt when x is not representable.
  std::optional<IntVec> encode(const CentralElement& x) const;
  CentralElement decode(const IntVec& v) const;

  bool contains(const CentralElement& x) const;
  bool contains(const CentralLattice& sub) const;
  std::vector<CentralElement> basis_elements() const;
  // Adds generators; returns true when the lattice grew.
  bool add(const std::vector<CentralElement>& gens);
  bool add_coords(const IntMat& coords);

  CentralLattice hash() const;
  friend CentralLattice operator*(const CentralLattice& a, const CentralLattice& b);
  friend bool operator==(const CentralLattice& a, const CentralLattice& b) {
    return a.g_ == b.g_ && a.lat_ == b.lat_;
  }
  friend bool operator!=(const CentralLattice& a, const CentralLattice& b) { return !(a == b); }

  bool stable = false;
  bool exact = false;
  std::vector<std::string> provenance;

 private:
  GroupPtr g_;
  IntLattice lat_;
};

// Sound under-approximation of the Whitehead order; exact for abelian groups.
CentralLattice xi_approx(const GroupPtr& g, const Budget& budget);
// Image of Z[G] in the centre (abelian groups only).
CentralLattice group_ring_image(const GroupPtr& g);

enum class Verdict { CertifiedNo, PassedBudget, ExactYes };
std::string verdict_name(Verdict v);

struct DeltaResult {
  Verdict verdict = Verdict::PassedBudget;
  std::string reason;
  std::optional<GroupAlgebraMatrix> witness;
  int checked = 0;
};

DeltaResult delta_check(const CentralElement& x, const Budget& budget);
DeltaResult delta_check(const GroupAlgebraElement& x, const Budget& budget);

CentralLattice fit_matrix(const GroupAlgebraMatrix& m, int a, const Budget& budget);
CentralLattice fit_matrix(const GroupAlgebraMatrix& m, int a, const Budget& budget, const CentralLattice& xi);
CentralLattice fit_classical_oracle(const GroupAlgebraMatrix& m, int a);
CentralLattice fit_transpose(const GroupAlgebraMatrix& m, int a, const Budget& budget);
CentralLattice fit_transpose(const GroupAlgebraMatrix& m, int a, const Budget& budget, const CentralLattice& xi);

struct AnnihilationResult {
  bool annihilates = false;
  IntVec invariants;  // non-unit Smith invariants of the cokernel
  CentralElement nrd;
  GroupAlgebraElement y;
};

AnnihilationResult annihilation_check(const GroupAlgebraMatrix& m, const CentralElement& x);

// Integer matrix of v -> v * M on A^rows with Z-basis (slot i, element g).
IntMat left_multiplication_matrix(const GroupAlgebraMatrix& m);

}  // namespace galg
