#pragma once

#include <string>
#include <vector>

#include "galg/fitting.hpp"
#include "galg/group_algebra.hpp"

namespace galg {

using ModuleVector = std::vector<GroupAlgebraElement>;  // element of A^k

// Per-character coordinates in the wedge power of the split module E^{k chi(1)},
// indexed by ascending (r chi(1))-subsets in lexicographic order. Split index of
// v*_j (x) b_i is i * chi(1) + j.
struct WedgeData {
  GroupPtr group;
  int k = 0;
  int r = 0;
  std::vector<std::vector<CycloNum>> coords;

  std::size_t size(int chi) const { return coords[chi].size(); }
  bool is_zero() const;
  bool is_zero_at(int chi) const;
};

bool operator==(const WedgeData& a, const WedgeData& b);
inline bool operator!=(const WedgeData& a, const WedgeData& b) { return !(a == b); }

struct ExteriorElement : WedgeData {};
struct HomWedge : WedgeData {};

std::size_t binomial(std::size_t n, std::size_t k);
std::vector<std::vector<std::size_t>> all_subsets(std::size_t n, std::size_t k);
std::size_t subset_rank(std::size_t n, const std::vector<std::size_t>& s);

// Split rows v*_j (x) m (rows) and split functionals v_j (x) phi (columns).
Mat<CycloNum> split_element(const ModuleVector& m, int chi);
Mat<CycloNum> split_hom(const ModuleVector& f, int chi);

ExteriorElement wedge_elements(const GroupPtr& g, int k, const std::vector<ModuleVector>& elems);
HomWedge wedge_homs(const GroupPtr& g, int k, const std::vector<ModuleVector>& homs);
ExteriorElement zero_exterior(const GroupPtr& g, int k, int r);
ExteriorElement top_wedge(const GroupPtr& g, int k);

// Contraction: the first listed functional is applied first.
ExteriorElement pair(const HomWedge& hw, const ExteriorElement& xe);
CentralElement to_central(const ExteriorElement& xe);
ExteriorElement scale(const CentralElement& c, const ExteriorElement& xe);
ExteriorElement operator+(const ExteriorElement& a, const ExteriorElement& b);

// Hom values phi(m) = sum_l m_l f_l.
GroupAlgebraElement hom_apply(const ModuleVector& f, const ModuleVector& m);
// Functoriality: the map m -> m * phi applied to a wedge (phi is k x k').
ExteriorElement apply_map(const ExteriorElement& xe, const GroupAlgebraMatrix& phi);
// Rows of the dual basis homs for a basis given by the rows of b.
std::vector<ModuleVector> dual_basis_homs(const GroupAlgebraMatrix& b);
std::vector<ModuleVector> matrix_rows(const GroupAlgebraMatrix& m);

// Coordinates (wedge of b*_sigma)(x) over ascending r-subsets sigma of {0..d-1}.
std::vector<CentralElement> theta_b(const ExteriorElement& xe, int d);
std::vector<CentralElement> theta_b(const ExteriorElement& xe, const GroupAlgebraMatrix& basis);
ExteriorElement theta_b_section(const GroupPtr& g, int d, int r, const std::vector<CentralElement>& c);
ExteriorElement theta_b_section(const GroupAlgebraMatrix& basis, int r, const std::vector<CentralElement>& c);
// Dimension comparison binomial(d chi(1), r chi(1)) == binomial(d, r) for every chi.
bool theta_b_bijective(const FiniteGroup& g, int d, int r);

struct RubinResult {
  Verdict verdict = Verdict::PassedBudget;
  std::string reason;
  std::vector<ModuleVector> witness;
  CentralElement witness_value;
  int tried = 0;
};

RubinResult rubin_membership(const ExteriorElement& xe, const std::vector<ModuleVector>& lattice_gens, int r,
                             const CentralLattice& xi, const Budget& budget);

ExteriorElement epsilon_M(const GroupAlgebraMatrix& m);
// Every split column functional of m contracts the element to zero.
bool in_kernel_wedge(const ExteriorElement& xe, const GroupAlgebraMatrix& m);
// dim of the split kernel of x -> x * rho_chi(m).
int split_kernel_dim(const GroupAlgebraMatrix& m, int chi);

}  // namespace galg
