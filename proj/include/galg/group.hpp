#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "galg/arith.hpp"
#include "galg/matrix.hpp"

namespace galg {

struct IrreducibleRep {
  int degree = 0;
  std::vector<Mat<CycloNum>> matrices;  // indexed by element label
  std::vector<CycloNum> character;      // indexed by element label
};

// Multiplication-table group with its catalog of irreducible representations.
// Element 0 is the identity.
class FiniteGroup {
 public:
  const std::string& name() const { return name_; }
  int order() const { return order_; }
  long exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const { return elem_order_[a]; }

  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  // Index of the class containing the inverses of class c.
  int inverse_class(int c) const { return inverse_class_[c]; }

  const std::vector<IrreducibleRep>& irreps() const { return irreps_; }
  int num_irreps() const { return static_cast<int>(irreps_.size()); }
  int degree(int chi) const { return irreps_[chi].degree; }
  const CycloNum& character(int chi, int g) const { return irreps_[chi].character[g]; }

  // Index of the contragredient of chi.
  int dual_index(int chi) const { return dual_[chi]; }
  // Index of the conjugate sigma_a(chi), for a coprime to the exponent.
  int galois_index(long a, int chi) const;
  const std::vector<long>& galois_residues() const { return residues_; }

 private:
  friend class GroupBuilder;
  std::string name_;
  int order_ = 0;
  long exponent_ = 1;
  bool abelian_ = true;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<int> inverse_class_;
  std::vector<IrreducibleRep> irreps_;
  std::vector<int> dual_;
  std::vector<long> residues_;
  std::map<long, std::vector<int>> galois_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Names: Cn, CnxCm, Dn (order 2n, n >= 3), S3, S4, A4, Q8, and any of these
// followed by further cyclic factors "xCm". With params, name is a family
// letter ("C", "D") and params supply the sizes.
GroupPtr group_from_catalog(const std::string& name, const std::vector<int>& params = {});

const std::vector<IrreducibleRep>& irreps(const FiniteGroup& g);

// Representation g -> transpose(rho(g^{-1})).
IrreducibleRep contragredient(const FiniteGroup& g, const IrreducibleRep& rep);

}  // namespace galg
