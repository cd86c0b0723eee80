#pragma once

#include <vector>

#include "galg/exterior.hpp"

namespace galg {

// Invertible graded object: the xi-span of one generator wedge, with a per-character grading.
// Dual objects carry the coordinates of the dual generator.
struct GradedInvertible {
  ExteriorElement gen;
  std::vector<int> grading;
  bool dual = false;

  const GroupPtr& group() const { return gen.group; }
};

bool operator==(const GradedInvertible& a, const GradedInvertible& b);

GradedInvertible det_unit(const GroupPtr& g);
// Rows of `basis` form a basis of A^r.
GradedInvertible det_free(const GroupAlgebraMatrix& basis);

GradedInvertible tensor(const GradedInvertible& x, const GradedInvertible& y);
// Per-character sign (-1)^{alpha beta}.
CentralElement swap_sign(const GradedInvertible& x, const GradedInvertible& y);
// Checks that the block swap A^a + A^b -> A^b + A^a sends x (x) y to sign * (y (x) x).
bool swap_commutes(const GradedInvertible& x, const GradedInvertible& y);
GradedInvertible scale(const CentralElement& c, const GradedInvertible& x);

// Top-degree objects only.
GradedInvertible inverse(const GradedInvertible& x);
CentralElement evaluate(const GradedInvertible& dual, const GradedInvertible& x);

struct SesIso {
  CentralElement factor;      // wedge of the P2 basis maps to factor * (wedge b1 (x) wedge b3)
  GradedInvertible source;    // det of P2 on its standard basis
  GradedInvertible image;     // factor * (det P1 (x) det P3), or det P3 (x) det P1 when swapped
};

// P1 -theta-> P2 -phi-> P3 with row vectors (x -> x theta), section s: P3 -> P2 with s phi = 1.
SesIso ses_iso(const GroupAlgebraMatrix& theta, const GroupAlgebraMatrix& phi, const GroupAlgebraMatrix& section,
               bool swapped = false);

// Nrd of x -> x (1 - P_K) theta + x P_K c Q, where P_K projects onto ker(theta) and Q onto a
// complement of im(theta) along im(theta).
CentralElement two_term_nrd(const GroupAlgebraMatrix& theta, const GroupAlgebraMatrix& ker_proj,
                            const GroupAlgebraMatrix& cok_proj, const GroupAlgebraMatrix& comparison);

}  // namespace galg
