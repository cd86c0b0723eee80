#pragma once

#include "galg/exterior.hpp"
#include "galg/sampling.hpp"

#include <ostream>
#include <type_traits>

namespace galg {

// Readable gtest failure messages.
inline void PrintTo(const CycloNum& x, std::ostream* os) { *os << x.to_string(); }

inline void PrintTo(const CentralElement& x, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < x.values().size(); ++i) *os << (i ? ", " : "") << x.values()[i].to_string();
  *os << ")";
}

template <class R>
void PrintTo(const GroupRingElement<R>& x, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    *os << (i ? ", " : "");
    if constexpr (std::is_same_v<R, CycloNum>) *os << x.coeffs()[i].to_string();
    else *os << x.coeffs()[i].get_str();
  }
  *os << "]";
}

inline void PrintTo(const WedgeData& w, std::ostream* os) {
  for (std::size_t chi = 0; chi < w.coords.size(); ++chi) {
    *os << (chi ? " | " : "");
    for (std::size_t i = 0; i < w.coords[chi].size(); ++i) *os << (i ? ", " : "") << w.coords[chi][i].to_string();
  }
}

}  // namespace galg

namespace galg::testing {

inline GroupAlgebraElement elt(const GroupPtr& g, std::initializer_list<std::pair<int, long>> terms) {
  GroupAlgebraElement x(g);
  for (auto [label, c] : terms) x[label] += Rational(c);
  return x;
}

inline GroupAlgebraMatrix mat1(const GroupAlgebraElement& x) {
  GroupAlgebraMatrix m(x.group(), 1, 1);
  m(0, 0) = x;
  return m;
}

inline CentralElement central(const GroupPtr& g, std::initializer_list<long> values) {
  std::vector<CycloNum> v;
  for (long x : values) v.emplace_back(x);
  return CentralElement(g, v);
}

// First element of the given order whose linear characters take the given values.
inline int find_element(const GroupPtr& g, int order, const std::vector<std::pair<int, long>>& char_values = {}) {
  for (int h = 0; h < g->order(); ++h) {
    if (g->element_order(h) != order) continue;
    bool ok = true;
    for (auto [chi, v] : char_values) ok = ok && g->character(chi, h) == CycloNum(v);
    if (ok) return h;
  }
  return -1;
}

}  // namespace galg::testing
