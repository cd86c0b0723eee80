#include "json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace galg::io {

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const CycloNum& x) {
  json c = json::array();
  for (const auto& q : x.coeffs()) c.push_back(format_rational(q));
  return {{"n", x.conductor()}, {"coeffs", c}, {"text", x.to_string()}};
}

json to_json(const GroupAlgebraElement& x) {
  json o = json::object();
  for (int g = 0; g < x.group()->order(); ++g)
    if (!is_zero(x[g])) o[std::to_string(g)] = format_rational(x[g]);
  return o;
}

json to_json(const GroupAlgebraMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"group", m.group()->name()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

json to_json(const CentralElement& x) {
  json v = json::array();
  for (const auto& c : x.values()) v.push_back(to_json(c));
  json o = {{"group", x.group()->name()}, {"values", v}};
  if (x.is_galois_consistent()) {
    json cc = json::array();
    for (const auto& q : x.class_coords()) cc.push_back(format_rational(q));
    o["class_coords"] = cc;
  }
  return o;
}

json to_json(const CentralLattice& l) {
  json basis = json::array();
  for (const auto& row : l.lattice().basis()) {
    json r = json::array();
    for (const auto& z : row) r.push_back(z.get_str());
    basis.push_back(r);
  }
  json prov = l.provenance;
  return {{"group", l.group()->name()},
          {"scale", l.scale()},
          {"rank", l.lattice().rank()},
          {"hnf_basis", basis},
          {"stable", l.stable},
          {"exact", l.exact},
          {"provenance", prov}};
}

json to_json(const WedgeData& w) {
  json comps = json::array();
  for (std::size_t chi = 0; chi < w.coords.size(); ++chi) {
    json nz = json::array();
    const auto n = static_cast<std::size_t>(w.group->degree(static_cast<int>(chi)));
    auto subsets = all_subsets(w.k * n, w.r * n);
    for (std::size_t i = 0; i < w.coords[chi].size(); ++i)
      if (!w.coords[chi][i].is_zero()) nz.push_back({{"subset", subsets[i]}, {"value", to_json(w.coords[chi][i])}});
    comps.push_back({{"chi", chi}, {"degree", n}, {"nonzero", nz}});
  }
  return {{"group", w.group->name()}, {"k", w.k}, {"r", w.r}, {"components", comps}};
}

json to_json(const ModuleVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const GradedInvertible& x) {
  return {{"generator", to_json(x.gen)}, {"grading", x.grading}, {"dual", x.dual}};
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

CycloNum cyclo_from_json(const json& j) {
  if (j.is_object()) {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    return cyclo_make(j.at("n").get<long>(), c);
  }
  return CycloNum(rational_from_json(j));
}

GroupAlgebraElement element_from_json(const GroupPtr& g, const json& j) {
  GroupAlgebraElement x(g);
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      int label = std::stoi(it.key());
      if (label < 0 || label >= g->order()) throw std::invalid_argument("group element label out of range");
      x[label] = rational_from_json(it.value());
    }
  } else if (j.is_array()) {
    if (static_cast<int>(j.size()) != g->order()) throw std::invalid_argument("coefficient array length differs from |G|");
    for (int h = 0; h < g->order(); ++h) x[h] = rational_from_json(j[h]);
  } else {
    x[0] = rational_from_json(j);
  }
  return x;
}

GroupAlgebraMatrix matrix_from_json(const GroupPtr& g, const json& j) {
  const json& rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("matrix needs at least one row");
  const std::size_t nr = rows.size(), nc = rows[0].size();
  if (nc == 0) throw std::invalid_argument("matrix needs at least one column");
  GroupAlgebraMatrix m(g, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < nc; ++k) m(i, k) = element_from_json(g, rows[i][k]);
  }
  return m;
}

ModuleVector vector_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("module vector must be an array");
  ModuleVector v;
  for (const auto& x : j) v.push_back(element_from_json(g, x));
  return v;
}

std::vector<ModuleVector> vectors_from_json(const GroupPtr& g, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of module vectors");
  std::vector<ModuleVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(g, v));
  return out;
}

CentralElement central_from_json(const GroupPtr& g, const json& j) {
  if (j.is_object() && j.contains("class_coords")) {
    std::vector<Rational> c;
    for (const auto& x : j.at("class_coords")) c.push_back(rational_from_json(x));
    if (static_cast<int>(c.size()) != g->num_classes()) throw std::invalid_argument("class coordinate count");
    return CentralElement::from_class_coords(g, c);
  }
  const json& vals = j.is_object() ? j.at("values") : j;
  if (!vals.is_array() || static_cast<int>(vals.size()) != g->num_irreps())
    throw std::invalid_argument("central element needs one value per irreducible character");
  std::vector<CycloNum> v;
  for (const auto& x : vals) v.push_back(cyclo_from_json(x));
  return CentralElement(g, v);
}

json load_argument(const std::string& text) {
  try {
    if (!text.empty() && text[0] == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw std::invalid_argument("cannot open " + text.substr(1));
      return json::parse(in);
    }
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace galg::io
