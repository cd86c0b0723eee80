#pragma once

#include <json.hpp>

#include "galg/detfun.hpp"
#include "galg/exterior.hpp"
#include "galg/fitting.hpp"

namespace galg::io {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

json to_json(const Rational& q);
json to_json(const CycloNum& x);
json to_json(const GroupAlgebraElement& x);
json to_json(const GroupAlgebraMatrix& m);
json to_json(const CentralElement& x);
json to_json(const CentralLattice& l);
json to_json(const WedgeData& w);
json to_json(const ModuleVector& v);
json to_json(const GradedInvertible& x);

Rational rational_from_json(const json& j);
CycloNum cyclo_from_json(const json& j);
// Either {"label": "p/q", ...} or an array of |G| coefficients.
GroupAlgebraElement element_from_json(const GroupPtr& g, const json& j);
// {"rows", "cols", "entries"} or a bare array of rows.
GroupAlgebraMatrix matrix_from_json(const GroupPtr& g, const json& j);
ModuleVector vector_from_json(const GroupPtr& g, const json& j);
std::vector<ModuleVector> vectors_from_json(const GroupPtr& g, const json& j);
// Array of per-character values, or {"class_coords": [...]}.
CentralElement central_from_json(const GroupPtr& g, const json& j);

// Parses inline JSON or reads it from a file when the text starts with '@'.
json load_argument(const std::string& text);

}  // namespace galg::io
