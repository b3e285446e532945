#pragma once

#include <json.hpp>

#include "tate/adeles.hpp"
#include "tate/diagram.hpp"
#include "tate/lattice.hpp"
#include "tate/staircase.hpp"

namespace tate {

using json = nlohmann::json;

// The field named by a prime power; extensions use the deterministic
// least-modulus convention.
const FieldInfo* field_from_order(long long q);

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldInfo* f, const json& j);

json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const FieldInfo* f, const json& j);

json laurent_matrix_to_json(const LaurentMatrix& m);
LaurentMatrix laurent_matrix_from_json(const FieldInfo* f, const json& j);

json lattice_to_json(const Lattice& l);
Lattice lattice_from_json(const FieldInfo* f, const json& j, long min_prec = 0);

json field_matrix_to_json(const FieldMatrix& m);
FieldMatrix field_matrix_from_json(const FieldInfo* f, const json& j);

json diagram_to_json(const IndDiagram& d);
IndDiagram ind_diagram_from_json(const FieldInfo* f, const json& j);

json staircase_to_json(const Staircase2& s);
Staircase2 staircase_from_json(const json& j);

RationalFunction rational_function_from_json(const FieldInfo* f, const json& j);

}  // namespace tate
