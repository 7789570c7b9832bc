#pragma once

// JSON encodings. Elements: an integer for prime fields, an array of m
// coefficients (constant term first) otherwise. Points: [x, y] or "O".
// Matrices: arrays of rows.

#include <json.hpp>

#include "ellidh/elliptic_curve.hpp"
#include "ellidh/linalg.hpp"

namespace ellidh {

using Json = nlohmann::json;

Json element_to_json(const Field& f, Elem e);
/// Accepts an integer (reduced mod p) or a coefficient array of length m.
Elem element_from_json(const Field& f, const Json& j);

Json vector_to_json(const Field& f, const Vector& v);
Vector vector_from_json(const Field& f, const Json& j);
Json matrix_to_json(const Field& f, const Matrix& m);

Json point_to_json(const Field& f, const CurvePoint& p);
CurvePoint point_from_json(const Field& f, const Json& j);

/// {"p": .., "m": .., "modulus": [...]}; m and modulus optional.
FieldPtr field_from_json(const Json& j);
Json field_to_json(const Field& f);

}  // namespace ellidh
