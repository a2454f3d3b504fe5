#pragma once

#include "json.hpp"

#include "spinkin/linalg.hpp"

namespace spinkin {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// [re, im]
Json to_json(Complex z);

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json to_json(const ComplexMatrix& m);

/// List of [re, im] pairs.
Json to_json(const ComplexVector& v);

Json to_json(const Vec3& v);

/// Inverse of to_json(ComplexMatrix). Throws DimensionError on a malformed
/// document.
ComplexMatrix matrix_from_json(const Json& j);

Complex complex_from_json(const Json& j);

}  // namespace spinkin
