#pragma once

#include <json.hpp>

#include "siegel/spaces.hpp"

namespace siegel {

using Json = nlohmann::json;

/// How numbers in JSON input are interpreted.
///
/// Rational mode accepts integers and "p/q" strings; non-integer JSON numbers
/// are rejected because their decimal text is lost on parsing. Float mode
/// turns every value into a Float carrying `tol`.
struct NumberFormat {
  ScalarMode mode = ScalarMode::Rational;
  double tol = kDefaultTol;
};

Scalar scalar_from_json(const Json& j, const NumberFormat& fmt = {});
/// Rational as a "p/q" (or "p") string, Float as a JSON number.
Json to_json(const Scalar& s);

Matrix matrix_from_json(const Json& j, const NumberFormat& fmt = {});
Json to_json(const Matrix& m);

/// {"re": matrix, "im": matrix}.
ComplexMatrix complex_from_json(const Json& j, const NumberFormat& fmt = {});
Json to_json(const ComplexMatrix& m);

/// {"g": int, "w": complex matrix}.
Json to_json(const SiegelPoint& p);
/// {"tag": string, "m": matrix}.
Json to_json(const GroupElement& e);

}  // namespace siegel
