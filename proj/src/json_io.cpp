#include "siegel/json_io.hpp"

#include <cmath>

namespace siegel {

Scalar scalar_from_json(const Json& j, const NumberFormat& fmt) {
  Scalar exact;
  if (j.is_number_integer()) {
    exact = j.is_number_unsigned() ? Scalar(mpz_class(std::to_string(j.get<std::uint64_t>())))
                                   : Scalar(static_cast<long>(j.get<std::int64_t>()));
  } else if (j.is_string()) {
    exact = Scalar::parse(j.get<std::string>());
  } else if (j.is_number_float()) {
    const double v = j.get<double>();
    if (fmt.mode == ScalarMode::Float) return Scalar::from_double(v, fmt.tol);
    if (std::isfinite(v) && v == std::trunc(v) && std::fabs(v) < 9.0e15) return Scalar(static_cast<long>(v));
    throw Error(ErrorCode::ParseError, "non-integer number " + j.dump() +
                                           " in rational mode; write it as a \"p/q\" string or use float mode");
  } else {
    throw Error(ErrorCode::ParseError, "expected a number or a \"p/q\" string, got " + j.dump());
  }
  return fmt.mode == ScalarMode::Float ? exact.to_float(fmt.tol) : exact;
}

Json to_json(const Scalar& s) {
  if (s.is_rational()) return s.rational().get_str();
  return s.to_double();
}

Matrix matrix_from_json(const Json& j, const NumberFormat& fmt) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorCode::ParseError, "matrix row must be an array");
    std::vector<Scalar> row;
    for (const auto& x : r) row.push_back(scalar_from_json(x, fmt));
    if (!rows.empty() && row.size() != rows.front().size()) throw Error(ErrorCode::ParseError, "ragged matrix rows");
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexMatrix complex_from_json(const Json& j, const NumberFormat& fmt) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw Error(ErrorCode::ParseError, "complex matrix must be an object with \"re\" and \"im\"");
  }
  Matrix re = matrix_from_json(j.at("re"), fmt);
  Matrix im = matrix_from_json(j.at("im"), fmt);
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw Error(ErrorCode::ParseError, "real and imaginary parts differ in shape");
  }
  return {std::move(re), std::move(im)};
}

Json to_json(const ComplexMatrix& m) { return Json{{"re", to_json(m.re)}, {"im", to_json(m.im)}}; }

Json to_json(const SiegelPoint& p) { return Json{{"g", p.g()}, {"w", to_json(p.w())}}; }

Json to_json(const GroupElement& e) { return Json{{"tag", to_string(e.kind)}, {"m", to_json(e.m)}}; }

}  // namespace siegel
