#include "siegel/complex_matrix.hpp"

#include <ostream>

namespace siegel {

ComplexMatrix::ComplexMatrix(Matrix re_part, Matrix im_part) : re(std::move(re_part)), im(std::move(im_part)) {
  if (re.rows() != im.rows() || re.cols() != im.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "real and imaginary parts differ in shape");
  }
}

ComplexMatrix ComplexMatrix::real(const Matrix& m) { return {m, Matrix(m.rows(), m.cols())}; }

ComplexMatrix ComplexMatrix::imaginary(const Matrix& m) { return {Matrix(m.rows(), m.cols()), m}; }

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m) {
  return os << "{re: " << m.re << ", im: " << m.im << '}';
}

ComplexMatrix inverse(const ComplexMatrix& m) {
  if (!m.re.is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse: not square");
  const std::size_t n = m.rows();
  const Matrix big = assemble({{m.re, -m.im}, {m.im, m.re}});
  const Matrix inv = inverse(big);
  // The inverse of an embedded complex matrix is again embedded.
  return {inv.block(0, 0, n, n), inv.block(n, 0, n, n)};
}

}  // namespace siegel
