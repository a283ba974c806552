#pragma once

#include <iosfwd>

#include "siegel/matrix.hpp"

namespace siegel {

/// Complex matrix stored as real and imaginary parts of equal shape.
struct ComplexMatrix {
  Matrix re;
  Matrix im;

  ComplexMatrix() = default;
  ComplexMatrix(Matrix re_part, Matrix im_part);
  /// Real matrix viewed as complex (zero imaginary part).
  static ComplexMatrix real(const Matrix& m);
  /// i * m.
  static ComplexMatrix imaginary(const Matrix& m);

  std::size_t rows() const noexcept { return re.rows(); }
  std::size_t cols() const noexcept { return re.cols(); }

  ComplexMatrix transpose() const { return {re.transpose(), im.transpose()}; }
  ComplexMatrix conj() const { return {re, -im}; }
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    return {re.block(r0, c0, nr, nc), im.block(r0, c0, nr, nc)};
  }
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
    re.set_block(r0, c0, b.re);
    im.set_block(r0, c0, b.im);
  }
  bool is_symmetric() const { return re.is_symmetric() && im.is_symmetric(); }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexMatrix operator-(const ComplexMatrix& a) { return {-a.re, -a.im}; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexMatrix operator*(const Matrix& a, const ComplexMatrix& b) { return {a * b.re, a * b.im}; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const Matrix& b) { return {a.re * b, a.im * b}; }
  friend ComplexMatrix operator+(const ComplexMatrix& a, const Matrix& b) { return {a.re + b, a.im}; }
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) { return a.re == b.re && a.im == b.im; }
  bool identical(const ComplexMatrix& o) const { return re.identical(o.re) && im.identical(o.im); }
};

std::ostream& operator<<(std::ostream& os, const ComplexMatrix& m);

/// Inverse through the real embedding [[A, -B], [B, A]] of A + iB.
ComplexMatrix inverse(const ComplexMatrix& m);

}  // namespace siegel
