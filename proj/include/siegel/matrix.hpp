#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "siegel/scalar.hpp"

namespace siegel {

/// Dense row-major matrix of Scalars.
///
/// Most of the library works with square matrices of dimension 2..8; the
/// class itself allows any shape so that blocks and row vectors can be held
/// without a separate type.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix diagonal(const std::vector<Scalar>& diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Side length of a square matrix; throws DimensionMismatch otherwise.
  std::size_t dim() const;

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);

  /// Entrywise, tolerance-aware in Float mode.
  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Same shape and every entry identical in representation.
  bool identical(const Matrix& o) const;

  bool is_symmetric() const;
  bool is_integral() const;
  bool is_zero() const;
  /// Float if any entry is Float, as in scalar arithmetic; otherwise Rational.
  ScalarMode mode() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Standard symplectic matrix [[0, Id_n], [-Id_n, 0]] of dimension 2n.
Matrix standard_J(std::size_t n);

/// Assembles a block matrix; blocks in a block-row share their row count and
/// blocks in a block-column share their column count.
Matrix assemble(const std::vector<std::vector<Matrix>>& blocks);

/// Determinant; Rational matrices use fraction-free (Bareiss) elimination on
/// the integer matrix obtained by clearing denominators.
Scalar determinant(const Matrix& m);

/// Inverse; throws SingularMatrix when det is zero (Rational) or the best
/// pivot is within tolerance (Float).
Matrix inverse(const Matrix& m);

/// Sylvester's criterion on a symmetric matrix; throws NotSymmetric.
/// Rational: every leading principal minor > 0, computed exactly.
/// Float: every LDL^T pivot > tol.
bool is_positive_definite(const Matrix& m);

/// Leading principal minors, in order, for square matrices.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

/// m^T J m == J; throws OddDimension for odd sizes.
bool is_symplectic(const Matrix& m);

/// Integer matrix with det = +-1.
bool is_unimodular(const Matrix& m);

/// g^T s g, no precondition checks.
Matrix congruence(const Matrix& s, const Matrix& g);

}  // namespace siegel
