#include "siegel/matrix.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace siegel {
namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": shapes differ");
  }
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": not square");
}

// Integer matrix c*m with c > 0 the lcm of the denominators.
std::vector<mpz_class> clear_denominators(const Matrix& m, mpz_class& scale) {
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    }
  }
  std::vector<mpz_class> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m(i, j).rational();
      out.push_back(q.get_num() * (scale / q.get_den()));
    }
  }
  return out;
}

// Fraction-free elimination. With pivoting disabled, after step k the pivot
// a[k][k] equals the (k+1)-th leading principal minor of the integer matrix;
// with pivoting it returns the signed determinant.
struct BareissOutcome {
  std::vector<mpz_class> pivots;
  int swaps_sign = 1;
  bool singular = false;
};

BareissOutcome bareiss(std::vector<mpz_class> a, std::size_t n, bool allow_pivoting) {
  BareissOutcome out;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] == 0) {
      if (!allow_pivoting) {
        out.pivots.push_back(0);
        out.singular = true;
        return out;
      }
      std::size_t r = k + 1;
      while (r < n && a[r * n + k] == 0) ++r;
      if (r == n) {
        out.singular = true;
        return out;
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[r * n + j]);
      out.swaps_sign = -out.swaps_sign;
    }
    const mpz_class pivot = a[k * n + k];
    out.pivots.push_back(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i * n + j] * pivot - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = std::move(t);
      }
      a[i * n + k] = 0;
    }
    prev = pivot;
  }
  return out;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

std::size_t Matrix::dim() const {
  require_square(*this, "dim");
  return rows_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw Error(ErrorCode::DimensionMismatch, "block out of range");
  }
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product: inner dimensions differ");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_rational() && sgn(aik.rational()) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix r = a;
  for (auto& x : r.data_) x = -x;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

bool Matrix::identical(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].identical(o.data_[k])) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_integral() const {
  for (const auto& x : data_)
    if (!x.is_integer()) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ScalarMode Matrix::mode() const {
  for (const auto& x : data_)
    if (x.is_float()) return ScalarMode::Float;
  return ScalarMode::Rational;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

Matrix standard_J(std::size_t n) {
  Matrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

Matrix assemble(const std::vector<std::vector<Matrix>>& blocks) {
  std::size_t total_rows = 0;
  std::size_t total_cols = 0;
  for (const auto& b : blocks.front()) total_cols += b.cols();
  for (const auto& row : blocks) total_rows += row.front().rows();
  Matrix m(total_rows, total_cols);
  std::size_t r0 = 0;
  for (const auto& row : blocks) {
    std::size_t c0 = 0;
    const std::size_t h = row.front().rows();
    for (const auto& b : row) {
      if (b.rows() != h) throw Error(ErrorCode::DimensionMismatch, "assemble: block heights differ");
      m.set_block(r0, c0, b);
      c0 += b.cols();
    }
    if (c0 != total_cols) throw Error(ErrorCode::DimensionMismatch, "assemble: block widths differ");
    r0 += h;
  }
  return m;
}

Scalar determinant(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return Scalar(1);
  if (m.mode() == ScalarMode::Rational) {
    mpz_class scale;
    auto ints = clear_denominators(m, scale);
    const BareissOutcome out = bareiss(std::move(ints), n, true);
    if (out.singular) return Scalar(0);
    mpz_class scale_n;
    mpz_pow_ui(scale_n.get_mpz_t(), scale.get_mpz_t(), n);
    return Scalar::rational(out.swaps_sign * out.pivots.back(), scale_n);
  }
  // Float: partial pivoting LU.
  const double tol = m(0, 0).tol();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).to_double();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a[i * n + k]) > std::fabs(a[p * n + k])) p = i;
    if (a[p * n + k] == 0.0) return Scalar::from_double(0.0, tol);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      det = -det;
    }
    det *= a[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return Scalar::from_double(det, tol);
}

Matrix inverse(const Matrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  const bool exact = m.mode() == ScalarMode::Rational;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = n;
    if (exact) {
      for (std::size_t i = k; i < n && p == n; ++i)
        if (sgn(a(i, k).rational()) != 0) p = i;
    } else {
      double best = -1.0;
      for (std::size_t i = k; i < n; ++i) {
        const double v = std::fabs(a(i, k).to_double());
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (p != n && a(p, k).is_zero()) p = n;
    }
    if (p == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    }
    const Scalar pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Scalar f = a(i, k);
      if (f.is_rational() && sgn(f.rational()) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<Scalar> leading_principal_minors(const Matrix& m) {
  require_square(m, "leading_principal_minors");
  const std::size_t n = m.rows();
  std::vector<Scalar> minors;
  if (m.mode() == ScalarMode::Rational) {
    mpz_class scale;
    auto ints = clear_denominators(m, scale);
    const BareissOutcome out = bareiss(std::move(ints), n, false);
    mpz_class scale_k = 1;
    for (std::size_t k = 0; k < n; ++k) {
      scale_k *= scale;
      minors.push_back(k < out.pivots.size() ? Scalar::rational(out.pivots[k], scale_k) : Scalar(0));
      if (out.singular && k + 1 >= out.pivots.size()) {
        // Later minors are not determined by a stalled elimination.
        for (std::size_t r = k + 1; r < n; ++r) minors.push_back(determinant(m.block(0, 0, r + 1, r + 1)));
        break;
      }
    }
    return minors;
  }
  for (std::size_t k = 0; k < n; ++k) minors.push_back(determinant(m.block(0, 0, k + 1, k + 1)));
  return minors;
}

bool is_positive_definite(const Matrix& m) {
  require_square(m, "is_positive_definite");
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "positive definiteness needs a symmetric matrix");
  const std::size_t n = m.rows();
  if (m.mode() == ScalarMode::Rational) {
    mpz_class scale;
    auto ints = clear_denominators(m, scale);
    const BareissOutcome out = bareiss(std::move(ints), n, false);
    if (out.singular) return false;
    for (const auto& p : out.pivots)
      if (p <= 0) return false;
    return true;
  }
  // LDL^T without pivoting; a positive definite matrix never needs one.
  const double tol = m(0, 0).tol();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).to_double();
  for (std::size_t k = 0; k < n; ++k) {
    const double d = a[k * n + k];
    if (!(d > tol)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

bool is_symplectic(const Matrix& m) {
  require_square(m, "is_symplectic");
  if (m.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "symplectic test needs even dimension");
  const Matrix j = standard_J(m.rows() / 2);
  return m.transpose() * j * m == j;
}

bool is_unimodular(const Matrix& m) {
  if (!m.is_square() || !m.is_integral()) return false;
  const Scalar d = determinant(m);
  return d == Scalar(1) || d == Scalar(-1);
}

Matrix congruence(const Matrix& s, const Matrix& g) { return g.transpose() * s * g; }

}  // namespace siegel
