#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "siegel/matrix.hpp"

namespace siegel {

/// Square matrix over GF(2), at most 16x16, one bitmask per row (bit j is
/// column j).
class F2Matrix {
 public:
  static constexpr std::size_t kMaxDim = 16;

  explicit F2Matrix(std::size_t n = 0);
  static F2Matrix identity(std::size_t n);
  /// J reduced mod 2, i.e. [[0, Id], [Id, 0]].
  static F2Matrix standard_J(std::size_t n);
  /// Row-major bit pattern: bit (i*n + j) of `pattern` is entry (i, j).
  static F2Matrix from_pattern(std::size_t n, std::uint64_t pattern);

  std::size_t dim() const noexcept { return n_; }
  bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
  void set(std::size_t i, std::size_t j, bool v);

  F2Matrix transpose() const;
  bool is_invertible() const;

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b);
  friend bool operator==(const F2Matrix& a, const F2Matrix& b) = default;

 private:
  std::size_t n_;
  std::array<std::uint16_t, kMaxDim> rows_{};
};

/// Entrywise residues; throws NonIntegerEntries.
F2Matrix reduce_mod2(const Matrix& g);

/// a^T J a == J over GF(2).
bool is_symplectic_mod2(const F2Matrix& a);

/// det(g) = +-1 and g^T J g = J mod 2; throws NonIntegerEntries, OddDimension.
bool is_in_K(const Matrix& g);

struct GroupOrders {
  std::uint64_t gl = 0;
  std::uint64_t sp = 0;
  std::uint64_t index = 0;
};

/// |GL(2 g0, F2)|, |Sp(2 g0, F2)| and their quotient by exhaustive enumeration.
/// Supported for g0 in {1, 2}; throws UnsupportedDimension otherwise.
GroupOrders group_orders(int g0, unsigned threads = 0);

/// Index j (0-based) of the unique representative with h * reps[j] in K.
/// Throws NoMatch or MultipleMatches when the table is inconsistent.
std::size_t identify_coset(const Matrix& h, const std::vector<Matrix>& reps);

/// Same test on images in GL(n, F2), for callers that reduced once already.
std::size_t identify_coset(const F2Matrix& h, const std::vector<F2Matrix>& reps);

}  // namespace siegel
