#pragma once

#include <string>
#include <vector>

#include "siegel/reduction_tables.hpp"
#include "siegel/spaces.hpp"

namespace siegel {

/// [[phi, chi], [chi, psi]].
struct BinaryForm {
  Scalar phi;
  Scalar chi;
  Scalar psi;

  Matrix matrix() const { return Matrix{{phi, chi}, {chi, psi}}; }
  /// Throws NotSymmetric / DimensionMismatch.
  static BinaryForm from_matrix(const Matrix& m);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.phi == b.phi && a.chi == b.chi && a.psi == b.psi;
  }
};

/// phi <= psi and -phi <= 2 chi <= 0. Throws NotPositiveDefinite.
bool in_lagrange_domain(const BinaryForm& f);

struct LagrangeResult {
  GroupElement g;
  BinaryForm form;
};

/// Reduces into the closed Lagrange domain; form == g^T f g.
LagrangeResult lagrange_reduce(const BinaryForm& f);

/// One named inequality value; the inequality is value >= 0.
struct Condition {
  std::string name;
  Scalar value;
  bool boundary = false;
};

struct ConditionReport {
  std::vector<Condition> values;
  bool member = false;

  std::size_t zero_count() const;
  std::vector<std::string> violated() const;
};

/// 3 diagonal ordering gaps, 3 off-diagonal signs and the 20 values
/// m s m^T - s_qq. Throws NotPositiveDefinite / DimensionMismatch.
ConditionReport barnes_cohn_conditions(const Matrix& s, const std::vector<MVector>& m_vectors);
ConditionReport barnes_cohn_conditions(const Matrix& s);

bool in_minkowski_domain(const Matrix& s);

struct MinkowskiResult {
  GroupElement g;
  Matrix reduced;
  std::size_t steps = 0;
};

inline constexpr std::size_t kMinkowskiStepLimit = 1000000;

/// Reduces a 4x4 positive definite form into the Minkowski domain: sort the
/// diagonal, fix the signs of s12, s23, s34, then replace column q by the
/// most violating m-vector, until nothing is violated. reduced == g^T s g.
MinkowskiResult minkowski_reduce4(const Matrix& s, const std::vector<MVector>& m_vectors);
MinkowskiResult minkowski_reduce4(const Matrix& s);

}  // namespace siegel
