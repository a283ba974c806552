#pragma once

#include <optional>
#include <string>

#include "siegel/complex_matrix.hpp"

namespace siegel {

/// Locus parameters (g, n, p) with g + 1 = 2p + n.
struct LocusSignature {
  int g = 0;
  int n = 0;
  int p = 0;

  LocusSignature(int g_, int n_, int p_);
  /// The even-genus, single-oval case used throughout the reduction code.
  static LocusSignature even(int g0) { return {2 * g0, 1, g0}; }
  bool is_even_single_oval() const { return n == 1 && g % 2 == 0; }
  friend bool operator==(const LocusSignature&, const LocusSignature&) = default;
};

/// Complex symmetric matrix with positive definite imaginary part.
class SiegelPoint {
 public:
  /// Validates symmetry and positivity; throws NotInLocus otherwise.
  explicit SiegelPoint(ComplexMatrix w);
  static SiegelPoint unchecked(ComplexMatrix w);

  const ComplexMatrix& w() const noexcept { return w_; }
  int g() const noexcept { return static_cast<int>(w_.rows()); }
  friend bool operator==(const SiegelPoint& a, const SiegelPoint& b) { return a.w_ == b.w_; }

 private:
  struct Unchecked {};
  SiegelPoint(ComplexMatrix w, Unchecked) : w_(std::move(w)) {}
  ComplexMatrix w_;
};

bool is_in_H(const ComplexMatrix& w);

enum class GroupKind { ModularSp, GSubgroup, UnimodularGL, KSubgroup };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

/// Integer matrix together with the group it was verified to belong to.
struct GroupElement {
  Matrix m;
  GroupKind kind = GroupKind::UnimodularGL;
  std::optional<LocusSignature> signature;

  /// Checks membership; throws NotInGroup (or the predicate's own error).
  static GroupElement make(Matrix m, GroupKind kind, std::optional<LocusSignature> sig = std::nullopt);
  /// For elements whose membership follows from construction.
  static GroupElement trusted(Matrix m, GroupKind kind, std::optional<LocusSignature> sig = std::nullopt);
};

bool is_group_member(const Matrix& m, GroupKind kind, const std::optional<LocusSignature>& sig);

/// V = [[0, Id_p, 0], [Id_p, 0, 0], [0, 0, Id_{n-1}]].
Matrix build_V(int p, int n);
/// T = diag(V, -V).
Matrix build_T(int p, int n);

/// The block pattern [[A,B,C,D],[B,A,-D,-C],[E,F,G,H],[-F,-E,H,G]] with
/// square blocks of size dim/4.
bool has_v_pattern(const Matrix& m);

/// V w V = -conj(w). For even g with n = 1 the block form
/// [[z, x], [-conj(x), -conj(z)]] is evaluated as well and must agree.
bool is_in_W(const SiegelPoint& w, const LocusSignature& sig);
bool has_w_block_form(const ComplexMatrix& w);

/// Symplectic, integral and commuting with T; for even g with n = 1 the block
/// pattern is cross-checked.
bool is_in_G_group(const Matrix& G, const LocusSignature& sig);

/// (P w + Q)(R w + S)^{-1}; throws SingularDenominator if R w + S is singular.
ComplexMatrix modular_action(const Matrix& G, const ComplexMatrix& w);
/// Checked variant: requires a symplectic element. Debug builds also verify
/// that the image lies in H_g.
SiegelPoint modular_action(const GroupElement& G, const SiegelPoint& w);

/// g^T sigma g with the preconditions enforced.
Matrix congruent_action(const Matrix& sigma, const GroupElement& g);

/// Parameters of the genus-two point [[gamma + i delta, i beta], [i beta, -gamma + i delta]].
struct W21Params {
  Scalar beta;
  Scalar gamma;
  Scalar delta;
};

/// Throws NotInLocus unless delta > |beta|.
SiegelPoint w21_point(const Scalar& beta, const Scalar& gamma, const Scalar& delta);
/// Throws NotInLocus if w is not of the genus-two locus form.
W21Params w21_params(const SiegelPoint& w);

}  // namespace siegel
