#pragma once

#include <optional>
#include <variant>

#include "siegel/minkowski.hpp"
#include "siegel/siegel_maps.hpp"

namespace siegel {

/// Outcome of a reduction: acting with group_element on the input gives
/// reduced exactly (modular action for locus points, congruence for forms).
struct ReductionResult {
  GroupElement group_element;
  std::variant<SiegelPoint, Matrix> reduced;
  ConditionReport certificate;
  /// 1-based chart index for dimension-four reductions.
  std::optional<std::size_t> rep_index;
};

struct ChartMembership {
  bool member = false;
  std::optional<std::size_t> rep_index;
};

/// Smallest 1-based j with g_j^-T s g_j^-1 in the Minkowski domain.
ChartMembership in_Dpp4(const Matrix& s, const ReductionTables& tables);
ChartMembership in_Dpp4(const Matrix& s);

/// Minkowski-reduce s by h, pick the representative g_j with h g_j in K and
/// return k = h g_j together with k^T s k. The certificate holds the domain
/// conditions in chart j and rep_index is that j.
ReductionResult reduce_to_Dpp(const Matrix& s, const ReductionTables& tables);
ReductionResult reduce_to_Dpp(const Matrix& s);

/// Inequalities of the genus-two domain as values that must be >= 0, except
/// the last one (delta - |beta|) which must be > 0.
ConditionReport w21_domain_conditions(const W21Params& p);
bool in_W21_domain(const W21Params& p);

/// Lagrange-reduces P(Sigma(w)) and acts with the matching embedded element.
ReductionResult reduce_W21(const SiegelPoint& w);

/// Reduces P(Sigma(w)) into the union of charts, pulls k^-1 back through
/// q_map and acts on w. Both commutative diagrams are checked on every call.
ReductionResult reduce_W41(const SiegelPoint& w, const ReductionTables& tables);
ReductionResult reduce_W41(const SiegelPoint& w);

/// (I, tau) with tau = gamma + i sqrt(delta^2 - beta^2) stored as its real
/// part and the square of its imaginary part, so rational inputs stay exact.
struct TauCoordinates {
  Scalar invariant;
  Scalar re;
  Scalar im_squared;

  Scalar im() const { return im_squared.sqrt(); }
  friend bool operator==(const TauCoordinates&, const TauCoordinates&) = default;
};

TauCoordinates tau_coords(const SiegelPoint& w);

/// Action of a genus-two G element on (I, tau): tau -> (a tau + c)/(e tau + g)
/// for the first block form, tau -> (b conj(tau) - d)/(f conj(tau) - h) for
/// the second. Throws NotInGroup for anything else.
TauCoordinates moebius_action(const Matrix& G, const TauCoordinates& t);

}  // namespace siegel
