#include "siegel/pipeline.hpp"

#include <memory>

#include "siegel/mod2.hpp"

namespace siegel {
namespace {

struct RepCache {
  std::vector<Matrix> inverses;
  std::vector<F2Matrix> images;
};

std::shared_ptr<const RepCache> build_cache(const ReductionTables& tables) {
  auto c = std::make_shared<RepCache>();
  for (const auto& r : tables.reps) {
    c->inverses.push_back(inverse(r));
    c->images.push_back(reduce_mod2(r));
  }
  return c;
}

std::shared_ptr<const RepCache> rep_cache(const ReductionTables& tables) {
  if (&tables == &reduction_tables()) {
    static const std::shared_ptr<const RepCache> cached = build_cache(reduction_tables());
    return cached;
  }
  return build_cache(tables);
}

void require_locus(const SiegelPoint& w, int g0) {
  if (w.g() != 2 * g0 || !is_in_W(w, LocusSignature::even(g0))) {
    throw Error(ErrorCode::NotInLocus, "point is not in the genus-" + std::to_string(2 * g0) + " locus");
  }
}

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace

ChartMembership in_Dpp4(const Matrix& s, const ReductionTables& tables) {
  const auto cache = rep_cache(tables);
  const auto& inv = cache->inverses;
  if (!s.is_square() || s.rows() != 4) throw Error(ErrorCode::DimensionMismatch, "in_Dpp4 needs a 4x4 form");
  if (!s.is_symmetric() || !is_positive_definite(s)) {
    throw Error(ErrorCode::NotPositiveDefinite, "in_Dpp4 needs a symmetric positive definite form");
  }
  for (std::size_t j = 0; j < inv.size(); ++j) {
    if (barnes_cohn_conditions(congruence(s, inv[j]), tables.m_vectors).member) return {true, j + 1};
  }
  return {false, std::nullopt};
}

ChartMembership in_Dpp4(const Matrix& s) { return in_Dpp4(s, reduction_tables()); }

ReductionResult reduce_to_Dpp(const Matrix& s, const ReductionTables& tables) {
  const auto cache = rep_cache(tables);
  const MinkowskiResult mk = minkowski_reduce4(s, tables.m_vectors);
  const std::size_t j = identify_coset(reduce_mod2(mk.g.m), cache->images);
  Matrix k = mk.g.m * tables.reps[j];
  Matrix reduced = congruence(s, k);
  ConditionReport cert = barnes_cohn_conditions(mk.reduced, tables.m_vectors);
  ensure(cert.member, "Minkowski reduction left the domain");
  ensure(congruence(reduced, cache->inverses[j]) == mk.reduced, "chart transport mismatch");
  ensure(in_Dpp4(reduced, tables).member, "reduced form lies in no chart");
  return {GroupElement::trusted(std::move(k), GroupKind::KSubgroup), std::move(reduced), std::move(cert), j + 1};
}

ReductionResult reduce_to_Dpp(const Matrix& s) { return reduce_to_Dpp(s, reduction_tables()); }

ConditionReport w21_domain_conditions(const W21Params& p) {
  ConditionReport rep;
  auto add = [&rep](std::string name, Scalar v) {
    const bool zero = v.is_zero();
    rep.values.push_back({std::move(name), std::move(v), zero});
  };
  add("gamma^2+delta^2-beta^2-1", p.gamma * p.gamma + p.delta * p.delta - p.beta * p.beta - Scalar(1));
  add("gamma", p.gamma);
  add("1/2-gamma", Scalar::rational(1, 2) - p.gamma);
  add("delta-|beta|", p.delta - p.beta.abs());
  rep.member = rep.values[0].value.sign() >= 0 && rep.values[1].value.sign() >= 0 &&
               rep.values[2].value.sign() >= 0 && rep.values[3].value.sign() > 0;
  return rep;
}

bool in_W21_domain(const W21Params& p) { return w21_domain_conditions(p).member; }

ReductionResult reduce_W21(const SiegelPoint& w) {
  require_locus(w, 1);
  const Matrix sigma = p_map_unchecked(sigma_map(w));
  const LagrangeResult lr = lagrange_reduce(BinaryForm::from_matrix(sigma));
  const Matrix g_inv = inverse(lr.g.m);
  Matrix G = determinant(g_inv) == Scalar(1) ? embed_first_family(g_inv)
                                             : embed_second_family(g_inv * Matrix::diagonal({1, -1}));
  SiegelPoint reduced = SiegelPoint::unchecked(modular_action(G, w.w()));
  const W21Params params = w21_params(reduced);
  ConditionReport cert = w21_domain_conditions(params);
  ensure(cert.member, "genus-two reduction left the domain");
  ensure(p_map_unchecked(sigma_map(reduced)) == lr.form.matrix(), "reduced point does not match the reduced form");
  return {GroupElement::trusted(std::move(G), GroupKind::GSubgroup, LocusSignature::even(1)), std::move(reduced),
          std::move(cert), std::nullopt};
}

ReductionResult reduce_W41(const SiegelPoint& w, const ReductionTables& tables) {
  require_locus(w, 2);
  const Matrix big_sigma = sigma_map(w);
  const Matrix sigma = p_map_unchecked(big_sigma);
  ReductionResult dpp = reduce_to_Dpp(sigma, tables);
  const Matrix& k = dpp.group_element.m;
  Matrix G = q_map(inverse(k));
  if (!G.is_integral()) throw Error(ErrorCode::NonIntegerPullback, "pullback of the reducing element is not integral");
  ensure(is_in_G_group(G, LocusSignature::even(2)), "pullback is not in the G subgroup");
  SiegelPoint reduced = modular_action(GroupElement::trusted(G, GroupKind::GSubgroup, LocusSignature::even(2)), w);
  const Matrix reduced_sigma = sigma_map(reduced);
  ensure(reduced_sigma == congruence(big_sigma, inverse(G)), "Sigma diagram does not commute");
  ensure(p_map_unchecked(reduced_sigma) == std::get<Matrix>(dpp.reduced), "P diagram does not commute");
  return {GroupElement::trusted(std::move(G), GroupKind::GSubgroup, LocusSignature::even(2)), std::move(reduced),
          std::move(dpp.certificate), dpp.rep_index};
}

ReductionResult reduce_W41(const SiegelPoint& w) { return reduce_W41(w, reduction_tables()); }

TauCoordinates tau_coords(const SiegelPoint& w) {
  const W21Params p = w21_params(w);
  return {invariant_I(w), p.gamma, p.delta * p.delta - p.beta * p.beta};
}

TauCoordinates moebius_action(const Matrix& G, const TauCoordinates& t) {
  if (!G.is_square() || G.rows() != 4 || !G.is_integral()) {
    throw Error(ErrorCode::NotInGroup, "expected an integer 4x4 matrix");
  }
  const Scalar& x = t.re;
  const Scalar& s = t.im_squared;
  const Matrix first{{G(0, 0), G(0, 2)}, {G(2, 0), G(2, 2)}};
  if (determinant(first) == Scalar(1) && embed_first_family(first) == G) {
    const Scalar &a = G(0, 0), &c = G(0, 2), &e = G(2, 0), &g = G(2, 2);
    const Scalar den = (e * x + g) * (e * x + g) + e * e * s;
    return {t.invariant, ((a * x + c) * (e * x + g) + a * e * s) / den, s / (den * den)};
  }
  const Matrix second{{G(0, 1), G(0, 3)}, {G(2, 1), G(2, 3)}};
  if (determinant(second) == Scalar(1) && embed_second_family(second) == G) {
    const Scalar &b = G(0, 1), &d = G(0, 3), &f = G(2, 1), &h = G(2, 3);
    const Scalar den = (f * x - h) * (f * x - h) + f * f * s;
    return {t.invariant, ((b * x - d) * (f * x - h) + b * f * s) / den, s / (den * den)};
  }
  throw Error(ErrorCode::NotInGroup, "matrix has neither genus-two block form");
}

}  // namespace siegel
