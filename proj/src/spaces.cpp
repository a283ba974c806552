#include "siegel/spaces.hpp"

#include "siegel/mod2.hpp"

namespace siegel {
namespace {

void require_dim(const Matrix& m, std::size_t n, const char* what) {
  if (!m.is_square() || m.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected dimension " + std::to_string(n));
  }
}

}  // namespace

LocusSignature::LocusSignature(int g_, int n_, int p_) : g(g_), n(n_), p(p_) {
  if (g < 1 || n < 1 || p < 0 || g + 1 != 2 * p + n) {
    throw Error(ErrorCode::DimensionMismatch, "locus signature needs g + 1 = 2p + n with g, n >= 1, p >= 0");
  }
}

bool is_in_H(const ComplexMatrix& w) {
  if (!w.re.is_square() || w.rows() == 0) return false;
  if (!w.is_symmetric()) return false;
  return is_positive_definite(w.im);
}

SiegelPoint::SiegelPoint(ComplexMatrix w) : w_(std::move(w)) {
  if (!is_in_H(w_)) {
    throw Error(ErrorCode::NotInLocus, "not in the Siegel upper half space (symmetric, positive imaginary part)");
  }
}

SiegelPoint SiegelPoint::unchecked(ComplexMatrix w) { return SiegelPoint(std::move(w), Unchecked{}); }

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::ModularSp: return "Sp";
    case GroupKind::GSubgroup: return "G";
    case GroupKind::UnimodularGL: return "GL";
    case GroupKind::KSubgroup: return "K";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "Sp") return GroupKind::ModularSp;
  if (s == "G") return GroupKind::GSubgroup;
  if (s == "GL") return GroupKind::UnimodularGL;
  if (s == "K") return GroupKind::KSubgroup;
  throw Error(ErrorCode::ParseError, "unknown group tag '" + s + "'");
}

bool is_group_member(const Matrix& m, GroupKind kind, const std::optional<LocusSignature>& sig) {
  if (!m.is_square() || !m.is_integral()) return false;
  switch (kind) {
    case GroupKind::ModularSp:
      return m.rows() % 2 == 0 && is_symplectic(m);
    case GroupKind::GSubgroup:
      if (!sig) throw Error(ErrorCode::DimensionMismatch, "G subgroup membership needs a locus signature");
      return m.rows() == 2 * static_cast<std::size_t>(sig->g) && is_in_G_group(m, *sig);
    case GroupKind::UnimodularGL:
      return is_unimodular(m);
    case GroupKind::KSubgroup:
      return m.rows() % 2 == 0 && is_in_K(m);
  }
  return false;
}

GroupElement GroupElement::make(Matrix m, GroupKind kind, std::optional<LocusSignature> sig) {
  if (!is_group_member(m, kind, sig)) {
    throw Error(ErrorCode::NotInGroup, "matrix is not in the " + to_string(kind) + " group");
  }
  return trusted(std::move(m), kind, sig);
}

GroupElement GroupElement::trusted(Matrix m, GroupKind kind, std::optional<LocusSignature> sig) {
  GroupElement e;
  e.m = std::move(m);
  e.kind = kind;
  e.signature = sig;
  return e;
}

Matrix build_V(int p, int n) {
  if (p < 0 || n < 1) throw Error(ErrorCode::DimensionMismatch, "build_V needs p >= 0 and n >= 1");
  const auto up = static_cast<std::size_t>(p);
  const std::size_t g = 2 * up + static_cast<std::size_t>(n) - 1;
  Matrix v(g, g);
  for (std::size_t i = 0; i < up; ++i) {
    v(i, up + i) = 1;
    v(up + i, i) = 1;
  }
  for (std::size_t i = 2 * up; i < g; ++i) v(i, i) = 1;
  return v;
}

Matrix build_T(int p, int n) {
  const Matrix v = build_V(p, n);
  const Matrix z(v.rows(), v.rows());
  return assemble({{v, z}, {z, -v}});
}

bool has_v_pattern(const Matrix& m) {
  if (!m.is_square() || m.rows() % 4 != 0 || m.rows() == 0) return false;
  const std::size_t k = m.rows() / 4;
  auto b = [&](std::size_t i, std::size_t j) { return m.block(i * k, j * k, k, k); };
  return b(1, 0) == b(0, 1) && b(1, 1) == b(0, 0) && b(1, 2) == -b(0, 3) && b(1, 3) == -b(0, 2) &&
         b(3, 0) == -b(2, 1) && b(3, 1) == -b(2, 0) && b(3, 2) == b(2, 3) && b(3, 3) == b(2, 2);
}

bool has_w_block_form(const ComplexMatrix& w) {
  if (!w.re.is_square() || w.rows() % 2 != 0) return false;
  const std::size_t h = w.rows() / 2;
  const ComplexMatrix z = w.block(0, 0, h, h);
  const ComplexMatrix x = w.block(0, h, h, h);
  return w.block(h, 0, h, h) == -x.conj() && w.block(h, h, h, h) == -z.conj();
}

bool is_in_W(const SiegelPoint& w, const LocusSignature& sig) {
  if (w.g() != sig.g) throw Error(ErrorCode::DimensionMismatch, "point genus differs from the signature");
  const Matrix v = build_V(sig.p, sig.n);
  const bool by_definition = v * w.w() * v == -w.w().conj();
  if (sig.is_even_single_oval()) {
    const bool by_blocks = has_w_block_form(w.w());
    if (by_blocks != by_definition) {
      throw Error(ErrorCode::InternalInconsistency, "locus tests disagree on the block form");
    }
  }
  return by_definition;
}

bool is_in_G_group(const Matrix& G, const LocusSignature& sig) {
  require_dim(G, 2 * static_cast<std::size_t>(sig.g), "is_in_G_group");
  if (!G.is_integral()) throw Error(ErrorCode::NonIntegerEntries, "G must have integer entries");
  const Matrix t = build_T(sig.p, sig.n);
  const bool commutes = G * t == t * G;
  if (sig.is_even_single_oval()) {
    if (commutes != has_v_pattern(G)) {
      throw Error(ErrorCode::InternalInconsistency, "commutation with T disagrees with the block pattern");
    }
  }
  return commutes && is_symplectic(G);
}

ComplexMatrix modular_action(const Matrix& G, const ComplexMatrix& w) {
  const std::size_t g = w.rows();
  require_dim(G, 2 * g, "modular_action");
  const Matrix p = G.block(0, 0, g, g);
  const Matrix q = G.block(0, g, g, g);
  const Matrix r = G.block(g, 0, g, g);
  const Matrix s = G.block(g, g, g, g);
  const ComplexMatrix num = p * w + q;
  const ComplexMatrix den = r * w + s;
  try {
    return num * inverse(den);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::SingularDenominator, "R w + S is singular");
  }
}

SiegelPoint modular_action(const GroupElement& G, const SiegelPoint& w) {
  if (G.kind != GroupKind::ModularSp && G.kind != GroupKind::GSubgroup) {
    throw Error(ErrorCode::NotInGroup, "modular action needs a symplectic element");
  }
  ComplexMatrix out = modular_action(G.m, w.w());
#ifndef NDEBUG
  if (!is_in_H(out)) throw Error(ErrorCode::InternalInconsistency, "modular action left H_g");
  if (G.signature && G.signature->g == w.g() && is_in_W(w, *G.signature)) {
    if (!is_in_W(SiegelPoint::unchecked(out), *G.signature)) {
      throw Error(ErrorCode::InternalInconsistency, "modular action left the locus");
    }
  }
#endif
  return SiegelPoint::unchecked(std::move(out));
}

Matrix congruent_action(const Matrix& sigma, const GroupElement& g) {
  if (!sigma.is_square() || !g.m.is_square() || sigma.rows() != g.m.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "congruent_action: dimensions differ");
  }
  if (!is_positive_definite(sigma)) throw Error(ErrorCode::NotPositiveDefinite, "congruent_action needs sigma > 0");
  if (!is_unimodular(g.m)) throw Error(ErrorCode::NotInGroup, "congruent_action needs a unimodular matrix");
  return congruence(sigma, g.m);
}

SiegelPoint w21_point(const Scalar& beta, const Scalar& gamma, const Scalar& delta) {
  if (!(delta > beta.abs())) throw Error(ErrorCode::NotInLocus, "genus-two point needs delta > |beta|");
  ComplexMatrix w({{gamma, 0}, {0, -gamma}}, {{delta, beta}, {beta, delta}});
  return SiegelPoint(std::move(w));
}

W21Params w21_params(const SiegelPoint& w) {
  const ComplexMatrix& m = w.w();
  if (m.rows() != 2) throw Error(ErrorCode::NotInLocus, "genus-two point must be 2x2");
  const bool shape = m.re(0, 1).is_zero() && m.re(1, 0).is_zero() && m.re(1, 1) == -m.re(0, 0) &&
                     m.im(0, 1) == m.im(1, 0) && m.im(0, 0) == m.im(1, 1);
  if (!shape) throw Error(ErrorCode::NotInLocus, "point is not in the genus-two locus");
  W21Params p{m.im(0, 1), m.re(0, 0), m.im(0, 0)};
  if (!(p.delta > p.beta.abs())) throw Error(ErrorCode::NotInLocus, "genus-two point needs delta > |beta|");
  return p;
}

}  // namespace siegel
