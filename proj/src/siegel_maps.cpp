#include "siegel/siegel_maps.hpp"

namespace siegel {
namespace {

std::size_t quarter(const Matrix& m) {
  if (!m.is_square() || m.rows() % 4 != 0 || m.rows() == 0) {
    throw Error(ErrorCode::MalformedBlockPattern, "expected a square matrix of size divisible by 4");
  }
  return m.rows() / 4;
}

}  // namespace

Matrix sigma_map(const SiegelPoint& w) {
  const Matrix& lambda = w.w().re;
  const Matrix& mu = w.w().im;
  const Matrix mu_inv = inverse(mu);
  const Matrix a = mu_inv * lambda;
  return assemble({{mu_inv, -a}, {-(lambda * mu_inv), mu + lambda * a}});
}

SiegelPoint sigma_inverse(const Matrix& s) {
  if (!s.is_square() || s.rows() % 2 != 0 || s.rows() == 0) {
    throw Error(ErrorCode::NotInImage, "expected a square matrix of even size");
  }
  const std::size_t g = s.rows() / 2;
  Matrix mu;
  try {
    mu = inverse(s.block(0, 0, g, g));
  } catch (const Error&) {
    throw Error(ErrorCode::NotInImage, "top-left block is singular");
  }
  const Matrix lambda = -(mu * s.block(0, g, g, g));
  ComplexMatrix w(lambda, mu);
  if (!is_in_H(w)) throw Error(ErrorCode::NotInImage, "reconstructed point is not in H_g");
  SiegelPoint p(std::move(w));
  if (!(sigma_map(p) == s)) throw Error(ErrorCode::NotInImage, "matrix is not symplectic of the required form");
  return p;
}

bool is_sigma_image(const Matrix& s) {
  if (!s.is_square() || s.rows() % 2 != 0 || !s.is_symmetric()) return false;
  return is_positive_definite(s) && is_symplectic(s);
}

bool commutes_with_T(const Matrix& s) {
  if (!s.is_square() || s.rows() % 4 != 0 || s.rows() == 0) return false;
  const int g0 = static_cast<int>(s.rows() / 4);
  const Matrix t = build_T(g0, 1);
  return t * s * t == s;
}

GeePair gee_map(const Matrix& v) {
  const std::size_t k = quarter(v);
  if (!has_v_pattern(v)) throw Error(ErrorCode::MalformedBlockPattern, "matrix does not have the V-space pattern");
  auto b = [&](std::size_t i, std::size_t j) { return v.block(i * k, j * k, k, k); };
  const Matrix al = b(0, 0), be = b(0, 1), ga = b(0, 2), de = b(0, 3);
  const Matrix pi = b(2, 0), rh = b(2, 1), xi = b(2, 2), et = b(2, 3);
  return {assemble({{al + be, ga - de}, {pi + rh, xi - et}}), assemble({{al - be, ga + de}, {pi - rh, xi + et}})};
}

Matrix gee_inverse(const Matrix& first, const Matrix& second) {
  if (!first.is_square() || first.rows() != second.rows() || !second.is_square() || first.rows() % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch, "gee_inverse needs two square matrices of equal even size");
  }
  const std::size_t k = first.rows() / 2;
  auto s = [&](std::size_t i, std::size_t j) { return first.block(i * k, j * k, k, k); };
  auto t = [&](std::size_t i, std::size_t j) { return second.block(i * k, j * k, k, k); };
  const Scalar half = Scalar::rational(1, 2);
  const Matrix al = (s(0, 0) + t(0, 0)) * half, be = (s(0, 0) - t(0, 0)) * half;
  const Matrix ga = (s(0, 1) + t(0, 1)) * half, de = (t(0, 1) - s(0, 1)) * half;
  const Matrix pi = (s(1, 0) + t(1, 0)) * half, rh = (s(1, 0) - t(1, 0)) * half;
  const Matrix xi = (s(1, 1) + t(1, 1)) * half, et = (t(1, 1) - s(1, 1)) * half;
  return assemble({{al, be, ga, de}, {be, al, -de, -ga}, {pi, rh, xi, et}, {-rh, -pi, et, xi}});
}

Matrix p_map_unchecked(const Matrix& s) {
  const std::size_t k = quarter(s);
  auto b = [&](std::size_t i, std::size_t j) { return s.block(i * k, j * k, k, k); };
  return assemble({{b(0, 0) + b(0, 1), b(0, 2) - b(0, 3)}, {b(2, 0) + b(2, 1), b(2, 2) - b(2, 3)}});
}

Matrix p_map(const Matrix& s) {
  quarter(s);
  if (!has_v_pattern(s)) throw Error(ErrorCode::MalformedBlockPattern, "matrix does not have the V-space pattern");
  if (!is_symplectic(s)) throw Error(ErrorCode::NotSymplectic, "P is defined on symplectic matrices only");
  return p_map_unchecked(s);
}

Matrix q_map(const Matrix& sigma) {
  if (!sigma.is_square() || sigma.rows() % 2 != 0) {
    throw Error(ErrorCode::DimensionMismatch, "q_map needs a square matrix of even size");
  }
  const Matrix j = standard_J(sigma.rows() / 2);
  const Matrix tau = -(j * inverse(sigma).transpose() * j);
  return gee_inverse(sigma, tau);
}

Scalar invariant_I(const SiegelPoint& w) {
  if (w.g() % 2 != 0) throw Error(ErrorCode::NotInLocus, "the invariant is defined for even genus");
  if (!is_in_W(w, LocusSignature::even(w.g() / 2))) throw Error(ErrorCode::NotInLocus, "point is not in the locus");
  return determinant(p_map_unchecked(sigma_map(w)));
}

Matrix embed_first_family(const Matrix& s) {
  if (!s.is_square() || s.rows() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "expected an even square matrix");
  const std::size_t k = s.rows() / 2;
  const Matrix a = s.block(0, 0, k, k), c = s.block(0, k, k, k);
  const Matrix e = s.block(k, 0, k, k), g = s.block(k, k, k, k);
  const Matrix z(k, k);
  return assemble({{a, z, c, z}, {z, a, z, -c}, {e, z, g, z}, {z, -e, z, g}});
}

Matrix embed_second_family(const Matrix& s) {
  if (!s.is_square() || s.rows() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "expected an even square matrix");
  const std::size_t k = s.rows() / 2;
  const Matrix x = s.block(0, 0, k, k), y = s.block(0, k, k, k);
  const Matrix zz = s.block(k, 0, k, k), w = s.block(k, k, k, k);
  const Matrix z(k, k);
  return assemble({{z, x, z, y}, {x, z, -y, z}, {z, zz, z, w}, {-zz, z, w, z}});
}

}  // namespace siegel
