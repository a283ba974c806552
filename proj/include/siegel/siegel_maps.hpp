#pragma once

#include "siegel/spaces.hpp"

namespace siegel {

/// Sigma(w) = [[mu^-1, -mu^-1 lambda], [-lambda mu^-1, mu + lambda mu^-1 lambda]]
/// for w = lambda + i mu.
Matrix sigma_map(const SiegelPoint& w);

/// Inverse of sigma_map: mu = (top-left block)^-1, lambda = -mu (top-right block).
/// Throws NotInImage if the reconstruction is not a point of H_g or does not
/// map back onto s.
SiegelPoint sigma_inverse(const Matrix& s);

/// Symmetric, positive definite and symplectic.
bool is_sigma_image(const Matrix& s);

/// T s T == s for the T of the even single-oval locus of matching size.
bool commutes_with_T(const Matrix& s);

struct GeePair {
  Matrix first;
  Matrix second;
};

/// G(v) = ([[a+b, c-d], [p+r, x-h]], [[a-b, c+d], [p-r, x+h]]) on the block
/// pattern [[a,b,c,d],[b,a,-d,-c],[p,r,x,h],[-r,-p,h,x]]; throws MalformedBlockPattern.
GeePair gee_map(const Matrix& v);
/// Inverse of gee_map on pairs of equal-size square matrices of even size.
Matrix gee_inverse(const Matrix& first, const Matrix& second);

/// First component of gee_map, restricted to symplectic matrices with the
/// block pattern. Throws MalformedBlockPattern or NotSymplectic.
Matrix p_map(const Matrix& s);
/// p_map without the domain checks.
Matrix p_map_unchecked(const Matrix& s);

/// Q(sigma) = G^-1(sigma, -J (sigma^-1)^T J), the inverse of p_map.
Matrix q_map(const Matrix& sigma);

/// det(P(Sigma(w))) for w in the even single-oval locus; throws NotInLocus.
Scalar invariant_I(const SiegelPoint& w);

/// [[A, C], [E, G]] -> [[A,0,C,0],[0,A,0,-C],[E,0,G,0],[0,-E,0,G]].
Matrix embed_first_family(const Matrix& s);
/// [[X, Y], [Z, W]] -> [[0,X,0,Y],[X,0,-Y,0],[0,Z,0,W],[-Z,0,W,0]].
Matrix embed_second_family(const Matrix& s);

}  // namespace siegel
