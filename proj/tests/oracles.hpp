#pragma once

// Independent reference computations used to cross-check the library. They
// favour obviousness over speed and share no code with the algorithms under
// test beyond the Scalar and Matrix containers.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "siegel/matrix.hpp"

namespace oracle {

using siegel::Matrix;
using siegel::Scalar;

// Leibniz expansion.
inline Scalar det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Scalar total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Scalar term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Matrix minor_of(const Matrix& m, std::size_t r, std::size_t c) {
  const std::size_t n = m.rows();
  Matrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == c) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Adjugate over determinant.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  const Scalar d = det(m);
  Matrix out(n, n);
  if (n == 1) {
    out(0, 0) = Scalar(1) / d;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar c = det(minor_of(m, j, i));
      out(i, j) = ((i + j) % 2 ? -c : c) / d;
    }
  return out;
}

// Entrywise product by explicit triple loop.
inline Matrix mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline Matrix congruence(const Matrix& s, const Matrix& g) { return mul(mul(g.transpose(), s), g); }

// (m^T J m)_{ij} written out with J = [[0, I], [-I, 0]].
inline bool symplectic(const Matrix& m) {
  const std::size_t n = m.rows() / 2;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      Scalar v = 0;
      for (std::size_t k = 0; k < n; ++k) v += m(k, i) * m(k + n, j) - m(k + n, i) * m(k, j);
      Scalar expect = 0;
      if (i < n && j == i + n) expect = 1;
      if (i >= n && j + n == i) expect = -1;
      if (!(v == expect)) return false;
    }
  return true;
}

// Quadratic form positive on every nonzero integer vector of [-r, r]^n.
inline bool positive_on_grid(const Matrix& s, int r) {
  const std::size_t n = s.rows();
  std::vector<int> v(n, -r);
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
      Scalar q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += Scalar(v[i] * v[j]) * s(i, j);
      if (q.sign() <= 0) return false;
    }
    std::size_t k = 0;
    while (k < n && v[k] == r) v[k++] = -r;
    if (k == n) return true;
    ++v[k];
  }
}

// Smallest value of the form over nonzero vectors of [-r, r]^n.
inline Scalar grid_minimum(const Matrix& s, int r) {
  const std::size_t n = s.rows();
  std::vector<int> v(n, -r);
  std::optional<Scalar> best;
  while (true) {
    if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) {
      Scalar q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += Scalar(v[i] * v[j]) * s(i, j);
      if (!best || q < *best) best = q;
    }
    std::size_t k = 0;
    while (k < n && v[k] == r) v[k++] = -r;
    if (k == n) return *best;
    ++v[k];
  }
}

// All 2x2 integer matrices with det +-1 and entries in [-r, r].
inline std::vector<std::array<long, 4>> unimodular2(long r) {
  std::vector<std::array<long, 4>> out;
  for (long a = -r; a <= r; ++a)
    for (long b = -r; b <= r; ++b)
      for (long c = -r; c <= r; ++c)
        for (long d = -r; d <= r; ++d)
          if (a * d - b * c == 1 || a * d - b * c == -1) out.push_back({a, b, c, d});
  return out;
}

// Closed Lagrange domain written directly from its inequalities.
inline bool lagrange_reduced(const Scalar& phi, const Scalar& chi, const Scalar& psi) {
  return phi <= psi && -phi <= chi + chi && chi + chi <= Scalar(0);
}

// Every reduced form reachable by the brute-force list; empty if none.
inline std::vector<std::array<Scalar, 3>> brute_force_lagrange(const Scalar& phi, const Scalar& chi, const Scalar& psi,
                                                              const std::vector<std::array<long, 4>>& mats) {
  std::vector<std::array<Scalar, 3>> found;
  for (const auto& m : mats) {
    const Scalar a(m[0]), b(m[1]), c(m[2]), d(m[3]);
    // [[a, b], [c, d]]^T [[phi, chi], [chi, psi]] [[a, b], [c, d]]
    const Scalar p = a * a * phi + Scalar(2) * a * c * chi + c * c * psi;
    const Scalar x = a * b * phi + (a * d + b * c) * chi + c * d * psi;
    const Scalar q = b * b * phi + Scalar(2) * b * d * chi + d * d * psi;
    if (lagrange_reduced(p, x, q)) found.push_back({p, x, q});
  }
  return found;
}

// Entrywise residues of an integer matrix, computed with plain integers.
inline std::vector<std::vector<int>> mod2(const Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<int>(((m(i, j).to_long() % 2) + 2) % 2);
  return out;
}

// g^T J g == J mod 2 and det g = +-1, without the library's F2 code.
inline bool in_K(const Matrix& g) {
  const Scalar d = det(g);
  if (!(d == Scalar(1) || d == Scalar(-1))) return false;
  const std::size_t n = g.rows() / 2;
  const auto r = mod2(g);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      int v = 0;
      for (std::size_t k = 0; k < n; ++k) v += r[k][i] * r[k + n][j] + r[k + n][i] * r[k][j];
      const int expect = (j == i + n || i == j + n) ? 1 : 0;
      if (v % 2 != expect) return false;
    }
  return true;
}

// |GL(n, F2)| and |Sp(2m, F2)| from the closed product formulas.
inline unsigned long long gl_order_f2(unsigned n) {
  unsigned long long o = 1;
  for (unsigned i = 0; i < n; ++i) o *= (1ull << n) - (1ull << i);
  return o;
}

inline unsigned long long sp_order_f2(unsigned m) {
  unsigned long long o = 1ull << (m * m);
  for (unsigned i = 1; i <= m; ++i) o *= (1ull << (2 * i)) - 1;
  return o;
}

}  // namespace oracle
