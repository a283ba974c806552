#include "siegel/sampling.hpp"

#include "siegel/siegel_maps.hpp"

namespace siegel {
namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_rational(Rng& rng, int num_range, int max_den) {
  return Scalar::rational(uniform_int(rng, -num_range, num_range), uniform_int(rng, 1, max_den));
}

std::vector<Matrix> sp_generators(int g0) {
  const auto k = static_cast<std::size_t>(g0);
  const Matrix id = Matrix::identity(k);
  const Matrix z(k, k);
  const Matrix j = standard_J(k);
  std::vector<Matrix> out{j, -j};
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Matrix s(k, k);
      s(a, b) = 1;
      s(b, a) = 1;
      out.push_back(assemble({{id, s}, {z, id}}));
      out.push_back(assemble({{id, -s}, {z, id}}));
    }
  }
  return out;
}

std::vector<Matrix> g_generators(int g0) {
  std::vector<Matrix> out;
  for (const auto& s : sp_generators(g0)) out.push_back(embed_first_family(s));
  out.push_back(embed_second_family(Matrix::identity(2 * static_cast<std::size_t>(g0))));
  return out;
}

Matrix random_word(Rng& rng, const std::vector<Matrix>& generators, std::size_t length) {
  Matrix m = Matrix::identity(generators.front().rows());
  for (std::size_t i = 0; i < length; ++i) {
    m = m * generators[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(generators.size()) - 1))];
  }
  return m;
}

Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t moves) {
  Matrix m = Matrix::identity(n);
  const int last = static_cast<int>(n) - 1;
  for (std::size_t t = 0; t < moves; ++t) {
    const auto i = static_cast<std::size_t>(uniform_int(rng, 0, last));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, last));
    if (i == j) {
      for (std::size_t r = 0; r < n; ++r) m(r, i) = -m(r, i);
      continue;
    }
    const Scalar c = uniform_int(rng, 0, 1) ? 1 : -1;
    for (std::size_t r = 0; r < n; ++r) m(r, j) += c * m(r, i);
  }
  return m;
}

Matrix random_spd(Rng& rng, std::size_t n, int entry_range, int max_den) {
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) l(i, j) = random_rational(rng, entry_range, max_den);
    if (l(i, i).is_zero()) l(i, i) = 1;
  }
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = Scalar::rational(uniform_int(rng, 1, 4), uniform_int(rng, 1, max_den));
  return l.transpose() * l + d;
}

SiegelPoint random_w21(Rng& rng) {
  const Scalar beta = random_rational(rng, 6, 5);
  const Scalar gamma = random_rational(rng, 40, 7);
  const Scalar delta = beta.abs() + Scalar::rational(uniform_int(rng, 1, 30), uniform_int(rng, 1, 9));
  return w21_point(beta, gamma, delta);
}

SiegelPoint random_w41(Rng& rng) { return sigma_inverse(q_map(random_spd(rng, 4, 2, 2))); }

}  // namespace siegel
