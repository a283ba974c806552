#include <gtest/gtest.h>

#include "oracles.hpp"
#include "siegel/sampling.hpp"
#include "siegel/siegel_maps.hpp"

using namespace siegel;

namespace {

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, 3, 3);
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix random_symmetric(Rng& rng, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_rational(rng, 3, 2);
  return m;
}

// The genus-two Sigma image written out entry by entry.
Matrix explicit_sigma(const Scalar& b, const Scalar& c, const Scalar& d) {
  const Scalar k = Scalar(1) / (d * d - b * b);
  const Scalar r = c * c + d * d - b * b;
  return k * Matrix{{d, -b, -c * d, -c * b},
                    {-b, d, c * b, c * d},
                    {-c * d, c * b, d * r, b * r},
                    {-c * b, c * d, b * r, d * r}};
}

}  // namespace

TEST(SigmaMap, Examples) {
  EXPECT_EQ(sigma_map(SiegelPoint(ComplexMatrix::imaginary(Matrix::identity(3)))), Matrix::identity(6));
  const SiegelPoint w(ComplexMatrix(Matrix{{1}}, Matrix{{1}}));
  const Matrix s = sigma_map(w);
  EXPECT_EQ(s, (Matrix{{1, -1}, {-1, 2}}));
  EXPECT_TRUE(oracle::symplectic(s));
  EXPECT_EQ(sigma_inverse(s), w);
  EXPECT_EQ(sigma_inverse(Matrix::identity(4)), SiegelPoint(ComplexMatrix::imaginary(Matrix::identity(2))));
}

TEST(SigmaMap, GenusTwoExplicitForm) {
  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const SiegelPoint w = random_w21(rng);
    const W21Params p = w21_params(w);
    const Matrix s = sigma_map(w);
    EXPECT_EQ(s, explicit_sigma(p.beta, p.gamma, p.delta));
    EXPECT_TRUE(commutes_with_T(s));
  }
  const SiegelPoint w = w21_point(0, 0, 2);
  EXPECT_EQ(sigma_inverse(explicit_sigma(0, 0, 2)), w);
}

TEST(SigmaMap, ImageIsSymmetricDefiniteSymplectic) {
  Rng rng(10);
  for (int i = 0; i < 40; ++i) {
    const std::size_t g = 1 + static_cast<std::size_t>(i % 3);
    Matrix lambda = random_symmetric(rng, g);
    const SiegelPoint w(ComplexMatrix(lambda, random_spd(rng, g)));
    const Matrix s = sigma_map(w);
    EXPECT_TRUE(is_sigma_image(s));
    EXPECT_TRUE(oracle::symplectic(s));
    EXPECT_EQ(sigma_inverse(s), w);
  }
}

TEST(SigmaInverse, RejectsNonImages) {
  try {
    sigma_inverse(Matrix{{2, 0}, {0, 2}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInImage);
  }
  EXPECT_THROW(sigma_inverse(Matrix{{-1, 0}, {0, -1}}), Error);
}

TEST(GeeMap, Examples) {
  const GeePair id = gee_map(Matrix::identity(8));
  EXPECT_EQ(id.first, Matrix::identity(4));
  EXPECT_EQ(id.second, Matrix::identity(4));
  const Matrix a{{2, 3}, {5, 7}};
  const Matrix v = embed_first_family(a);
  const GeePair sym = gee_map(v);
  EXPECT_EQ(sym.first, a);
  EXPECT_EQ(sym.second, a);
  Matrix bad = Matrix::identity(4);
  bad(0, 1) = 1;
  try {
    gee_map(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedBlockPattern);
  }
}

TEST(GeeMap, LinearMultiplicativeTransposeCompatible) {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    const Matrix a1 = random_invertible(rng, 2), b1 = random_invertible(rng, 2);
    const Matrix a2 = random_invertible(rng, 2), b2 = random_invertible(rng, 2);
    const Matrix v1 = gee_inverse(a1, b1), v2 = gee_inverse(a2, b2);
    EXPECT_TRUE(has_v_pattern(v1));
    const GeePair sum = gee_map(v1 + v2);
    EXPECT_EQ(sum.first, a1 + a2);
    EXPECT_EQ(sum.second, b1 + b2);
    const GeePair prod = gee_map(v1 * v2);
    EXPECT_EQ(prod.first, a1 * a2);
    EXPECT_EQ(prod.second, b1 * b2);
    const GeePair tr = gee_map(v1.transpose());
    EXPECT_EQ(tr.first, a1.transpose());
    EXPECT_EQ(tr.second, b1.transpose());
  }
}

TEST(PMap, Examples) {
  EXPECT_EQ(p_map(Matrix::identity(4)), Matrix::identity(2));
  const Matrix second = embed_second_family(Matrix::identity(2));
  EXPECT_EQ(p_map(second), (Matrix{{1, 0}, {0, -1}}));
  EXPECT_EQ(q_map(Matrix{{1, 0}, {0, -1}}), second);
  EXPECT_EQ(q_map(Matrix::identity(4)), Matrix::identity(8));
  Matrix not_sp = Matrix::identity(4) * Scalar(2);
  try {
    p_map(not_sp);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSymplectic);
  }
}

TEST(PMap, GenusTwoComposite) {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const W21Params p = w21_params(random_w21(rng));
    const Matrix expected =
        (Scalar(1) / (p.delta + p.beta)) *
        Matrix{{1, -p.gamma}, {-p.gamma, p.gamma * p.gamma + p.delta * p.delta - p.beta * p.beta}};
    EXPECT_EQ(p_map(sigma_map(w21_point(p.beta, p.gamma, p.delta))), expected);
  }
}

TEST(PMap, EmbeddingsProjectAsExpected) {
  Rng rng(14);
  const auto gens = sp_generators(2);
  for (int i = 0; i < 30; ++i) {
    const Matrix s = random_word(rng, gens, 1 + static_cast<std::size_t>(i % 6));
    EXPECT_EQ(p_map(embed_first_family(s)), s);
    const std::size_t k = 2;
    const Matrix flip = assemble({{Matrix::identity(k), Matrix(k, k)}, {Matrix(k, k), -Matrix::identity(k)}});
    EXPECT_EQ(p_map(embed_second_family(s)), s * flip);
  }
}

TEST(QMap, InvertsPMapAndIsSymplectic) {
  Rng rng(15);
  const Matrix t = build_T(2, 1);
  for (int i = 0; i < 50; ++i) {
    const Matrix sigma = random_spd(rng, 4);
    const Matrix q = q_map(sigma);
    EXPECT_TRUE(is_symplectic(q));
    EXPECT_EQ(t * q * t, q);
    EXPECT_EQ(p_map(q), sigma);
    const Matrix inv = random_invertible(rng, 4);
    EXPECT_EQ(p_map(q_map(inv)), inv);
  }
}

TEST(Invariant, Examples) {
  EXPECT_EQ(invariant_I(w21_point(0, Scalar::rational(7, 3), 5)), Scalar(1));
  EXPECT_EQ(invariant_I(w21_point(Scalar::rational(3, 5), 0, 1)), Scalar::rational(1, 4));
  EXPECT_EQ(invariant_I(SiegelPoint(ComplexMatrix::imaginary(Matrix::identity(4)))), Scalar(1));
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const W21Params p = w21_params(random_w21(rng));
    EXPECT_EQ(invariant_I(w21_point(p.beta, p.gamma, p.delta)), (p.delta - p.beta) / (p.delta + p.beta));
  }
  try {
    invariant_I(SiegelPoint(ComplexMatrix::imaginary(Matrix{{1, 0}, {0, 2}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInLocus);
  }
}

TEST(Invariant, PreservedByGroup) {
  Rng rng(17);
  for (int g0 = 1; g0 <= 2; ++g0) {
    const auto gens = g_generators(g0);
    for (int i = 0; i < 30; ++i) {
      const SiegelPoint w = g0 == 1 ? random_w21(rng) : random_w41(rng);
      const Matrix G = random_word(rng, gens, 1 + static_cast<std::size_t>(i % 6));
      EXPECT_EQ(invariant_I(SiegelPoint::unchecked(modular_action(G, w.w()))), invariant_I(w));
    }
  }
}

TEST(Diagrams, CongruenceCommutesWithP) {
  Rng rng(18);
  const auto gens = g_generators(2);
  for (int i = 0; i < 30; ++i) {
    const Matrix s = q_map(random_spd(rng, 4));
    const Matrix G = random_word(rng, gens, 1 + static_cast<std::size_t>(i % 6));
    EXPECT_EQ(p_map(congruence(s, G)), congruence(p_map(s), p_map(G)));
  }
}

TEST(Diagrams, SigmaIntertwinesActions) {
  Rng rng(19);
  const auto gens = sp_generators(2);
  for (int i = 0; i < 30; ++i) {
    const SiegelPoint w(ComplexMatrix(random_symmetric(rng, 2), random_spd(rng, 2)));
    const Matrix G = random_word(rng, gens, 1 + static_cast<std::size_t>(i % 6));
    const SiegelPoint image = SiegelPoint::unchecked(modular_action(G, w.w()));
    EXPECT_EQ(sigma_map(image), oracle::congruence(sigma_map(w), oracle::inverse(G)));
  }
}
