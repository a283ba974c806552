#include <gtest/gtest.h>

#include "oracles.hpp"
#include "siegel/minkowski.hpp"
#include "siegel/sampling.hpp"

using namespace siegel;

namespace {

Scalar q(long p, long d = 1) { return Scalar::rational(p, d); }

BinaryForm random_form(Rng& rng) {
  while (true) {
    const Scalar phi = Scalar::rational(std::uniform_int_distribution<int>(1, 12)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    const Scalar chi = random_rational(rng, 12, 3);
    const Scalar psi = Scalar::rational(std::uniform_int_distribution<int>(1, 12)(rng), std::uniform_int_distribution<int>(1, 3)(rng));
    if (phi * psi - chi * chi > Scalar(0)) return {phi, chi, psi};
  }
}

}  // namespace

TEST(Lagrange, DomainExamples) {
  EXPECT_TRUE(in_lagrange_domain({1, 0, 1}));
  EXPECT_TRUE(in_lagrange_domain({1, q(-1, 4), 2}));
  EXPECT_FALSE(in_lagrange_domain({5, 4, 5}));
  EXPECT_THROW(in_lagrange_domain({1, 2, 1}), Error);
}

TEST(Lagrange, ReduceExamples) {
  const auto id = lagrange_reduce({1, 0, 1});
  EXPECT_EQ(id.form, (BinaryForm{1, 0, 1}));
  EXPECT_EQ(lagrange_reduce({5, 4, 5}).form, (BinaryForm{2, -1, 5}));
  EXPECT_EQ(lagrange_reduce({1, 0, q(1, 4)}).form, (BinaryForm{q(1, 4), 0, 1}));
}

TEST(Lagrange, MatchesBruteForce) {
  Rng rng(41);
  const auto mats = oracle::unimodular2(10);
  for (int i = 0; i < 60; ++i) {
    const BinaryForm f = random_form(rng);
    const LagrangeResult r = lagrange_reduce(f);
    EXPECT_TRUE(in_lagrange_domain(r.form));
    EXPECT_EQ(r.form.matrix(), oracle::congruence(f.matrix(), r.g.m));
    EXPECT_TRUE(is_unimodular(r.g.m));
    const auto found = oracle::brute_force_lagrange(f.phi, f.chi, f.psi, mats);
    ASSERT_FALSE(found.empty());
    for (const auto& x : found) EXPECT_EQ((BinaryForm{x[0], x[1], x[2]}), r.form);
  }
}

TEST(Lagrange, FloatMode) {
  const double t = 1e-9;
  const BinaryForm f{Scalar::from_double(5, t), Scalar::from_double(4, t), Scalar::from_double(5, t)};
  const LagrangeResult r = lagrange_reduce(f);
  EXPECT_TRUE(r.form.phi.is_float());
  EXPECT_EQ(r.form, (BinaryForm{2, -1, 5}));
}

TEST(QOfM, Examples) {
  EXPECT_EQ(q_of_m({1, 0, 1, 0}), 3);
  EXPECT_EQ(q_of_m({0, -1, 0, 1}), 4);
  EXPECT_EQ(q_of_m({-1, 1, 0, 0}), 2);
  try {
    q_of_m({0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroVector);
  }
}

TEST(BarnesCohn, Examples) {
  const ConditionReport id = barnes_cohn_conditions(Matrix::identity(4));
  EXPECT_EQ(id.values.size(), 26u);
  EXPECT_TRUE(id.member);
  const ConditionReport w = barnes_cohn_conditions(reduction_tables().witnesses[0]);
  EXPECT_TRUE(w.member);
  EXPECT_EQ(w.zero_count(), 1u);
  EXPECT_TRUE(w.values[1].boundary);
  EXPECT_EQ(w.values[1].name, "s33-s22");
  const ConditionReport bad = barnes_cohn_conditions(Matrix::diagonal({2, 1, 3, 4}));
  EXPECT_FALSE(bad.member);
  EXPECT_EQ(bad.violated(), std::vector<std::string>{"s22-s11"});
  EXPECT_THROW(barnes_cohn_conditions(Matrix::diagonal({1, 1, 1, -1})), Error);
}

TEST(BarnesCohn, WitnessHypotheses) {
  const auto& t = reduction_tables();
  for (std::size_t j = 0; j < 12; ++j) {
    const ConditionReport at = barnes_cohn_conditions(t.witnesses[j]);
    const ConditionReport image = barnes_cohn_conditions(oracle::congruence(t.witnesses[j], t.generators[j]));
    EXPECT_TRUE(at.member) << j + 1;
    EXPECT_EQ(at.zero_count(), 1u) << j + 1;
    EXPECT_TRUE(image.member) << j + 1;
    EXPECT_EQ(image.zero_count(), 1u) << j + 1;
  }
}

TEST(Minkowski, IdentityIsFixed) {
  const MinkowskiResult r = minkowski_reduce4(Matrix::identity(4));
  EXPECT_EQ(r.reduced, Matrix::identity(4));
  EXPECT_EQ(r.g.m, Matrix::identity(4));
}

TEST(Minkowski, IdentityClassReducesToIdentity) {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const Matrix u = random_unimodular(rng, 4, 2 + static_cast<std::size_t>(i % 10));
    const Matrix s = oracle::congruence(Matrix::identity(4), u);
    const MinkowskiResult r = minkowski_reduce4(s);
    EXPECT_EQ(r.reduced, Matrix::identity(4));
    EXPECT_EQ(oracle::congruence(s, r.g.m), r.reduced);
    EXPECT_TRUE(is_unimodular(r.g.m));
  }
}

TEST(Minkowski, WitnessImageStaysInDomain) {
  const auto& t = reduction_tables();
  const Matrix s = oracle::congruence(t.witnesses[4], t.generators[4]);
  const MinkowskiResult r = minkowski_reduce4(s);
  EXPECT_TRUE(barnes_cohn_conditions(r.reduced).member);
  EXPECT_TRUE(barnes_cohn_conditions(s).member);
  EXPECT_EQ(oracle::congruence(s, r.g.m), r.reduced);
}

TEST(Minkowski, OutputIsReducedAndAttainsFirstMinimum) {
  Rng rng(43);
  for (int i = 0; i < 60; ++i) {
    Matrix s = random_spd(rng, 4);
    s = oracle::congruence(s, random_unimodular(rng, 4, 6));
    const MinkowskiResult r = minkowski_reduce4(s);
    const ConditionReport rep = barnes_cohn_conditions(r.reduced);
    EXPECT_TRUE(rep.member);
    EXPECT_EQ(oracle::congruence(s, r.g.m), r.reduced);
    EXPECT_EQ(r.reduced(0, 0), oracle::grid_minimum(r.reduced, 2));
  }
}

TEST(Minkowski, Idempotent) {
  Rng rng(44);
  for (int i = 0; i < 40; ++i) {
    const MinkowskiResult once = minkowski_reduce4(oracle::congruence(random_spd(rng, 4), random_unimodular(rng, 4, 5)));
    const MinkowskiResult twice = minkowski_reduce4(once.reduced);
    const ConditionReport a = barnes_cohn_conditions(once.reduced);
    const ConditionReport b = barnes_cohn_conditions(twice.reduced);
    for (std::size_t k = 0; k < a.values.size(); ++k) EXPECT_EQ(a.values[k].value, b.values[k].value);
    EXPECT_EQ(twice.reduced, once.reduced);
  }
}

TEST(Minkowski, FloatMode) {
  Rng rng(45);
  const Matrix s = oracle::congruence(random_spd(rng, 4), random_unimodular(rng, 4, 6));
  Matrix f(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) f(i, j) = s(i, j).to_float(1e-9);
  const MinkowskiResult exact = minkowski_reduce4(s);
  const MinkowskiResult approx = minkowski_reduce4(f);
  EXPECT_TRUE(barnes_cohn_conditions(approx.reduced).member);
  EXPECT_EQ(approx.reduced, exact.reduced);
}

TEST(Minkowski, RejectsIndefinite) {
  try {
    minkowski_reduce4(Matrix::diagonal({1, 1, 1, -1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPositiveDefinite);
  }
}

TEST(Tables, ValidAndChecksummed) {
  const auto& t = reduction_tables();
  EXPECT_EQ(t.m_vectors.size(), 20u);
  EXPECT_EQ(t.generators.size(), 12u);
  EXPECT_EQ(t.witnesses.size(), 12u);
  EXPECT_EQ(t.reps.size(), 28u);
  EXPECT_EQ(t.reps[2], expand_word({3, 1}, t.generators));
  EXPECT_EQ(t.reps[15], expand_word({12, 10, 1}, t.generators));
  EXPECT_EQ(t.reps[17], t.generators[1]);
  const Json dumped = tables_to_json(t);
  EXPECT_EQ(dumped.at("checksum").get<std::string>(), t.checksum);
  EXPECT_NO_THROW(parse_tables(dumped));
}

TEST(Tables, TamperingIsDetected) {
  Json doc = Json::parse(embedded_tables_text());
  doc["witnesses"][0][0][0] = 11;
  EXPECT_THROW(parse_tables(doc), Error);
  doc["checksum"] = table_checksum(doc);
  EXPECT_NO_THROW(parse_tables(doc));
  doc["witnesses"][0][0][0] = -1;
  doc["checksum"] = table_checksum(doc);
  EXPECT_THROW(parse_tables(doc), Error);
}
