#include "siegel/minkowski.hpp"

#include <algorithm>
#include <numeric>

namespace siegel {
namespace {

void require_pd(const Matrix& s, std::size_t n, const char* what) {
  if (!s.is_square() || s.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": expected dimension " + std::to_string(n));
  }
  if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, std::string(what) + ": form is not symmetric");
  if (!is_positive_definite(s)) throw Error(ErrorCode::NotPositiveDefinite, std::string(what) + ": form is not positive definite");
}

Scalar quadratic_value(const Matrix& s, const std::array<int, 4>& m) {
  Scalar v = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (m[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (m[j] == 0) continue;
      v += Scalar(m[i] * m[j]) * s(i, j);
    }
  }
  return v;
}

std::string m_name(const MVector& m) {
  std::string out = "m(";
  for (std::size_t i = 0; i < 4; ++i) out += (i ? "," : "") + std::to_string(m.c[i]);
  return out + ")";
}

}  // namespace

BinaryForm BinaryForm::from_matrix(const Matrix& m) {
  if (!m.is_square() || m.rows() != 2) throw Error(ErrorCode::DimensionMismatch, "binary form must be 2x2");
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "binary form must be symmetric");
  return {m(0, 0), m(0, 1), m(1, 1)};
}

bool in_lagrange_domain(const BinaryForm& f) {
  require_pd(f.matrix(), 2, "in_lagrange_domain");
  const Scalar two_chi = f.chi + f.chi;
  return f.phi <= f.psi && -f.phi <= two_chi && two_chi <= Scalar(0);
}

LagrangeResult lagrange_reduce(const BinaryForm& f) {
  require_pd(f.matrix(), 2, "lagrange_reduce");
  BinaryForm r = f;
  Matrix g = Matrix::identity(2);
  for (std::size_t step = 0;; ++step) {
    if (step > kMinkowskiStepLimit) throw Error(ErrorCode::IterationLimit, "Lagrange reduction did not terminate");
    const mpz_class n = (-r.chi / r.phi).round();
    if (n != 0) {
      const Scalar s(n);
      r.psi += (r.chi + r.chi) * s + s * s * r.phi;
      r.chi += s * r.phi;
      g = g * Matrix{{1, s}, {0, 1}};
    }
    if (r.chi > Scalar(0)) {
      r.chi = -r.chi;
      g = g * Matrix{{1, 0}, {0, -1}};
    }
    if (r.psi < r.phi) {
      std::swap(r.phi, r.psi);
      g = g * Matrix{{0, 1}, {1, 0}};
      continue;
    }
    break;
  }
  return {GroupElement::trusted(std::move(g), GroupKind::UnimodularGL), r};
}

std::size_t ConditionReport::zero_count() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](const Condition& c) { return c.boundary; }));
}

std::vector<std::string> ConditionReport::violated() const {
  std::vector<std::string> out;
  for (const auto& c : values)
    if (c.value.sign() < 0) out.push_back(c.name);
  return out;
}

ConditionReport barnes_cohn_conditions(const Matrix& s, const std::vector<MVector>& m_vectors) {
  require_pd(s, 4, "barnes_cohn_conditions");
  ConditionReport rep;
  auto add = [&rep](std::string name, Scalar v) {
    const bool zero = v.is_zero();
    rep.values.push_back({std::move(name), std::move(v), zero});
  };
  add("s22-s11", s(1, 1) - s(0, 0));
  add("s33-s22", s(2, 2) - s(1, 1));
  add("s44-s33", s(3, 3) - s(2, 2));
  add("s12", s(0, 1));
  add("s23", s(1, 2));
  add("s34", s(2, 3));
  for (const auto& m : m_vectors) {
    const auto q = static_cast<std::size_t>(m.q - 1);
    add(m_name(m), quadratic_value(s, m.c) - s(q, q));
  }
  rep.member = std::all_of(rep.values.begin(), rep.values.end(), [](const Condition& c) { return c.value.sign() >= 0; });
  return rep;
}

ConditionReport barnes_cohn_conditions(const Matrix& s) { return barnes_cohn_conditions(s, reduction_tables().m_vectors); }

bool in_minkowski_domain(const Matrix& s) { return barnes_cohn_conditions(s).member; }

MinkowskiResult minkowski_reduce4(const Matrix& s, const std::vector<MVector>& m_vectors) {
  require_pd(s, 4, "minkowski_reduce4");
  Matrix cur = s;
  Matrix g = Matrix::identity(4);
  std::size_t steps = 0;
  auto apply = [&](const Matrix& step) {
    cur = congruence(cur, step);
    g = g * step;
  };
  while (true) {
    if (++steps > kMinkowskiStepLimit) throw Error(ErrorCode::IterationLimit, "Minkowski reduction did not terminate");

    std::array<std::size_t, 4> perm{};
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return cur(a, a) < cur(b, b); });
    if (!std::is_sorted(perm.begin(), perm.end())) {
      Matrix p(4, 4);
      for (std::size_t k = 0; k < 4; ++k) p(perm[k], k) = 1;
      apply(p);
    }

    std::array<int, 4> d{1, 1, 1, 1};
    for (std::size_t i = 1; i < 4; ++i) {
      const int sgn_off = cur(i - 1, i).sign();
      d[i] = sgn_off < 0 ? -d[i - 1] : d[i - 1];
    }
    if (d != std::array<int, 4>{1, 1, 1, 1}) {
      apply(Matrix::diagonal({d[0], d[1], d[2], d[3]}));
    }

    const MVector* worst = nullptr;
    Scalar worst_value = 0;
    for (const auto& m : m_vectors) {
      const auto q = static_cast<std::size_t>(m.q - 1);
      const Scalar v = quadratic_value(cur, m.c) - cur(q, q);
      if (v.sign() < 0 && (worst == nullptr || v < worst_value)) {
        worst = &m;
        worst_value = v;
      }
    }
    if (worst == nullptr) break;
    Matrix step = Matrix::identity(4);
    const auto q = static_cast<std::size_t>(worst->q - 1);
    for (std::size_t i = 0; i < 4; ++i) step(i, q) = worst->c[i];
    apply(step);
  }
  return {GroupElement::trusted(std::move(g), GroupKind::UnimodularGL), std::move(cur), steps};
}

MinkowskiResult minkowski_reduce4(const Matrix& s) { return minkowski_reduce4(s, reduction_tables().m_vectors); }

}  // namespace siegel
