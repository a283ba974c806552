#include "siegel/scalar.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace siegel {
namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_literal(s)) {
    throw Error(ErrorCode::ParseError, "invalid integer literal '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

// Float snapping: a value within tolerance of an integer is that integer.
double snap(double v, double tol) {
  const double r = std::round(v);
  return std::fabs(v - r) <= tol ? r : v;
}

mpz_class double_to_mpz(double v) {
  mpz_class z;
  mpz_set_d(z.get_mpz_t(), v);
  return z;
}

}  // namespace

Scalar::Scalar(long long v) : repr_(mpq_class(static_cast<long>(v))) {
  static_assert(sizeof(long) == sizeof(long long), "64-bit long expected");
}

Scalar::Scalar(mpq_class v) : repr_(std::move(v)) {
  std::get<mpq_class>(repr_).canonicalize();
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::from_double(double value, double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(ErrorCode::ParseError, "float tolerance must be positive and finite");
  }
  if (!std::isfinite(value)) throw Error(ErrorCode::ParseError, "non-finite float value");
  Scalar s;
  s.repr_ = FloatValue{value, tol};
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return rational(num, den);
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return *q;
  throw Error(ErrorCode::ModeMismatch, "rational value requested from a float scalar");
}

double Scalar::to_double() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return q->get_d();
  return std::get<FloatValue>(repr_).value;
}

double Scalar::tol() const noexcept {
  if (const auto* f = std::get_if<FloatValue>(&repr_)) return f->tol;
  return 0.0;
}

bool Scalar::is_integer() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return q->get_den() == 1;
  const auto& f = std::get<FloatValue>(repr_);
  return std::fabs(f.value - std::round(f.value)) <= f.tol;
}

mpz_class Scalar::to_integer() const {
  if (!is_integer()) {
    throw Error(ErrorCode::NonIntegerEntries, "value " + to_string() + " is not an integer");
  }
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return q->get_num();
  return double_to_mpz(std::round(std::get<FloatValue>(repr_).value));
}

long Scalar::to_long() const {
  const mpz_class z = to_integer();
  if (!z.fits_slong_p()) throw Error(ErrorCode::NonIntegerEntries, "integer out of range");
  return z.get_si();
}

int Scalar::sign() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return sgn(*q);
  const auto& f = std::get<FloatValue>(repr_);
  if (std::fabs(f.value) <= f.tol) return 0;
  return f.value > 0 ? 1 : -1;
}

Scalar Scalar::abs() const { return sign() < 0 ? -*this : *this; }

mpz_class Scalar::floor() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return r;
  }
  const auto& f = std::get<FloatValue>(repr_);
  return double_to_mpz(std::floor(snap(f.value, f.tol)));
}

mpz_class Scalar::round() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) {
    return Scalar(*q + mpq_class(1, 2)).floor();
  }
  const auto& f = std::get<FloatValue>(repr_);
  return double_to_mpz(std::floor(snap(f.value + 0.5, f.tol)));
}

Scalar Scalar::sqrt() const {
  if (sign() < 0) throw Error(ErrorCode::NotPositiveDefinite, "square root of a negative value");
  if (const auto* q = std::get_if<mpq_class>(&repr_)) {
    if (mpz_perfect_square_p(q->get_num_mpz_t()) && mpz_perfect_square_p(q->get_den_mpz_t())) {
      return rational(::sqrt(q->get_num()), ::sqrt(q->get_den()));
    }
    return from_double(std::sqrt(q->get_d()), kDefaultTol);
  }
  const auto& f = std::get<FloatValue>(repr_);
  return from_double(std::sqrt(std::max(f.value, 0.0)), f.tol);
}

Scalar Scalar::to_float(double tol) const {
  if (is_float()) return *this;
  return from_double(to_double(), tol);
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&repr_)) return q->get_str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<FloatValue>(repr_).value);
  return std::string(buf, res.ptr);
}

namespace {

template <typename RationalOp, typename DoubleOp>
void apply(std::variant<mpq_class, Scalar::FloatValue>& lhs,
           const std::variant<mpq_class, Scalar::FloatValue>& rhs, RationalOp rop, DoubleOp dop) {
  auto* lq = std::get_if<mpq_class>(&lhs);
  const auto* rq = std::get_if<mpq_class>(&rhs);
  if (lq && rq) {
    rop(*lq, *rq);
    return;
  }
  const double a = lq ? lq->get_d() : std::get<Scalar::FloatValue>(lhs).value;
  const double b = rq ? rq->get_d() : std::get<Scalar::FloatValue>(rhs).value;
  const double ta = lq ? 0.0 : std::get<Scalar::FloatValue>(lhs).tol;
  const double tb = rq ? 0.0 : std::get<Scalar::FloatValue>(rhs).tol;
  lhs = Scalar::FloatValue{dop(a, b), std::max(ta, tb)};
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  apply(repr_, o.repr_, [](mpq_class& a, const mpq_class& b) { a += b; },
        [](double a, double b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  apply(repr_, o.repr_, [](mpq_class& a, const mpq_class& b) { a -= b; },
        [](double a, double b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  apply(repr_, o.repr_, [](mpq_class& a, const mpq_class& b) { a *= b; },
        [](double a, double b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_rational() ? sgn(o.rational()) == 0 : o.to_double() == 0.0) {
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  }
  apply(repr_, o.repr_, [](mpq_class& a, const mpq_class& b) { a /= b; },
        [](double a, double b) { return a / b; });
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  if (auto* q = std::get_if<mpq_class>(&r.repr_)) {
    *q = -*q;
  } else {
    auto& f = std::get<Scalar::FloatValue>(r.repr_);
    f.value = -f.value;
  }
  return r;
}

int compare(const Scalar& a, const Scalar& b) {
  const auto* aq = std::get_if<mpq_class>(&a.repr_);
  const auto* bq = std::get_if<mpq_class>(&b.repr_);
  if (aq && bq) {
    const int c = cmp(*aq, *bq);
    return (c > 0) - (c < 0);
  }
  const double diff = a.to_double() - b.to_double();
  const double tol = std::max(a.tol(), b.tol());
  if (std::fabs(diff) <= tol) return 0;
  return diff > 0 ? 1 : -1;
}

bool Scalar::identical(const Scalar& o) const {
  if (mode() != o.mode()) return false;
  if (is_rational()) return rational() == o.rational();
  const auto& a = std::get<FloatValue>(repr_);
  const auto& b = std::get<FloatValue>(o.repr_);
  return a.value == b.value && a.tol == b.tol;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace siegel
