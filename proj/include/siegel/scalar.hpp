#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "siegel/error.hpp"

namespace siegel {

enum class ScalarMode { Rational, Float };

inline constexpr double kDefaultTol = 1e-9;

/// Real scalar in one of two modes.
///
/// Rational values are exact (GMP rationals, always canonical). Float values
/// carry the tolerance under which they are compared: |a - b| <= tol counts as
/// equality, so closed inequalities include their tolerance band. Arithmetic
/// between a Rational and a Float yields a Float; integer literals therefore
/// promote cleanly into Float computations.
class Scalar {
 public:
  struct FloatValue {
    double value = 0.0;
    double tol = kDefaultTol;
  };

  Scalar() : repr_(mpq_class(0)) {}
  Scalar(int v) : repr_(mpq_class(v)) {}                   // NOLINT(implicit)
  Scalar(long v) : repr_(mpq_class(v)) {}                  // NOLINT(implicit)
  Scalar(long long v);                                     // NOLINT(implicit)
  Scalar(const mpz_class& v) : repr_(mpq_class(v)) {}      // NOLINT(implicit)
  explicit Scalar(mpq_class v);

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar from_double(double value, double tol = kDefaultTol);
  /// Parses "p", "-p" or "p/q" with arbitrary-size integers.
  static Scalar parse(std::string_view text);

  ScalarMode mode() const noexcept {
    return std::holds_alternative<mpq_class>(repr_) ? ScalarMode::Rational : ScalarMode::Float;
  }
  bool is_rational() const noexcept { return mode() == ScalarMode::Rational; }
  bool is_float() const noexcept { return mode() == ScalarMode::Float; }

  const mpq_class& rational() const;
  double to_double() const;
  /// 0 for rational values.
  double tol() const noexcept;

  bool is_integer() const;
  mpz_class to_integer() const;
  long to_long() const;

  /// -1, 0 or +1, with the tolerance band counting as zero.
  int sign() const;
  bool is_zero() const { return sign() == 0; }

  Scalar abs() const;
  mpz_class floor() const;
  /// Nearest integer, halves rounded up.
  mpz_class round() const;
  /// Exact for rational perfect squares, otherwise a Float.
  Scalar sqrt() const;
  /// Same value in Float mode.
  Scalar to_float(double tol = kDefaultTol) const;

  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  /// Three-valued comparison; Float operands compare equal inside tolerance.
  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend std::weak_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = compare(a, b);
    return c < 0 ? std::weak_ordering::less
                 : (c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent);
  }

  /// Bit-for-bit equality of representation (mode, value and tolerance).
  bool identical(const Scalar& o) const;

 private:
  std::variant<mpq_class, FloatValue> repr_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace siegel
