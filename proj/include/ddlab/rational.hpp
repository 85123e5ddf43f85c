#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ddlab {

using Integer = mpz_class;

/// Exact signed rational, always in lowest terms with a positive denominator.
///
/// Equal values have identical representations, so comparison, hashing and
/// text serialization are all canonical.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& value) : value_(value) {}
  /// Throws Error(invalid_argument) when den == 0.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& value);

  const Integer& num() const { return value_.get_num(); }
  const Integer& den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  /// Throws Error(invalid_argument) on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// "NUM/DEN" in lowest terms; the denominator is always written.
  std::string to_string() const;

  /// Parses "NUM/DEN" with an optional leading minus on NUM and DEN >= 1.
  /// Non-reduced input is accepted and canonicalized. Throws ParseError.
  static Rational parse(std::string_view text);

  std::size_t hash() const;

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);

/// Cheap parse helper for literals in tests and presets: "3", "-1/2".
Rational rat(std::string_view text);

}  // namespace ddlab

template <>
struct std::hash<ddlab::Rational> {
  std::size_t operator()(const ddlab::Rational& r) const noexcept { return r.hash(); }
};
