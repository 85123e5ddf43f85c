#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ddlab/geometry.hpp"
#include "ddlab/rational.hpp"

namespace ddlab {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The leading coefficient is nonzero unless the polynomial is zero.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coefficients);
  static UnivariatePoly constant(const Rational& c) { return UnivariatePoly({c}); }
  /// (x - root)
  static UnivariatePoly linear_root(const Rational& root) { return UnivariatePoly({-root, Rational(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }
  Rational coefficient(int k) const;

  Rational evaluate(const Rational& x) const;
  /// Sign at +infinity (positive) or -infinity (negative); 0 for the zero polynomial.
  int sign_at_infinity(bool positive) const;

  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

  /// Euclidean division; throws Error(zero_polynomial) for a zero divisor.
  static std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a,
                                                          const UnivariatePoly& b);

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

enum class Axis { x, y };

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  Rational width() const { return hi - lo; }
};

/// Sparse bivariate polynomial over Q. Terms map (i, j) -> coefficient of
/// x^i y^j; zero coefficients are never stored.
class BivariatePoly {
 public:
  using Exponent = std::pair<int, int>;

  BivariatePoly() = default;
  explicit BivariatePoly(std::map<Exponent, Rational> terms);
  static BivariatePoly constant(const Rational& c);
  static BivariatePoly x();
  static BivariatePoly y();
  /// alpha * ((x - a)^2 + (y - b)^2 - rho2)
  static BivariatePoly circle(const Point& center, const Rational& rho2, const Rational& alpha = Rational(1));
  /// a x + b y + c
  static BivariatePoly line(const Rational& a, const Rational& b, const Rational& c);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(Axis axis) const;
  Rational coefficient(int i, int j) const;

  Rational evaluate(const Point& p) const;
  /// Natural interval extension over the box [xs] x [ys].
  Interval evaluate(const Interval& xs, const Interval& ys) const;

  /// Coefficients c_k of v^k when viewed as a polynomial in v = `axis`,
  /// each a univariate polynomial in the other variable.
  std::vector<UnivariatePoly> as_polynomial_in(Axis axis) const;

  /// f(x + lambda*y, y + mu*x).
  BivariatePoly sheared(const Rational& lambda, const Rational& mu) const;

  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& c, const BivariatePoly& a);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  /// Human-readable form, e.g. "x^2 + y^2 - 1".
  std::string to_string() const;

 private:
  std::map<Exponent, Rational> terms_;
};

BivariatePoly pow(const BivariatePoly& base, unsigned exponent);

/// True iff f = c*g for some nonzero rational c (both nonzero).
bool is_scalar_multiple(const BivariatePoly& f, const BivariatePoly& g);

/// Interval power with exact handling of even powers straddling zero.
Interval interval_pow(const Interval& v, unsigned exponent);

}  // namespace ddlab
