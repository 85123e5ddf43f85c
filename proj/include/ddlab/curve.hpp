#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ddlab/geometry.hpp"
#include "ddlab/poly.hpp"

namespace ddlab {

struct CurveComponentKind {
  enum class Kind { linear, circular, other };

  Kind kind = Kind::other;
  Point center;            // circular only
  Rational squared_radius; // circular only, > 0

  bool is_linear() const { return kind == Kind::linear; }
  bool is_circular() const { return kind == Kind::circular; }
  std::string to_string() const;
};

/// LINEAR for degree 1; CIRCULAR when f = alpha((x-a)^2 + (y-b)^2 - rho2)
/// with rho2 > 0; OTHER otherwise. Throws Error(invalid_argument) for a
/// constant f.
CurveComponentKind classify_factor(const BivariatePoly& f);

struct CurveFactor {
  BivariatePoly poly;
  int multiplicity = 1;
  CurveComponentKind kind;
};

/// A real algebraic curve V(f) given by its irreducible factors. The
/// classification of every factor is computed here, never trusted from input.
class CurveSpec {
 public:
  CurveSpec() = default;
  /// Throws Error(invalid_argument) for constant factors, nonpositive
  /// multiplicities, or factors that are scalar multiples of each other.
  explicit CurveSpec(std::vector<std::pair<BivariatePoly, int>> factors);

  const std::vector<CurveFactor>& factors() const { return factors_; }
  /// r = sum of multiplicity * degree over the factors.
  int degree() const { return degree_; }
  /// Degree of the reduced curve (multiplicities dropped).
  int reduced_degree() const;
  bool has_linear_components() const;

  /// Product of the distinct factors.
  BivariatePoly reduced_polynomial() const;
  /// The curve with its linear components removed. May be empty.
  CurveSpec without_linear_components() const;

  bool on_linear_component(const Point& p) const;

 private:
  std::vector<CurveFactor> factors_;
  int degree_ = 0;
};

Rational evaluate(const BivariatePoly& f, const Point& p);

/// True iff some factor vanishes at p.
bool on_curve(const CurveSpec& c, const Point& p);

/// Centers of all circular components, sorted and deduplicated.
std::vector<Point> circular_centers(const CurveSpec& c);

/// Curve text format:
///
///   degree R
///   [multiplicity K]
///   c i j  c i j ...        (one factor per line, "c" is NUM/DEN)
///   ---
///   ...
///
/// '#' lines and blank lines are ignored; '+' between triples is allowed. The
/// header degree must equal the computed degree. Throws ParseError.
CurveSpec curve_from_text(std::string_view text);
std::string curve_to_text(const CurveSpec& c);

/// Named catalog curves: line, parabola, cubic, quartic, circle,
/// line+parabola, two-circles, parallel-lines, orthogonal-lines,
/// concentric-circles. Throws Error(unknown_family).
CurveSpec curve_preset(std::string_view name);
std::vector<std::string> curve_preset_names();

}  // namespace ddlab
