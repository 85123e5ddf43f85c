#pragma once

#include <cstddef>
#include <vector>

#include "ddlab/curve.hpp"
#include "ddlab/poly.hpp"

namespace ddlab {

/// Determinant of the Sylvester matrix of f and g viewed as polynomials in
/// `eliminate`, as a polynomial in the remaining variable. It vanishes
/// identically iff f and g share a factor involving that variable.
///
/// Throws Error(degenerate_degree) when either polynomial is constant in the
/// eliminated variable.
UnivariatePoly sylvester_resultant(const BivariatePoly& f, const BivariatePoly& g, Axis eliminate);

/// u / gcd(u, u'), made monic.
UnivariatePoly square_free_part(const UnivariatePoly& u);

class SturmChain {
 public:
  /// Builds the chain of the square-free part of u. Throws
  /// Error(zero_polynomial) for u = 0.
  explicit SturmChain(const UnivariatePoly& u);

  const UnivariatePoly& base() const { return chain_.front(); }
  std::size_t length() const { return chain_.size(); }

  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool positive) const;

  /// Distinct real roots in the half-open interval (a, b].
  int roots_in(const Rational& a, const Rational& b) const;
  int total_real_roots() const;

 private:
  std::vector<UnivariatePoly> chain_;
};

/// Exact number of distinct real roots. Throws Error(zero_polynomial).
int sturm_distinct_real_roots(const UnivariatePoly& u);

/// An isolating interval (lo, hi] holding exactly one root, or the exact
/// rational root lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
};

/// Isolating intervals for all distinct real roots, in increasing order.
std::vector<RootInterval> isolate_real_roots(const SturmChain& chain);

/// One bisection step; exact roots are left unchanged.
RootInterval bisect(const SturmChain& chain, const RootInterval& root);

struct IntersectionOptions {
  // Accept a candidate box once both sides are narrower than this.
  Rational box_threshold = Rational(Integer(1), Integer(1) << 64);
  int max_shears = 5;
};

struct IntersectionReport {
  std::size_t count = 0;
  int attempts = 0;
  // The distinct x- and y-projections of the accepted boxes agreed.
  bool axis_counts_agree = false;
};

/// Distinct real points of V(c) ∩ V(circle) by resultant elimination in
/// both axes, box pairing of Sturm-isolated roots and interval refinement.
///
/// Throws Error(not_a_circle) unless `circle` classifies as CIRCULAR, and
/// Error(shared_component) when it is a scalar multiple of a factor of c.
std::size_t count_curve_circle_intersections(const CurveSpec& c, const BivariatePoly& circle,
                                             const IntersectionOptions& options = {});
IntersectionReport intersect_curve_circle(const CurveSpec& c, const BivariatePoly& circle,
                                          const IntersectionOptions& options = {});

/// Same machinery for a general pair of polynomials without a common factor.
IntersectionReport intersect_polynomials(const BivariatePoly& f, const BivariatePoly& g,
                                         const IntersectionOptions& options = {});

struct Window {
  Rational x_min;
  Rational x_max;
  Rational y_min;
  Rational y_max;
};

/// Approximate count of connected components of window \ V(c): the window is
/// split into resolution^2 cells, cells where some factor vanishes or changes
/// sign at a corner are removed, and the rest are flood filled.
/// Diagnostic only; never exact. Throws Error(invalid_argument) when
/// resolution < 2 or the window is empty.
std::size_t estimate_complement_components(const CurveSpec& c, const Window& window, int resolution);

}  // namespace ddlab
