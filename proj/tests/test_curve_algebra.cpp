#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>

#include "ddlab/algebra.hpp"
#include "ddlab/curve.hpp"
#include "ddlab/error.hpp"
#include "oracles.hpp"

using namespace ddlab;
using BP = BivariatePoly;

namespace {

BP X() { return BP::x(); }
BP Y() { return BP::y(); }
BP C(const char* v) { return BP::constant(rat(v)); }
Point pt(const char* x, const char* y) { return {rat(x), rat(y)}; }

UnivariatePoly upoly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* v : coeffs) c.push_back(rat(v));
  return UnivariatePoly(std::move(c));
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::io;
}

// Distinct real points of y = x^2 and x^2 + (y - c)^2 = rho2, by solving
// the quadratic in u = x^2 exactly.
std::size_t parabola_circle_oracle(const mpq_class& c, const mpq_class& rho2) {
  const mpq_class s = 2 * c - 1;
  const mpq_class disc = 1 - 4 * c + 4 * rho2;
  if (disc < 0) return 0;
  auto points_for = [](int sign) { return sign > 0 ? 2u : sign == 0 ? 1u : 0u; };
  // sign of u+ = (s + sqrt(disc)) / 2
  int plus = s > 0 ? 1 : (disc > s * s ? 1 : disc == s * s ? 0 : -1);
  if (disc == 0) return points_for(s > 0 ? 1 : s == 0 ? 0 : -1);
  // sign of u- = (s - sqrt(disc)) / 2
  int minus = s <= 0 ? -1 : (s * s > disc ? 1 : s * s == disc ? 0 : -1);
  return points_for(plus) + points_for(minus);
}

}  // namespace

TEST_CASE("evaluate and on_curve") {
  const BP circle = X() * X() + Y() * Y() - C("1");
  CHECK(evaluate(circle, pt("1", "0")) == Rational(0));
  CHECK(evaluate(circle, pt("0", "0")) == Rational(-1));
  CHECK(evaluate(Y() - X() * X(), pt("2", "4")) == Rational(0));

  const CurveSpec unit({{circle, 1}});
  CHECK(on_curve(unit, pt("1", "0")));
  CHECK_FALSE(on_curve(unit, pt("2", "0")));
  const CurveSpec two({{Y(), 1}, {Y() - X() * X(), 1}});
  CHECK(on_curve(two, pt("3", "0")));
}

TEST_CASE("on_curve agrees with factor evaluation") {
  const CurveSpec c = curve_preset("line+parabola");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> u(-6, 6);
  for (int i = 0; i < 300; ++i) {
    const Point p{Rational(u(rng)), Rational(u(rng))};
    bool zero = false;
    for (const auto& f : c.factors()) zero = zero || evaluate(f.poly, p).is_zero();
    REQUIRE(on_curve(c, p) == zero);
  }
}

TEST_CASE("classify_factor examples") {
  CHECK(classify_factor(X() + rat("2") * Y() - C("3")).is_linear());
  const auto k = classify_factor(rat("2") * X() * X() + rat("2") * Y() * Y() - C("8"));
  REQUIRE(k.is_circular());
  CHECK(k.center == pt("0", "0"));
  CHECK(k.squared_radius == Rational(4));
  CHECK(classify_factor(X() * X() - Y()).kind == CurveComponentKind::Kind::other);
  CHECK(classify_factor(X() * X() + Y() * Y() + C("1")).kind == CurveComponentKind::Kind::other);
  CHECK(classify_factor(X() * X() + rat("2") * Y() * Y() - C("1")).kind == CurveComponentKind::Kind::other);
  CHECK_THROWS_AS(classify_factor(C("5")), Error);
}

TEST_CASE("classify_factor round trip on random circles") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> u(-500, 500), d(1, 40);
  auto r = [&] { return Rational(Integer(u(rng)), Integer(d(rng))); };
  for (int i = 0; i < 500; ++i) {
    const Point center{r(), r()};
    Rational rho2 = r().abs() + rat("1/97");
    Rational alpha = r();
    if (alpha.is_zero()) alpha = rat("-3/2");
    const auto k = classify_factor(BP::circle(center, rho2, alpha));
    REQUIRE(k.is_circular());
    REQUIRE(k.center == center);
    REQUIRE(k.squared_radius == rho2);
  }
}

TEST_CASE("circular_centers") {
  CHECK(circular_centers(curve_preset("parabola")).empty());
  CHECK(circular_centers(curve_preset("circle")) == std::vector<Point>{pt("0", "0")});
  const CurveSpec c({{BP::circle(pt("0", "0"), rat("1")), 1}, {BP::circle(pt("3", "0"), rat("4")), 1}, {Y(), 1}});
  CHECK(circular_centers(c) == std::vector<Point>{pt("0", "0"), pt("3", "0")});
  CHECK(circular_centers(curve_preset("concentric-circles")) == std::vector<Point>{pt("0", "0")});
}

TEST_CASE("curve spec validation") {
  CHECK_THROWS_AS(CurveSpec({{C("2"), 1}}), Error);
  CHECK_THROWS_AS(CurveSpec({{Y(), 0}}), Error);
  CHECK_THROWS_AS(CurveSpec({{Y() - X(), 1}, {rat("2") * Y() - rat("2") * X(), 1}}), Error);
  const CurveSpec c({{Y(), 2}, {Y() - X() * X(), 1}});
  CHECK(c.degree() == 4);
  CHECK(c.reduced_degree() == 3);
  CHECK(c.has_linear_components());
  CHECK(c.without_linear_components().degree() == 2);
  CHECK(c.on_linear_component(pt("5", "0")));
  CHECK_FALSE(c.on_linear_component(pt("2", "4")));
}

TEST_CASE("curve text format") {
  const std::string text = "degree 3\n# comment\n1/1 0 1\n---\nmultiplicity 1\n1/1 0 1 + -1/1 2 0\n";
  const CurveSpec c = curve_from_text(text);
  CHECK(c.degree() == 3);
  CHECK(c.factors().size() == 2);
  CHECK(curve_from_text(curve_to_text(c)).factors().size() == 2);
  CHECK(curve_to_text(curve_from_text(curve_to_text(c))) == curve_to_text(c));

  const CurveSpec m = curve_from_text("degree 2\nmultiplicity 2\n1/1 0 1\n");
  CHECK(m.degree() == 2);
  CHECK(m.factors()[0].multiplicity == 2);
  CHECK(curve_from_text(curve_to_text(m)).factors()[0].multiplicity == 2);

  CHECK_THROWS_AS(curve_from_text("degree 3\n1/1 0 1\n"), ParseError);
  CHECK_THROWS_AS(curve_from_text("1/1 0 1\n"), ParseError);
  CHECK_THROWS_AS(curve_from_text("degree 1\n1/1 0\n"), ParseError);
  CHECK_THROWS_AS(curve_from_text("degree 1\n1/0 0 1\n"), ParseError);
  try {
    curve_from_text("degree 2\n1/1 0 1\n1/1 1 0\n");
    FAIL("missing separator accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  // classification is recomputed on load
  CHECK(curve_from_text("degree 2\n1/1 2 0 1/1 0 2 -4/1 0 0\n").factors()[0].kind.is_circular());
}

TEST_CASE("curve presets") {
  for (const auto& name : curve_preset_names()) CHECK(curve_preset(name).degree() >= 1);
  CHECK(code_of([] { curve_preset("no-such-curve"); }) == ErrorCode::unknown_family);
}

TEST_CASE("sylvester resultant examples") {
  const BP parab = Y() - X() * X();
  const BP circ = X() * X() + (Y() - C("2")) * (Y() - C("2")) - C("4");
  const UnivariatePoly r = sylvester_resultant(parab, circ, Axis::y);
  CHECK(r.monic() == upoly({"0", "0", "-3", "0", "1"}));
  CHECK(sturm_distinct_real_roots(r) == 3);

  const UnivariatePoly c = sylvester_resultant(Y(), Y() - C("1"), Axis::y);
  CHECK(c.degree() == 0);
  CHECK_FALSE(c.is_zero());

  CHECK(sylvester_resultant(Y() - X(), rat("2") * Y() - rat("2") * X(), Axis::y).is_zero());
  CHECK(code_of([&] { sylvester_resultant(X(), Y(), Axis::y); }) == ErrorCode::degenerate_degree);
}

TEST_CASE("resultant vanishes at planted common roots") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> u(-9, 9), d(1, 5);
  auto r = [&] { return Rational(Integer(u(rng)), Integer(d(rng))); };
  auto random_poly = [&](int deg) {
    std::map<std::pair<int, int>, Rational> terms;
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j) terms[{i, j}] = r();
    terms[{0, deg}] = Rational(1) + r().abs();  // keeps degree in y
    return BP(std::move(terms));
  };
  for (int it = 0; it < 60; ++it) {
    const Point root{r(), r()};
    BP f = random_poly(1 + it % 3);
    BP g = random_poly(1 + (it / 3) % 3);
    f = f - BP::constant(f.evaluate(root));
    g = g - BP::constant(g.evaluate(root));
    if (f.degree_in(Axis::y) < 1 || g.degree_in(Axis::y) < 1) continue;
    const UnivariatePoly res = sylvester_resultant(f, g, Axis::y);
    REQUIRE(res.evaluate(root.x).is_zero());
  }
}

TEST_CASE("sturm examples") {
  CHECK(sturm_distinct_real_roots(upoly({"-1", "0", "1"})) == 2);
  CHECK(sturm_distinct_real_roots(upoly({"1", "0", "1"})) == 0);
  CHECK(sturm_distinct_real_roots(upoly({"0", "0", "-3", "0", "1"})) == 3);
  CHECK(sturm_distinct_real_roots(upoly({"5"})) == 0);
  CHECK(code_of([] { sturm_distinct_real_roots(UnivariatePoly()); }) == ErrorCode::zero_polynomial);
  const SturmChain chain(upoly({"-2", "0", "1"}));
  CHECK(chain.roots_in(rat("0"), rat("2")) == 1);
  CHECK(chain.roots_in(rat("-2"), rat("2")) == 2);
  CHECK(chain.roots_in(rat("3/2"), rat("2")) == 0);
}

TEST_CASE("sturm counts on a 50-polynomial corpus") {
  // Each entry: distinct rational roots (some repeated) times irreducible
  // quadratics x^2 + b x + c with b^2 < 4c. The analytic count is the
  // number of distinct linear factors.
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> u(-40, 40), d(1, 9), k(0, 6), q(0, 2);
  for (int it = 0; it < 50; ++it) {
    std::set<Rational> roots;
    const long want = k(rng);
    while (static_cast<long>(roots.size()) < want) roots.insert(Rational(Integer(u(rng)), Integer(d(rng))));
    UnivariatePoly p = UnivariatePoly::constant(Rational(Integer(1 + it), Integer(3)));
    for (const auto& root : roots) {
      p = p * UnivariatePoly::linear_root(root);
      if ((it + root.num().get_si()) % 3 == 0) p = p * UnivariatePoly::linear_root(root);
    }
    for (long i = 0, n = q(rng); i < n; ++i) {
      const Rational b(Integer(u(rng)), Integer(d(rng)));
      const Rational c = b * b / Rational(4) + Rational(Integer(d(rng)), Integer(d(rng)));
      p = p * UnivariatePoly({c, b, Rational(1)});
    }
    INFO("corpus entry " << it << ": " << p.to_string());
    REQUIRE(sturm_distinct_real_roots(p) == static_cast<int>(roots.size()));
    const auto iso = isolate_real_roots(SturmChain(p));
    REQUIRE(iso.size() == roots.size());
    auto it_root = roots.begin();
    for (const auto& ri : iso) {
      REQUIRE(ri.lo <= *it_root);
      REQUIRE(*it_root <= ri.hi);
      ++it_root;
    }
  }
}

TEST_CASE("intersection fixtures") {
  const CurveSpec parab = curve_preset("parabola");
  CHECK(count_curve_circle_intersections(parab, BP::circle(pt("0", "2"), rat("4"))) == 3);
  const CurveSpec unit = curve_preset("circle");
  CHECK(count_curve_circle_intersections(unit, BP::circle(pt("3", "0"), rat("1"))) == 0);
  CHECK(count_curve_circle_intersections(unit, BP::circle(pt("2", "0"), rat("1"))) == 1);
  CHECK(count_curve_circle_intersections(unit, BP::circle(pt("1", "0"), rat("1"))) == 2);
  const CurveSpec line = curve_preset("line");
  CHECK(count_curve_circle_intersections(line, BP::circle(pt("0", "0"), rat("1"))) == 2);
  CHECK(count_curve_circle_intersections(line, BP::circle(pt("0", "1"), rat("1"))) == 1);
  CHECK(count_curve_circle_intersections(line, BP::circle(pt("0", "2"), rat("1"))) == 0);
  // vertical line x = 1/2 meets the unit circle twice
  const CurveSpec vline({{X() - C("1/2"), 1}});
  CHECK(count_curve_circle_intersections(vline, BP::circle(pt("0", "0"), rat("1"))) == 2);
  // union: line y = 0 and parabola against the unit circle: (±1, 0) and two parabola points
  CHECK(count_curve_circle_intersections(curve_preset("line+parabola"), BP::circle(pt("0", "0"), rat("1"))) == 4);
  // shared point of two components counted once: origin lies on y=0 and y=x^2
  CHECK(count_curve_circle_intersections(curve_preset("line+parabola"), BP::circle(pt("1", "0"), rat("1"))) == 3);
}

TEST_CASE("intersection errors") {
  CHECK(code_of([] { count_curve_circle_intersections(curve_preset("circle"), BP::circle(pt("0", "0"), rat("1"), rat("3"))); }) ==
        ErrorCode::shared_component);
  CHECK(code_of([] { count_curve_circle_intersections(curve_preset("circle"), Y() - X() * X()); }) ==
        ErrorCode::not_a_circle);
}

TEST_CASE("parabola-circle counts match the exact quadratic oracle") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> u(-12, 12), d(1, 4), r(1, 40);
  const CurveSpec parab = curve_preset("parabola");
  for (int it = 0; it < 150; ++it) {
    const Rational c(Integer(u(rng)), Integer(d(rng)));
    const Rational rho2(Integer(r(rng)), Integer(d(rng)));
    const auto got = count_curve_circle_intersections(parab, BP::circle({Rational(0), c}, rho2));
    INFO("c = " << c.to_string() << ", rho2 = " << rho2.to_string());
    REQUIRE(got == parabola_circle_oracle(c.raw(), rho2.raw()));
  }
}

TEST_CASE("Bezout cap on 1000 random curve-circle pairs") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> u(-6, 6), d(1, 3), r(1, 30);
  const std::vector<std::string> names = {"line", "parabola", "cubic", "quartic", "circle", "line+parabola",
                                          "two-circles", "parallel-lines", "orthogonal-lines", "concentric-circles"};
  int checked = 0;
  for (int it = 0; it < 1000; ++it) {
    const CurveSpec c = curve_preset(names[static_cast<std::size_t>(it) % names.size()]);
    const Point center{Rational(Integer(u(rng)), Integer(d(rng))), Rational(Integer(u(rng)), Integer(d(rng)))};
    const BP circle = BP::circle(center, Rational(Integer(r(rng)), Integer(d(rng))));
    bool shared = false;
    for (const auto& f : c.factors()) shared = shared || is_scalar_multiple(f.poly, circle);
    if (shared) continue;
    const auto rep = intersect_curve_circle(c, circle);
    INFO("curve " << names[static_cast<std::size_t>(it) % names.size()] << " circle " << circle.to_string());
    REQUIRE(rep.count <= static_cast<std::size_t>(2 * c.degree()));
    ++checked;
  }
  CHECK(checked >= 990);
}

TEST_CASE("complement component estimator") {
  const Window w2{rat("-2"), rat("2"), rat("-2"), rat("2")};
  const Window w1{rat("-1"), rat("1"), rat("-1"), rat("1")};
  CHECK(estimate_complement_components(curve_preset("circle"), w2, 256) == 2);
  CHECK(estimate_complement_components(curve_preset("line"), w1, 256) == 2);
  CHECK(estimate_complement_components(CurveSpec({{X() * X() + Y() * Y() + C("1"), 1}}), w1, 64) == 1);
  CHECK(estimate_complement_components(curve_preset("orthogonal-lines"), w1, 128) == 4);
  CHECK_THROWS_AS(estimate_complement_components(curve_preset("line"), w1, 1), Error);
}
