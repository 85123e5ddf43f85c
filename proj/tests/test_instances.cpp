#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "ddlab/error.hpp"
#include "ddlab/instances.hpp"
#include "ddlab/spectrum.hpp"
#include "oracles.hpp"

using namespace ddlab;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::io;
}

Box box(const char* lo, const char* hi, std::int64_t den = 1) { return {rat(lo), rat(lo), rat(hi), rat(hi), den}; }

}  // namespace

TEST_CASE("splitmix64 reference values") {
  // first outputs for seed 0 of the published reference generator
  SplitMix64 g(0);
  CHECK(g.next() == 0xe220a8397b1dcdafull);
  CHECK(g.next() == 0x6e789e6aa1b965f4ull);
  SplitMix64 h(7);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(h.below(10) < 10);
    const auto v = h.between(-3, 3);
    REQUIRE((v >= -3 && v <= 3));
  }
  CHECK(stream(1, "p1").next() != stream(1, "p2").next());
  CHECK(stream(1, "p1").next() == stream(1, "p1").next());
}

TEST_CASE("grid") {
  CHECK(gen_grid(1).size() == 1);
  CHECK(gen_grid(2).size() == 4);
  CHECK(gen_grid(3).size() == 9);
  CHECK(distinct_distances(gen_grid(3), gen_grid(3)) == 5);
  CHECK(code_of([] { gen_grid(0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("on-curve points are exact and deterministic") {
  for (const auto& name : curve_preset_names()) {
    const CurveSpec c = curve_preset(name);
    const PointSet p = gen_on_curve(c, 40, 11);
    INFO(name);
    REQUIRE(p.size() == 40);
    for (const auto& q : p) REQUIRE(on_curve(c, q));
    REQUIRE(point_set_to_text(gen_on_curve(c, 40, 11)) == point_set_to_text(p));
    REQUIRE(point_set_to_text(gen_on_curve(c, 40, 12)) != point_set_to_text(p));
  }
  const PointSet line = gen_on_curve(curve_preset("line"), 5, 1);
  for (const auto& q : line) CHECK(q.y.is_zero());
  const PointSet circle = gen_on_curve(curve_preset("circle"), 4, 1);
  for (const auto& q : circle) CHECK(q.x * q.x + q.y * q.y == Rational(1));
  const PointSet parab = gen_on_curve(curve_preset("parabola"), 6, 1);
  for (const auto& q : parab) CHECK(q.y == q.x * q.x);
}

TEST_CASE("on-curve rejects curves outside the catalog") {
  const auto x = BivariatePoly::x(), y = BivariatePoly::y();
  const CurveSpec ellipse({{x * x + rat("2") * y * y - BivariatePoly::constant(rat("1")), 1}});
  CHECK(code_of([&] { gen_on_curve(ellipse, 3, 1); }) == ErrorCode::unsupported_curve);
  const CurveSpec irrational({{x * x + y * y - BivariatePoly::constant(rat("2")), 1}});
  CHECK(code_of([&] { gen_on_curve(irrational, 3, 1); }) == ErrorCode::unsupported_curve);
  // graph x = y^2 + 1 is in the catalog
  const CurveSpec sideways({{x - y * y - BivariatePoly::constant(rat("1")), 1}});
  for (const auto& q : gen_on_curve(sideways, 10, 2)) CHECK(on_curve(sideways, q));
}

TEST_CASE("cloud") {
  CHECK(gen_cloud(1, box("0", "0"), 3).size() == 1);
  const PointSet a = gen_cloud(100, box("-5", "5", 2), 42);
  CHECK(a.size() == 100);
  CHECK(point_set_to_text(gen_cloud(100, box("-5", "5", 2), 42)) == point_set_to_text(a));
  for (const auto& p : a) {
    REQUIRE(p.x >= rat("-5"));
    REQUIRE(p.x <= rat("5"));
    REQUIRE((p.y * Rational(2)).is_integer());
  }
  // 21 x 21 lattice exactly filled
  CHECK(gen_cloud(441, box("-5", "5", 2), 1).size() == 441);
  CHECK(code_of([] { gen_cloud(442, box("-5", "5", 2), 1); }) == ErrorCode::box_too_small);
  CHECK(code_of([] { gen_cloud(2, box("1/3", "1/2"), 1); }) == ErrorCode::box_too_small);
}

TEST_CASE("adversarial families") {
  const Instance trap = gen_adversarial("center-trap", {10, 12, 5});
  CHECK(trap.p2.contains({rat("0"), rat("0")}));
  for (const auto& p : trap.p1) CHECK(on_curve(trap.curve, p));

  const Instance heavy = gen_adversarial("linear-heavy", {20, 16, 5});
  const auto on_axis = std::count_if(heavy.p1.begin(), heavy.p1.end(), [](const Point& p) { return p.y.is_zero(); });
  CHECK(2 * static_cast<std::size_t>(on_axis) >= heavy.p1.size());
  for (const auto& p : heavy.p1) CHECK(on_curve(heavy.curve, p));

  const Instance cyc = gen_adversarial("concyclic", {12, 10, 5});
  CHECK(cyc.curve.degree() == 2);
  for (const auto& p : cyc.p1) CHECK(on_curve(cyc.curve, p));
  CHECK(oracle::max_per_center(oracle::from(cyc.p1), oracle::from(cyc.p2)) == 4);

  for (const auto& f : adversarial_families()) {
    const Instance inst = gen_adversarial(f, {9, 9, 1});
    INFO(f);
    CHECK(inst.family == f);
    CHECK(inst.p1.size() == 9);
    CHECK(inst.p2.size() == 9);
    for (const auto& p : inst.p1) REQUIRE(on_curve(inst.curve, p));
    CHECK(point_set_to_text(gen_adversarial(f, {9, 9, 1}).p2) == point_set_to_text(inst.p2));
  }
  CHECK(code_of([] { gen_adversarial("no-such-family", {4, 4, 1}); }) == ErrorCode::unknown_family);
}

TEST_CASE("bipartite instances avoid centers") {
  for (const char* name : {"circle", "two-circles", "concentric-circles"}) {
    const Instance inst = gen_bipartite(name, 10, 30, 8);
    for (const auto& c : circular_centers(inst.curve)) CHECK_FALSE(inst.p2.contains(c));
    for (const auto& p : inst.p1) CHECK(on_curve(inst.curve, p));
  }
  CHECK(code_of([] { gen_bipartite("parabola", 0, 3, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("sidecar header") {
  const CurveSpec c = curve_preset("line");
  const auto h = instance_header("on-curve", 9, &c);
  REQUIRE(h.size() >= 3);
  CHECK(h[0] == "family: on-curve");
  CHECK(h[1] == "seed: 9");
  CHECK(h[2] == "curve:");
  CHECK(instance_header("grid", 0, nullptr).size() == 2);
}
