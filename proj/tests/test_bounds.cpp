#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "ddlab/bounds.hpp"
#include "ddlab/error.hpp"
#include "ddlab/instances.hpp"
#include "oracles.hpp"

using namespace ddlab;

namespace {

Point pt(const char* x, const char* y) { return {rat(x), rat(y)}; }
PointSet set(std::initializer_list<Point> pts) { return PointSet(std::vector<Point>(pts)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::io;
}

}  // namespace

TEST_CASE("energy identity examples") {
  const PointSet a = set({pt("0", "0"), pt("1", "0")}), b = set({pt("0", "1")});
  const auto r = check_energy_identity(a, b, 2, spectrum(a, b));
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.lhs == "2");
  CHECK(r.rhs == "2");

  const PointSet o = set({pt("0", "0")});
  const auto z = check_energy_identity(o, o, 2, spectrum(o, o));
  CHECK(z.status == CheckStatus::pass);
  CHECK(z.lhs == "0");
  CHECK(z.rhs == "0");

  std::mt19937_64 rng(301);
  const PointSet p = oracle::random_points(rng, 8, 2), q = oracle::random_points(rng, 8, 2);
  CHECK(check_energy_identity(p, q, 3, spectrum(p, q)).status == CheckStatus::pass);
  CHECK(enumerate_energy(p, q, 3, 1'000'000) == oracle::energy_tuples(oracle::from(p), oracle::from(q), 3));
  CHECK(check_energy_identity(p, q, 3, spectrum(p, q), 1000).status == CheckStatus::skip);
  CHECK(code_of([&] { enumerate_energy(p, q, 3, 1000); }) == ErrorCode::budget_exceeded);

  // a corrupted spectrum is caught
  const auto bad = DistanceSpectrum::from_entries({{rat("1"), 2}});
  CHECK(check_energy_identity(a, b, 2, bad).status == CheckStatus::fail);
}

TEST_CASE("holder examples") {
  const auto single = DistanceSpectrum::from_entries({{rat("7"), 12}});
  for (unsigned d : {2u, 3u}) {
    const auto r = check_holder(single, d);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.lhs == r.rhs);
  }
  const PointSet a = set({pt("0", "0"), pt("1", "0")}), b = set({pt("0", "1")});
  const auto two = check_holder(spectrum(a, b), 2);
  CHECK(two.status == CheckStatus::pass);
  CHECK(two.lhs == "4");
  CHECK(two.rhs == "4");

  const PointSet bis1 = set({pt("0", "0"), pt("2", "0")}), bis2 = set({pt("1", "5")});
  const auto eq = check_holder(spectrum(bis1, bis2), 3);
  CHECK(eq.lhs == eq.rhs);

  const PointSet g = gen_grid(3);
  const auto strict = check_holder(spectrum(g, g), 3);
  CHECK(strict.status == CheckStatus::pass);
  CHECK(Integer(strict.lhs) > Integer(strict.rhs));
}

TEST_CASE("bezout cap") {
  const CurveSpec circle = curve_preset("circle");
  const PointSet five = gen_on_curve(circle, 5, 9);
  CHECK(code_of([&] { check_bezout_cap(five, set({pt("0", "0")}), circle); }) == ErrorCode::precondition);
  const auto r = check_bezout_cap(five, set({pt("3", "0")}), circle);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.rhs == "4");
  CHECK(Integer(r.lhs) <= 2);

  const CurveSpec parab = curve_preset("parabola");
  const PointSet nine = gen_on_curve(parab, 9, 3);
  const PointSet generic = set({pt("1/3", "-7/2")});
  const auto p = check_bezout_cap(nine, generic, parab);
  CHECK(p.status == CheckStatus::pass);
  CHECK(Integer(p.lhs) == oracle::max_per_center(oracle::from(nine), oracle::from(generic)));
  CHECK(code_of([&] { check_bezout_cap(set({pt("1", "5")}), generic, parab); }) == ErrorCode::precondition);
}

TEST_CASE("pencil bound") {
  const CurveSpec parab = curve_preset("parabola");
  const PointSet eight = gen_on_curve(parab, 8, 4);
  const auto r = check_pencil_bound(pt("0", "5"), eight, parab);
  CHECK(r.status == CheckStatus::pass);
  CHECK(r.rhs == "2");
  CHECK(Integer(r.lhs) == oracle::distinct_from({0, 5}, oracle::from(eight)));

  const CurveSpec circle = curve_preset("circle");
  const PointSet four = gen_on_curve(circle, 4, 2);
  const auto on = check_pencil_bound(four[0], four, circle);
  CHECK(on.status == CheckStatus::pass);
  CHECK(on.rhs == "1");
  CHECK(code_of([&] { check_pencil_bound(pt("0", "0"), four, circle); }) == ErrorCode::precondition);

  const CurveSpec cubic = curve_preset("cubic");
  const PointSet hundred = gen_on_curve(cubic, 100, 8);
  const auto c = check_pencil_bound(pt("17/3", "-2/5"), hundred, cubic);
  CHECK(c.status == CheckStatus::pass);
  CHECK(c.rhs == "17");
}

TEST_CASE("theorem bound values") {
  const auto a = theorem_bound(1024, 1024);
  CHECK(a.regime == 'A');
  CHECK(std::fabs(static_cast<double>(a.value) - 1024.0 / std::sqrt(10.0)) < 1e-9);
  const auto two = theorem_bound(2, 2);
  CHECK(two.regime == 'A');
  CHECK(std::fabs(static_cast<double>(two.value) - 2.0) < 1e-12);
  const auto b = theorem_bound(2, 1024);
  CHECK(b.regime == 'B');
  CHECK(std::fabs(static_cast<double>(b.value) - std::cbrt(2.0) * 32.0) < 1e-9);
  CHECK(code_of([] { theorem_bound(5, 1); }) == ErrorCode::invalid_argument);
}

TEST_CASE("theorem regime is monotone in m") {
  for (std::uint64_t n : {2ull, 16ull, 1000ull, 4096ull, 1ull << 20}) {
    bool seen_a = false;
    for (std::uint64_t m = 1; m <= 4096; ++m) {
      const char regime = theorem_bound(m, n).regime;
      REQUIRE((regime == 'A' || regime == 'B'));
      if (seen_a) REQUIRE(regime == 'A');
      seen_a = seen_a || regime == 'A';
    }
    REQUIRE(seen_a);
  }
}

TEST_CASE("dyadic sums") {
  const auto s = DistanceSpectrum::from_entries({{rat("1"), 5}, {rat("2"), 2}, {rat("3"), 1}});
  const auto p = dyadic_profile(s, 2, 10);
  CHECK(dyadic_upper_sum(p, 2) == 108);
  CHECK(dyadic_lower_sum(p, 2) == 21);
  CHECK(s.energy(2) == 30);
}

TEST_CASE("verify_all on a conforming instance") {
  const Instance inst = gen_bipartite("parabola", 12, 40, 7);
  const auto rep = verify_all(inst.p1, inst.p2, inst.curve);
  CHECK_FALSE(rep.has_failures());
  for (const char* name : {"energy_identity_d1", "energy_identity_d2", "holder_d2", "holder_d3", "bezout_cap",
                           "pdelta_cap", "markov", "dyadic_upper_d3", "k2_free", "incidence_lower", "e2_split"}) {
    INFO(name);
    REQUIRE(rep.find(name) != nullptr);
  }
  CHECK(rep.find("bezout_cap")->status == CheckStatus::pass);
  CHECK(rep.find("k2_free")->status == CheckStatus::pass);
  CHECK_FALSE(rep.ratios.empty());
  CHECK_FALSE(rep.incidence.empty());
}

TEST_CASE("verify_all surfaces the center trap per policy") {
  const Instance inst = gen_adversarial("center-trap", {10, 12, 2});
  const auto skip = verify_all(inst.p1, inst.p2, inst.curve);
  const auto* b = skip.find("bezout_cap");
  REQUIRE(b != nullptr);
  CHECK(b->status == CheckStatus::skip);
  CHECK(b->note.find("precondition violated") != std::string::npos);
  CHECK(skip.find("holder_d2")->status == CheckStatus::pass);
  CHECK_FALSE(skip.has_failures());

  VerifyConfig cfg;
  cfg.policy = PreconditionPolicy::fail;
  const auto fail = verify_all(inst.p1, inst.p2, inst.curve, cfg);
  CHECK(fail.find("bezout_cap")->status == CheckStatus::fail);
  CHECK(fail.has_failures());
}

TEST_CASE("verify_all on m = n = 1") {
  const auto rep = verify_all(set({pt("2", "4")}), set({pt("0", "7")}), curve_preset("parabola"));
  CHECK_FALSE(rep.has_failures());
  CHECK(rep.find("holder_d2")->lhs == "1");
  CHECK(rep.find("holder_d2")->rhs == "1");
}

TEST_CASE("verify_all catches a replaced spectrum") {
  const Instance inst = gen_bipartite("parabola", 6, 8, 2);
  VerifyConfig cfg;
  auto entries = spectrum(inst.p1, inst.p2).entries();
  entries.front().second += 1;
  cfg.spectrum = DistanceSpectrum::from_entries(entries);
  const auto rep = verify_all(inst.p1, inst.p2, inst.curve, cfg);
  CHECK(rep.has_failures());
  CHECK(rep.find("energy_identity_d2")->status == CheckStatus::fail);
}

TEST_CASE("report formats") {
  const Instance inst = gen_bipartite("circle", 6, 10, 4);
  VerifyConfig cfg;
  cfg.instance_id = "demo";
  const auto rep = verify_all(inst.p1, inst.p2, inst.curve, cfg);
  const std::string lines = report_to_lines(rep);
  CHECK(lines.rfind("# log-base 2\n", 0) == 0);
  CHECK(lines.find("CHECK bezout_cap PASS ") != std::string::npos);
  CHECK(lines.find("RATIO theorem_bound_regime_") != std::string::npos);
  const std::string text = report_to_text(rep);
  CHECK(text.find("log-base: 2") != std::string::npos);
  CHECK(text.find("demo") != std::string::npos);
  CHECK(incidence_to_csv(rep).rfind("q,family_size,incidences,q_k_q,bound_value,ratio\n", 0) == 0);
  CHECK(std::string(to_string(CheckStatus::skip)) == "SKIP");
}
