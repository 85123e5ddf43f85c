#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "ddlab/error.hpp"
#include "ddlab/instances.hpp"
#include "ddlab/spectrum.hpp"
#include "oracles.hpp"

using namespace ddlab;

namespace {

Point pt(const char* x, const char* y) { return {rat(x), rat(y)}; }
PointSet set(std::initializer_list<Point> pts) { return PointSet(std::vector<Point>(pts)); }

void require_matches_oracle(const DistanceSpectrum& s, const PointSet& a, const PointSet& b) {
  const auto want = oracle::spectrum(oracle::from(a), oracle::from(b));
  const auto got = s.entries();
  REQUIRE(got.size() == want.size());
  auto it = want.begin();
  for (const auto& [delta, count] : got) {
    REQUIRE(delta.raw() == it->first);
    REQUIRE(count == it->second);
    ++it;
  }
  REQUIRE(s.zero_pairs() == oracle::zero_pairs(oracle::from(a), oracle::from(b)));
}

}  // namespace

TEST_CASE("spectrum examples") {
  const auto s = spectrum(set({pt("0", "0"), pt("1", "0")}), set({pt("0", "1")}));
  REQUIRE(s.size() == 2);
  CHECK(s.entries()[0] == std::pair<Rational, std::uint64_t>{rat("1"), 1});
  CHECK(s.entries()[1] == std::pair<Rational, std::uint64_t>{rat("2"), 1});
  CHECK(s.zero_pairs() == 0);
  CHECK(s.total_pairs() == 2);

  const auto z = spectrum(set({pt("0", "0")}), set({pt("0", "0")}));
  CHECK(z.empty());
  CHECK(z.zero_pairs() == 1);
  CHECK(z.total_pairs() == 0);

  const auto t = spectrum(set({pt("0", "0"), pt("3", "0")}), set({pt("0", "4")}));
  REQUIRE(t.size() == 2);
  CHECK(t.squared_distance(0) == rat("16"));
  CHECK(t.squared_distance(1) == rat("25"));
  CHECK(t.find(rat("25")) == std::optional<std::size_t>(1));
  CHECK_FALSE(t.find(rat("5")).has_value());

  CHECK_THROWS_AS(spectrum(PointSet(), set({pt("0", "0")})), Error);
}

TEST_CASE("distinct distances examples") {
  CHECK(distinct_distances(gen_grid(2), gen_grid(2)) == 2);
  CHECK(distinct_distances(gen_grid(3), gen_grid(3)) == 5);
  CHECK(distinct_distances(gen_grid(5), gen_grid(5)) == 14);
  CHECK(distinct_distances(set({pt("0", "0")}), set({pt("1", "0")})) == 1);
}

TEST_CASE("energy examples") {
  CHECK(distance_energy(set({pt("0", "0"), pt("1", "0")}), set({pt("0", "1")}), 2) == 2);
  CHECK(distance_energy(set({pt("0", "0"), pt("2", "0")}), set({pt("1", "1")}), 3) == 8);
  CHECK_THROWS_AS(distance_energy(set({pt("0", "0")}), set({pt("1", "0")}), 0), Error);
  const PointSet g = gen_grid(3);
  CHECK(distance_energy(g, g, 1) == spectrum(g, g).total_pairs());
}

TEST_CASE("oracle equivalence for small instances") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int it = 0; it < 120; ++it) {
    const PointSet a = oracle::random_points(rng, size(rng), 3, 1 + it % 2);
    const PointSet b = oracle::random_points(rng, size(rng), 3, 1 + it % 3);
    const auto s = spectrum(a, b);
    require_matches_oracle(s, a, b);
    for (unsigned d = 1; d <= 3; ++d) REQUIRE(s.energy(d) == oracle::energy_tuples(oracle::from(a), oracle::from(b), d));
    REQUIRE(s.total_pairs() + s.zero_pairs() == a.size() * b.size());
  }
}

TEST_CASE("spectrum symmetry") {
  std::mt19937_64 rng(103);
  for (int it = 0; it < 50; ++it) {
    const PointSet a = oracle::random_points(rng, 1 + it % 9, 5, 2);
    const PointSet b = oracle::random_points(rng, 1 + it % 7, 5, 3);
    REQUIRE(spectrum(a, b) == spectrum(b, a));
  }
}

TEST_CASE("dyadic profile examples") {
  const auto s = DistanceSpectrum::from_entries({{rat("1"), 5}, {rat("2"), 2}, {rat("3"), 1}});
  const auto p = dyadic_profile(s, 2, 10);
  REQUIRE(p.levels.size() >= 3);
  CHECK(p.levels[0].k == 3);
  CHECK(p.levels[1].k == 2);
  CHECK(p.levels[2].k == 1);
  CHECK(p.k_at_level(3) == s.rich_count(8));

  const auto e = dyadic_profile(DistanceSpectrum(), 2, 10);
  for (const auto& l : e.levels) CHECK(l.k == 0);

  const auto eight = dyadic_profile(DistanceSpectrum::from_entries({{rat("1"), 8}}), 2, 10);
  REQUIRE(eight.levels.size() == 4);
  for (const auto& l : eight.levels) CHECK(l.k == 1);

  CHECK_THROWS_AS(DistanceSpectrum::from_entries({{rat("0"), 1}}), Error);
  CHECK_THROWS_AS(DistanceSpectrum::from_entries({{rat("1"), 0}}), Error);
  CHECK_THROWS_AS(DistanceSpectrum::from_entries({{rat("1"), 1}, {rat("1"), 2}}), Error);
}

TEST_CASE("dyadic invariants on random instances") {
  std::mt19937_64 rng(107);
  for (int it = 0; it < 60; ++it) {
    const PointSet a = oracle::random_points(rng, 2 + it % 12, 4);
    const PointSet b = oracle::random_points(rng, 2 + it % 15, 4);
    const auto s = spectrum(a, b);
    const auto p = dyadic_profile(s, 2, b.size());
    REQUIRE(p.levels[0].k == s.size());
    for (std::size_t j = 1; j < p.levels.size(); ++j) {
      REQUIRE(p.levels[j].k <= p.levels[j - 1].k);
      REQUIRE(p.levels[j].q == (std::uint64_t{1} << j));
    }
    for (std::uint64_t q = 1; q <= s.max_multiplicity() + 1; ++q) REQUIRE(q * s.rich_count(q) <= s.total_pairs());
  }
}

TEST_CASE("richest circle") {
  const auto r = richest_circle(set({pt("0", "0"), pt("10", "10")}), set({pt("1", "0"), pt("0", "1"), pt("-1", "0")}), rat("1"));
  CHECK(r.center == pt("0", "0"));
  CHECK(r.hit_count == 3);
  const auto t = richest_circle(set({pt("0", "0")}), set({pt("1", "0")}), rat("1"));
  CHECK(t.center == pt("0", "0"));
  CHECK(t.hit_count == 1);
  try {
    richest_circle(set({pt("0", "0")}), set({pt("1", "0")}), rat("2"));
    FAIL("unrealized distance accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unrealized_distance);
  }
  CHECK_THROWS_AS(richest_circle(set({pt("0", "0")}), set({pt("1", "0")}), rat("0")), Error);
  // tie: both centers see one point at distance 1; the smaller center wins
  CHECK(richest_circle(set({pt("5", "0"), pt("0", "0")}), set({pt("1", "0")}), rat("1")).center == pt("0", "0"));
}

TEST_CASE("richest circle pigeonhole") {
  std::mt19937_64 rng(109);
  for (int it = 0; it < 40; ++it) {
    const PointSet a = oracle::random_points(rng, 2 + it % 6, 3);
    const PointSet b = oracle::random_points(rng, 3 + it % 10, 3);
    const auto s = spectrum(a, b);
    for (std::size_t i = 0; i < s.size(); ++i) {
      const auto rc = richest_circle(a, b, s.squared_distance(i));
      REQUIRE(rc.hit_count * a.size() >= s.multiplicity(i));
      std::size_t best = 0;
      for (const auto& c : a) {
        std::size_t hits = 0;
        for (const auto& p : b) hits += squared_distance(c, p) == s.squared_distance(i);
        best = std::max(best, hits);
      }
      REQUIRE(rc.hit_count == best);
    }
  }
}

TEST_CASE("spectrum csv round trip") {
  const auto s = spectrum(gen_grid(3), set({pt("1/2", "1/3"), pt("-7/5", "2")}));
  const std::string csv = spectrum_to_csv(s);
  CHECK(csv.rfind("delta_num,delta_den,multiplicity\n", 0) == 0);
  const auto back = spectrum_from_csv(csv);
  CHECK(back.entries() == s.entries());
  CHECK(spectrum_to_csv(back) == csv);
  CHECK_THROWS_AS(spectrum_from_csv("delta_num,delta_den,multiplicity\n1,0,3\n"), ParseError);
  CHECK_THROWS_AS(spectrum_from_csv("delta_num,delta_den,multiplicity\n1,2\n"), ParseError);
  CHECK_THROWS_AS(spectrum_from_csv("delta_num,delta_den,multiplicity\n1,2,x\n"), ParseError);
}

TEST_CASE("spectrum is independent of worker count") {
  const Instance inst = gen_bipartite("parabola", 60, 300, 5);
  const auto one = spectrum(inst.p1, inst.p2, {1});
  for (unsigned t : {2u, 3u, 4u, 8u}) REQUIRE(spectrum(inst.p1, inst.p2, {t}) == one);
  require_matches_oracle(one, inst.p1, inst.p2);
}

TEST_CASE("wide keys stay exact") {
  // squared distances near 2^81 and 2^141 push the keys past 64 and 128 bits
  const Integer big40 = Integer(1) << 40;
  const Integer big70 = Integer(1) << 70;
  for (const Integer& big : {big40, big70}) {
    std::vector<Point> a, b;
    for (int i = 0; i < 4; ++i) a.push_back({Rational(Integer(big * (i + 1))), Rational(Integer(i))});
    for (int i = 0; i < 5; ++i) b.push_back({Rational(Integer(-i)), Rational(Integer(big * i + 3), Integer(7))});
    const PointSet pa(std::move(a)), pb(std::move(b));
    const auto s = spectrum(pa, pb, {3});
    CHECK(s.key_tier() == (big == big40 ? 1 : 2));
    require_matches_oracle(s, pa, pb);
    CHECK(spectrum(pb, pa) == s);
  }
  CHECK(spectrum(gen_grid(3), gen_grid(3)).key_tier() == 0);
}
