#pragma once

// Brute-force references for the test suite. They use GMP directly and
// share no code path with the library beyond reading point coordinates.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "ddlab/geometry.hpp"

namespace oracle {

struct P {
  mpq_class x;
  mpq_class y;
};

inline std::vector<P> from(const ddlab::PointSet& s) {
  std::vector<P> out;
  for (const auto& p : s) out.push_back({p.x.raw(), p.y.raw()});
  return out;
}

inline mpq_class sq(const P& a, const P& b) {
  const mpq_class dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline std::map<mpq_class, std::uint64_t> spectrum(const std::vector<P>& a, const std::vector<P>& b) {
  std::map<mpq_class, std::uint64_t> out;
  for (const auto& p : a)
    for (const auto& q : b) {
      const mpq_class d = sq(p, q);
      if (d != 0) ++out[d];
    }
  return out;
}

inline std::uint64_t zero_pairs(const std::vector<P>& a, const std::vector<P>& b) {
  std::uint64_t z = 0;
  for (const auto& p : a)
    for (const auto& q : b) z += sq(p, q) == 0;
  return z;
}

// Tuples (a_1..a_d, b_1..b_d) with |a_1 b_1| = ... = |a_d b_d| > 0.
inline mpz_class energy_tuples(const std::vector<P>& a, const std::vector<P>& b, unsigned d) {
  std::vector<mpq_class> dist;
  for (const auto& p : a)
    for (const auto& q : b) dist.push_back(sq(p, q));
  std::uint64_t count = 0;
  const std::size_t n = dist.size();
  if (d == 1) {
    for (std::size_t i = 0; i < n; ++i) count += dist[i] != 0;
  } else if (d == 2) {
    for (std::size_t i = 0; i < n; ++i)
      if (dist[i] != 0)
        for (std::size_t j = 0; j < n; ++j) count += dist[j] == dist[i];
  } else {
    for (std::size_t i = 0; i < n; ++i)
      if (dist[i] != 0)
        for (std::size_t j = 0; j < n; ++j)
          if (dist[j] == dist[i])
            for (std::size_t k = 0; k < n; ++k) count += dist[k] == dist[i];
  }
  return mpz_class(static_cast<unsigned long>(count));
}

// Largest |{a ∈ A : |ap|^2 = δ}| over p ∈ B and δ > 0.
inline std::uint64_t max_per_center(const std::vector<P>& a, const std::vector<P>& b) {
  std::uint64_t best = 0;
  for (const auto& p : b) {
    std::map<mpq_class, std::uint64_t> c;
    for (const auto& q : a) {
      const mpq_class d = sq(p, q);
      if (d != 0) best = std::max(best, ++c[d]);
    }
  }
  return best;
}

// Largest number of centers in `centers` equidistant (at a radius in
// `radii`) from both points of some pair of `points`.
inline std::size_t max_common_circles(const std::vector<P>& centers, const std::vector<P>& points,
                                      const std::set<mpq_class>& radii) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      std::size_t c = 0;
      for (const auto& a : centers) {
        const mpq_class d = sq(a, points[i]);
        if (d != 0 && d == sq(a, points[j]) && radii.contains(d)) ++c;
      }
      best = std::max(best, c);
    }
  return best;
}

inline std::size_t distinct_from(const P& p, const std::vector<P>& q) {
  std::set<mpq_class> s;
  for (const auto& b : q) {
    const mpq_class d = sq(p, b);
    if (d != 0) s.insert(d);
  }
  return s.size();
}

// Random distinct points with coordinates i/den, |i| <= range.
inline ddlab::PointSet random_points(std::mt19937_64& rng, std::size_t n, long range, long den = 1) {
  if (n > static_cast<std::size_t>((2 * range + 1) * (2 * range + 1))) throw std::invalid_argument("lattice too small");
  std::uniform_int_distribution<long> u(-range, range);
  std::set<ddlab::Point> seen;
  std::vector<ddlab::Point> pts;
  while (pts.size() < n) {
    ddlab::Point p{ddlab::Rational(ddlab::Integer(u(rng)), ddlab::Integer(den)),
                   ddlab::Rational(ddlab::Integer(u(rng)), ddlab::Integer(den))};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return ddlab::PointSet(std::move(pts));
}

}  // namespace oracle
