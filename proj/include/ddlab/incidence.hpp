#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ddlab/geometry.hpp"
#include "ddlab/spectrum.hpp"

namespace ddlab {

struct Circle {
  Point center;
  Rational squared_radius;  // > 0

  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle&, const Circle&) = default;
};

/// Throws Error(invalid_argument) unless squared_radius > 0.
Circle make_circle(Point center, Rational squared_radius);

/// Circles centered at a point set whose radii are the q-rich distances.
struct CircleFamily {
  std::vector<Circle> circles;  // no duplicates
  std::uint64_t q = 1;
  std::vector<Rational> radii;  // Δ_q, ascending
};

/// All circles centered at P1 with squared radius in Δ_q = {δ : p_δ >= q};
/// exactly |P1|·k_q circles. Throws Error(invalid_argument) for q == 0.
CircleFamily build_gamma_q(const PointSet& p1, const DistanceSpectrum& s, std::uint64_t q);

/// Bipartite point-circle membership graph. `circles` may omit circles with
/// no incidences; `family_size` is the size of the full family either way.
struct IncidenceGraph {
  PointSet points;
  std::vector<Circle> circles;
  std::vector<std::vector<std::uint32_t>> members;  // per circle, ascending point indices
  std::size_t family_size = 0;

  std::size_t edge_count() const;
};

IncidenceGraph incidence_graph(const PointSet& points, const CircleFamily& family);

/// I(P, Γ): exact membership count.
std::size_t count_incidences(const PointSet& points, const CircleFamily& family);

/// G(P2, Γ_q) with Γ_q centered at P1, keeping only circles that carry at
/// least one incidence. `s` must be the spectrum of (P1, P2); the optional
/// per-pair index from pair_spectrum_index avoids recomputing it per level.
IncidenceGraph rich_incidence_graph(const PointSet& p1, const PointSet& p2, const DistanceSpectrum& s,
                                    std::uint64_t q, std::span<const std::int64_t> pair_index = {});

struct KstWitness {
  std::vector<std::size_t> points;
  std::vector<std::size_t> circles;
};

/// A K_{s,t} subgraph (s points all lying on t common circles) or nullopt
/// when certified absent. s = 2 uses pair counting with early exit; other s
/// enumerate point subsets and throw Error(budget_exceeded) when more than
/// `budget` subsets would be tried.
std::optional<KstWitness> find_k_st(const IncidenceGraph& g, std::size_t s, std::size_t t,
                                    std::uint64_t budget = 1'000'000);

/// Largest number of circles shared by any two points (0 with < 2 points).
std::size_t max_common_circles(const IncidenceGraph& g);

/// Every point pair lying on at least `min_common` common circles, with the
/// indices of those circles.
struct PairCircles {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::vector<std::size_t> circles;
};
std::vector<PairCircles> pairs_with_common_circles(const IncidenceGraph& g, std::size_t min_common);

/// True iff all centers lie on one line. Throws Error(invalid_argument)
/// for fewer than two circles.
bool centers_collinear(std::span<const Circle> circles);

/// m^{s/(2s-1)} n^{(2s-2)/(2s-1)} + m + n, constant-free. Throws
/// Error(invalid_argument) for m, n < 1 or s < 2.
long double pach_sharir_bound(std::uint64_t m, std::uint64_t n, unsigned s);

}  // namespace ddlab
