#include "ddlab/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <unordered_map>

#include "ddlab/error.hpp"

namespace ddlab {

Circle make_circle(Point center, Rational squared_radius) {
  if (squared_radius.sign() <= 0) throw Error(ErrorCode::invalid_argument, "circle needs a positive squared radius");
  return {std::move(center), std::move(squared_radius)};
}

CircleFamily build_gamma_q(const PointSet& p1, const DistanceSpectrum& s, std::uint64_t q) {
  if (q == 0) throw Error(ErrorCode::invalid_argument, "q must be at least 1");
  CircleFamily family;
  family.q = q;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.multiplicity(i) >= q) family.radii.push_back(s.squared_distance(i));
  family.circles.reserve(p1.size() * family.radii.size());
  for (const auto& center : p1)
    for (const auto& r : family.radii) family.circles.push_back({center, r});
  return family;
}

std::size_t IncidenceGraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& m : members) e += m.size();
  return e;
}

IncidenceGraph incidence_graph(const PointSet& points, const CircleFamily& family) {
  IncidenceGraph g;
  g.points = points;
  g.circles = family.circles;
  g.family_size = family.circles.size();
  g.members.resize(family.circles.size());

  // Group circles by center so each center's distances are computed once.
  std::map<Point, std::vector<std::size_t>> by_center;
  for (std::size_t c = 0; c < family.circles.size(); ++c) by_center[family.circles[c].center].push_back(c);
  std::vector<std::pair<Rational, std::uint32_t>> dist(points.size());
  for (const auto& [center, ids] : by_center) {
    for (std::size_t j = 0; j < points.size(); ++j) dist[j] = {squared_distance(center, points[j]), static_cast<std::uint32_t>(j)};
    std::sort(dist.begin(), dist.end());
    for (std::size_t c : ids) {
      const Rational& r = family.circles[c].squared_radius;
      auto lo = std::lower_bound(dist.begin(), dist.end(), r, [](const auto& e, const Rational& v) { return e.first < v; });
      for (auto it = lo; it != dist.end() && it->first == r; ++it) g.members[c].push_back(it->second);
      std::sort(g.members[c].begin(), g.members[c].end());
    }
  }
  return g;
}

std::size_t count_incidences(const PointSet& points, const CircleFamily& family) {
  return incidence_graph(points, family).edge_count();
}

IncidenceGraph rich_incidence_graph(const PointSet& p1, const PointSet& p2, const DistanceSpectrum& s,
                                    std::uint64_t q, std::span<const std::int64_t> pair_index) {
  if (q == 0) throw Error(ErrorCode::invalid_argument, "q must be at least 1");
  std::vector<std::int64_t> owned;
  if (pair_index.empty()) {
    owned = pair_spectrum_index(p1, p2, s);
    pair_index = owned;
  }
  IncidenceGraph g;
  g.points = p2;
  g.family_size = p1.size() * s.rich_count(q);
  const std::size_t n = p2.size();
  std::vector<std::pair<std::int64_t, std::uint32_t>> row;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t k = pair_index[i * n + j];
      if (k >= 0 && s.multiplicity(static_cast<std::size_t>(k)) >= q) row.emplace_back(k, static_cast<std::uint32_t>(j));
    }
    std::sort(row.begin(), row.end());
    for (std::size_t a = 0; a < row.size();) {
      std::size_t b = a;
      std::vector<std::uint32_t> mem;
      while (b < row.size() && row[b].first == row[a].first) mem.push_back(row[b++].second);
      g.circles.push_back({p1[i], s.squared_distance(static_cast<std::size_t>(row[a].first))});
      g.members.push_back(std::move(mem));
      a = b;
    }
  }
  return g;
}

namespace {

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

std::vector<std::size_t> circles_through(const IncidenceGraph& g, std::span<const std::size_t> pts) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < g.members.size(); ++c) {
    const auto& mem = g.members[c];
    if (std::all_of(pts.begin(), pts.end(), [&mem](std::size_t p) {
          return std::binary_search(mem.begin(), mem.end(), static_cast<std::uint32_t>(p));
        }))
      out.push_back(c);
  }
  return out;
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  long double v = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    v = v * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    if (v > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(v + 0.5L);
}

}  // namespace

std::optional<KstWitness> find_k_st(const IncidenceGraph& g, std::size_t s, std::size_t t, std::uint64_t budget) {
  if (s == 0 || t == 0) throw Error(ErrorCode::invalid_argument, "K_{s,t} needs s, t >= 1");
  const std::size_t n = g.points.size();
  if (s > n || t > g.circles.size()) return std::nullopt;

  if (s == 1) {
    std::vector<std::size_t> degree(n, 0);
    for (const auto& mem : g.members)
      for (auto p : mem)
        if (++degree[p] >= t) {
          const std::size_t pt[1] = {p};
          auto cs = circles_through(g, pt);
          cs.resize(t);
          return KstWitness{{p}, std::move(cs)};
        }
    return std::nullopt;
  }

  if (s == 2) {
    std::unordered_map<std::uint64_t, std::uint32_t> common;
    for (const auto& mem : g.members)
      for (std::size_t a = 0; a < mem.size(); ++a)
        for (std::size_t b = a + 1; b < mem.size(); ++b)
          if (++common[pair_key(mem[a], mem[b])] >= t) {
            const std::size_t pts[2] = {mem[a], mem[b]};
            auto cs = circles_through(g, pts);
            cs.resize(t);
            return KstWitness{{pts[0], pts[1]}, std::move(cs)};
          }
    return std::nullopt;
  }

  if (binomial_capped(n, s, budget) > budget)
    throw Error(ErrorCode::budget_exceeded, "K_{s,t} search over C(" + std::to_string(n) + ", " +
                                                std::to_string(s) + ") subsets exceeds budget");
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    auto cs = circles_through(g, idx);
    if (cs.size() >= t) {
      cs.resize(t);
      return KstWitness{idx, std::move(cs)};
    }
    std::size_t k = s;
    while (k > 0 && idx[k - 1] == n - s + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
  }
  return std::nullopt;
}

std::vector<PairCircles> pairs_with_common_circles(const IncidenceGraph& g, std::size_t min_common) {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> common;
  for (std::size_t c = 0; c < g.members.size(); ++c) {
    const auto& mem = g.members[c];
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b) common[pair_key(mem[a], mem[b])].push_back(c);
  }
  std::vector<PairCircles> out;
  for (auto& [key, cs] : common) {
    if (cs.size() < min_common) continue;
    out.push_back({static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key & 0xffffffffu), std::move(cs)});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return out;
}

std::size_t max_common_circles(const IncidenceGraph& g) {
  std::unordered_map<std::uint64_t, std::uint32_t> common;
  std::size_t best = 0;
  for (const auto& mem : g.members)
    for (std::size_t a = 0; a < mem.size(); ++a)
      for (std::size_t b = a + 1; b < mem.size(); ++b)
        best = std::max<std::size_t>(best, ++common[pair_key(mem[a], mem[b])]);
  return best;
}

bool centers_collinear(std::span<const Circle> circles) {
  if (circles.size() < 2) throw Error(ErrorCode::invalid_argument, "collinearity needs at least two circles");
  const Point& a = circles[0].center;
  // Find a second center distinct from the first to anchor the line.
  std::size_t anchor = 1;
  while (anchor < circles.size() && circles[anchor].center == a) ++anchor;
  if (anchor == circles.size()) return true;
  const Point& b = circles[anchor].center;
  for (const auto& c : circles)
    if (!orientation(a, b, c.center).is_zero()) return false;
  return true;
}

long double pach_sharir_bound(std::uint64_t m, std::uint64_t n, unsigned s) {
  if (m < 1 || n < 1) throw Error(ErrorCode::invalid_argument, "bound needs m, n >= 1");
  if (s < 2) throw Error(ErrorCode::invalid_argument, "bound needs s >= 2");
  const long double denom = 2.0L * s - 1.0L;
  const auto lm = static_cast<long double>(m);
  const auto ln = static_cast<long double>(n);
  return std::pow(lm, s / denom) * std::pow(ln, (2.0L * s - 2.0L) / denom) + lm + ln;
}

}  // namespace ddlab
