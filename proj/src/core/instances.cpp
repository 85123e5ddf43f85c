#include "ddlab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <unordered_set>

#include "ddlab/error.hpp"

namespace ddlab {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::invalid_argument, "empty sampling range");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + below(span));
}

SplitMix64 stream(std::uint64_t seed, std::string_view stage) {
  std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
  for (unsigned char ch : stage) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  SplitMix64 mixer(seed ^ h);
  return SplitMix64(mixer.next());
}

PointSet gen_grid(int k) {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "grid size must be at least 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) pts.push_back({Rational(i), Rational(j)});
  return PointSet(std::move(pts), "grid " + std::to_string(k));
}

namespace {

struct Parametrization {
  enum class Kind { line, circle, graph_of_x, graph_of_y } kind;
  const BivariatePoly* poly = nullptr;
  Rational a, b, c;  // line a x + b y + c
  Point center;
  Rational radius;
  Rational beta;  // coefficient of the graph variable

  Point at(const Rational& t) const {
    switch (kind) {
      case Kind::line:
        if (!b.is_zero()) return {t, -(a * t + c) / b};
        return {-c / a, t};
      case Kind::circle: {
        const Rational t2 = t * t;
        const Rational denom = Rational(1) + t2;
        return {center.x + radius * (Rational(1) - t2) / denom, center.y + radius * Rational(2) * t / denom};
      }
      case Kind::graph_of_x: return {t, -poly->evaluate({t, Rational(0)}) / beta};
      case Kind::graph_of_y: return {-poly->evaluate({Rational(0), t}) / beta, t};
    }
    return {};
  }
};

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.num().get_mpz_t()) || !mpz_perfect_square_p(v.den().get_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), v.num().get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.den().get_mpz_t());
  return Rational(n, d);
}

// y-graph: f = beta*v + g(other) with v appearing only linearly and alone.
bool is_graph_in(const BivariatePoly& f, Axis v) {
  if (f.degree_in(v) != 1) return false;
  for (const auto& [e, coef] : f.terms()) {
    const int main = v == Axis::y ? e.second : e.first;
    const int other = v == Axis::y ? e.first : e.second;
    if (main >= 1 && other != 0) return false;
  }
  return true;
}

Parametrization parametrize(const CurveFactor& f) {
  Parametrization p{};
  p.poly = &f.poly;
  if (f.kind.is_linear()) {
    p.kind = Parametrization::Kind::line;
    p.a = f.poly.coefficient(1, 0);
    p.b = f.poly.coefficient(0, 1);
    p.c = f.poly.coefficient(0, 0);
    return p;
  }
  if (f.kind.is_circular()) {
    auto r = rational_sqrt(f.kind.squared_radius);
    if (!r) throw Error(ErrorCode::unsupported_curve, "circle " + f.poly.to_string() + " has an irrational radius");
    p.kind = Parametrization::Kind::circle;
    p.center = f.kind.center;
    p.radius = *r;
    return p;
  }
  if (is_graph_in(f.poly, Axis::y)) {
    p.kind = Parametrization::Kind::graph_of_x;
    p.beta = f.poly.coefficient(0, 1);
    return p;
  }
  if (is_graph_in(f.poly, Axis::x)) {
    p.kind = Parametrization::Kind::graph_of_y;
    p.beta = f.poly.coefficient(1, 0);
    return p;
  }
  throw Error(ErrorCode::unsupported_curve, "no rational parametrization for " + f.poly.to_string());
}

std::int64_t floor_times(const Rational& v, std::int64_t den) {
  Integer q;
  const Integer num = v.num() * den;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.den().get_mpz_t());
  return q.get_si();
}

std::int64_t ceil_times(const Rational& v, std::int64_t den) {
  Integer q;
  const Integer num = v.num() * den;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.den().get_mpz_t());
  return q.get_si();
}

Point circumcenter(const Point& a, const Point& b, const Point& c) {
  const Rational d = Rational(2) * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  const Rational sa = a.x * a.x + a.y * a.y;
  const Rational sb = b.x * b.x + b.y * b.y;
  const Rational sc = c.x * c.x + c.y * c.y;
  return {(sa * (b.y - c.y) + sb * (c.y - a.y) + sc * (a.y - b.y)) / d,
          (sa * (c.x - b.x) + sb * (a.x - c.x) + sc * (b.x - a.x)) / d};
}

Box box_for(std::size_t n) {
  const auto w = static_cast<long>(std::max<double>(4.0, std::ceil(std::sqrt(static_cast<double>(n)))));
  return {Rational(-w), Rational(-w), Rational(w), Rational(w), 2};
}

// n cloud points avoiding `excluded`.
std::vector<Point> cloud_avoiding(std::size_t n, const Box& box, std::uint64_t seed, const std::set<Point>& excluded) {
  const PointSet raw = gen_cloud(n + excluded.size(), box, seed);
  std::vector<Point> out;
  for (const auto& p : raw) {
    if (out.size() == n) break;
    if (!excluded.contains(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

PointSet gen_on_curve(const CurveSpec& c, std::size_t m, std::uint64_t seed, const OnCurveOptions& options) {
  std::vector<Parametrization> params;
  for (const auto& f : c.factors()) params.push_back(parametrize(f));
  if (params.empty()) throw Error(ErrorCode::unsupported_curve, "curve has no components");
  const std::int64_t range =
      options.param_range > 0 ? options.param_range : std::max<std::int64_t>(2 * static_cast<std::int64_t>(m), 8);

  SplitMix64 rng = stream(seed, "on-curve");
  std::set<Point> seen;
  std::set<std::pair<std::size_t, std::int64_t>> used;
  std::vector<Point> pts;
  pts.reserve(m);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 64 * m + 1024;
  while (pts.size() < m) {
    if (++attempts > max_attempts)
      throw Error(ErrorCode::invalid_argument,
                  "could not place " + std::to_string(m) + " distinct points; widen the parameter range");
    const std::size_t comp = rng.below(params.size());
    const std::int64_t t = rng.between(-range, range);
    if (!used.insert({comp, t}).second) continue;
    Point p = params[comp].at(Rational(t));
    if (!seen.insert(p).second) continue;
    pts.push_back(std::move(p));
  }
  return PointSet(std::move(pts), "on-curve");
}

PointSet gen_cloud(std::size_t n, const Box& box, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "cloud needs n >= 1");
  if (box.den < 1) throw Error(ErrorCode::invalid_argument, "lattice denominator must be positive");
  const std::int64_t i_lo = ceil_times(box.x_min, box.den), i_hi = floor_times(box.x_max, box.den);
  const std::int64_t j_lo = ceil_times(box.y_min, box.den), j_hi = floor_times(box.y_max, box.den);
  const long double lattice = (i_hi < i_lo || j_hi < j_lo)
                                  ? 0.0L
                                  : static_cast<long double>(i_hi - i_lo + 1) * static_cast<long double>(j_hi - j_lo + 1);
  if (lattice < static_cast<long double>(n))
    throw Error(ErrorCode::box_too_small,
                "box lattice holds fewer than " + std::to_string(n) + " distinct points");

  SplitMix64 rng = stream(seed, "cloud");
  const auto width = static_cast<std::uint64_t>(i_hi - i_lo + 1);
  std::vector<std::uint64_t> chosen;
  chosen.reserve(n);
  if (lattice <= 2.0L * static_cast<long double>(n)) {
    // Dense request: partial Fisher-Yates over the whole lattice.
    std::vector<std::uint64_t> all(static_cast<std::size_t>(lattice));
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    for (std::size_t k = 0; k < n; ++k) std::swap(all[k], all[k + rng.below(all.size() - k)]);
    chosen.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    std::unordered_set<std::uint64_t> taken;
    const auto height = static_cast<std::uint64_t>(j_hi - j_lo + 1);
    while (chosen.size() < n) {
      const std::uint64_t cell = rng.below(width) + width * rng.below(height);
      if (taken.insert(cell).second) chosen.push_back(cell);
    }
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (auto cell : chosen) {
    const auto i = i_lo + static_cast<std::int64_t>(cell % width);
    const auto j = j_lo + static_cast<std::int64_t>(cell / width);
    pts.push_back({Rational(Integer(static_cast<long>(i)), Integer(static_cast<long>(box.den))),
                   Rational(Integer(static_cast<long>(j)), Integer(static_cast<long>(box.den)))});
  }
  return PointSet(std::move(pts), "cloud");
}

std::vector<std::string> adversarial_families() {
  return {"center-trap", "linear-heavy", "concyclic", "parallel-lines", "orthogonal-lines", "concentric-circles"};
}

namespace {

std::vector<Point> sorted_unique(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_sizes(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::invalid_argument, "instances need m, n >= 1");
}

Instance on_curve_with_cloud(std::string family, CurveSpec curve, const AdversarialParams& p, bool avoid_centers) {
  Instance inst;
  inst.family = std::move(family);
  inst.seed = p.seed;
  const PointSet on = gen_on_curve(curve, p.m, p.seed);
  inst.p1 = PointSet(std::vector<Point>(on.begin(), on.end()), "P1");
  std::set<Point> excluded;
  if (avoid_centers)
    for (auto& c : circular_centers(curve)) excluded.insert(c);
  inst.p2 = PointSet(cloud_avoiding(p.n, box_for(p.n), stream(p.seed, "p2").next(), excluded), "P2");
  inst.curve = std::move(curve);
  return inst;
}

Instance center_trap(const AdversarialParams& p) {
  Instance inst = on_curve_with_cloud("center-trap", curve_preset("circle"), p, false);
  const Point origin{Rational(0), Rational(0)};
  std::vector<Point> p2{origin};
  for (const auto& q : inst.p2) {
    if (p2.size() == p.n) break;
    if (q != origin) p2.push_back(q);
  }
  inst.p2 = PointSet(std::move(p2), "P2");
  return inst;
}

Instance linear_heavy(const AdversarialParams& p) {
  Instance inst;
  inst.family = "linear-heavy";
  inst.seed = p.seed;
  inst.curve = curve_preset("line+parabola");
  SplitMix64 rng = stream(p.seed, "linear-heavy");
  const auto range = std::max<std::int64_t>(2 * static_cast<std::int64_t>(p.m), 8);
  const std::size_t on_line = (p.m + 1) / 2;
  std::set<Point> p1set;
  std::vector<Point> p1;
  while (p1.size() < on_line) {
    const std::int64_t x = rng.between(-range, range);
    if (x == 0) continue;
    Point q{Rational(x), Rational(0)};
    if (p1set.insert(q).second) p1.push_back(q);
  }
  while (p1.size() < p.m) {
    const std::int64_t t = rng.between(-range, range);
    if (t == 0) continue;
    Point q{Rational(t), Rational(t * t)};
    if (p1set.insert(q).second) p1.push_back(q);
  }
  inst.p1 = PointSet(std::move(p1), "P1");

  // Mirror pairs across y = 0 share every circle centered on that line.
  const auto w = static_cast<std::int64_t>(std::max<double>(4.0, std::ceil(std::sqrt(static_cast<double>(p.n)))));
  SplitMix64 r2 = stream(p.seed, "p2");
  std::set<Point> p2set;
  std::vector<Point> p2;
  while (p2.size() < p.n) {
    const std::int64_t x = r2.between(-w, w);
    const std::int64_t y = r2.between(1, w);
    Point up{Rational(x), Rational(y)}, down{Rational(x), Rational(-y)};
    if (p2set.contains(up)) continue;
    p2set.insert(up);
    p2.push_back(up);
    if (p2.size() < p.n) {
      p2set.insert(down);
      p2.push_back(down);
    }
  }
  inst.p2 = PointSet(std::move(p2), "P2");
  return inst;
}

Instance concyclic(const AdversarialParams& p) {
  if (p.m < 4) throw Error(ErrorCode::invalid_argument, "concyclic family needs m >= 4");
  Instance inst;
  inst.family = "concyclic";
  inst.seed = p.seed;
  inst.curve = curve_preset("parabola");
  SplitMix64 rng = stream(p.seed, "concyclic");
  const auto range = std::max<std::int64_t>(2 * static_cast<std::int64_t>(p.m), 8);
  // Four points of y = x^2 are concyclic iff their abscissae sum to zero.
  std::set<std::int64_t> used;
  std::vector<Point> p1, centers;
  auto at = [](std::int64_t t) { return Point{Rational(t), Rational(t * t)}; };
  std::size_t attempts = 0;
  while (p1.size() + 4 <= p.m) {
    if (++attempts > 64 * p.m + 1024) break;
    std::int64_t t[4];
    t[0] = rng.between(-range, range);
    t[1] = rng.between(-range, range);
    t[2] = rng.between(-range, range);
    t[3] = -(t[0] + t[1] + t[2]);
    std::set<std::int64_t> group(t, t + 4);
    if (group.size() != 4) continue;
    if (std::any_of(group.begin(), group.end(), [&](std::int64_t v) { return used.contains(v); })) continue;
    used.insert(group.begin(), group.end());
    for (auto v : t) p1.push_back(at(v));
    centers.push_back(circumcenter(at(t[0]), at(t[1]), at(t[2])));
  }
  while (p1.size() < p.m) {
    const std::int64_t v = rng.between(-range, range);
    if (used.insert(v).second) p1.push_back(at(v));
  }
  inst.p1 = PointSet(std::move(p1), "P1");

  centers = sorted_unique(std::move(centers));
  std::vector<Point> p2;
  std::set<Point> excluded;
  for (const auto& c : centers) {
    if (p2.size() == p.n) break;
    p2.push_back(c);
    excluded.insert(c);
  }
  for (auto& q : cloud_avoiding(p.n - p2.size(), box_for(p.n), stream(p.seed, "p2").next(), excluded)) p2.push_back(q);
  inst.p2 = PointSet(std::move(p2), "P2");
  return inst;
}

}  // namespace

Instance gen_adversarial(std::string_view family, const AdversarialParams& params) {
  require_sizes(params.m, params.n);
  if (family == "center-trap") return center_trap(params);
  if (family == "linear-heavy") return linear_heavy(params);
  if (family == "concyclic") return concyclic(params);
  if (family == "parallel-lines" || family == "orthogonal-lines")
    return on_curve_with_cloud(std::string(family), curve_preset(family), params, true);
  if (family == "concentric-circles")
    return on_curve_with_cloud("concentric-circles", curve_preset("concentric-circles"), params, true);
  throw Error(ErrorCode::unknown_family, "unknown adversarial family '" + std::string(family) + "'");
}

Instance gen_bipartite(std::string_view curve_name, std::size_t m, std::size_t n, std::uint64_t seed) {
  require_sizes(m, n);
  Instance inst = on_curve_with_cloud(std::string(curve_name), curve_preset(curve_name), {m, n, seed}, true);
  return inst;
}

std::vector<std::string> instance_header(const std::string& family, std::uint64_t seed, const CurveSpec* curve) {
  std::vector<std::string> lines{"family: " + family, "seed: " + std::to_string(seed)};
  if (curve) {
    lines.emplace_back("curve:");
    const std::string text = curve_to_text(*curve);
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      if (end > start) lines.push_back("  " + text.substr(start, end - start));
      start = end + 1;
    }
  }
  return lines;
}

}  // namespace ddlab
