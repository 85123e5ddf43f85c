#include "ddlab/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ddlab/error.hpp"

namespace ddlab {

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = Rational(1) / m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col].is_zero()) continue;
      const Rational factor = m[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

// Newton interpolation through (0, v0), (1, v1), ...
UnivariatePoly interpolate(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  UnivariatePoly out = UnivariatePoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    out = out * UnivariatePoly::linear_root(Rational(static_cast<long>(i))) + UnivariatePoly::constant(dd[i]);
  }
  return out;
}

// Resultant allowing degree zero in the eliminated variable (then it is
// lead^other_degree), which the intersection counter needs for vertical or
// horizontal lines.
UnivariatePoly resultant(const BivariatePoly& f, const BivariatePoly& g, Axis eliminate) {
  const auto cf = f.as_polynomial_in(eliminate);
  const auto cg = g.as_polynomial_in(eliminate);
  const std::size_t a = cf.size() - 1;
  const std::size_t b = cg.size() - 1;
  const std::size_t n = a + b;
  if (n == 0) return UnivariatePoly::constant(Rational(1));

  const int bound = std::max(f.degree(), 0) * std::max(g.degree(), 0);
  std::vector<Rational> samples;
  samples.reserve(static_cast<std::size_t>(bound + 1));
  for (int t = 0; t <= bound; ++t) {
    const Rational at(t);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t k = 0; k <= a; ++k) m[i][i + (a - k)] = cf[k].evaluate(at);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t k = 0; k <= b; ++k) m[b + i][i + (b - k)] = cg[k].evaluate(at);
    samples.push_back(determinant(std::move(m)));
  }
  return interpolate(samples);
}

}  // namespace

UnivariatePoly sylvester_resultant(const BivariatePoly& f, const BivariatePoly& g, Axis eliminate) {
  if (f.degree_in(eliminate) < 1 || g.degree_in(eliminate) < 1)
    throw Error(ErrorCode::degenerate_degree,
                "both polynomials need positive degree in the eliminated variable");
  return resultant(f, g, eliminate);
}

UnivariatePoly square_free_part(const UnivariatePoly& u) {
  if (u.is_zero()) throw Error(ErrorCode::zero_polynomial, "square-free part of the zero polynomial");
  if (u.degree() == 0) return UnivariatePoly::constant(Rational(1));
  const UnivariatePoly g = gcd(u, u.derivative());
  return UnivariatePoly::divmod(u, g).first.monic();
}

// ---------------------------------------------------------------- Sturm

SturmChain::SturmChain(const UnivariatePoly& u) {
  if (u.is_zero()) throw Error(ErrorCode::zero_polynomial, "Sturm chain of the zero polynomial");
  chain_.push_back(square_free_part(u));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(chain_.front().derivative());
  while (true) {
    const auto& p = chain_[chain_.size() - 2];
    const auto& q = chain_.back();
    UnivariatePoly r = UnivariatePoly::divmod(p, q).second;
    if (r.is_zero()) break;
    chain_.push_back(Rational(-1) * r);
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int last = 0;
  int changes = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.evaluate(x).sign());
  return count_variations(signs);
}

int SturmChain::variations_at_infinity(bool positive) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& p : chain_) signs.push_back(p.sign_at_infinity(positive));
  return count_variations(signs);
}

int SturmChain::roots_in(const Rational& a, const Rational& b) const {
  return variations_at(a) - variations_at(b);
}

int SturmChain::total_real_roots() const {
  return variations_at_infinity(false) - variations_at_infinity(true);
}

int sturm_distinct_real_roots(const UnivariatePoly& u) { return SturmChain(u).total_real_roots(); }

std::vector<RootInterval> isolate_real_roots(const SturmChain& chain) {
  std::vector<RootInterval> out;
  const UnivariatePoly& p = chain.base();
  if (p.degree() < 1 || chain.total_real_roots() == 0) return out;

  // Cauchy bound: every root lies strictly inside (-bound, bound).
  Rational bound(0);
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, (p.coefficient(k) / p.leading()).abs());
  bound += Rational(1);

  struct Pending {
    Rational lo, hi;
  };
  std::vector<Pending> stack{{-bound, bound}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    const int n = chain.roots_in(cur.lo, cur.hi);
    if (n == 0) continue;
    if (n == 1) {
      if (p.evaluate(cur.hi).is_zero()) out.push_back({cur.hi, cur.hi, true});
      else out.push_back({cur.lo, cur.hi, false});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / Rational(2);
    stack.push_back({mid, cur.hi});
    stack.push_back({cur.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.hi < b.hi; });
  return out;
}

RootInterval bisect(const SturmChain& chain, const RootInterval& root) {
  if (root.exact) return root;
  const Rational mid = (root.lo + root.hi) / Rational(2);
  if (chain.base().evaluate(mid).is_zero()) return {mid, mid, true};
  if (chain.roots_in(root.lo, mid) == 1) return {root.lo, mid, false};
  return {mid, root.hi, false};
}

// ---------------------------------------------------------------- intersections

namespace {

// Successive refinements of one isolating interval, computed lazily and
// shared by every box in the same row or column.
class Ladder {
 public:
  Ladder(const SturmChain* chain, RootInterval start, const Rational* threshold)
      : chain_(chain), threshold_(threshold) {
    steps_.push_back(std::move(start));
  }

  const RootInterval& at(std::size_t level) {
    while (steps_.size() <= level) {
      const RootInterval& last = steps_.back();
      if (last.exact || last.width() < *threshold_) break;
      steps_.push_back(bisect(*chain_, last));
    }
    return steps_[std::min(level, steps_.size() - 1)];
  }

 private:
  const SturmChain* chain_;
  const Rational* threshold_;
  std::deque<RootInterval> steps_;
};

IntersectionReport count_boxes(const BivariatePoly& f, const BivariatePoly& g, const Rational& threshold) {
  const UnivariatePoly rx = resultant(f, g, Axis::y);
  const UnivariatePoly ry = resultant(f, g, Axis::x);
  if (rx.is_zero() || ry.is_zero())
    throw Error(ErrorCode::shared_component, "polynomials share a common factor");

  const SturmChain cx(rx);
  const SturmChain cy(ry);
  std::vector<Ladder> xs;
  std::vector<Ladder> ys;
  for (auto& r : isolate_real_roots(cx)) xs.emplace_back(&cx, r, &threshold);
  for (auto& r : isolate_real_roots(cy)) ys.emplace_back(&cy, r, &threshold);

  IntersectionReport report;
  std::set<std::size_t> columns;
  std::set<std::size_t> rows;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      for (std::size_t level = 0;; ++level) {
        const RootInterval& rx_i = xs[i].at(level);
        const RootInterval& ry_j = ys[j].at(level);
        const Interval bx{rx_i.lo, rx_i.hi};
        const Interval by{ry_j.lo, ry_j.hi};
        if (!f.evaluate(bx, by).contains_zero() || !g.evaluate(bx, by).contains_zero()) break;
        if (bx.width() < threshold && by.width() < threshold) {
          ++report.count;
          columns.insert(i);
          rows.insert(j);
          break;
        }
      }
    }
  }
  report.axis_counts_agree = columns.size() == rows.size();
  return report;
}

}  // namespace

IntersectionReport intersect_polynomials(const BivariatePoly& f, const BivariatePoly& g,
                                         const IntersectionOptions& options) {
  IntersectionReport report;
  for (int attempt = 0; attempt <= options.max_shears; ++attempt) {
    // (x, y) -> (x + l*y, y + l*x) with l = k/7 is invertible for k < 7 and
    // maps intersection points bijectively.
    const Rational lambda(Integer(attempt), Integer(7));
    const BivariatePoly fs = attempt == 0 ? f : f.sheared(lambda, lambda);
    const BivariatePoly gs = attempt == 0 ? g : g.sheared(lambda, lambda);
    report = count_boxes(fs, gs, options.box_threshold);
    report.attempts = attempt + 1;
    if (report.axis_counts_agree) break;
  }
  return report;
}

IntersectionReport intersect_curve_circle(const CurveSpec& c, const BivariatePoly& circle,
                                          const IntersectionOptions& options) {
  if (circle.degree() < 1 || !classify_factor(circle).is_circular())
    throw Error(ErrorCode::not_a_circle, circle.to_string() + " is not a circle");
  for (const auto& f : c.factors()) {
    if (is_scalar_multiple(f.poly, circle))
      throw Error(ErrorCode::shared_component, "circle " + circle.to_string() + " is a component of the curve");
  }
  return intersect_polynomials(c.reduced_polynomial(), circle, options);
}

std::size_t count_curve_circle_intersections(const CurveSpec& c, const BivariatePoly& circle,
                                             const IntersectionOptions& options) {
  return intersect_curve_circle(c, circle, options).count;
}

// ---------------------------------------------------------------- complement components

std::size_t estimate_complement_components(const CurveSpec& c, const Window& window, int resolution) {
  if (resolution < 2) throw Error(ErrorCode::invalid_argument, "resolution must be at least 2");
  if (!(window.x_min < window.x_max) || !(window.y_min < window.y_max))
    throw Error(ErrorCode::invalid_argument, "empty window");

  const auto n = static_cast<std::size_t>(resolution);
  const Rational step_x = (window.x_max - window.x_min) / Rational(resolution);
  const Rational step_y = (window.y_max - window.y_min) / Rational(resolution);

  // Corner signs per factor, (n+1)^2 corners.
  const std::size_t corners = (n + 1) * (n + 1);
  std::vector<std::vector<signed char>> signs(c.factors().size(), std::vector<signed char>(corners));
  for (std::size_t iy = 0; iy <= n; ++iy) {
    const Rational y = window.y_min + step_y * Rational(static_cast<long>(iy));
    for (std::size_t ix = 0; ix <= n; ++ix) {
      const Point p{window.x_min + step_x * Rational(static_cast<long>(ix)), y};
      for (std::size_t f = 0; f < c.factors().size(); ++f)
        signs[f][iy * (n + 1) + ix] = static_cast<signed char>(c.factors()[f].poly.evaluate(p).sign());
    }
  }

  std::vector<char> free(n * n, 1);
  for (std::size_t cy = 0; cy < n; ++cy) {
    for (std::size_t cx = 0; cx < n; ++cx) {
      const std::size_t k[4] = {cy * (n + 1) + cx, cy * (n + 1) + cx + 1, (cy + 1) * (n + 1) + cx,
                                (cy + 1) * (n + 1) + cx + 1};
      for (const auto& s : signs) {
        const int s0 = s[k[0]];
        if (s0 == 0 || s[k[1]] != s0 || s[k[2]] != s0 || s[k[3]] != s0) {
          free[cy * n + cx] = 0;
          break;
        }
      }
    }
  }

  std::size_t components = 0;
  std::vector<char> seen(n * n, 0);
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < n * n; ++start) {
    if (!free[start] || seen[start]) continue;
    ++components;
    queue.assign(1, start);
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t cell = queue.back();
      queue.pop_back();
      const std::size_t cx = cell % n;
      const std::size_t cy = cell / n;
      auto visit = [&](std::size_t next) {
        if (free[next] && !seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      };
      if (cx > 0) visit(cell - 1);
      if (cx + 1 < n) visit(cell + 1);
      if (cy > 0) visit(cell - n);
      if (cy + 1 < n) visit(cell + n);
    }
  }
  return components;
}

}  // namespace ddlab
