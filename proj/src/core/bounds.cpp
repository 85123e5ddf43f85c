#include "ddlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "ddlab/error.hpp"
#include "ddlab/incidence.hpp"

namespace ddlab {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
  }
  return "SKIP";
}

namespace {

std::string fmt(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Lg", v);
  return buf;
}

std::string str(const Integer& v) { return v.get_str(); }
std::string str(std::uint64_t v) { return std::to_string(v); }

Integer ipow(const Integer& base, unsigned e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

Integer big(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return out;
}

CheckResult make(std::string name, bool ok, std::string lhs, std::string rhs, std::string citation,
                 std::string note = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(lhs), std::move(rhs),
          std::move(citation), std::move(note)};
}

CheckResult skipped(std::string name, std::string citation, std::string note) {
  return {std::move(name), CheckStatus::skip, "-", "-", std::move(citation), std::move(note)};
}

void require_on_curve(const PointSet& pts, const CurveSpec& c, const char* role) {
  for (const auto& p : pts)
    if (!on_curve(c, p))
      throw Error(ErrorCode::precondition, std::string(role) + " point " + p.to_string() + " is not on the curve");
}

void require_off_centers(const PointSet& pts, const CurveSpec& c, const char* role) {
  const auto centers = circular_centers(c);
  for (const auto& p : pts)
    if (std::binary_search(centers.begin(), centers.end(), p))
      throw Error(ErrorCode::precondition,
                  std::string(role) + " point " + p.to_string() + " is the center of a circular component");
}

bool is_center(const std::vector<Point>& centers, const Point& p) {
  return std::binary_search(centers.begin(), centers.end(), p);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Worst per-center, per-distance count over columns of the pair index.
struct ColumnStats {
  std::uint64_t worst = 0;
  std::size_t worst_column = 0;
};

ColumnStats max_column_run(const std::vector<std::int64_t>& index, std::size_t m, std::size_t n) {
  ColumnStats out;
  std::vector<std::int64_t> col(m);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t len = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (index[i * n + j] >= 0) col[len++] = index[i * n + j];
    std::sort(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(len));
    for (std::size_t a = 0; a < len;) {
      std::size_t b = a;
      while (b < len && col[b] == col[a]) ++b;
      if (b - a > out.worst) out = {b - a, j};
      a = b;
    }
  }
  return out;
}

std::size_t distinct_in(std::vector<std::int64_t>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::remove(ids.begin(), ids.end(), -1), ids.end());
  return static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

PointSet filtered(const PointSet& pts, auto keep, const char* label) {
  std::vector<Point> out;
  for (const auto& p : pts)
    if (keep(p)) out.push_back(p);
  return PointSet(std::move(out), label);
}

}  // namespace

Integer enumerate_energy(const PointSet& p1, const PointSet& p2, unsigned d, std::uint64_t budget) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "energy order must be at least 1");
  const std::size_t pairs = p1.size() * p2.size();
  if (std::pow(static_cast<long double>(pairs), static_cast<long double>(d)) > static_cast<long double>(budget))
    throw Error(ErrorCode::budget_exceeded, "(mn)^" + std::to_string(d) + " tuples exceed the enumeration budget");
  // Label each cross pair by its squared distance; 0 marks coincident pairs.
  std::map<Rational, std::uint32_t> ids;
  std::vector<std::uint32_t> label;
  label.reserve(pairs);
  for (const auto& a : p1)
    for (const auto& b : p2) {
      const Rational delta = squared_distance(a, b);
      if (delta.is_zero()) {
        label.push_back(0);
        continue;
      }
      auto [it, fresh] = ids.try_emplace(delta, static_cast<std::uint32_t>(ids.size() + 1));
      label.push_back(it->second);
    }
  if (pairs == 0) return 0;
  std::uint64_t count = 0;
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    const std::uint32_t first = label[idx[0]];
    bool equal = first != 0;
    for (unsigned k = 1; equal && k < d; ++k) equal = label[idx[k]] == first;
    count += equal;
    unsigned k = 0;
    while (k < d && ++idx[k] == pairs) idx[k++] = 0;
    if (k == d) break;
  }
  return big(count);
}

CheckResult check_energy_identity(const PointSet& p1, const PointSet& p2, unsigned d, const DistanceSpectrum& s,
                                  std::uint64_t budget) {
  const std::string name = "energy_identity_d" + std::to_string(d);
  const Integer spectral = s.energy(d);
  try {
    const Integer direct = enumerate_energy(p1, p2, d, budget);
    return make(name, spectral == direct, str(spectral), str(direct), "energy-identity");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::budget_exceeded) throw;
    return skipped(name, "energy-identity", e.what());
  }
}

CheckResult check_holder(const DistanceSpectrum& s, unsigned d) {
  if (d == 0) throw Error(ErrorCode::invalid_argument, "energy order must be at least 1");
  const Integer lhs = s.energy(d) * ipow(big(s.size()), d - 1);
  const Integer rhs = ipow(big(s.total_pairs()), d);
  return make("holder_d" + std::to_string(d), lhs >= rhs, str(lhs), str(rhs), "holder-power-mean");
}

CheckResult check_bezout_cap(const PointSet& p1, const PointSet& p2, const CurveSpec& c) {
  require_on_curve(p1, c, "P1");
  require_off_centers(p2, c, "P2");
  const DistanceSpectrum s = spectrum(p1, p2);
  const auto index = pair_spectrum_index(p1, p2, s);
  const auto stats = max_column_run(index, p1.size(), p2.size());
  const std::uint64_t cap = 2 * static_cast<std::uint64_t>(c.degree());
  std::string note;
  if (stats.worst > 0) note = "richest center " + p2[stats.worst_column].to_string();
  return make("bezout_cap", stats.worst <= cap, str(stats.worst), str(cap), "bezout-circle-cap", note);
}

CheckResult check_pencil_bound(const Point& p, const PointSet& q, const CurveSpec& c) {
  require_on_curve(q, c, "Q");
  if (is_center(circular_centers(c), p))
    throw Error(ErrorCode::precondition, "point " + p.to_string() + " is the center of a circular component");
  std::vector<Rational> dist;
  for (const auto& b : q) {
    Rational delta = squared_distance(p, b);
    if (!delta.is_zero()) dist.push_back(std::move(delta));
  }
  const std::uint64_t others = dist.size();
  std::sort(dist.begin(), dist.end());
  const auto distinct = static_cast<std::uint64_t>(std::unique(dist.begin(), dist.end()) - dist.begin());
  const std::uint64_t need = ceil_div(others, 2 * static_cast<std::uint64_t>(c.degree()));
  return make("pencil", distinct >= need, str(distinct), str(need), "pencil-bound", "from " + p.to_string());
}

TheoremBound theorem_bound(std::uint64_t m, std::uint64_t n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "theorem bound needs n >= 2 (log n must be positive)");
  const auto lm = static_cast<long double>(m);
  const auto ln = static_cast<long double>(n);
  const long double lg = std::log2(ln);
  const long double threshold = std::sqrt(ln) * std::pow(lg, -1.0L / 3.0L);
  if (lm >= threshold) return {'A', std::sqrt(lm) * std::sqrt(ln) / std::sqrt(lg)};
  return {'B', std::cbrt(lm) * std::sqrt(ln)};
}

Integer dyadic_upper_sum(const DyadicProfile& profile, unsigned d) {
  Integer sum = 0;
  for (const auto& level : profile.levels) sum += ipow(Integer(2), d * static_cast<unsigned>(level.j)) * big(level.k);
  return ipow(Integer(2), d) * sum;
}

Integer dyadic_lower_sum(const DyadicProfile& profile, unsigned d) {
  Integer sum = 0;
  for (std::size_t j = 0; j < profile.levels.size(); ++j) {
    const std::uint64_t bin = profile.levels[j].k - profile.k_at_level(j + 1);
    sum += ipow(Integer(2), d * static_cast<unsigned>(j)) * big(bin);
  }
  return sum;
}

bool VerificationReport::has_failures() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::fail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

class Verifier {
 public:
  Verifier(const PointSet& p1, const PointSet& p2, const CurveSpec& c, const VerifyConfig& cfg)
      : p1_(p1), p2_(p2), c_(c), cfg_(cfg), centers_(circular_centers(c)) {
    r_ = static_cast<std::uint64_t>(c.degree());
    actual_ = spectrum(p1, p2, {cfg.threads});
    spec_ = cfg.spectrum ? *cfg.spectrum : actual_;
    index_ = pair_spectrum_index(p1, p2, actual_);
    m_ = p1.size();
    n_ = p2.size();
    for (const auto& p : p1)
      if (!on_curve(c, p)) {
        p1_violation_ = "P1 point " + p.to_string() + " is not on the curve";
        break;
      }
    for (const auto& p : p2)
      if (is_center(centers_, p)) {
        p2_violation_ = "P2 point " + p.to_string() + " is the center of a circular component";
        break;
      }
    profile_ = dyadic_profile(spec_, c.degree(), n_);
  }

  VerificationReport run() {
    report_.instance_id = cfg_.instance_id;
    if (actual_.zero_pairs() > 0)
      report_.notes.push_back("P1 and P2 overlap: " + str(actual_.zero_pairs()) + " coincident pairs");
    if (cfg_.spectrum) report_.notes.push_back("spectrum supplied externally");

    for (unsigned d : cfg_.energy_d) add(check_energy_identity(p1_, p2_, d, spec_, cfg_.tuple_budget));
    for (unsigned d : cfg_.holder_d) add(check_holder(spec_, d));
    zero_pairs();
    guarded("bezout_cap", "bezout-circle-cap", {&p1_violation_, &p2_violation_}, [&] { return bezout_cap(); });
    guarded("pdelta_cap", "bezout-pdelta-cap", {&p1_violation_, &p2_violation_}, [&] { return pdelta_cap(); });
    guarded("dyadic_range", "dyadic-classes", {&p1_violation_, &p2_violation_}, [&] { return dyadic_range(); });
    guarded("pencil_p2_to_p1", "pencil-bound", {&p1_violation_}, [&] { return pencil_p2_to_p1(); });
    pencil_p1_to_curve_points();
    dyadic_monotone();
    markov();
    for (unsigned d : {2u, 3u}) dyadic_chain(d);

    restrict();
    guarded("k2_free", "k2-free-lemma", {&p1_violation_}, [&] { return k2_free(); });
    incidence_lower();
    collinear_centers();
    richest_circle_checks();
    e2_split();
    ratios();
    return std::move(report_);
  }

 private:
  void add(CheckResult c) { report_.checks.push_back(std::move(c)); }

  template <class F>
  void guarded(const char* name, const char* citation, std::initializer_list<const std::string*> violations, F body) {
    for (const auto* v : violations)
      if (!v->empty()) {
        if (cfg_.policy == PreconditionPolicy::fail)
          add({name, CheckStatus::fail, "-", "-", citation, "precondition violated: " + *v});
        else
          add(skipped(name, citation, "precondition violated: " + *v));
        return;
      }
    add(body());
  }

  void zero_pairs() {
    const Integer lhs = big(spec_.total_pairs()) + big(actual_.zero_pairs());
    const Integer rhs = big(m_) * big(n_);
    add(make("zero_pair_accounting", lhs == rhs, str(lhs), str(rhs), "spectrum-accounting"));
  }

  CheckResult bezout_cap() {
    const auto stats = max_column_run(index_, m_, n_);
    std::string note;
    if (stats.worst > 0) note = "richest center " + p2_[stats.worst_column].to_string();
    return make("bezout_cap", stats.worst <= 2 * r_, str(stats.worst), str(2 * r_), "bezout-circle-cap", note);
  }

  CheckResult pdelta_cap() {
    const Integer lhs = big(spec_.max_multiplicity());
    const Integer rhs = big(2 * r_) * big(n_);
    return make("pdelta_cap", lhs <= rhs, str(lhs), str(rhs), "bezout-pdelta-cap");
  }

  CheckResult dyadic_range() {
    const int top = profile_.levels.back().j;
    return make("dyadic_range", profile_.within_cap, std::to_string(top), std::to_string(profile_.cap_exponent),
                "dyadic-classes");
  }

  // Worst slack of distinct − ceil(|others| / 2r) over the column set.
  CheckResult pencil_worst(const char* name, bool from_p2, const std::vector<std::size_t>& targets) {
    bool any = false;
    long long best_slack = 0;
    std::uint64_t best_lhs = 0, best_rhs = 0;
    std::string where;
    std::vector<std::int64_t> ids;
    const std::size_t outer = from_p2 ? n_ : m_;
    for (std::size_t o = 0; o < outer; ++o) {
      const Point& p = from_p2 ? p2_[o] : p1_[o];
      if (is_center(centers_, p)) continue;
      ids.clear();
      for (std::size_t t : targets) ids.push_back(from_p2 ? index_[t * n_ + o] : index_[o * n_ + t]);
      const std::uint64_t others = static_cast<std::uint64_t>(std::count_if(ids.begin(), ids.end(), [](auto k) { return k >= 0; }));
      const std::uint64_t distinct = distinct_in(ids);
      const std::uint64_t need = ceil_div(others, 2 * r_);
      const long long slack = static_cast<long long>(distinct) - static_cast<long long>(need);
      if (!any || slack < best_slack) {
        any = true;
        best_slack = slack;
        best_lhs = distinct;
        best_rhs = need;
        where = p.to_string();
      }
    }
    if (!any) return skipped(name, "pencil-bound", "every candidate point is a circular center");
    return make(name, best_slack >= 0, str(best_lhs), str(best_rhs), "pencil-bound", "tightest at " + where);
  }

  CheckResult pencil_p2_to_p1() {
    std::vector<std::size_t> all(m_);
    for (std::size_t i = 0; i < m_; ++i) all[i] = i;
    return pencil_worst("pencil_p2_to_p1", true, all);
  }

  void pencil_p1_to_curve_points() {
    std::vector<std::size_t> on;
    for (std::size_t j = 0; j < n_; ++j)
      if (on_curve(c_, p2_[j])) on.push_back(j);
    if (on.empty()) {
      add(skipped("pencil_p1_to_p2_on_curve", "pencil-bound", "no P2 point lies on the curve"));
      return;
    }
    add(pencil_worst("pencil_p1_to_p2_on_curve", false, on));
  }

  void dyadic_monotone() {
    bool ok = profile_.levels.front().k == spec_.size();
    for (std::size_t j = 1; j < profile_.levels.size(); ++j) ok = ok && profile_.levels[j].k <= profile_.levels[j - 1].k;
    add(make("dyadic_monotone", ok, str(profile_.levels.front().k), str(static_cast<std::uint64_t>(spec_.size())),
             "dyadic-classes", "k_q nonincreasing, k_1 = D"));
  }

  void markov() {
    std::vector<std::uint64_t> counts = spec_.multiplicities();
    std::sort(counts.begin(), counts.end());
    Integer worst = 0;
    std::size_t below = 0;  // counts < j
    const std::uint64_t top = counts.empty() ? 0 : counts.back();
    for (std::uint64_t j = 1; j <= top; ++j) {
      while (below < counts.size() && counts[below] < j) ++below;
      const Integer v = big(j) * big(counts.size() - below);
      if (v > worst) worst = v;
    }
    const Integer total = big(spec_.total_pairs());
    const bool ok = worst <= total && total <= big(m_) * big(n_);
    add(make("markov", ok, str(worst), str(total), "markov-kj", "max_j j*k_j <= total_pairs <= mn"));
  }

  void dyadic_chain(unsigned d) {
    const Integer e = spec_.energy(d);
    const Integer upper = dyadic_upper_sum(profile_, d);
    const Integer lower = dyadic_lower_sum(profile_, d);
    const std::string tag = d == 2 ? "dyadic-e2-chain" : "dyadic-e3-chain";
    // E_2 < 4Σ is strict whenever Δ is nonempty; E_3 is checked as <= 8Σ.
    const bool upper_ok = (d == 2 && !spec_.empty()) ? e < upper : e <= upper;
    add(make("dyadic_upper_d" + std::to_string(d), upper_ok, str(e), str(upper), tag));
    add(make("dyadic_lower_d" + std::to_string(d), e >= lower, str(e), str(lower), tag));
  }

  // P1' (off linear components) and P2'' (off the curve, off circular centers).
  void restrict() {
    p1r_ = filtered(p1_, [&](const Point& p) { return !c_.on_linear_component(p); }, "P1'");
    p2r_ = filtered(p2_, [&](const Point& p) { return !on_curve(c_, p) && !is_center(centers_, p); }, "P2''");
    if (p1r_.empty() || p2r_.empty()) return;
    restricted_ = true;
    rspec_ = spectrum(p1r_, p2r_, {cfg_.threads});
    rindex_ = pair_spectrum_index(p1r_, p2r_, rspec_);
    rprofile_ = dyadic_profile(rspec_, c_.degree(), p2r_.size());
    for (const auto& level : rprofile_.levels)
      if (level.k > 0) graphs_.push_back({level.q, rich_incidence_graph(p1r_, p2r_, rspec_, level.q, rindex_)});
    report_.notes.push_back("|P1'| = " + str(static_cast<std::uint64_t>(p1r_.size())) +
                            ", |P2''| = " + str(static_cast<std::uint64_t>(p2r_.size())));
  }

  std::string restriction_gap() const {
    return p1r_.empty() ? "P1' is empty (all of P1 on linear components)" : "P2'' is empty";
  }

  CheckResult k2_free() {
    if (!restricted_) return skipped("k2_free", "k2-free-lemma", restriction_gap());
    std::size_t worst = 0;
    bool witness = false;
    for (const auto& [q, g] : graphs_) {
      worst = std::max(worst, max_common_circles(g));
      witness = witness || find_k_st(g, 2, r_ + 1).has_value();
    }
    return make("k2_free", !witness && worst <= r_, str(static_cast<std::uint64_t>(worst)), str(r_), "k2-free-lemma",
                "max common circles of a P2'' pair against r");
  }

  void incidence_lower() {
    if (!restricted_) {
      add(skipped("incidence_lower", "incidence-lower", restriction_gap()));
      return;
    }
    bool ok = true;
    Integer wl = 0, wr = 0;
    bool first = true;
    for (const auto& [q, g] : graphs_) {
      IncidenceRow row;
      row.q = q;
      row.family_size = g.family_size;
      row.incidences = g.edge_count();
      row.q_times_k = big(q) * big(rspec_.rich_count(q));
      row.bound = pach_sharir_bound(p2r_.size(), std::max<std::uint64_t>(1, row.family_size), 2);
      row.ratio = static_cast<long double>(row.incidences) / row.bound;
      const Integer inc = big(row.incidences);
      if (first || inc - row.q_times_k < wl - wr) {
        wl = inc;
        wr = row.q_times_k;
        first = false;
      }
      ok = ok && inc >= row.q_times_k;
      report_.incidence.push_back(std::move(row));
    }
    add(make("incidence_lower", ok, str(wl), str(wr), "incidence-lower", "tightest level I(P2'', Gamma_q) vs q*k_q"));
  }

  void collinear_centers() {
    if (!restricted_ || graphs_.empty()) {
      add(skipped("collinear_centers", "collinear-centers", restricted_ ? "no rich circles" : restriction_gap()));
      return;
    }
    const IncidenceGraph& g = graphs_.front().second;  // Γ_1 contains every Γ_q
    std::uint64_t checked = 0, bad = 0;
    for (const auto& pc : pairs_with_common_circles(g, 3)) {
      std::vector<Circle> cs;
      for (auto k : pc.circles) cs.push_back(g.circles[k]);
      ++checked;
      if (!centers_collinear(cs)) ++bad;
    }
    add(make("collinear_centers", bad == 0, str(checked - bad), str(checked), "collinear-centers",
             "pairs on >= 3 common circles with collinear centers"));
  }

  void richest_circle_checks() {
    if (!restricted_ || rspec_.empty()) {
      const std::string why = restricted_ ? "no positive distance between P1' and P2''" : restriction_gap();
      add(skipped("richest_circle_pigeonhole", "richest-circle", why));
      add(skipped("richest_circle_distinct", "richest-circle", why));
      return;
    }
    std::size_t top = 0;
    for (std::size_t i = 1; i < rspec_.size(); ++i)
      if (rspec_.multiplicity(i) > rspec_.multiplicity(top)) top = i;
    const Rational delta = rspec_.squared_distance(top);
    const RichCircle rc = richest_circle(p1r_, p2r_, delta);
    const Integer lhs = big(rc.hit_count) * big(p1r_.size());
    const Integer rhs = big(rspec_.multiplicity(top));
    add(make("richest_circle_pigeonhole", lhs >= rhs, str(lhs), str(rhs), "richest-circle",
             "delta = " + delta.to_string() + ", center " + rc.center.to_string()));

    const Point* other = nullptr;
    for (const auto& p : p1r_)
      if (p != rc.center) {
        other = &p;
        break;
      }
    if (!other) {
      add(skipped("richest_circle_distinct", "richest-circle", "P1' has a single point"));
      return;
    }
    std::vector<Rational> dist;
    for (const auto& b : p2r_)
      if (squared_distance(rc.center, b) == delta) dist.push_back(squared_distance(*other, b));
    std::sort(dist.begin(), dist.end());
    const auto distinct = static_cast<std::uint64_t>(std::unique(dist.begin(), dist.end()) - dist.begin());
    const std::uint64_t need = ceil_div(rc.hit_count, 2);
    add(make("richest_circle_distinct", distinct >= need, str(distinct), str(need), "richest-circle",
             "from " + other->to_string()));
  }

  void e2_split() {
    if (!restricted_ || rspec_.empty()) {
      add(skipped("e2_split", "e2-split", restricted_ ? "no positive distance between P1' and P2''" : restriction_gap()));
      return;
    }
    // p < n^{1/2} m^{4/3}  <=>  p^6 < n^3 m^8, all integers.
    const Integer mm = big(p1r_.size()), nn = big(p2r_.size());
    const Integer cap6 = ipow(nn, 3) * ipow(mm, 8);
    if (ipow(big(rspec_.max_multiplicity()), 6) >= cap6) {
      add(skipped("e2_split", "e2-split", "case hypothesis fails: some p_delta >= n^{1/2} m^{4/3}"));
      return;
    }
    Integer chain = 0, head = 0, head_cap = 0;
    const Integer mn = mm * nn;
    for (const auto& level : rprofile_.levels) {
      const auto j = static_cast<unsigned>(level.j);
      if (ipow(Integer(2), 6 * j) >= cap6) break;
      const Integer term = ipow(Integer(2), 2 * j) * big(level.k);
      chain += term;
      if (ipow(Integer(2), 2 * j) <= mn) {
        head += term;
        head_cap += mn * ipow(Integer(2), j);
      }
    }
    chain *= 4;
    const Integer e2 = rspec_.energy(2);
    add(make("e2_split", e2 < chain && head <= head_cap, str(e2), str(chain), "e2-split",
             "head sum " + str(head) + " <= " + str(head_cap)));
  }

  void ratios() {
    if (n_ >= 2) {
      const TheoremBound tb = theorem_bound(m_, n_);
      report_.ratios.push_back({std::string("theorem_bound_regime_") + tb.regime,
                                static_cast<long double>(spec_.size()) / tb.value});
    } else {
      report_.notes.push_back("theorem bound undefined for n < 2");
    }
    long double worst = 0;
    for (const auto& row : report_.incidence) worst = std::max(worst, row.ratio);
    if (!report_.incidence.empty()) report_.ratios.push_back({"incidence_max", worst});
  }

  const PointSet& p1_;
  const PointSet& p2_;
  const CurveSpec& c_;
  const VerifyConfig& cfg_;
  std::vector<Point> centers_;
  std::uint64_t r_ = 1, m_ = 0, n_ = 0;
  DistanceSpectrum actual_, spec_;
  std::vector<std::int64_t> index_;
  DyadicProfile profile_;
  std::string p1_violation_, p2_violation_;

  bool restricted_ = false;
  PointSet p1r_, p2r_;
  DistanceSpectrum rspec_;
  std::vector<std::int64_t> rindex_;
  DyadicProfile rprofile_;
  std::vector<std::pair<std::uint64_t, IncidenceGraph>> graphs_;

  VerificationReport report_;
};

}  // namespace

VerificationReport verify_all(const PointSet& p1, const PointSet& p2, const CurveSpec& c, const VerifyConfig& config) {
  return Verifier(p1, p2, c, config).run();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "instance: " << (report.instance_id.empty() ? "-" : report.instance_id) << "\n";
  out << "log-base: 2\n";
  for (const auto& c : report.checks) {
    out << "[" << to_string(c.status) << "] " << c.name << "  lhs=" << c.lhs << "  rhs=" << c.rhs << "  ("
        << c.citation << ")\n";
    if (!c.note.empty()) out << "    " << c.note << "\n";
  }
  for (const auto& r : report.ratios) out << "ratio " << r.name << " = " << fmt(r.value) << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  const auto failed = std::count_if(report.checks.begin(), report.checks.end(),
                                    [](const auto& c) { return c.status == CheckStatus::fail; });
  out << (failed ? "FAILED " : "OK ") << failed << " failing of " << report.checks.size() << " checks\n";
  return out.str();
}

std::string report_to_lines(const VerificationReport& report) {
  std::ostringstream out;
  out << "# log-base 2\n";
  if (!report.instance_id.empty()) out << "# instance " << report.instance_id << "\n";
  for (const auto& c : report.checks)
    out << "CHECK " << c.name << " " << to_string(c.status) << " " << c.lhs << " " << c.rhs << " " << c.citation
        << "\n";
  for (const auto& r : report.ratios) out << "RATIO " << r.name << " " << fmt(r.value) << "\n";
  for (const auto& n : report.notes) out << "NOTE " << n << "\n";
  for (const auto& c : report.checks)
    if (!c.note.empty()) out << "NOTE " << c.name << ": " << c.note << "\n";
  return out.str();
}

std::string incidence_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "q,family_size,incidences,q_k_q,bound_value,ratio\n";
  for (const auto& row : report.incidence)
    out << row.q << "," << row.family_size << "," << row.incidences << "," << row.q_times_k.get_str() << ","
        << fmt(row.bound) << "," << fmt(row.ratio) << "\n";
  return out.str();
}

}  // namespace ddlab
