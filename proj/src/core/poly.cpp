#include "ddlab/poly.hpp"

#include <algorithm>

#include "ddlab/error.hpp"

namespace ddlab {

// ---------------------------------------------------------------- univariate

UnivariatePoly::UnivariatePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UnivariatePoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UnivariatePoly::evaluate(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.raw();
    acc += it->raw();
  }
  return Rational(acc);
}

int UnivariatePoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  const int s = leading().sign();
  return (positive || degree() % 2 == 0) ? s : -s;
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < a.coeffs_.size()) out[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) out[k] += b.coeffs_[k];
  }
  return UnivariatePoly(std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  return a + Rational(-1) * b;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const Rational& c, const UnivariatePoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& v : out) v *= c;
  return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(const UnivariatePoly& a,
                                                                 const UnivariatePoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::zero_polynomial, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {UnivariatePoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] * inv_lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coeffs_[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

std::string UnivariatePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = c.abs();
    const bool unit = a == Rational(1);
    if (!unit || k == 0) out += a.is_integer() ? a.num().get_str() : "(" + a.to_string() + ")";
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    auto r = UnivariatePoly::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// ---------------------------------------------------------------- intervals

namespace {

Interval interval_mul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval interval_scale(const Rational& k, const Interval& a) {
  Rational p = k * a.lo;
  Rational q = k * a.hi;
  if (q < p) std::swap(p, q);
  return {p, q};
}

}  // namespace

Interval interval_pow(const Interval& v, unsigned exponent) {
  if (exponent == 0) return {Rational(1), Rational(1)};
  const Rational lo = pow(v.lo, exponent);
  const Rational hi = pow(v.hi, exponent);
  if (exponent % 2 == 1) return {lo, hi};
  if (v.lo.sign() >= 0) return {lo, hi};
  if (v.hi.sign() <= 0) return {hi, lo};
  return {Rational(0), std::max(lo, hi)};
}

// ---------------------------------------------------------------- bivariate

BivariatePoly::BivariatePoly(std::map<Exponent, Rational> terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [e, c] : terms_) {
    if (e.first < 0 || e.second < 0) throw Error(ErrorCode::invalid_argument, "negative exponent");
  }
}

BivariatePoly BivariatePoly::constant(const Rational& c) { return BivariatePoly(std::map<Exponent, Rational>{{{0, 0}, c}}); }
BivariatePoly BivariatePoly::x() { return BivariatePoly(std::map<Exponent, Rational>{{{1, 0}, Rational(1)}}); }
BivariatePoly BivariatePoly::y() { return BivariatePoly(std::map<Exponent, Rational>{{{0, 1}, Rational(1)}}); }

BivariatePoly BivariatePoly::circle(const Point& center, const Rational& rho2, const Rational& alpha) {
  const BivariatePoly dx = x() - constant(center.x);
  const BivariatePoly dy = y() - constant(center.y);
  return alpha * (dx * dx + dy * dy - constant(rho2));
}

BivariatePoly BivariatePoly::line(const Rational& a, const Rational& b, const Rational& c) {
  return BivariatePoly({{{1, 0}, a}, {{0, 1}, b}, {{0, 0}, c}});
}

int BivariatePoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

int BivariatePoly::degree_in(Axis axis) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, axis == Axis::x ? e.first : e.second);
  return d;
}

Rational BivariatePoly::coefficient(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivariatePoly::evaluate(const Point& p) const {
  // Horner-free but exact; degrees here are small.
  mpq_class acc = 0;
  const int dx = std::max(degree_in(Axis::x), 0);
  const int dy = std::max(degree_in(Axis::y), 0);
  std::vector<mpq_class> xp(static_cast<std::size_t>(dx + 1));
  std::vector<mpq_class> yp(static_cast<std::size_t>(dy + 1));
  xp[0] = 1;
  yp[0] = 1;
  for (int i = 1; i <= dx; ++i) xp[static_cast<std::size_t>(i)] = xp[static_cast<std::size_t>(i - 1)] * p.x.raw();
  for (int j = 1; j <= dy; ++j) yp[static_cast<std::size_t>(j)] = yp[static_cast<std::size_t>(j - 1)] * p.y.raw();
  for (const auto& [e, c] : terms_)
    acc += c.raw() * xp[static_cast<std::size_t>(e.first)] * yp[static_cast<std::size_t>(e.second)];
  return Rational(acc);
}

Interval BivariatePoly::evaluate(const Interval& xs, const Interval& ys) const {
  Interval acc{Rational(0), Rational(0)};
  for (const auto& [e, c] : terms_) {
    const Interval term = interval_scale(
        c, interval_mul(interval_pow(xs, static_cast<unsigned>(e.first)),
                        interval_pow(ys, static_cast<unsigned>(e.second))));
    acc.lo += term.lo;
    acc.hi += term.hi;
  }
  return acc;
}

std::vector<UnivariatePoly> BivariatePoly::as_polynomial_in(Axis axis) const {
  const int d = degree_in(axis);
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(std::max(d + 1, 0)));
  for (const auto& [e, c] : terms_) {
    const int main = axis == Axis::x ? e.first : e.second;
    const int other = axis == Axis::x ? e.second : e.first;
    auto& slot = raw[static_cast<std::size_t>(main)];
    if (slot.size() <= static_cast<std::size_t>(other)) slot.resize(static_cast<std::size_t>(other + 1));
    slot[static_cast<std::size_t>(other)] += c;
  }
  std::vector<UnivariatePoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

BivariatePoly BivariatePoly::sheared(const Rational& lambda, const Rational& mu) const {
  const BivariatePoly u = x() + lambda * y();
  const BivariatePoly v = y() + mu * x();
  BivariatePoly out;
  for (const auto& [e, c] : terms_)
    out = out + c * (pow(u, static_cast<unsigned>(e.first)) * pow(v, static_cast<unsigned>(e.second)));
  return out;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  auto terms = a.terms_;
  for (const auto& [e, c] : b.terms_) terms[e] += c;
  return BivariatePoly(std::move(terms));
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
  return a + Rational(-1) * b;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  std::map<BivariatePoly::Exponent, Rational> terms;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) terms[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  return BivariatePoly(std::move(terms));
}

BivariatePoly operator*(const Rational& c, const BivariatePoly& a) {
  auto terms = a.terms_;
  for (auto& [e, v] : terms) v *= c;
  return BivariatePoly(std::move(terms));
}

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  // Highest total degree first, then by descending x exponent.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    return da != db ? da > db : a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [e, c] : ordered) {
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational a = c.abs();
    const bool constant_term = e.first == 0 && e.second == 0;
    std::string mono;
    if (e.first >= 1) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
    if (e.second >= 1) {
      if (!mono.empty()) mono += "*";
      mono += e.second == 1 ? "y" : "y^" + std::to_string(e.second);
    }
    if (constant_term || !(a == Rational(1))) {
      out += a.is_integer() ? a.num().get_str() : "(" + a.to_string() + ")";
      if (!constant_term) out += "*";
    }
    out += mono;
  }
  return out;
}

BivariatePoly pow(const BivariatePoly& base, unsigned exponent) {
  BivariatePoly out = BivariatePoly::constant(Rational(1));
  for (unsigned k = 0; k < exponent; ++k) out = out * base;
  return out;
}

bool is_scalar_multiple(const BivariatePoly& f, const BivariatePoly& g) {
  if (f.is_zero() || g.is_zero() || f.terms().size() != g.terms().size()) return false;
  const auto& [e0, c0] = *f.terms().begin();
  const Rational g0 = g.coefficient(e0.first, e0.second);
  if (g0.is_zero()) return false;
  const Rational ratio = c0 / g0;
  for (const auto& [e, c] : f.terms()) {
    if (!(c == ratio * g.coefficient(e.first, e.second))) return false;
  }
  return true;
}

}  // namespace ddlab
