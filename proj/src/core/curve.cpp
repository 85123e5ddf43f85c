#include "ddlab/curve.hpp"

#include <algorithm>
#include <sstream>

#include "ddlab/error.hpp"

namespace ddlab {

std::string CurveComponentKind::to_string() const {
  switch (kind) {
    case Kind::linear: return "LINEAR";
    case Kind::circular:
      return "CIRCULAR(center " + center.to_string() + ", rho2 " + squared_radius.to_string() + ")";
    case Kind::other: return "OTHER";
  }
  return "OTHER";
}

CurveComponentKind classify_factor(const BivariatePoly& f) {
  const int deg = f.degree();
  if (deg < 1) throw Error(ErrorCode::invalid_argument, "cannot classify a constant polynomial");
  CurveComponentKind out;
  if (deg == 1) {
    out.kind = CurveComponentKind::Kind::linear;
    return out;
  }
  if (deg != 2) return out;

  const Rational alpha = f.coefficient(2, 0);
  if (alpha.is_zero() || !(f.coefficient(0, 2) == alpha) || !f.coefficient(1, 1).is_zero()) return out;
  const Rational two_alpha = Rational(2) * alpha;
  const Rational a = -f.coefficient(1, 0) / two_alpha;
  const Rational b = -f.coefficient(0, 1) / two_alpha;
  const Rational rho2 = a * a + b * b - f.coefficient(0, 0) / alpha;
  if (rho2.sign() <= 0) return out;
  out.kind = CurveComponentKind::Kind::circular;
  out.center = {a, b};
  out.squared_radius = rho2;
  return out;
}

CurveSpec::CurveSpec(std::vector<std::pair<BivariatePoly, int>> factors) {
  for (auto& [poly, mult] : factors) {
    if (poly.degree() < 1) throw Error(ErrorCode::invalid_argument, "curve factor must be nonconstant");
    if (mult < 1) throw Error(ErrorCode::invalid_argument, "factor multiplicity must be positive");
    for (const auto& existing : factors_) {
      if (is_scalar_multiple(existing.poly, poly))
        throw Error(ErrorCode::invalid_argument,
                    "factors " + existing.poly.to_string() + " and " + poly.to_string() +
                        " are scalar multiples");
    }
    CurveComponentKind kind = classify_factor(poly);
    degree_ += mult * poly.degree();
    factors_.push_back({std::move(poly), mult, std::move(kind)});
  }
}

int CurveSpec::reduced_degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.poly.degree();
  return d;
}

bool CurveSpec::has_linear_components() const {
  return std::any_of(factors_.begin(), factors_.end(), [](const auto& f) { return f.kind.is_linear(); });
}

BivariatePoly CurveSpec::reduced_polynomial() const {
  BivariatePoly out = BivariatePoly::constant(Rational(1));
  for (const auto& f : factors_) out = out * f.poly;
  return out;
}

CurveSpec CurveSpec::without_linear_components() const {
  std::vector<std::pair<BivariatePoly, int>> kept;
  for (const auto& f : factors_)
    if (!f.kind.is_linear()) kept.emplace_back(f.poly, f.multiplicity);
  return CurveSpec(std::move(kept));
}

bool CurveSpec::on_linear_component(const Point& p) const {
  return std::any_of(factors_.begin(), factors_.end(), [&p](const auto& f) {
    return f.kind.is_linear() && f.poly.evaluate(p).is_zero();
  });
}

Rational evaluate(const BivariatePoly& f, const Point& p) { return f.evaluate(p); }

bool on_curve(const CurveSpec& c, const Point& p) {
  return std::any_of(c.factors().begin(), c.factors().end(),
                     [&p](const auto& f) { return f.poly.evaluate(p).is_zero(); });
}

std::vector<Point> circular_centers(const CurveSpec& c) {
  std::vector<Point> out;
  for (const auto& f : c.factors())
    if (f.kind.is_circular()) out.push_back(f.kind.center);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------- text format

namespace {

std::vector<std::pair<std::string, std::size_t>> tokenize(std::string_view line) {
  std::vector<std::pair<std::string, std::size_t>> tokens;
  for (std::size_t i = 0; i < line.size();) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    tokens.emplace_back(std::string(line.substr(i, j - i)), i + 1);
    i = j;
  }
  return tokens;
}

int parse_nonnegative(const std::string& s, std::size_t line, std::size_t col) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw ParseError("expected a small nonnegative integer, got '" + s + "'", line, col);
  return std::stoi(s);
}

}  // namespace

CurveSpec curve_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int declared = -1;
  std::vector<std::pair<BivariatePoly, int>> factors;
  int pending_mult = 1;
  bool have_factor_in_block = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (tokens.empty() || tokens.front().first.front() == '#') continue;

    if (declared < 0) {
      if (tokens.size() != 2 || tokens[0].first != "degree")
        throw ParseError("expected header 'degree R'", line_no, tokens[0].second);
      declared = parse_nonnegative(tokens[1].first, line_no, tokens[1].second);
      continue;
    }
    if (tokens.size() == 1 && tokens[0].first == "---") {
      if (!have_factor_in_block) throw ParseError("empty factor block", line_no, tokens[0].second);
      have_factor_in_block = false;
      pending_mult = 1;
      continue;
    }
    if (tokens[0].first == "multiplicity") {
      if (tokens.size() != 2 || have_factor_in_block)
        throw ParseError("'multiplicity K' must precede its factor line", line_no, tokens[0].second);
      pending_mult = parse_nonnegative(tokens[1].first, line_no, tokens[1].second);
      if (pending_mult < 1) throw ParseError("multiplicity must be positive", line_no, tokens[1].second);
      continue;
    }
    if (have_factor_in_block) throw ParseError("expected '---' between factors", line_no, tokens[0].second);

    std::erase_if(tokens, [](const auto& t) { return t.first == "+"; });
    if (tokens.empty() || tokens.size() % 3 != 0)
      throw ParseError("factor line must be a sequence of 'c i j' triples", line_no,
                       tokens.empty() ? 1 : tokens.back().second);
    std::map<BivariatePoly::Exponent, Rational> terms;
    for (std::size_t k = 0; k < tokens.size(); k += 3) {
      Rational c;
      try {
        c = Rational::parse(tokens[k].first);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no, tokens[k].second);
      }
      const int i = parse_nonnegative(tokens[k + 1].first, line_no, tokens[k + 1].second);
      const int j = parse_nonnegative(tokens[k + 2].first, line_no, tokens[k + 2].second);
      terms[{i, j}] += c;
    }
    BivariatePoly poly(std::move(terms));
    if (poly.degree() < 1) throw ParseError("factor must be nonconstant", line_no, 1);
    factors.emplace_back(std::move(poly), pending_mult);
    have_factor_in_block = true;
  }
  if (declared < 0) throw ParseError("missing 'degree R' header", line_no == 0 ? 1 : line_no, 1);
  if (factors.empty()) throw ParseError("curve has no factors", line_no, 1);

  CurveSpec spec;
  try {
    spec = CurveSpec(std::move(factors));
  } catch (const Error& e) {
    throw ParseError(e.what(), 0, 0);
  }
  if (spec.degree() != declared)
    throw ParseError("declared degree " + std::to_string(declared) + " but factors have degree " +
                         std::to_string(spec.degree()),
                     0, 0);
  return spec;
}

std::string curve_to_text(const CurveSpec& c) {
  std::string out = "degree " + std::to_string(c.degree()) + "\n";
  bool first = true;
  for (const auto& f : c.factors()) {
    if (!first) out += "---\n";
    first = false;
    if (f.multiplicity > 1) out += "multiplicity " + std::to_string(f.multiplicity) + "\n";
    std::vector<std::pair<BivariatePoly::Exponent, Rational>> ordered(f.poly.terms().begin(),
                                                                      f.poly.terms().end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      const int da = a.first.first + a.first.second;
      const int db = b.first.first + b.first.second;
      return da != db ? da > db : a.first.first > b.first.first;
    });
    std::string line;
    for (const auto& [e, coef] : ordered) {
      if (!line.empty()) line += ' ';
      line += coef.to_string() + " " + std::to_string(e.first) + " " + std::to_string(e.second);
    }
    out += line + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- presets

namespace {

BivariatePoly graph_of_power(int k) {
  // y - x^k
  return BivariatePoly({{{0, 1}, Rational(1)}, {{k, 0}, Rational(-1)}});
}

}  // namespace

std::vector<std::string> curve_preset_names() {
  return {"line",          "parabola",   "cubic",          "quartic",          "circle",
          "line+parabola", "two-circles", "parallel-lines", "orthogonal-lines", "concentric-circles"};
}

CurveSpec curve_preset(std::string_view name) {
  using BP = BivariatePoly;
  const Point origin{Rational(0), Rational(0)};
  if (name == "line") return CurveSpec({{BP::y(), 1}});
  if (name == "parabola") return CurveSpec({{graph_of_power(2), 1}});
  if (name == "cubic") return CurveSpec({{graph_of_power(3), 1}});
  if (name == "quartic") return CurveSpec({{graph_of_power(4), 1}});
  if (name == "circle") return CurveSpec({{BP::circle(origin, Rational(1)), 1}});
  if (name == "line+parabola") return CurveSpec({{BP::y(), 1}, {graph_of_power(2), 1}});
  if (name == "two-circles")
    return CurveSpec({{BP::circle(origin, Rational(1)), 1},
                      {BP::circle({Rational(3), Rational(0)}, Rational(4)), 1}});
  if (name == "parallel-lines") return CurveSpec({{BP::y(), 1}, {BP::y() - BP::constant(Rational(1)), 1}});
  if (name == "orthogonal-lines") return CurveSpec({{BP::y(), 1}, {BP::x(), 1}});
  if (name == "concentric-circles")
    return CurveSpec({{BP::circle(origin, Rational(1)), 1}, {BP::circle(origin, Rational(4)), 1}});
  throw Error(ErrorCode::unknown_family, "unknown curve preset '" + std::string(name) + "'");
}

}  // namespace ddlab
