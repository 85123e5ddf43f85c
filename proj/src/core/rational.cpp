#include "ddlab/rational.hpp"

#include <cctype>
#include <functional>

#include "ddlab/error.hpp"

namespace ddlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse: return "parse error";
    case ErrorCode::duplicate_point: return "duplicate point";
    case ErrorCode::empty_set: return "empty point set";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::degenerate_degree: return "degenerate degree";
    case ErrorCode::zero_polynomial: return "zero polynomial";
    case ErrorCode::shared_component: return "shared component";
    case ErrorCode::not_a_circle: return "not a circle";
    case ErrorCode::precondition: return "precondition violation";
    case ErrorCode::unsupported_curve: return "unsupported curve";
    case ErrorCode::box_too_small: return "box too small";
    case ErrorCode::unknown_family: return "unknown family";
    case ErrorCode::unrealized_distance: return "unrealized distance";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::io: return "i/o error";
  }
  return "unknown error";
}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorCode::parse,
            line == 0 ? message
                      : message + " (line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

// Returns the offset one past the last digit, or `pos` if there were none.
std::size_t scan_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  const std::size_t num_end = scan_digits(text, pos);
  if (num_end == pos) throw ParseError("expected numerator digits in '" + std::string(text) + "'", 0, 0);
  if (num_end >= text.size() || text[num_end] != '/')
    throw ParseError("expected '/' in '" + std::string(text) + "'", 0, 0);
  const std::size_t den_begin = num_end + 1;
  const std::size_t den_end = scan_digits(text, den_begin);
  if (den_end == den_begin || den_end != text.size())
    throw ParseError("expected denominator digits in '" + std::string(text) + "'", 0, 0);

  Integer num(std::string(text.substr(0, num_end)), 10);
  Integer den(std::string(text.substr(den_begin)), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0, 0);
  return Rational(num, den);
}

std::size_t Rational::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](const Integer& z) {
    const mpz_srcptr p = z.get_mpz_t();
    const int n = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
    h ^= static_cast<std::size_t>(p->_mp_size);
    h *= 0x100000001b3ull;
    for (int i = 0; i < n; ++i) {
      h ^= static_cast<std::size_t>(p->_mp_d[i]);
      h *= 0x100000001b3ull;
    }
  };
  mix(num());
  mix(den());
  return h;
}

Rational pow(const Rational& base, unsigned exponent) {
  Integer n;
  Integer d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), exponent);
  return Rational(n, d);
}

Rational rat(std::string_view text) {
  if (text.find('/') == std::string_view::npos) return Rational::parse(std::string(text) + "/1");
  return Rational::parse(text);
}

}  // namespace ddlab
