#include "pslens/exact.hpp"

#include <cctype>
#include <limits>
#include <utility>

namespace pslens {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer mod(const Integer& a, const Integer& m) {
  if (m < 1) throw DomainError("mod: modulus must be >= 1");
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  std::string_view body = text.substr(i, j - i);
  std::size_t k = 0;
  if (k < body.size() && (body[k] == '-' || body[k] == '+')) ++k;
  if (k == body.size()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t m = k; m < body.size(); ++m) {
    if (!std::isdigit(static_cast<unsigned char>(body[m])))
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string digits(body[0] == '+' ? body.substr(1) : body);
  return Integer(digits);
}

std::int64_t to_int64(const Integer& value, std::string_view what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

// --- Rational -------------------------------------------------------------

Rational::Rational(Integer numerator) : num_(std::move(numerator)) {}

Rational::Rational(Integer numerator, Integer denominator) {
  if (denominator == 0) {
    if (numerator == 0) throw DomainError("0/0 is not a rational number");
    *this = infinity();
    return;
  }
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  Integer g = gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

Rational Rational::infinity() { return Rational(1, 0, Raw{}); }

void Rational::require_finite(const char* op) const {
  if (is_infinite()) throw DomainError(std::string(op) + ": 1/0 is only valid as a slope");
}

Rational Rational::reciprocal() const {
  require_finite("reciprocal");
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return Rational(den_, num_);
}

Rational Rational::operator-() const {
  require_finite("negation");
  return Rational(-num_, den_, Raw{});
}

Rational operator+(const Rational& a, const Rational& b) {
  a.require_finite("addition");
  b.require_finite("addition");
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  a.require_finite("multiplication");
  b.require_finite("multiplication");
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

bool operator<(const Rational& a, const Rational& b) {
  a.require_finite("comparison");
  b.require_finite("comparison");
  return a.num_ * b.den_ < b.num_ * a.den_;
}

std::string Rational::to_string() const { return num_.str() + "/" + den_.str(); }

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer n = parse_integer(text.substr(0, slash));
  Integer d = parse_integer(text.substr(slash + 1));
  if (d == 0 && abs(n) != 1) throw ParseError("only 1/0 may have a zero denominator");
  if (d == 0) return infinity();
  return Rational(n, d);
}

// --- continued fractions ----------------------------------------------------

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += terms[i].str();
  }
  return out + "]";
}

Rational cf_eval(std::span<const Integer> terms) {
  if (terms.empty()) return Rational::infinity();
  Rational tail(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    if (tail.is_zero()) {
      throw DegenerateEvaluation("continued fraction tail starting at term " + std::to_string(i + 2) +
                                 " evaluates to 0");
    }
    tail = Rational(terms[i]) - tail.reciprocal();
  }
  return tail;
}

ContinuedFraction cf_expand(const Integer& p, const Integer& q) {
  if (gcd(p, q) != 1) throw DomainError("cf_expand: p and q must be coprime");
  ContinuedFraction out;
  if (q == 0) return out;  // p = +-1, the value 1/0

  // value = num/den with den > 0; each step peels x = floor(value) and
  // continues with -1/(value - x), which is < -1.
  Integer num = q < 0 ? Integer(-p) : p;
  Integer den = abs(q);
  while (true) {
    Integer x = floor_div(num, den);
    out.terms.push_back(x);
    Integer rest = num - x * den;  // (value - x) = rest/den, 0 <= rest < den
    if (rest == 0) break;
    // -1 / (rest/den) = -den/rest
    num = -den;
    den = rest;
  }
  return out;
}

std::vector<Integer> quadratic_solutions(const Integer& a, const Integer& b, const Integer& c,
                                         const Integer& p) {
  if (p < 1) throw DomainError("quadratic_solutions: p must be >= 1");
  // f(k+1) - f(k) = a(2k+1) + b, tracked incrementally mod p.
  Integer value = mod(c, p);
  Integer step = mod(a + b, p);
  const Integer twice_a = mod(2 * a, p);
  std::vector<Integer> roots;
  for (Integer k = 0; k < p; ++k) {
    if (value == 0) roots.push_back(k);
    value += step;
    if (value >= p) value -= p;
    step += twice_a;
    if (step >= p) step -= p;
  }
  return roots;
}

std::optional<Integer> mod_inverse(const Integer& a, const Integer& p) {
  if (p < 1) throw DomainError("mod_inverse: p must be >= 1");
  Integer old_r = mod(a, p), r = p;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_s = std::exchange(s, old_s - quotient * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod(old_s, p);
}

}  // namespace pslens
