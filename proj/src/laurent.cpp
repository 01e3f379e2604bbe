#include "pslens/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace pslens {

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly out;
  out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::symmetric_pair(Exponent e) {
  LaurentPoly out = monomial(1, e);
  out.add_term(-e, 1);
  return out;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

Integer LaurentPoly::value_at_one() const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

Rational LaurentPoly::evaluate(const Rational& t) const {
  if (t.is_zero() && !terms_.empty() && min_exponent() < 0)
    throw DomainError("evaluate: negative powers of 0");
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational base = e < 0 ? t.reciprocal() : t;
    Rational power(1);
    for (Exponent i = 0; i < (e < 0 ? -e : e); ++i) power = power * base;
    sum = sum + Rational(c) * power;
  }
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  LaurentPoly::Terms run() {
    LaurentPoly::Terms terms;
    if (s_ == "0") return terms;
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [e, c] = term();
      terms[e] += sign * c;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial: " + why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::pair<Exponent, Integer> term() {
    std::string coeff = digits();
    bool has_t = false;
    if (peek() == '*') {
      if (coeff.empty()) fail("'*' without coefficient");
      ++pos_;
      if (peek() != 't') fail("expected 't' after '*'");
    }
    Exponent e = 0;
    if (peek() == 't') {
      has_t = true;
      ++pos_;
      e = 1;
      if (peek() == '^') {
        ++pos_;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = peek() == '-';
          ++pos_;
        }
        std::string ed = digits();
        if (ed.empty()) fail("missing exponent");
        e = to_int64(Integer(ed), "exponent");
        if (negative) e = -e;
      }
    }
    if (coeff.empty() && !has_t) fail("expected a term");
    return {e, coeff.empty() ? Integer(1) : Integer(coeff)};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return LaurentPoly(PolyScanner(text).run()); }

// --- CyclicPoly -------------------------------------------------------------

CyclicPoly::CyclicPoly(Exponent modulus, std::vector<Integer> coefficients)
    : modulus_(modulus), coefficients_(std::move(coefficients)) {
  if (modulus_ < 1) throw DomainError("cyclic polynomial modulus must be >= 1");
  if (static_cast<Exponent>(coefficients_.size()) != modulus_)
    throw DomainError("cyclic polynomial needs exactly p coefficients");
}

CyclicPoly CyclicPoly::zero(Exponent modulus) {
  if (modulus < 1) throw DomainError("cyclic polynomial modulus must be >= 1");
  return CyclicPoly(modulus, std::vector<Integer>(static_cast<std::size_t>(modulus)));
}

const Integer& CyclicPoly::coefficient(Exponent i) const {
  Exponent r = i % modulus_;
  if (r < 0) r += modulus_;
  return coefficients_[static_cast<std::size_t>(r)];
}

Exponent CyclicPoly::representative(Exponent r) const {
  r %= modulus_;
  if (r < 0) r += modulus_;
  Exponent half = modulus_ / 2;
  return r > half ? r - modulus_ : r;
}

LaurentPoly CyclicPoly::lift() const {
  LaurentPoly::Terms terms;
  for (Exponent r = 0; r < modulus_; ++r) {
    const Integer& c = coefficients_[static_cast<std::size_t>(r)];
    if (c != 0) terms.emplace(representative(r), c);
  }
  return LaurentPoly(std::move(terms));
}

// --- knot polynomials -------------------------------------------------------

namespace {

// Dense long division by a monic divisor given as sparse (degree, coeff)
// terms. Throws if the remainder is nonzero.
std::vector<Integer> exact_divide(std::vector<Integer> numerator,
                                  const std::vector<std::pair<Exponent, Integer>>& divisor) {
  Exponent divisor_degree = 0;
  for (const auto& [d, c] : divisor) divisor_degree = std::max(divisor_degree, d);
  const Exponent numerator_degree = static_cast<Exponent>(numerator.size()) - 1;
  std::vector<Integer> quotient(
      static_cast<std::size_t>(std::max<Exponent>(numerator_degree - divisor_degree + 1, 0)));
  for (Exponent i = numerator_degree; i >= divisor_degree; --i) {
    Integer lead = numerator[static_cast<std::size_t>(i)];
    if (lead == 0) continue;
    Exponent shift = i - divisor_degree;
    quotient[static_cast<std::size_t>(shift)] = lead;
    for (const auto& [d, c] : divisor) numerator[static_cast<std::size_t>(shift + d)] -= lead * c;
  }
  for (const Integer& r : numerator) {
    if (r != 0) throw std::logic_error("torus_alexander: nonzero remainder in exact division");
  }
  return quotient;
}

}  // namespace

LaurentPoly torus_alexander(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("torus_alexander: parameters must be >= 1");
  if (gcd(a, b) != 1) throw DomainError("torus_alexander: parameters must be coprime");
  const Exponent x = to_int64(a, "torus parameter");
  const Exponent y = to_int64(b, "torus parameter");
  if (x > (Exponent{1} << 24) / y) throw DomainError("torus_alexander: a*b too large for a dense polynomial");
  const Exponent ab = x * y;

  // (t^ab - 1)(t - 1) = t^(ab+1) - t^ab - t + 1
  std::vector<Integer> numerator(static_cast<std::size_t>(ab + 2));
  numerator[static_cast<std::size_t>(ab + 1)] += 1;
  numerator[static_cast<std::size_t>(ab)] -= 1;
  numerator[1] -= 1;
  numerator[0] += 1;

  // (t^x - 1)(t^y - 1) = t^(x+y) - t^x - t^y + 1
  std::vector<std::pair<Exponent, Integer>> divisor{{x + y, 1}, {x, -1}, {y, -1}, {0, 1}};
  if (x == y) divisor = {{2, 1}, {1, -2}, {0, 1}};  // only x = y = 1

  std::vector<Integer> quotient = exact_divide(std::move(numerator), divisor);
  const Exponent span = static_cast<Exponent>(quotient.size()) - 1;
  assert(span == (x - 1) * (y - 1));
  if (span % 2 != 0) throw std::logic_error("torus_alexander: odd degree span");
  const Exponent center = span / 2;

  LaurentPoly::Terms terms;
  for (Exponent i = 0; i <= span; ++i) {
    const Integer& c = quotient[static_cast<std::size_t>(i)];
    if (c != 0) terms.emplace(i - center, c);
  }
  return LaurentPoly(std::move(terms));
}

Integer genus_from_alexander(const LaurentPoly& poly) {
  if (poly.is_zero()) throw DomainError("genus_from_alexander: zero polynomial");
  if (!poly.is_symmetric()) throw DomainError("genus_from_alexander: polynomial is not symmetric");
  return Integer(poly.max_exponent());
}

LSpaceForm lspace_form_check(const LaurentPoly& poly) {
  LSpaceForm out;
  if (poly.is_zero()) {
    out.diagnostic = "zero polynomial";
    return out;
  }
  if (!poly.is_symmetric()) {
    out.diagnostic = "not symmetric";
    return out;
  }
  for (const auto& [e, c] : poly.terms()) {
    if (c != 1 && c != -1) {
      out.diagnostic = "coefficient " + c.str() + " at t^" + std::to_string(e) + " is not +-1";
      return out;
    }
  }
  if (poly.coefficient(0) == 0) {
    out.diagnostic = "constant term is 0";
    return out;
  }
  const auto& terms = poly.terms();
  if (terms.rbegin()->second != 1) {
    out.diagnostic = "top coefficient is not +1";
    return out;
  }
  Integer previous = 0;
  for (auto it = terms.rbegin(); it != terms.rend() && it->first >= 0; ++it) {
    if (previous != 0 && it->second == previous) {
      out.diagnostic = "signs do not alternate at t^" + std::to_string(it->first);
      return out;
    }
    previous = it->second;
    if (it->first > 0) out.exponents.push_back(it->first);
  }
  std::reverse(out.exponents.begin(), out.exponents.end());
  out.ok = true;
  return out;
}

CyclicPoly cyclic_reduce(const LaurentPoly& poly, const Integer& p) {
  if (p < 1) throw DomainError("cyclic_reduce: p must be >= 1");
  const Exponent modulus = to_int64(p, "modulus");
  if (modulus > (Exponent{1} << 26)) throw DomainError("cyclic_reduce: modulus too large");
  std::vector<Integer> coeffs(static_cast<std::size_t>(modulus));
  for (const auto& [e, c] : poly.terms()) {
    Exponent r = e % modulus;
    if (r < 0) r += modulus;
    coeffs[static_cast<std::size_t>(r)] += c;
  }
  return CyclicPoly(modulus, std::move(coeffs));
}

LaurentPoly correction_lift(const LaurentPoly& base, const Integer& p) {
  if (p < 3 || p % 2 == 0) throw DomainError("correction_lift: p must be odd and >= 3");
  if (!base.is_symmetric()) throw DomainError("correction_lift: base is not symmetric");
  const Exponent h = to_int64((p - 1) / 2, "(p-1)/2");
  if (!base.is_zero() && base.max_exponent() > h)
    throw DomainError("correction_lift: base degree span must be < p");
  return base - LaurentPoly::symmetric_pair(h) + LaurentPoly::symmetric_pair(h + 1);
}

bool tilde_constraints_check(const CyclicPoly& c) {
  const Exponent p = c.modulus();
  for (Exponent i = 0; i < p; ++i) {
    const Integer& a = c.coefficients()[static_cast<std::size_t>(i)];
    if (a == 0 || a == 1 || a == -1) continue;
    if (a == 2 && p % 2 == 0 && i == p / 2) continue;
    return false;
  }
  return true;
}

}  // namespace pslens
