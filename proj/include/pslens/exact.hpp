#pragma once

// Exact integers, rationals (with the slope value 1/0), negative continued
// fractions and brute-force modular arithmetic.

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pslens {

using Integer = boost::multiprecision::cpp_int;

/// Violated precondition of a domain operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A continued fraction needed the reciprocal of an intermediate zero.
class DegenerateEvaluation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Thrown by the text parsers.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

Integer gcd(const Integer& a, const Integer& b);

/// Least nonnegative residue of `a` modulo `m`, m >= 1.
Integer mod(const Integer& a, const Integer& m);

/// Floor of a / b for b != 0.
Integer floor_div(const Integer& a, const Integer& b);

std::string to_string(const Integer& value);
Integer parse_integer(std::string_view text);

/// Narrows to int64, throwing DomainError naming `what` on overflow.
std::int64_t to_int64(const Integer& value, std::string_view what);

/// Reduced fraction with positive denominator, or the slope value 1/0.
class Rational {
 public:
  Rational() = default;
  Rational(Integer numerator);  // NOLINT: integers are rationals
  template <std::integral T>
  Rational(T numerator) : num_(numerator) {}  // NOLINT
  Rational(Integer numerator, Integer denominator);

  static Rational infinity();

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// 1/x; the reciprocal of 0 is an error, not infinity.
  Rational reciprocal() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  /// Finite values only.
  friend bool operator<(const Rational& a, const Rational& b);

  /// Always "n/d"; infinity prints as "1/0".
  std::string to_string() const;
  /// Accepts "n", "n/d" and "1/0".
  static Rational parse(std::string_view text);

 private:
  struct Raw {};
  Rational(Integer n, Integer d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  void require_finite(const char* op) const;

  Integer num_ = 0;
  Integer den_ = 1;
};

/// [x_1, ..., x_n] = x_1 - 1/(x_2 - 1/(... - 1/x_n)).
struct ContinuedFraction {
  std::vector<Integer> terms;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  std::string to_string() const;
};

/// Exact value of the negative continued fraction. The empty fraction is
/// 1/0. Throws DegenerateEvaluation when an intermediate tail is zero.
Rational cf_eval(std::span<const Integer> terms);
inline Rational cf_eval(const ContinuedFraction& cf) { return cf_eval(cf.terms); }

/// Canonical negative expansion of p/q: x_1 = floor(p/q) and every later
/// term is <= -2. q = 0 (with p = +-1) gives the empty fraction.
ContinuedFraction cf_expand(const Integer& p, const Integer& q);

/// All k in [0, p) with A k^2 + B k + C = 0 mod p, found by exhaustive scan.
std::vector<Integer> quadratic_solutions(const Integer& a, const Integer& b, const Integer& c,
                                         const Integer& p);

/// The inverse of a modulo p in [0, p) when gcd(a, p) = 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& p);

}  // namespace pslens
