#pragma once

// Integer Laurent polynomials, their images in Z[t]/(t^p - 1), torus-knot
// Alexander polynomials and the (p+1)/2 correction lift.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pslens/exact.hpp"

namespace pslens {

using Exponent = std::int64_t;

/// Sparse integer Laurent polynomial; zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Integer& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Integer& c, Exponent e);
  /// t^e + t^-e
  static LaurentPoly symmetric_pair(Exponent e);

  const Terms& terms() const { return terms_; }
  Integer coefficient(Exponent e) const;
  bool is_zero() const { return terms_.empty(); }
  /// Undefined for the zero polynomial.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }
  bool is_symmetric() const;

  /// Sum of the coefficients.
  Integer value_at_one() const;
  Rational evaluate(const Rational& t) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Canonical text form, descending exponents, e.g. "t^3 - t^2 + 1 - t^-2 + t^-3".
  /// Unit coefficients are elided, "t" stands for t^1, the zero polynomial is "0".
  std::string to_string() const;
  /// Parses the canonical form; also accepts explicit "c*t^k" terms in any order.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(Exponent e, const Integer& c);

  Terms terms_;
};

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly poly_neg(const LaurentPoly& a) { return -a; }

/// Element of Z[t]/(t^p - 1), p >= 1.
class CyclicPoly {
 public:
  CyclicPoly(Exponent modulus, std::vector<Integer> coefficients);
  static CyclicPoly zero(Exponent modulus);

  Exponent modulus() const { return modulus_; }
  /// Coefficient of t^i, i taken mod p.
  const Integer& coefficient(Exponent i) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  /// Display representative of residue r in [0, p): [-(p-1)/2, (p-1)/2] for
  /// odd p, (-p/2, p/2] for even p.
  Exponent representative(Exponent r) const;

  friend bool operator==(const CyclicPoly&, const CyclicPoly&) = default;

  /// Laurent lift on the representative window, in canonical text form.
  LaurentPoly lift() const;
  std::string to_string() const { return lift().to_string(); }

 private:
  Exponent modulus_;
  std::vector<Integer> coefficients_;
};

/// Symmetrized (t^ab - 1)(t - 1) / ((t^a - 1)(t^b - 1)) for coprime a, b >= 1.
LaurentPoly torus_alexander(const Integer& a, const Integer& b);

/// Half the degree span of a symmetric polynomial.
Integer genus_from_alexander(const LaurentPoly& poly);

struct LSpaceForm {
  bool ok = false;
  /// n_1 < ... < n_k when ok.
  std::vector<Exponent> exponents;
  /// First violated condition when !ok.
  std::string diagnostic;
};

/// Checks for the shape (-1)^k + sum_j (-1)^(k-j) (t^n_j + t^-n_j).
LSpaceForm lspace_form_check(const LaurentPoly& poly);

/// Coefficient i is the sum of a_j over j = i mod p.
CyclicPoly cyclic_reduce(const LaurentPoly& poly, const Integer& p);

/// base - (t^h + t^-h) + (t^(h+1) + t^-(h+1)) with h = (p-1)/2. Requires odd
/// p >= 3 and a symmetric base of max exponent <= h.
LaurentPoly correction_lift(const LaurentPoly& base, const Integer& p);

/// Every coefficient in {0, +-1, 2}, with 2 allowed only at i = p/2 for even p.
bool tilde_constraints_check(const CyclicPoly& c);

}  // namespace pslens
