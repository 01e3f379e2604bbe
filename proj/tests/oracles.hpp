#pragma once

// Independent reference computations used only by tests. None of these call
// into the library routines they are compared against.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "pslens/exact.hpp"
#include "pslens/laurent.hpp"

namespace oracle {

using pslens::Integer;

// Unreduced numerator/denominator of a1 - 1/(a2 - ... - 1/ak), evaluated from
// the innermost term outwards. den == 0 marks a zero tail.
inline std::pair<Integer, Integer> cf_value(const std::vector<Integer>& terms) {
  Integer num = 1, den = 0;  // empty fraction is 1/0
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    // x - 1/(num/den) = (x*num - den)/num
    Integer next_num = *it * num - den;
    den = num;
    num = next_num;
  }
  return {num, den};
}

inline bool same_fraction(const pslens::Rational& r, const Integer& num, const Integer& den) {
  return r.numerator() * den == num * r.denominator();
}

// Coefficients of (t^{ab}-1)(t-1)/((t^a-1)(t^b-1)) from power series of
// 1/(1-t^a) and 1/(1-t^b), truncated past degree ab. Index = exponent.
inline std::vector<std::int64_t> torus_alexander_raw(int a, int b) {
  const int top = a * b + 1;
  std::vector<std::int64_t> sa(top + 1, 0), sb(top + 1, 0), prod(top + 1, 0);
  for (int k = 0; k <= top; k += a) sa[k] = 1;
  for (int k = 0; k <= top; k += b) sb[k] = 1;
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j) prod[i + j] += sa[i] * sb[j];
  // times (1 - t)(1 - t^{ab})
  std::vector<std::int64_t> once(top + 1, 0), out(top + 1, 0);
  for (int i = 0; i <= top; ++i) once[i] = prod[i] - (i >= 1 ? prod[i - 1] : 0);
  for (int i = 0; i <= top; ++i) out[i] = once[i] - (i >= a * b ? once[i - a * b] : 0);
  const int degree = (a - 1) * (b - 1);
  out.resize(degree + 1);
  return out;
}

inline std::int64_t mod64(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::set<std::int64_t> quadratic_roots(std::int64_t A, std::int64_t B, std::int64_t C, std::int64_t p) {
  std::set<std::int64_t> out;
  for (std::int64_t k = 0; k < p; ++k)
    if (mod64(A * k * k + B * k + C, p) == 0) out.insert(k);
  return out;
}

// Residues r with q r = 1 mod p, by search.
inline std::set<std::int64_t> inverses(std::int64_t q, std::int64_t p) {
  std::set<std::int64_t> out;
  for (std::int64_t r = 0; r < p; ++r)
    if (mod64(q * r, p) == mod64(1, p)) out.insert(r);
  return out;
}

// Every q' with L(p,q') homeomorphic to L(p,q) by an orientation-preserving
// map (oriented) or any map, for p >= 2.
inline std::set<std::int64_t> lens_orbit(std::int64_t p, std::int64_t q, bool oriented) {
  std::set<std::int64_t> out;
  const std::int64_t base = mod64(q, p);
  std::vector<std::int64_t> seeds{base};
  if (!oriented) seeds.push_back(mod64(-q, p));
  for (std::int64_t s : seeds) {
    out.insert(s);
    for (std::int64_t inv : inverses(s, p)) out.insert(inv);
  }
  return out;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace oracle
