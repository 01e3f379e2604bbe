#pragma once

// Slopes on a knot's boundary torus and integral surgery on torus knots.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pslens/exact.hpp"
#include "pslens/lens.hpp"

namespace pslens {

/// Unoriented slope p*mu + q*lambda, stored with q >= 0 (and p = 1 when q = 0).
class Slope {
 public:
  Slope(const Integer& mu_coeff, const Integer& lambda_coeff);
  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  Rational value() const { return q_ == 0 ? Rational::infinity() : Rational(p_, q_); }

  friend bool operator==(const Slope&, const Slope&) = default;
  /// "p/q"; the meridian is "1/0".
  std::string to_string() const;
  static Slope parse(std::string_view text);

 private:
  Integer p_, q_;
};

/// Minimal geometric intersection |p1 q2 - p2 q1|.
Integer slope_distance(const Slope& a, const Slope& b);

/// (p, q) -> (p, -q).
Slope involution_image(const Slope& s);

/// m-surgery on the unknot, L(m,-1) canonicalized.
LensSpace unknot_surgery(const Integer& m);

namespace surgery {
struct LensResult {
  LensSpace lens;  // canonical
  friend bool operator==(const LensResult&, const LensResult&) = default;
};
struct Reducible {
  LensSum sum;
  friend bool operator==(const Reducible&, const Reducible&) = default;
};
struct NotLens {
  std::vector<Integer> orders;  // S^2(a, b, |m - ab|)
  friend bool operator==(const NotLens&, const NotLens&) = default;
};
}  // namespace surgery

using SurgeryResult = std::variant<surgery::LensResult, surgery::Reducible, surgery::NotLens>;

std::string describe(const SurgeryResult& result);
/// Views a lens or reducible result as a connected sum; NotLens has none.
std::optional<LensSum> as_lens_sum(const SurgeryResult& result);

/// m-surgery on the (a,b) torus knot:
///   a = 1 or b = 1   unknot_surgery(m)
///   m = ab           L(a,b) # L(b,a)
///   |m - ab| = 1     L(m, -a^2)
///   otherwise        Seifert fibered over S^2 with fibers a, b, |m - ab|
SurgeryResult torus_knot_integral_surgery(const Integer& a, const Integer& b, const Integer& m);

/// Self-linking of the surgery dual of positive p-surgery, -1/p mod 1, as (p-1)/p.
Rational dual_self_linking(const Integer& p);

}  // namespace pslens
