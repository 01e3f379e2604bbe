#pragma once

// Lens spaces, two-bridge links, connected sums of lens spaces, and the
// homology-class congruences for knots in lens spaces.

#include <string>
#include <string_view>
#include <vector>

#include "pslens/exact.hpp"

namespace pslens {

// Sign conventions. Every module goes through these helpers rather than
// re-deriving signs.
//
//   L(p,q)  is  (-p/q)-surgery on the unknot, so m-surgery on the unknot is L(m,-1).
//   B(p,q)  is the two-bridge link whose double branched cover is L(p,q); a
//           continued fraction with value -p/q presents it as a plat.
//   q -> q mod p is a change of representative, not a mirror.
//   q -> -q is the mirror.
//   L(-p,q) and L(p,-q) are the same manifold (same surgery slope).
namespace convention {
inline constexpr int kUnknotSlopeSign = -1;  // L(p,q) = (kUnknotSlopeSign * p/q)-surgery
}  // namespace convention

struct LensSpace {
  Integer p = 1;
  Integer q = 0;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
  /// "L(p,q)" with the stored (raw) integers.
  std::string to_string() const;
  static LensSpace parse(std::string_view text);

  bool is_sphere() const { return abs(p) == 1; }
};

struct NormalizedLens {
  LensSpace canonical;
  /// Set when the input had p < 0, so that the canonical q is the residue of -q.
  bool mirror_flag = false;
};

/// p >= 0; 0 < q < p for p >= 2; L(1,q) -> L(1,0); L(0,+-1) -> L(0,1).
NormalizedLens normalize(const LensSpace& lens);
inline LensSpace canonical(const LensSpace& lens) { return normalize(lens).canonical; }

/// The lens space of slope-r surgery on the unknot, canonical.
LensSpace lens_of_unknot_surgery(const Rational& slope);

bool equivalent_oriented(const LensSpace& a, const LensSpace& b);
bool equivalent_unoriented(const LensSpace& a, const LensSpace& b);
/// L(p,-q), canonical.
LensSpace mirror(const LensSpace& lens);

enum class Orientation { Oriented, Unoriented };

/// Connected sum of lens spaces; summands canonicalized, S^3 summands dropped.
class LensSum {
 public:
  LensSum() = default;
  explicit LensSum(const std::vector<LensSpace>& summands);

  const std::vector<LensSpace>& summands() const { return summands_; }
  bool is_sphere() const { return summands_.empty(); }

  friend bool operator==(const LensSum&, const LensSum&) = default;
  /// "L(a,b) # L(c,d)"; the empty sum prints as "L(1,0)".
  std::string to_string() const;
  static LensSum parse(std::string_view text);

 private:
  std::vector<LensSpace> summands_;
};

bool sum_equivalent(const LensSum& a, const LensSum& b, Orientation orientation);

struct TwoBridge {
  Integer p = 1;
  Integer q = 0;

  friend bool operator==(const TwoBridge&, const TwoBridge&) = default;
  LensSpace double_cover() const { return {p, q}; }
  TwoBridge canonical() const;
  /// B(1,0) (unknot as a plat of the empty fraction) and B(0,1) (two-component unlink).
  bool is_degenerate() const { return abs(p) <= 1; }
  /// Knots have odd p; even p gives a two-component link.
  bool is_knot() const { return p % 2 != 0; }

  std::string to_string() const;
  static TwoBridge parse(std::string_view text);
};

/// The B(p,q), p >= 0, with -p/q equal to the value of the continued fraction.
TwoBridge two_bridge_from_cf(std::span<const Integer> terms);

struct HomologyClass {
  Integer p;
  Integer k;  // 0 <= k < p

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

HomologyClass make_class(const Integer& p, const Integer& k);

/// Classes k with k^2 = +q (plus) or k^2 = -q (minus) mod p. The sign matches
/// whether the homology-sphere surgery is a +1 or -1 surgery.
struct HsphereClasses {
  std::vector<Integer> plus;
  std::vector<Integer> minus;

  bool empty() const { return plus.empty() && minus.empty(); }
};

HsphereClasses hsphere_surgery_classes(const Integer& p, const Integer& q);

/// Solutions of k^2 + k + 1 = 0 mod p.
std::vector<Integer> berge_vii_classes(const Integer& p);
/// Solutions of k^2 - k - 1 = 0 mod p.
std::vector<Integer> berge_viii_classes(const Integer& p);

bool is_berge_vii_class(const Integer& k, const Integer& p);
bool is_berge_viii_class(const Integer& k, const Integer& p);

struct HeddenClasses {
  HomologyClass left;   // T_L ~ K(p,q,q+1)
  HomologyClass right;  // T_R ~ K(p,q,q-1)
};

HeddenClasses hedden_classes(const Integer& p, const Integer& q);

struct HeddenConditions {
  bool left_admits = false;   // (q+1)^2 = -q mod p
  bool right_admits = false;  // (q-1)^2 = -q mod p

  // Substituted residues and their Berge memberships. With k = -(q+1) the
  // T_L congruence becomes k^2 - k - 1 = 0; with k = q-1 the T_R congruence
  // becomes k^2 + k + 1 = 0. Both equivalences are checked on construction.
  Integer left_substitute;   // -(q+1) mod p
  Integer right_substitute;  // q-1 mod p
  bool left_substitute_in_vii = false;
  bool left_substitute_in_viii = false;
  bool right_substitute_in_vii = false;
  bool right_substitute_in_viii = false;
};

HeddenConditions hedden_hs_conditions(const Integer& p, const Integer& q);

}  // namespace pslens
