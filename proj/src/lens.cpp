#include "pslens/lens.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_util.hpp"

namespace pslens {

namespace {

void require_coprime(const Integer& p, const Integer& q, const char* where) {
  if (gcd(p, q) != 1) {
    throw DomainError(std::string(where) + ": gcd(" + p.str() + "," + q.str() + ") != 1");
  }
}

bool lens_less(const LensSpace& a, const LensSpace& b) {
  if (a.p != b.p) return a.p < b.p;
  return a.q < b.q;
}

}  // namespace

std::string LensSpace::to_string() const { return "L(" + p.str() + "," + q.str() + ")"; }

LensSpace LensSpace::parse(std::string_view text) {
  auto v = detail::parse_call(text, "L", 2);
  return {v[0], v[1]};
}

NormalizedLens normalize(const LensSpace& lens) {
  require_coprime(lens.p, lens.q, "normalize");
  NormalizedLens out;
  out.mirror_flag = lens.p < 0;
  const Integer p = abs(lens.p);
  const Integer q = lens.p < 0 ? Integer(-lens.q) : lens.q;
  if (p == 0) {
    out.canonical = {0, 1};
  } else if (p == 1) {
    out.canonical = {1, 0};
  } else {
    out.canonical = {p, mod(q, p)};
  }
  return out;
}

LensSpace lens_of_unknot_surgery(const Rational& slope) {
  // slope = a/b = kUnknotSlopeSign * p/q  =>  (p, q) = (kUnknotSlopeSign * a, b)
  const Integer a = slope.numerator();
  const Integer b = slope.denominator();
  return canonical({convention::kUnknotSlopeSign * a, b});
}

bool equivalent_oriented(const LensSpace& a, const LensSpace& b) {
  const LensSpace x = canonical(a), y = canonical(b);
  if (x.p != y.p) return false;
  if (x.p <= 1) return true;
  return x.q == y.q || mod(x.q * y.q, x.p) == 1;
}

bool equivalent_unoriented(const LensSpace& a, const LensSpace& b) {
  if (equivalent_oriented(a, b)) return true;
  const LensSpace x = canonical(a), y = canonical(b);
  if (x.p != y.p) return false;
  return mod(x.q + y.q, x.p) == 0 || mod(x.q * y.q, x.p) == x.p - 1;
}

LensSpace mirror(const LensSpace& lens) { return canonical({lens.p, -lens.q}); }

// --- connected sums ---------------------------------------------------------

LensSum::LensSum(const std::vector<LensSpace>& summands) {
  for (const LensSpace& lens : summands) {
    LensSpace c = canonical(lens);
    if (!c.is_sphere()) summands_.push_back(c);
  }
  std::sort(summands_.begin(), summands_.end(), lens_less);
}

std::string LensSum::to_string() const {
  if (summands_.empty()) return "L(1,0)";
  std::string out;
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    if (i) out += " # ";
    out += summands_[i].to_string();
  }
  return out;
}

LensSum LensSum::parse(std::string_view text) {
  std::vector<LensSpace> summands;
  for (auto piece : detail::split(text, '#')) summands.push_back(LensSpace::parse(piece));
  return LensSum(summands);
}

bool sum_equivalent(const LensSum& a, const LensSum& b, Orientation orientation) {
  const auto& xs = a.summands();
  const auto& ys = b.summands();
  if (xs.size() != ys.size()) return false;
  auto same = orientation == Orientation::Oriented ? equivalent_oriented : equivalent_unoriented;
  // Both predicates are equivalence relations, so greedy matching is exact.
  std::vector<bool> used(ys.size(), false);
  for (const LensSpace& x : xs) {
    bool matched = false;
    for (std::size_t j = 0; j < ys.size() && !matched; ++j) {
      if (!used[j] && same(x, ys[j])) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

// --- two-bridge links -------------------------------------------------------

TwoBridge TwoBridge::canonical() const {
  LensSpace c = pslens::canonical(double_cover());
  return {c.p, c.q};
}

std::string TwoBridge::to_string() const { return "B(" + p.str() + "," + q.str() + ")"; }

TwoBridge TwoBridge::parse(std::string_view text) {
  auto v = detail::parse_call(text, "B", 2);
  require_coprime(v[0], v[1], "B(p,q)");
  return {v[0], v[1]};
}

TwoBridge two_bridge_from_cf(std::span<const Integer> terms) {
  const Rational value = cf_eval(terms);
  // -p/q = num/den
  Integer p = -value.numerator();
  Integer q = value.denominator();
  if (p < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

// --- homology classes -------------------------------------------------------

HomologyClass make_class(const Integer& p, const Integer& k) {
  if (p < 1) throw DomainError("homology class: p must be >= 1");
  return {p, mod(k, p)};
}

HsphereClasses hsphere_surgery_classes(const Integer& p, const Integer& q) {
  if (p < 1) throw DomainError("hsphere_surgery_classes: p must be >= 1");
  require_coprime(p, q, "hsphere_surgery_classes");
  return {quadratic_solutions(1, 0, -q, p), quadratic_solutions(1, 0, q, p)};
}

std::vector<Integer> berge_vii_classes(const Integer& p) { return quadratic_solutions(1, 1, 1, p); }
std::vector<Integer> berge_viii_classes(const Integer& p) { return quadratic_solutions(1, -1, -1, p); }

bool is_berge_vii_class(const Integer& k, const Integer& p) { return mod(k * k + k + 1, p) == 0; }
bool is_berge_viii_class(const Integer& k, const Integer& p) { return mod(k * k - k - 1, p) == 0; }

HeddenClasses hedden_classes(const Integer& p, const Integer& q) {
  if (p < 1) throw DomainError("hedden_classes: p must be >= 1");
  require_coprime(p, q, "hedden_classes");
  return {make_class(p, q + 1), make_class(p, q - 1)};
}

HeddenConditions hedden_hs_conditions(const Integer& p, const Integer& q) {
  if (p < 1) throw DomainError("hedden_hs_conditions: p must be >= 1");
  require_coprime(p, q, "hedden_hs_conditions");
  HeddenConditions out;
  out.left_admits = mod((q + 1) * (q + 1) + q, p) == 0;
  out.right_admits = mod((q - 1) * (q - 1) + q, p) == 0;
  out.left_substitute = mod(-(q + 1), p);
  out.right_substitute = mod(q - 1, p);
  out.left_substitute_in_vii = is_berge_vii_class(out.left_substitute, p);
  out.left_substitute_in_viii = is_berge_viii_class(out.left_substitute, p);
  out.right_substitute_in_vii = is_berge_vii_class(out.right_substitute, p);
  out.right_substitute_in_viii = is_berge_viii_class(out.right_substitute, p);
  if (out.left_admits != out.left_substitute_in_viii || out.right_admits != out.right_substitute_in_vii) {
    throw std::logic_error("hedden_hs_conditions: substitution identity violated");
  }
  return out;
}

}  // namespace pslens
