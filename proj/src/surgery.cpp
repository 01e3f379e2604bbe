#include "pslens/surgery.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace pslens {

Slope::Slope(const Integer& mu_coeff, const Integer& lambda_coeff) : p_(mu_coeff), q_(lambda_coeff) {
  if (gcd(p_, q_) != 1) {
    throw DomainError("slope " + p_.str() + "/" + q_.str() + ": coefficients must be coprime");
  }
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

std::string Slope::to_string() const { return p_.str() + "/" + q_.str(); }

Slope Slope::parse(std::string_view text) {
  auto pieces = detail::split(text, '/');
  if (pieces.size() == 1) return Slope(parse_integer(pieces[0]), 1);
  if (pieces.size() != 2) throw ParseError("expected a slope p/q, got '" + std::string(text) + "'");
  return Slope(parse_integer(pieces[0]), parse_integer(pieces[1]));
}

Integer slope_distance(const Slope& a, const Slope& b) { return abs(a.p() * b.q() - b.p() * a.q()); }

Slope involution_image(const Slope& s) { return Slope(s.p(), -s.q()); }

LensSpace unknot_surgery(const Integer& m) { return lens_of_unknot_surgery(Rational(m)); }

std::string describe(const SurgeryResult& result) {
  if (const auto* lens = std::get_if<surgery::LensResult>(&result)) return lens->lens.to_string();
  if (const auto* sum = std::get_if<surgery::Reducible>(&result)) return sum->sum.to_string();
  const auto& orders = std::get<surgery::NotLens>(result).orders;
  std::string out = "S^2(";
  for (std::size_t i = 0; i < orders.size(); ++i) out += (i ? "," : "") + orders[i].str();
  return out + ")";
}

std::optional<LensSum> as_lens_sum(const SurgeryResult& result) {
  if (const auto* lens = std::get_if<surgery::LensResult>(&result)) return LensSum({lens->lens});
  if (const auto* sum = std::get_if<surgery::Reducible>(&result)) return sum->sum;
  return std::nullopt;
}

SurgeryResult torus_knot_integral_surgery(const Integer& a, const Integer& b, const Integer& m) {
  if (a < 1 || b < 1) throw DomainError("torus_knot_integral_surgery: a, b must be >= 1");
  if (gcd(a, b) != 1) throw DomainError("torus_knot_integral_surgery: a and b must be coprime");
  if (a == 1 || b == 1) return surgery::LensResult{unknot_surgery(m)};
  const Integer ab = a * b;
  if (m == ab) return surgery::Reducible{LensSum({{a, b}, {b, a}})};
  const Integer offset = abs(m - ab);
  if (offset == 1) return surgery::LensResult{canonical({m, -a * a})};
  std::vector<Integer> orders{a, b, offset};
  std::sort(orders.begin(), orders.end());
  return surgery::NotLens{orders};
}

Rational dual_self_linking(const Integer& p) {
  if (p < 1) throw DomainError("dual_self_linking: p must be >= 1");
  return Rational(mod(-1, p), p);
}

}  // namespace pslens
