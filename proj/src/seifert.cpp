#include "pslens/seifert.hpp"

#include <algorithm>
#include <utility>

#include "text_util.hpp"

namespace pslens {

// --- notation ----------------------------------------------------------------

TangleSum::TangleSum(std::vector<RationalTangle> parts) : summands(std::move(parts)) {
  if (summands.size() < 2) throw DomainError("a tangle sum needs at least two summands");
}

std::string TangleSum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) out += " + ";
    out += summands[i].fraction.to_string();
  }
  return out;
}

TangleSum TangleSum::parse(std::string_view text) {
  std::vector<RationalTangle> parts;
  for (auto piece : detail::split(text, '+')) {
    std::string cleaned;
    for (char ch : piece)
      if (ch != '(' && ch != ')') cleaned.push_back(ch);
    parts.push_back({Rational::parse(cleaned)});
  }
  return TangleSum(std::move(parts));
}

std::string Pretzel::to_string() const {
  return "P(" + a.str() + "," + b.str() + "," + c.str() + ")";
}

Pretzel Pretzel::parse(std::string_view text) {
  auto v = detail::parse_call(text, "P", 3);
  return {v[0], v[1], v[2]};
}

namespace {

std::string join_orders(const std::vector<Integer>& orders) {
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += ",";
    out += orders[i].str();
  }
  return out;
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

std::string describe(const SeifertClass& cls) {
  return std::visit(
      Overloaded{
          [](const cover::SolidTorus&) -> std::string { return "solid torus"; },
          [](const cover::TwistedIBundleKlein&) -> std::string { return "twisted I-bundle over the Klein bottle"; },
          [](const cover::SFSOverDisk& s) { return "D^2(" + join_orders(s.orders) + ")"; },
          [](const cover::SFSOverSphere& s) { return "S^2(" + join_orders(s.orders) + ")"; },
          [](const cover::DegenerateFibration&) -> std::string { return "degenerate Seifert fibration"; },
          [](const cover::ConnectedSumLike&) -> std::string { return "connected sum"; },
          [](const cover::Lens& l) { return l.lens.to_string(); },
          [](const cover::Other&) -> std::string { return "other"; },
      },
      cls);
}

// --- covers ------------------------------------------------------------------

SeifertClass tangle_sum_double_cover(const Integer& x, const Integer& y) {
  if (x == 0 || y == 0) return cover::DegenerateFibration{};
  const Integer ax = abs(x), ay = abs(y);
  if (ax == 1 || ay == 1) return cover::SolidTorus{};
  if (ax == 2 && ay == 2) return cover::TwistedIBundleKlein{};
  return cover::SFSOverDisk{{std::min(ax, ay), std::max(ax, ay)}};
}

SeifertClass tangle_sum_double_cover(const TangleSum& sum) {
  if (sum.summands.size() != 2) throw DomainError("tangle_sum_double_cover: expected exactly two summands");
  std::array<Integer, 2> reciprocals;
  for (std::size_t i = 0; i < 2; ++i) {
    const Rational& f = sum.summands[i].fraction;
    if (abs(f.numerator()) != 1) {
      throw DomainError("tangle_sum_double_cover: summand " + f.to_string() + " is not of the form 1/x");
    }
    reciprocals[i] = f.numerator() * f.denominator();
  }
  return tangle_sum_double_cover(reciprocals[0], reciprocals[1]);
}

bool pretzel_is_two_bridge(const Pretzel& pretzel) {
  for (const Integer* v : {&pretzel.a, &pretzel.b, &pretzel.c}) {
    if (abs(*v) == 1) return true;
  }
  return false;
}

namespace {

struct Fraction {
  Integer num, den;  // den >= 0, den = 0 only for 1/0
};

Fraction make_fraction(Integer num, Integer den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0) num = 1;
  return {num, den};
}

// Numerator closure of x/y + z/w is the two-bridge link with fraction
// (xw + yz)/(x'w + y'z), where x y' - x' y = 1.
LensSpace closure_of_sum(const Fraction& left, const Fraction& right) {
  // Bezout for (x, y): x * s + y * t = 1, so y' = s and x' = -t.
  Integer old_r = left.num, r = left.den, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_s = std::exchange(s, old_s - quotient * s);
    old_t = std::exchange(t, old_t - quotient * t);
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  const Integer& y_prime = old_s;
  const Integer x_prime = -old_t;
  const Integer num = left.num * right.den + left.den * right.num;
  const Integer den = x_prime * right.den + y_prime * right.num;
  return canonical({num, den});
}

}  // namespace

SeifertClass pretzel_double_cover(const Pretzel& pretzel) {
  const std::array<Integer, 3> v{pretzel.a, pretzel.b, pretzel.c};
  for (std::size_t i = 0; i < 3; ++i) {
    if (abs(v[i]) != 1) continue;
    // Absorb the integer tangle v[i] into its cyclic successor.
    const Integer& left = v[(i + 2) % 3];
    const Integer& right = v[(i + 1) % 3];
    return cover::Lens{closure_of_sum(make_fraction(1, left), make_fraction(1 + v[i] * right, right))};
  }
  if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) return cover::ConnectedSumLike{};
  std::vector<Integer> orders{abs(v[0]), abs(v[1]), abs(v[2])};
  std::sort(orders.begin(), orders.end());
  return cover::SFSOverSphere{orders};
}

// --- tunnel number -------------------------------------------------------------

std::string to_string(Gate gate) {
  switch (gate) {
    case Gate::G1: return "G1";
    case Gate::G2: return "G2";
    case Gate::G3: return "G3";
    case Gate::G4: return "G4";
  }
  return "?";
}

std::string to_string(TunnelKind kind) {
  switch (kind) {
    case TunnelKind::TunnelNumberTwo: return "TunnelNumberTwo";
    case TunnelKind::TunnelNumberOne: return "TunnelNumberOne";
    case TunnelKind::Excluded: return "Excluded";
  }
  return "?";
}

std::string TunnelVerdict::to_string() const {
  std::string out = pslens::to_string(kind);
  if (failed_gate) out += "(" + pslens::to_string(*failed_gate) + ")";
  return out;
}

TunnelVerdict tunnel_verdict(const Integer& n) {
  TunnelVerdict verdict;
  verdict.alpha_cover = tangle_sum_double_cover(n + 2, 3);
  verdict.beta_cover = tangle_sum_double_cover(1 - n, -2);

  auto two_fibers = [](const SeifertClass& c) {
    return std::holds_alternative<cover::SFSOverDisk>(c) || std::holds_alternative<cover::TwistedIBundleKlein>(c);
  };
  auto twisted = [](const SeifertClass& c) { return std::holds_alternative<cover::TwistedIBundleKlein>(c); };
  const std::string covers = "M^alpha = " + describe(verdict.alpha_cover) + ", M^beta = " + describe(verdict.beta_cover);

  GateResult& g1 = verdict.gates[0];
  g1.gate = Gate::G1;
  g1.passed = two_fibers(verdict.alpha_cover) && two_fibers(verdict.beta_cover);
  g1.detail = covers;
  if (!g1.passed) g1.detail += "; compressible torus, tunnel number one (asserted, not independently verified)";

  GateResult& g2 = verdict.gates[1];
  g2.gate = Gate::G2;
  g2.passed = !twisted(verdict.alpha_cover) && !twisted(verdict.beta_cover);
  g2.detail = g2.passed ? "no D^2(2,2) cover" : "a cover is D^2(2,2), which also fibers over the Mobius band";

  const Pretzel beta_filling{1 - n, 2, 2};
  GateResult& g3 = verdict.gates[2];
  g3.gate = Gate::G3;
  g3.passed = !pretzel_is_two_bridge(beta_filling);
  g3.detail = beta_filling.to_string() + (g3.passed ? " is not two-bridge" : " is two-bridge");

  const Pretzel alpha_filling{n + 2, 3, -2};
  GateResult& g4 = verdict.gates[3];
  g4.gate = Gate::G4;
  g4.passed = !pretzel_is_two_bridge(alpha_filling);
  g4.detail = alpha_filling.to_string() + (g4.passed ? " is not two-bridge" : " is two-bridge");

  verdict.kind = TunnelKind::TunnelNumberTwo;
  for (const GateResult& g : verdict.gates) {
    if (g.passed) continue;
    verdict.failed_gate = g.gate;
    verdict.kind = g.gate == Gate::G1 ? TunnelKind::TunnelNumberOne : TunnelKind::Excluded;
    break;
  }
  return verdict;
}

}  // namespace pslens
