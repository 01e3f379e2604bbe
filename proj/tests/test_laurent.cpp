#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pslens/laurent.hpp"

using namespace pslens;

namespace {

LaurentPoly P(std::string_view text) { return LaurentPoly::parse(text); }

const char* kK1 = "t^3 - t^2 + 1 - t^-2 + t^-3";

}  // namespace

TEST_CASE("canonical text form") {
  CHECK(P("t^2 - 1").to_string() == "t^2 - 1");
  CHECK(P("3*t^2 - t + 5 - 2*t^-1").to_string() == "3*t^2 - t + 5 - 2*t^-1");
  CHECK(P("t^-1 + t").to_string() == "t + t^-1");
  CHECK(P("0").to_string() == "0");
  CHECK(P(kK1).to_string() == kK1);
  CHECK(P("t - t").is_zero());
  CHECK_THROWS_AS(P("t^"), ParseError);
  CHECK_THROWS_AS(P("2x"), ParseError);
}

TEST_CASE("ring operations") {
  CHECK(P("t + 1") * P("t - 1") == P("t^2 - 1"));
  const LaurentPoly a = P("2*t^3 - t^-4");
  CHECK(a + LaurentPoly() == a);
  CHECK(P("t - 1 + t^-1") * P("t - 1 + t^-1") == P("t^2 - 2*t + 3 - 2*t^-1 + t^-2"));
  CHECK(poly_add(a, poly_neg(a)).is_zero());
  CHECK(poly_mul(a, LaurentPoly::constant(1)) == a);
  CHECK(P("t + 1").evaluate(Rational(1, 2)) == Rational(3, 2));
  CHECK(P(kK1).value_at_one() == 1);
}

TEST_CASE("torus_alexander examples") {
  CHECK(torus_alexander(2, 3) == P("t - 1 + t^-1"));
  CHECK(torus_alexander(4, 1) == LaurentPoly::constant(1));
  CHECK(torus_alexander(1, 9) == LaurentPoly::constant(1));
  CHECK(torus_alexander(7, 2).to_string() == "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3");
  CHECK_THROWS_AS(torus_alexander(4, 6), DomainError);
  CHECK_THROWS_AS(torus_alexander(0, 3), DomainError);
}

TEST_CASE("torus_alexander against the power-series oracle for 2 <= a, b <= 30") {
  for (int a = 2; a <= 30; ++a) {
    for (int b = 2; b <= 30; ++b) {
      if (oracle::gcd64(a, b) != 1) continue;
      const LaurentPoly d = torus_alexander(a, b);
      const auto raw = oracle::torus_alexander_raw(a, b);
      const Exponent half = (a - 1) * (b - 1) / 2;
      for (std::size_t i = 0; i < raw.size(); ++i)
        REQUIRE(d.coefficient(static_cast<Exponent>(i) - half) == raw[i]);
      REQUIRE(d.terms().size() == static_cast<std::size_t>(std::count_if(raw.begin(), raw.end(), [](auto c) { return c != 0; })));
      REQUIRE(d.max_exponent() == half);
      REQUIRE(d.is_symmetric());
      REQUIRE(d.value_at_one() == 1);
      REQUIRE(genus_from_alexander(d) == half);
      REQUIRE(lspace_form_check(d).ok);
    }
  }
}

TEST_CASE("genus_from_alexander") {
  CHECK(genus_from_alexander(P("t - 1 + t^-1")) == 1);
  CHECK(genus_from_alexander(LaurentPoly::constant(1)) == 0);
  CHECK(genus_from_alexander(P(kK1)) == 3);
  CHECK_THROWS_AS(genus_from_alexander(LaurentPoly()), DomainError);
}

TEST_CASE("lspace_form_check") {
  const LSpaceForm trefoil = lspace_form_check(P("t - 1 + t^-1"));
  CHECK(trefoil.ok);
  CHECK(trefoil.exponents == std::vector<Exponent>{1});
  const LSpaceForm k1 = lspace_form_check(P(kK1));
  CHECK(k1.ok);
  CHECK(k1.exponents == std::vector<Exponent>{2, 3});
  const LSpaceForm bad = lspace_form_check(P("t^2 - 3 + t^-2"));
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.diagnostic.empty());
  CHECK(lspace_form_check(LaurentPoly::constant(1)).ok);
  CHECK_FALSE(lspace_form_check(P("t^2 + t + 1 + t^-1 + t^-2")).ok);
  CHECK_FALSE(lspace_form_check(P("t - 1")).ok);
  CHECK_FALSE(lspace_form_check(P("-t + 1 - t^-1")).ok);
}

TEST_CASE("cyclic_reduce") {
  const CyclicPoly k1 = cyclic_reduce(P(kK1), 5);
  CHECK(k1.coefficients() == std::vector<Integer>{1, 0, 0, 0, 0});
  CHECK(k1 == cyclic_reduce(torus_alexander(4, 1), 5));
  for (int p = 1; p <= 9; ++p) {
    CHECK(cyclic_reduce(LaurentPoly::constant(1), p) == cyclic_reduce(LaurentPoly::monomial(1, p), p));
    CHECK(cyclic_reduce(LaurentPoly::monomial(1, p), p).coefficient(0) == 1);
  }
  CHECK(cyclic_reduce(P("t^7 + 2*t^-3"), 5).coefficients() == std::vector<Integer>{0, 0, 3, 0, 0});
  CHECK_THROWS_AS(cyclic_reduce(P("t"), 0), DomainError);
}

TEST_CASE("cyclic display convention") {
  const CyclicPoly c = cyclic_reduce(P("t^4 + t^2"), 5);
  CHECK(c.representative(4) == -1);
  CHECK(c.representative(2) == 2);
  CHECK(c.to_string() == "t^2 + t^-1");
  CHECK(c.lift() == P("t^2 + t^-1"));
  const CyclicPoly even = cyclic_reduce(P("t^3"), 6);
  CHECK(even.representative(3) == 3);
  CHECK(even.representative(4) == -2);
}

TEST_CASE("correction_lift") {
  CHECK(correction_lift(LaurentPoly::constant(1), 5) == P(kK1));
  CHECK(correction_lift(P("t - 1 + t^-1"), 5) == P("t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"));
  CHECK_THROWS_AS(correction_lift(LaurentPoly::constant(1), 4), DomainError);
  CHECK_THROWS_AS(correction_lift(LaurentPoly::constant(1), 1), DomainError);
  CHECK_THROWS_AS(correction_lift(P("t^3 - t^2 + 1 - t^-2 + t^-3"), 5), DomainError);
  CHECK_THROWS_AS(correction_lift(P("t"), 7), DomainError);
}

TEST_CASE("correction terms vanish modulo t^p - 1") {
  std::mt19937_64 rng(5);
  for (int p = 3; p <= 101; p += 2) {
    const int h = (p - 1) / 2;
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<int> top(0, h), coeff(-4, 4);
      LaurentPoly::Terms terms;
      const int m = top(rng);
      for (int e = 1; e <= m; ++e) {
        const int c = coeff(rng);
        if (c == 0) continue;
        terms[e] = c;
        terms[-e] = c;
      }
      terms[0] = coeff(rng);
      if (terms[0] == 0) terms.erase(0);
      const LaurentPoly base{terms};
      const LaurentPoly lifted = correction_lift(base, p);
      REQUIRE(cyclic_reduce(lifted, p) == cyclic_reduce(base, p));
      REQUIRE(lifted.value_at_one() == base.value_at_one());
      REQUIRE(lifted.is_symmetric());
    }
  }
}

TEST_CASE("tilde_constraints_check") {
  CHECK(tilde_constraints_check(cyclic_reduce(P(kK1), 5)));
  CHECK_FALSE(tilde_constraints_check(CyclicPoly(3, {0, 3, 0})));
  CHECK_FALSE(tilde_constraints_check(CyclicPoly(3, {0, 2, 0})));
  CHECK(tilde_constraints_check(CyclicPoly(3, {1, -1, 0})));
  CHECK(tilde_constraints_check(CyclicPoly(4, {1, 0, 2, 0})));
  CHECK_FALSE(tilde_constraints_check(CyclicPoly(4, {2, 0, 0, 0})));
}
