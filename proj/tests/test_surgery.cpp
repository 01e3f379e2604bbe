#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "pslens/surgery.hpp"

using namespace pslens;

namespace {

LensSpace lens_of(const SurgeryResult& r) {
  REQUIRE(std::holds_alternative<surgery::LensResult>(r));
  return std::get<surgery::LensResult>(r).lens;
}

}  // namespace

TEST_CASE("slopes") {
  CHECK(Slope(-3, -5) == Slope(3, 5));
  CHECK(Slope(-1, 0) == Slope::meridian());
  CHECK(Slope::parse("-3/5") == Slope(-3, 5));
  CHECK(Slope::parse("7") == Slope(7, 1));
  CHECK(Slope::parse("1/0") == Slope::meridian());
  CHECK(Slope(3, 5).to_string() == "3/5");
  CHECK(Slope(3, 5).value() == Rational(3, 5));
  CHECK(Slope::meridian().value().is_infinite());
  CHECK_THROWS_AS(Slope(2, 4), DomainError);
  CHECK_THROWS_AS(Slope(0, 0), DomainError);
}

TEST_CASE("slope distance examples") {
  CHECK(slope_distance(Slope::meridian(), Slope::longitude()) == 1);
  CHECK(slope_distance(Slope(5, 3), Slope(5, 3)) == 0);
  CHECK(involution_image(Slope(5, 1)) == Slope(5, -1));
  CHECK(slope_distance(Slope(5, 1), involution_image(Slope(5, 1))) == 10);
  CHECK(involution_image(Slope::meridian()) == Slope::meridian());
  CHECK(involution_image(Slope::longitude()) == Slope::longitude());
}

TEST_CASE("distance to the involution image is 2pq") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> dp(-100000, 100000), dq(1, 100000);
  int cases = 0;
  while (cases < 10000) {
    const std::int64_t p = dp(rng), q = dq(rng);
    if (oracle::gcd64(p, q) != 1) continue;
    const Slope s(p, q);
    REQUIRE(slope_distance(s, involution_image(s)) == 2 * Integer(std::abs(p)) * q);
    ++cases;
  }
}

TEST_CASE("slope distance is symmetric and vanishes only on equal slopes") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-30, 30);
  for (int trial = 0; trial < 5000; ++trial) {
    std::int64_t p1 = d(rng), q1 = d(rng), p2 = d(rng), q2 = d(rng);
    if (oracle::gcd64(p1, q1) != 1 || oracle::gcd64(p2, q2) != 1) continue;
    const Slope a(p1, q1), b(p2, q2);
    REQUIRE(slope_distance(a, b) == slope_distance(b, a));
    REQUIRE((slope_distance(a, b) == 0) == (a == b));
    REQUIRE(slope_distance(a, b) == std::abs(p1 * q2 - p2 * q1));
  }
}

TEST_CASE("unknot surgery") {
  CHECK(unknot_surgery(5) == LensSpace{5, 4});
  CHECK(equivalent_oriented(unknot_surgery(5), {5, -1}));
  CHECK(unknot_surgery(1).is_sphere());
  CHECK(unknot_surgery(-1).is_sphere());
  CHECK(unknot_surgery(0) == LensSpace{0, 1});
}

TEST_CASE("torus knot surgery examples") {
  CHECK(torus_knot_integral_surgery(4, 1, 5) == SurgeryResult{surgery::LensResult{unknot_surgery(5)}});
  CHECK(equivalent_oriented(lens_of(torus_knot_integral_surgery(4, 1, 5)), {5, -1}));
  const LensSpace l = lens_of(torus_knot_integral_surgery(7, 2, 15));
  CHECK(equivalent_oriented(l, {15, -4}));
  CHECK(oracle::mod64(2 * 2 * -4, 15) == oracle::mod64(-1, 15));
  const auto sum = as_lens_sum(torus_knot_integral_surgery(7, 2, 14));
  REQUIRE(sum.has_value());
  CHECK(*sum == LensSum({{7, 2}, {2, 7}}));
  CHECK(sum_equivalent(*sum, LensSum({{2, -1}, {7, 3}}), Orientation::Unoriented));
  const SurgeryResult other = torus_knot_integral_surgery(3, 2, 1);
  CHECK(std::get<surgery::NotLens>(other).orders == std::vector<Integer>{2, 3, 5});
  CHECK(describe(other) == "S^2(2,3,5)");
  CHECK_FALSE(as_lens_sum(other).has_value());
  CHECK_THROWS_AS(torus_knot_integral_surgery(4, 6, 5), DomainError);
}

TEST_CASE("lens surgeries on torus knots are symmetric in a, b") {
  for (std::int64_t a = 2; a <= 25; ++a) {
    for (std::int64_t b = 2; b <= 25; ++b) {
      if (oracle::gcd64(a, b) != 1) continue;
      for (std::int64_t m : {a * b - 1, a * b + 1}) {
        const LensSpace l = lens_of(torus_knot_integral_surgery(a, b, m));
        REQUIRE(l.p == m);
        REQUIRE(equivalent_oriented(l, {m, -b * b}));
        REQUIRE(equivalent_oriented(l, lens_of(torus_knot_integral_surgery(b, a, m))));
      }
      const auto sum = as_lens_sum(torus_knot_integral_surgery(a, b, a * b));
      REQUIRE(sum.has_value());
      REQUIRE(sum->summands().size() == 2);
    }
  }
}

TEST_CASE("unknot coherence") {
  for (long a = 1; a <= 12; ++a)
    for (long m = -20; m <= 20; ++m) {
      REQUIRE(torus_knot_integral_surgery(a, 1, m) == SurgeryResult{surgery::LensResult{unknot_surgery(m)}});
      REQUIRE(torus_knot_integral_surgery(1, a, m) == SurgeryResult{surgery::LensResult{unknot_surgery(m)}});
    }
}

TEST_CASE("family convention coherence for n in [1, 40]") {
  for (long n = 1; n <= 40; ++n) {
    const long p = 3 * n * n + n + 1, q = -3 * n + 2;
    const LensSpace l = lens_of(torus_knot_integral_surgery(3 * n + 1, n, p));
    REQUIRE(oracle::mod64(n * n * q, p) == oracle::mod64(-1, p));
    REQUIRE(equivalent_unoriented(l, {p, q}));
  }
}

TEST_CASE("dual self-linking") {
  CHECK(dual_self_linking(5) == Rational(4, 5));
  CHECK(dual_self_linking(1) == Rational(0));
  CHECK(dual_self_linking(7) == Rational(6, 7));
  CHECK_THROWS_AS(dual_self_linking(0), DomainError);
}
