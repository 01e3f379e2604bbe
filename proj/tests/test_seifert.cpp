#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "pslens/seifert.hpp"

using namespace pslens;

namespace {

template <class T>
bool is(const SeifertClass& c) {
  return std::holds_alternative<T>(c);
}

std::vector<Integer> orders_of(const SeifertClass& c) {
  if (const auto* d = std::get_if<cover::SFSOverDisk>(&c)) return d->orders;
  if (const auto* s = std::get_if<cover::SFSOverSphere>(&c)) return s->orders;
  return {};
}

}  // namespace

TEST_CASE("tangle sum covers from the case analysis") {
  const long n = 5;
  CHECK(tangle_sum_double_cover(n + 2, 3) == SeifertClass{cover::SFSOverDisk{{3, 7}}});
  CHECK(is<cover::TwistedIBundleKlein>(tangle_sum_double_cover(1 - 3, -2)));
  CHECK(is<cover::DegenerateFibration>(tangle_sum_double_cover(-2 + 2, 3)));
  CHECK(is<cover::SolidTorus>(tangle_sum_double_cover(-1 + 2, 3)));
  CHECK(is<cover::SolidTorus>(tangle_sum_double_cover(-3 + 2, 3)));
  CHECK(describe(tangle_sum_double_cover(7, 3)) == "D^2(3,7)");
  CHECK(describe(tangle_sum_double_cover(TangleSum::parse("1/7 + 1/3"))) == "D^2(3,7)");
  CHECK(describe(tangle_sum_double_cover(TangleSum::parse("(1/-2) + (1/-2)"))) ==
        "twisted I-bundle over the Klein bottle");
  CHECK_THROWS_AS(tangle_sum_double_cover(TangleSum::parse("2/7 + 1/3")), DomainError);
  CHECK_THROWS_AS(TangleSum::parse("1/3"), DomainError);
}

TEST_CASE("tangle sum covers are symmetric and classified by |x|, |y|") {
  for (long x = -30; x <= 30; ++x) {
    for (long y = -30; y <= 30; ++y) {
      const SeifertClass c = tangle_sum_double_cover(x, y);
      REQUIRE(c == tangle_sum_double_cover(y, x));
      REQUIRE(c == tangle_sum_double_cover(-x, y));
      const long ax = std::abs(x), ay = std::abs(y);
      if (x == 0 || y == 0) REQUIRE(is<cover::DegenerateFibration>(c));
      else if (ax == 1 || ay == 1) REQUIRE(is<cover::SolidTorus>(c));
      else if (ax == 2 && ay == 2) REQUIRE(is<cover::TwistedIBundleKlein>(c));
      else REQUIRE(orders_of(c) == std::vector<Integer>{std::min(ax, ay), std::max(ax, ay)});
    }
  }
}

TEST_CASE("two-bridge pretzels at the boundary values") {
  std::set<long> beta, alpha;
  for (long n = -10; n <= 10; ++n) {
    if (pretzel_is_two_bridge({1 - n, 2, 2})) beta.insert(n);
    if (pretzel_is_two_bridge({n + 2, 3, -2})) alpha.insert(n);
  }
  CHECK(beta == std::set<long>{0, 2});
  CHECK(alpha == std::set<long>{-1, -3});
  for (long b = -6; b <= 6; ++b)
    for (long c = -6; c <= 6; ++c) CHECK(pretzel_is_two_bridge({1, b, c}));
}

TEST_CASE("pretzel covers") {
  CHECK(pretzel_double_cover({-2, 3, 5}) == SeifertClass{cover::SFSOverSphere{{2, 3, 5}}});
  CHECK(describe(pretzel_double_cover(Pretzel::parse("P(-2,3,5)"))) == "S^2(2,3,5)");
  CHECK(is<cover::Lens>(pretzel_double_cover({1, 2, 2})));
  CHECK(is<cover::ConnectedSumLike>(pretzel_double_cover({0, 2, 2})));
  CHECK(Pretzel::parse("P(3,5,-2)").to_string() == "P(3,5,-2)");
}

TEST_CASE("pretzel lens covers have order |ab + bc + ca|") {
  for (long s : {1L, -1L}) {
    for (long b = -12; b <= 12; ++b) {
      for (long c = -12; c <= 12; ++c) {
        const SeifertClass cls = pretzel_double_cover({s, b, c});
        REQUIRE(is<cover::Lens>(cls));
        const LensSpace l = std::get<cover::Lens>(cls).lens;
        REQUIRE(l.p == std::abs(s * b + b * c + c * s));
      }
    }
  }
  // P(1,1,c) is the numerator closure of 2 + 1/c = (2c+1)/c.
  REQUIRE(equivalent_unoriented(std::get<cover::Lens>(pretzel_double_cover({1, 1, 1})).lens, {3, 1}));
  for (long c = 1; c <= 15; ++c)
    REQUIRE(equivalent_unoriented(std::get<cover::Lens>(pretzel_double_cover({1, 1, c})).lens, {2 * c + 1, c}));
}

TEST_CASE("pretzel covers are invariant under permutations") {
  for (long a = -7; a <= 7; ++a) {
    for (long b = -7; b <= 7; ++b) {
      for (long c = -7; c <= 7; ++c) {
        std::array<long, 3> v{a, b, c};
        const SeifertClass base = pretzel_double_cover({a, b, c});
        std::sort(v.begin(), v.end());
        do {
          const SeifertClass other = pretzel_double_cover({v[0], v[1], v[2]});
          if (const auto* l = std::get_if<cover::Lens>(&base)) {
            REQUIRE(is<cover::Lens>(other));
            REQUIRE(equivalent_oriented(l->lens, std::get<cover::Lens>(other).lens));
          } else {
            REQUIRE(other == base);
          }
        } while (std::next_permutation(v.begin(), v.end()));
        if (const auto* l = std::get_if<cover::Lens>(&base)) {
          const SeifertClass flipped = pretzel_double_cover({-a, -b, -c});
          REQUIRE(equivalent_oriented(mirror(l->lens), std::get<cover::Lens>(flipped).lens));
        }
      }
    }
  }
}

TEST_CASE("tunnel verdict examples") {
  CHECK(tunnel_verdict(5).kind == TunnelKind::TunnelNumberTwo);
  CHECK(tunnel_verdict(5).to_string() == "TunnelNumberTwo");
  const TunnelVerdict zero = tunnel_verdict(0);
  CHECK(zero.kind == TunnelKind::TunnelNumberOne);
  CHECK(zero.failed_gate == Gate::G1);
  const TunnelVerdict three = tunnel_verdict(3);
  CHECK(three.kind == TunnelKind::Excluded);
  CHECK(three.to_string() == "Excluded(G2)");
  CHECK(describe(tunnel_verdict(5).alpha_cover) == "D^2(3,7)");
  CHECK(describe(tunnel_verdict(5).beta_cover) == "D^2(2,4)");
}

TEST_CASE("tunnel verdict over n in [-50, 50]") {
  for (long n = -50; n <= 50; ++n) {
    const TunnelVerdict v = tunnel_verdict(n);
    REQUIRE((v.kind == TunnelKind::TunnelNumberTwo) == (std::abs(n) >= 4));
    const bool degenerate = (n >= -3 && n <= -1) || (n >= 0 && n <= 2);
    REQUIRE(v.gates[0].passed == !degenerate);
    REQUIRE((v.failed_gate == Gate::G1) == degenerate);
    REQUIRE(v.gates[1].passed == !(n == -1 || n == 3));
    REQUIRE(v.gates[2].passed == !(n == 0 || n == 2));
    REQUIRE(v.gates[3].passed == !(n == -1 || n == -3));
    if (std::abs(n) >= 4) {
      const auto a = orders_of(v.alpha_cover), b = orders_of(v.beta_cover);
      REQUIRE(a.size() == 2);
      REQUIRE(b.size() == 2);
      REQUIRE(a != std::vector<Integer>{2, 2});
      REQUIRE(b != std::vector<Integer>{2, 2});
    }
  }
}
