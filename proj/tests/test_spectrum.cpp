#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symdyn/criteria.hpp"
#include "symdyn/spectrum.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::testing;

namespace {
EvPeriodic pt(Subshift const& s, std::string const& t) { return parse_point(s.alphabet(), t); }
Word wd(Subshift const& s, std::string const& t) { return parse_word(s.alphabet(), t); }
GroupElement ge(Subshift const& s, std::string const& t) { return parse_group(s.alphabet(), t); }
}  // namespace

TEST_CASE("xi balls against the membership predicate") {
  auto even = builtin_shift("even");
  auto xi = xi_ball(even, pt(even, ":1"), 2);
  CHECK(xi.contains(ge(even, "0-")));  // 1^inf follows 0

  auto tiny = xi_ball(even, pt(even, ":1"), 0);
  CHECK(tiny.members.size() == 1);
  CHECK(tiny.contains(GroupElement()));

  // Brute force on the full shift: membership is exactly "alpha is a prefix
  // and beta extends the tail".
  auto full2 = builtin_shift("full2");
  EvPeriodic z = pt(full2, ":0");
  auto ball = xi_ball(full2, z, 2);
  for (auto const& g : group_ball(full2.alphabet(), 2)) {
    auto pp = positive_pair(g);
    bool expect = false;
    if (pp && is_prefix(pp->alpha, z.prefix(2))) {
      EvPeriodic y = z.shifted(pp->alpha.size());
      expect = contains_point(full2, y.with_prefix(pp->beta));
    }
    CHECK(ball.contains(g) == expect);
  }
}

TEST_CASE("stems") {
  auto even = builtin_shift("even");
  for (auto const& x : enumerate_points(even, 4)) {
    auto xi = xi_ball(even, x, 3);
    CHECK(stem_of(xi) == x.prefix(3));
  }
  // stem at g = alpha beta^-1 begins with beta.
  EvPeriodic ones = pt(even, ":1");
  auto xi = xi_ball(even, ones, 3);
  GroupElement g = ge(even, "10-");
  REQUIRE(xi.contains(g));
  Word st = stem_at(xi, g);
  CHECK(is_prefix(wd(even, "0"), st));
  CHECK(stem_at(xi, GroupElement()) == stem_of(xi));
  CHECK(stem_of(xi_ball(even, ones, 0)).empty());
}

TEST_CASE("validation accepts constructed balls and rejects broken ones") {
  for (auto const& name : {"even", "sft001", "golden", "full2"}) {
    auto s = builtin_shift(name);
    for (auto const& x : enumerate_points(s, 4)) {
      auto xi = xi_ball(s, x, 3);
      auto v = validate_element(s, xi);
      CHECK(v.ok);
      if (!v.ok) MESSAGE(name, " ", point_str(s.alphabet(), x), " ", v.violated);
    }
  }
  auto even = builtin_shift("even");
  auto xi = xi_ball(even, pt(even, ":1"), 2);

  SpectrumBall no_unit = xi;
  no_unit.members.erase(GroupElement());
  CHECK(validate_element(even, no_unit).violated == "unit-missing");

  SpectrumBall two_letters = xi;
  two_letters.members.insert(ge(even, "0"));  // both 0 and 1 extend the unit
  auto v2 = validate_element(even, two_letters);
  CHECK_FALSE(v2.ok);

  SpectrumBall not_convex = xi;
  not_convex.members.erase(ge(even, "1"));  // drop a geodesic midpoint of 11
  CHECK(validate_element(even, not_convex).violated == "not-convex");
}

TEST_CASE("translation") {
  auto even = builtin_shift("even");
  EvPeriodic ones = pt(even, ":1");
  auto xi3 = xi_ball(even, ones, 3);

  auto same = spectral_translate(even, GroupElement(), xi3);
  CHECK(same.members == xi3.members);

  // 1^inf is fixed by the generator 1: translating its ball shrinks the
  // radius but keeps the element.
  auto moved = spectral_translate(even, ge(even, "1"), xi3);
  auto expect = xi_ball(even, ones, 2);
  CHECK(moved.members == expect.members);

  // Translation by 0 lands on the ball of 0.1^inf.
  auto moved0 = spectral_translate(even, ge(even, "0"), xi3);
  CHECK(moved0.members == xi_ball(even, pt(even, "0:1"), 2).members);

  // "0" is not a member (it is no prefix of the stem), so its inverse cannot
  // act on this ball.
  CHECK_THROWS_AS(spectral_translate(even, ge(even, "0-"), xi3), std::invalid_argument);
}

TEST_CASE("equivariance of translation on samples") {
  std::mt19937 rng(99);
  for (auto const& name : {"even", "golden", "full2", "sft001"}) {
    auto s = builtin_shift(name);
    auto pts = enumerate_points(s, 4);
    auto ball = group_ball(s.alphabet(), 2);
    std::size_t checked = 0;
    for (auto const& x : pts) {
      auto xi = xi_ball(s, x, 4);
      for (auto const& g : ball) {
        if (g.is_unit() || !xi.contains(g.inverse())) continue;
        auto lhs = spectral_translate(s, g, xi);
        auto y = act(s, g, x);
        auto rhs = xi_ball(s, y, 4 - g.length());
        CHECK(lhs.members == rhs.members);
        ++checked;
      }
    }
    CHECK(checked > 10);
  }
}

TEST_CASE("membership classification from stem data") {
  auto even = builtin_shift("even");
  // The anomalous stem: 1^inf with g = 0^-1 is necessary-only.
  CHECK(membership_test(even, pt(even, ":1"), ge(even, "0-")) == Membership::NecessaryOnly);

  // Golden mean: every point starting 0 follows 1, so the interior criterion
  // certifies 1^-1 for stems starting with 0.
  auto golden = builtin_shift("golden");
  CHECK(membership_test(golden, pt(golden, ":0"), ge(golden, "1-")) == Membership::CertifiedIn);

  // A constraint word outside the language is forbidden.
  auto sft001 = builtin_shift("sft001");
  GroupElement bad = GroupElement::from_word_inverse(wd(sft001, "001"));
  CHECK(membership_test(sft001, pt(sft001, ":0"), bad) == Membership::Forbidden);

  // Stem tails outside the follower set are forbidden for every element.
  CHECK(membership_test(even, pt(even, "1:0"), ge(even, "0-")) == Membership::Forbidden);

  // Not of the alpha beta^-1 shape.
  CHECK(membership_test(even, pt(even, ":1"), ge(even, "0-1")) == Membership::Forbidden);

  // On finite-type shifts every necessary membership is certified (the
  // interior criterion closes the gap).
  for (auto const& name : {"sft001", "golden", "full2"}) {
    auto s = builtin_shift(name);
    for (auto const& x : enumerate_points(s, 3)) {
      auto xi = xi_ball(s, x, 3);
      for (auto const& g : xi.members)
        CHECK(membership_test(s, x, g) == Membership::CertifiedIn);
    }
  }
}

TEST_CASE("basic open sets") {
  auto even = builtin_shift("even");
  BasicOpenSpec v;
  v.betas = {wd(even, "01"), wd(even, "011")};
  auto xi1 = xi_ball(even, pt(even, ":1"), 3);
  auto xi0 = xi_ball(even, pt(even, ":0"), 3);
  CHECK(basic_open_contains(xi1, v));
  CHECK_FALSE(basic_open_contains(xi0, v));

  // V_{alpha; empty, alpha} never constrains beyond alpha itself.
  for (auto const& x : enumerate_points(even, 3)) {
    auto xi = xi_ball(even, x, 3);
    Word alpha = x.prefix(1);
    BasicOpenSpec w;
    w.alpha = alpha;
    w.betas = {Word{}, alpha};
    CHECK(basic_open_contains(xi, w));
  }

  BasicOpenSpec too_big;
  too_big.betas = {Word(9, 1)};
  CHECK_THROWS_AS(basic_open_contains(xi1, too_big), RadiusError);
}

TEST_CASE("limit balls: constant and convergent sequences") {
  auto sft001 = builtin_shift("sft001");
  EvPeriodic target = pt(sft001, ":01");
  auto rep = limit_ball(
      sft001, [&](std::size_t) { return target; }, 3, 10);
  CHECK(rep.stabilized);
  CHECK(rep.stabilized_at == 1);
  CHECK(rep.ball.members == xi_ball(sft001, target, 3).members);
  REQUIRE(rep.ball.stem_exact);
  CHECK(*rep.ball.stem_exact == target);

  // On finite-type shifts limit balls agree with the ball of the limit.
  std::mt19937 rng(5);
  for (auto const& name : {"sft001", "golden"}) {
    auto s = builtin_shift(name);
    auto pts = enumerate_points(s, 4);
    for (int trial = 0; trial < 40; ++trial) {
      EvPeriodic x = pts[rng() % pts.size()];
      // x_k = x[1..k] . (least continuation): converges to x.
      auto fam = [&](std::size_t k) {
        Word p = x.prefix(k);
        ConfigAnalysis an(s.automaton(), {s.automaton().endpoints(p)});
        auto tail = an.least_point();
        REQUIRE(tail.has_value());
        return tail->with_prefix(p);
      };
      auto lim = limit_ball(s, fam, 3, 14);
      CHECK(lim.stabilized);
      CHECK(lim.ball.members == xi_ball(s, x, 3).members);
    }
  }
}

TEST_CASE("the even shift produces an anomalous limit element") {
  auto even = builtin_shift("even");
  auto fam = builtin_family("even-odd-ones", even.alphabet());
  auto rep = limit_ball(even, fam, 2, 10);
  REQUIRE(rep.stabilized);
  auto const& ball = rep.ball;
  CHECK_FALSE(ball.exact);  // limit data is bounded-confidence
  REQUIRE(ball.stem_exact);
  CHECK(*ball.stem_exact == pt(even, ":1"));
  CHECK_FALSE(ball.contains(ge(even, "0-")));
  auto basin = xi_ball(even, pt(even, ":1"), 2);
  CHECK(basin.contains(ge(even, "0-")));
  // Basin containment: the limit sits inside the ball of its stem.
  for (auto const& g : ball.members) CHECK(basin.contains(g));
  CHECK(validate_element(even, ball).ok);
}

TEST_CASE("balls of distinct points differ once the radius sees them") {
  for (auto const& name : {"even", "golden"}) {
    auto s = builtin_shift(name);
    auto pts = enumerate_points(s, 3);
    for (auto const& x : pts)
      for (auto const& y : pts) {
        if (x == y) continue;
        std::size_t r = 8;
        auto bx = xi_ball(s, x, r);
        auto by = xi_ball(s, y, r);
        CHECK(bx.members != by.members);
        // Stem continuity: equal balls force equal stems to the radius.
        if (bx.members == by.members) CHECK(x.prefix(r) == y.prefix(r));
      }
  }
}

TEST_CASE("dot rendering is deterministic and well formed") {
  auto even = builtin_shift("even");
  auto xi = xi_ball(even, pt(even, ":1"), 2);
  std::string d1 = ball_dot(even, xi);
  std::string d2 = ball_dot(even, xi);
  CHECK(d1 == d2);
  CHECK(d1.find("digraph") != std::string::npos);
  CHECK(d1.find("style=solid") != std::string::npos);
  CHECK(d1.find("style=dashed") != std::string::npos);
}
