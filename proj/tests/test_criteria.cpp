#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdyn/criteria.hpp"
#include "symdyn/spectrum.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::testing;

namespace {

EvPeriodic pt(Subshift const& s, std::string const& t) { return parse_point(s.alphabet(), t); }
Word wd(Subshift const& s, std::string const& t) { return parse_word(s.alphabet(), t); }

std::function<bool(Word const&)> direct_rule(std::string const& name) {
  if (name == "even") return even_word_ok;
  if (name == "golden") return golden_word_ok;
  if (name == "sft001") return sft001_word_ok;
  if (name == "markov3") return markov3_word_ok;
  return [](Word const&) { return true; };  // full shift
}

// Independent cost search: increasing |alpha|+|gamma|, memberships by direct
// window scans; nullopt when nothing is found within the horizon.
std::optional<std::uint64_t> brute_cost(std::function<bool(Word const&)> const& ok,
                                        std::vector<Word> const& B, EvPeriodic const& x,
                                        std::size_t horizon) {
  std::size_t tails = x.preperiod().size() + x.period().size();
  for (std::size_t total = 0; total <= horizon; ++total) {
    for (std::size_t a = 0; a <= std::min(total, tails - 1); ++a) {
      for (auto const& g : all_words(2, total - a, total - a)) {
        EvPeriodic y = x.shifted(a);
        bool good = true;
        for (auto const& b : B) {
          if (!point_ok_by_scan(ok, y.with_prefix(concat(b, g)), 24)) {
            good = false;
            break;
          }
        }
        if (good) return total;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("costs on the even shift stay below one") {
  auto even = builtin_shift("even");
  auto pts = enumerate_points(even, 5);
  for (auto const& b : all_words(2, 4, 1)) {
    if (!in_language(even, b)) continue;
    for (auto const& x : pts) {
      auto r = cost(even, {b}, x);
      REQUIRE_FALSE(r.infinite);
      CHECK(r.cost <= 1);
      EvPeriodic y = x.shifted(r.alpha.size());
      CHECK(contains_point(even, y.with_prefix(concat(b, r.gamma))));
    }
  }
}

TEST_CASE("the collective counterexample of the even shift") {
  auto even = builtin_shift("even");
  std::vector<Word> B{wd(even, "01"), wd(even, "011")};
  CHECK(follower_nonempty(even, follower_config(even, B)));
  auto r = cost(even, B, pt(even, ":0"));
  CHECK(r.infinite);
}

TEST_CASE("exact costs agree with brute-force search") {
  for (auto const& name : {"even", "golden", "sft001", "full2"}) {
    auto s = builtin_shift(name);
    auto ok = direct_rule(name);
    auto pts = enumerate_points(s, 4);
    auto words = all_words(2, 3, 1);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!in_language(s, words[i])) continue;
      for (std::size_t j = i; j < words.size(); j += 2) {
        if (!in_language(s, words[j])) continue;
        std::vector<Word> B{words[i], words[j]};
        for (auto const& x : pts) {
          auto exact = cost(s, B, x);
          auto brute = brute_cost(ok, B, x, 8);
          if (exact.infinite) {
            CHECK_FALSE(brute.has_value());
          } else {
            REQUIRE(brute.has_value());
            CHECK(exact.cost == *brute);
          }
        }
      }
    }
  }
}

TEST_CASE("cost is monotone in the constraint set") {
  auto even = builtin_shift("even");
  auto pts = enumerate_points(even, 4);
  auto words = all_words(2, 3, 1);
  for (auto const& b1 : words) {
    for (auto const& b2 : words) {
      if (!in_language(even, b1) || !in_language(even, b2)) continue;
      for (auto const& x : pts) {
        auto small = cost(even, {b1}, x);
        auto big = cost(even, {b1, b2}, x);
        if (big.infinite) continue;
        REQUIRE_FALSE(small.infinite);
        CHECK(small.cost <= big.cost);
      }
    }
  }
}

TEST_CASE("suprema") {
  auto even = builtin_shift("even");
  auto sup = sup_cost(even, {wd(even, "0")});
  REQUIRE_FALSE(sup.infinite);
  CHECK(sup.cost == 1);
  for (auto const& x : enumerate_points(even, 5)) {
    auto c = cost(even, {wd(even, "0")}, x);
    REQUIRE_FALSE(c.infinite);
    CHECK(c.cost <= sup.cost);
  }

  auto m3 = builtin_shift("markov3");
  auto supm = sup_cost(m3, {wd(m3, "2")});
  REQUIRE_FALSE(supm.infinite);
  CHECK(supm.cost == 1);

  auto full2 = builtin_shift("full2");
  CHECK(sup_cost(full2, {wd(full2, "0")}).cost == 0);

  // sft001: following 00 only zeros survive, so costs from {00} grow without
  // bound (e.g. along points (011)^inf prefixed by longer and longer 0-runs).
  auto sft001 = builtin_shift("sft001");
  auto sups = sup_cost(sft001, {wd(sft001, "00")});
  CHECK(sups.infinite);
  REQUIRE(sups.growth.size() >= 2);
  for (auto const& [x, c] : sups.growth) {
    auto direct = cost(sft001, {wd(sft001, "00")}, x);
    if (c == UINT64_MAX)
      CHECK(direct.infinite);
    else
      CHECK(direct.cost == c);
  }
}

TEST_CASE("cofinality family on the builtins") {
  auto even = builtin_shift("even");
  CHECK(is_cofinal(even).value);
  CHECK(is_strongly_cofinal(even).value);
  auto cc = is_collectively_cofinal(even);
  CHECK_FALSE(cc.value);
  REQUIRE(cc.witness_words.has_value());
  REQUIRE(cc.witness_point.has_value());
  auto replay = cost(even, *cc.witness_words, *cc.witness_point);
  CHECK(replay.infinite);
  CHECK(follower_nonempty(even, follower_config(even, *cc.witness_words)));
  CHECK_FALSE(is_hyper_cofinal(even).value);

  for (auto const& name : {"golden", "full2", "markov3"}) {
    auto s = builtin_shift(name);
    CHECK(is_cofinal(s).value);
    CHECK(is_collectively_cofinal(s).value);
    CHECK(is_strongly_cofinal(s).value);
    CHECK(is_hyper_cofinal(s).value);
  }

  auto sft001 = builtin_shift("sft001");
  auto cf = is_cofinal(sft001);
  CHECK_FALSE(cf.value);
  REQUIRE(cf.witness_point.has_value());
  CHECK(cost(sft001, *cf.witness_words, *cf.witness_point).infinite);

  auto sc = is_strongly_cofinal(sft001);
  CHECK_FALSE(sc.value);
  REQUIRE(sc.witness_words.has_value());
  REQUIRE(sc.witness_word.has_value());   // generator u
  REQUIRE(sc.witness_word2.has_value());  // cycle w
  for (std::size_t m : {1, 3, 5}) {
    Word pre;
    for (std::size_t i = 0; i < m; ++i)
      pre.insert(pre.end(), sc.witness_word2->begin(), sc.witness_word2->end());
    pre.insert(pre.end(), sc.witness_word->begin(), sc.witness_word->end());
    ConfigAnalysis an(sft001.automaton(), {sft001.automaton().endpoints(pre)});
    auto tail = an.least_point();
    REQUIRE(tail.has_value());
    auto r = cost(sft001, *sc.witness_words, tail->with_prefix(pre));
    if (!r.infinite) CHECK(r.cost >= m * sc.witness_word2->size());
  }
}

TEST_CASE("coherence of the cofinality notions") {
  for (auto const& name : {"even", "golden", "full2", "markov3", "sft001"}) {
    auto s = builtin_shift(name);
    bool h = is_hyper_cofinal(s).value;
    bool cc = is_collectively_cofinal(s).value;
    bool sc = is_strongly_cofinal(s).value;
    CHECK(h == (cc && sc));
  }
}

TEST_CASE("topological freeness") {
  auto even = builtin_shift("even");
  auto v = is_topologically_free(even);
  CHECK_FALSE(v.value);
  REQUIRE(v.witness_words.has_value());
  REQUIRE(v.witness_point.has_value());
  CHECK(v.witness_point->purely_periodic());
  CHECK(*v.witness_word == wd(even, "1"));
  auto unique = follower_unique_point(even, follower_config(even, *v.witness_words));
  REQUIRE(unique.has_value());
  CHECK(*unique == *v.witness_point);

  auto sft001 = builtin_shift("sft001");
  auto v2 = is_topologically_free(sft001);
  CHECK_FALSE(v2.value);
  REQUIRE(v2.witness_word.has_value());
  CHECK(*v2.witness_word == wd(sft001, "0"));

  CHECK(is_topologically_free(builtin_shift("golden")).value);
  CHECK(is_topologically_free(builtin_shift("full2")).value);
  CHECK(is_topologically_free(builtin_shift("markov3")).value);
}

TEST_CASE("topological freeness agrees with brute-force enumeration") {
  for (auto const& name : {"even", "golden", "sft001", "markov3"}) {
    auto s = builtin_shift(name);
    auto ok = direct_rule(name);
    std::size_t k = s.alphabet().size();
    auto pts = all_points(k, 6);
    auto words = all_words(k, 5, 1);
    bool brute_violation = false;
    for (std::size_t i = 0; i < words.size() && !brute_violation; ++i) {
      for (std::size_t j = i; j < words.size() && !brute_violation; ++j) {
        std::vector<Word> B{words[i], words[j]};
        std::vector<EvPeriodic> members;
        for (auto const& y : pts) {
          bool all = true;
          for (auto const& b : B)
            if (!point_ok_by_scan(ok, y.with_prefix(b), 24)) {
              all = false;
              break;
            }
          if (all) {
            members.push_back(y);
            if (members.size() > 1) break;
          }
        }
        if (members.size() == 1 && members[0].purely_periodic()) {
          auto cfg = follower_config(s, B);
          if (follower_nonempty(s, cfg)) {
            auto u = follower_unique_point(s, cfg);
            if (u && u->purely_periodic()) brute_violation = true;
          }
        }
      }
    }
    CHECK(is_topologically_free(s).value == !brute_violation);
  }
}

TEST_CASE("non eventually periodic points") {
  auto even = builtin_shift("even");
  auto v = has_non_ev_periodic_point(even);
  CHECK(v.value);
  REQUIRE(v.witness_word.has_value());
  REQUIRE(v.witness_word2.has_value());
  Word c1 = *v.witness_word, c2 = *v.witness_word2;
  CHECK(c1[0] != c2[0]);
  Word shuffle;
  for (int i : {0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0}) {
    Word const& c = i ? c2 : c1;
    shuffle.insert(shuffle.end(), c.begin(), c.end());
  }
  CHECK(in_language(even, shuffle));

  Alphabet bin({"0", "1"});
  auto lonely = Subshift::sft(bin, {parse_word(bin, "1")});
  CHECK_FALSE(has_non_ev_periodic_point(lonely).value);

  CHECK(has_non_ev_periodic_point(builtin_shift("full2")).value);
}

TEST_CASE("freeness forces non eventually periodic points") {
  for (auto const& name : {"even", "golden", "sft001", "full2", "markov3"}) {
    auto s = builtin_shift(name);
    if (is_topologically_free(s).value) CHECK(has_non_ev_periodic_point(s).value);
  }
}

TEST_CASE("minimality and simplicity verdicts") {
  CHECK_FALSE(is_minimal(builtin_shift("even")).value);
  CHECK_FALSE(is_simple(builtin_shift("even")).value);
  CHECK(is_minimal(builtin_shift("markov3")).value);
  CHECK(is_simple(builtin_shift("markov3")).value);
  CHECK(is_minimal(builtin_shift("full2")).value);
  CHECK(is_simple(builtin_shift("full2")).value);
  CHECK(is_minimal(builtin_shift("golden")).value);
  CHECK(is_simple(builtin_shift("golden")).value);
  CHECK_FALSE(is_minimal(builtin_shift("sft001")).value);
  CHECK_FALSE(is_simple(builtin_shift("sft001")).value);
}

TEST_CASE("thomsen bound") {
  auto m3 = builtin_shift("markov3");
  auto th = thomsen_sup(m3, {wd(m3, "2")});
  CHECK(th.infinite);
  REQUIRE(th.attained_at.has_value());
  CHECK(*th.attained_at == pt(m3, "1:2"));
  for (auto const& g : all_words(3, 4)) {
    Word head = concat(wd(m3, "2"), g);
    CHECK_FALSE(contains_point(m3, th.attained_at->with_prefix(head)));
  }

  auto even = builtin_shift("even");
  auto the = thomsen_sup(even, {wd(even, "0")});
  REQUIRE_FALSE(the.infinite);
  CHECK(the.cost == 1);

  auto full2 = builtin_shift("full2");
  for (auto const& b : all_words(2, 2, 1))
    CHECK(thomsen_sup(full2, {b}).cost == 0);

  // A simple but non-surjective shift fails the no-deletion criterion: the
  // two notions genuinely differ off the surjective case.
  CHECK(is_simple(m3).value);
  CHECK_FALSE(is_surjective(m3).value);
}

TEST_CASE("follower inclusions") {
  auto full2 = builtin_shift("full2");
  auto r = find_crazy_inclusion(full2, {wd(full2, "0")});
  REQUIRE(r.has_value());
  CHECK(r->first.empty());
  CHECK(r->second.empty());

  auto golden = builtin_shift("golden");
  auto rg = find_crazy_inclusion(golden, {wd(golden, "1")});
  REQUIRE(rg.has_value());
  Word head = concat(wd(golden, "1"), rg->second);
  for (auto const& y : all_points(2, 5)) {
    if (!contains_point(golden, y.with_prefix(rg->first))) continue;
    CHECK(contains_point(golden, y.with_prefix(head)));
  }

  auto even = builtin_shift("even");
  CHECK_FALSE(
      find_crazy_inclusion(even, {wd(even, "01"), wd(even, "011")}, 4).has_value());
}

TEST_CASE("included follower sets move balls into the basic open set") {
  auto golden = builtin_shift("golden");
  std::vector<Word> B{wd(golden, "1")};
  auto rg = find_crazy_inclusion(golden, B);
  REQUIRE(rg.has_value());
  auto [mu, nu] = *rg;
  std::size_t radius = 5;
  for (auto const& x : enumerate_points(golden, 4)) {
    if (!contains_point(golden, x.with_prefix(mu))) continue;
    auto xi = xi_ball(golden, x, radius);
    REQUIRE(xi.contains(GroupElement::from_word_inverse(mu)));
    auto moved = spectral_translate(golden, GroupElement::from_word(nu), xi);
    BasicOpenSpec v;
    v.betas = B;
    CHECK(basic_open_contains(moved, v));
  }
}

TEST_CASE("orbit density at desk scale for collectively cofinal shifts") {
  for (auto const& name : {"golden", "full2", "markov3"}) {
    auto s = builtin_shift(name);
    REQUIRE(is_collectively_cofinal(s).value);
    std::size_t checked = 0;
    for (auto const& entry : config_meet_closure(s)) {
      std::vector<Word> B = entry.rep;
      if (B.size() > 2) continue;
      std::size_t blen = 0;
      for (auto const& b : B) blen = std::max(blen, b.size());
      if (blen > 2) continue;
      ConfigAnalysis an(s.automaton(), entry.parts);
      if (!an.start_alive()) continue;
      for (auto const& x : enumerate_points(s, 3)) {
        std::size_t const radius = 6;
        auto xi = xi_ball(s, x, radius);
        bool found = false;
        for (auto const& k : xi.members) {
          bool all = true;
          for (auto const& b : B) {
            GroupElement kb = k * GroupElement::from_word_inverse(b);
            if (kb.length() > radius || !xi.contains(kb)) {
              all = false;
              break;
            }
          }
          if (all) {
            found = true;
            break;
          }
        }
        CHECK(found);
        ++checked;
      }
    }
    CHECK(checked >= 5);
  }
}

TEST_CASE("bounded-cost shifts reach every limit element") {
  auto even = builtin_shift("even");
  REQUIRE(is_strongly_cofinal(even).value);
  auto fam = builtin_family("even-odd-ones", even.alphabet());
  auto rep = limit_ball(even, fam, 3, 12);
  REQUIRE(rep.stabilized);
  for (auto const& b : all_words(2, 2, 1)) {
    if (!in_language(even, b)) continue;
    bool found = false;
    for (auto const& g : rep.ball.members) {
      GroupElement gb = g * GroupElement::from_word(b);
      if (gb.length() <= rep.ball.radius && rep.ball.contains(gb)) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("oracle criteria carry depth labels") {
  auto pow2 = builtin_shift("pow2");
  auto sc = is_strongly_cofinal(pow2);
  CHECK_FALSE(sc.value);
  CHECK_FALSE(sc.exact);
  auto cf = is_cofinal(pow2);
  CHECK(cf.value);
  CHECK_FALSE(cf.exact);
  auto tf = is_topologically_free(pow2);
  CHECK(tf.value);
  CHECK_FALSE(tf.exact);
  CHECK_FALSE(is_minimal(pow2).value);
  CHECK_FALSE(is_simple(pow2).value);
}
