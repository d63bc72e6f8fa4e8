#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdyn/criteria.hpp"
#include "symdyn/report.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::testing;

namespace {

EvPeriodic pt(Subshift const& s, std::string const& t) { return parse_point(s.alphabet(), t); }
Word wd(Subshift const& s, std::string const& t) { return parse_word(s.alphabet(), t); }

}  // namespace

TEST_CASE("language membership matches the direct rules") {
  auto even = builtin_shift("even");
  CHECK(in_language(even, wd(even, "0110")));
  CHECK_FALSE(in_language(even, wd(even, "010")));
  CHECK(in_language(even, Word{}));

  for (auto const& w : all_words(2, 10)) CHECK(in_language(even, w) == even_word_ok(w));

  auto sft001 = builtin_shift("sft001");
  for (auto const& w : all_words(2, 10)) CHECK(in_language(sft001, w) == sft001_word_ok(w));

  auto golden = builtin_shift("golden");
  for (auto const& w : all_words(2, 10)) CHECK(in_language(golden, w) == golden_word_ok(w));

  auto markov3 = builtin_shift("markov3");
  for (auto const& w : all_words(3, 7)) CHECK(in_language(markov3, w) == markov3_word_ok(w));
}

TEST_CASE("language words needing the extension check") {
  // Forbidding 11 and 10 kills every word containing 1, although "01" has no
  // forbidden factor: occurrence in a point requires an infinite extension.
  Alphabet bin({"0", "1"});
  auto s = Subshift::sft(bin, {parse_word(bin, "11"), parse_word(bin, "10")});
  CHECK(in_language(s, parse_word(bin, "0")));
  CHECK_FALSE(in_language(s, parse_word(bin, "01")));
  CHECK_FALSE(in_language(s, parse_word(bin, "1")));
}

TEST_CASE("point membership") {
  auto even = builtin_shift("even");
  CHECK(contains_point(even, pt(even, ":1")));
  CHECK(contains_point(even, pt(even, "0:1")));
  auto sft001 = builtin_shift("sft001");
  CHECK_FALSE(contains_point(sft001, pt(sft001, ":001")));

  for (auto const& x : all_points(2, 6)) {
    CHECK(contains_point(even, x) == point_ok_by_scan(even_word_ok, x));
    CHECK(contains_point(sft001, x) == point_ok_by_scan(sft001_word_ok, x));
  }
}

TEST_CASE("factorial and extendable language") {
  for (auto const& name : {"even", "sft001", "golden", "full2", "markov3"}) {
    auto s = builtin_shift(name);
    for (auto const& w : all_words(s.alphabet().size(), 6)) {
      if (!in_language(s, w)) continue;
      if (!w.empty()) {
        CHECK(in_language(s, Word(w.begin() + 1, w.end())));
        CHECK(in_language(s, Word(w.begin(), w.end() - 1)));
      }
      bool ext = false;
      for (Sym a = 0; a < s.alphabet().size() && !ext; ++a) {
        Word wa = w;
        wa.push_back(a);
        ext = in_language(s, wa);
      }
      CHECK(ext);
    }
  }
}

TEST_CASE("follower configurations carry the exact follower sets") {
  auto even = builtin_shift("even");
  auto cfg0 = follower_config(even, {wd(even, "0")});
  REQUIRE(cfg0.parts.size() == 1);
  CHECK(cfg0.parts[0] == StateSet{0});  // alive set {q0}

  auto cfg1 = follower_config(even, {wd(even, "1")});
  CHECK(cfg1.parts[0] == StateSet{0, 1});  // F_1 = X

  auto cfge = follower_config(even, {Word{}});
  CHECK(cfge.parts[0] == StateSet{0, 1});

  // Brute force: a point survives the configuration iff every beta.y is a
  // point of the shift.
  for (auto const& name : {"even", "sft001", "golden"}) {
    auto s = builtin_shift(name);
    auto words = all_words(2, 4, 1);
    for (std::size_t i = 0; i < words.size(); i += 3) {
      for (std::size_t j = i; j < words.size(); j += 5) {
        std::vector<Word> B{words[i], words[j]};
        if (!in_language(s, words[i]) || !in_language(s, words[j])) continue;
        auto cfg = follower_config(s, B);
        ConfigAnalysis an(s.automaton(), cfg.parts);
        for (auto const& y : all_points(2, 5)) {
          bool direct = contains_point(s, y.with_prefix(words[i])) &&
                        contains_point(s, y.with_prefix(words[j]));
          CHECK(an.accepts(y) == direct);
        }
      }
    }
  }
}

TEST_CASE("follower emptiness and singletons") {
  auto even = builtin_shift("even");
  auto cfg = follower_config(even, {wd(even, "01"), wd(even, "011")});
  CHECK(follower_nonempty(even, cfg));
  auto u = follower_unique_point(even, cfg);
  REQUIRE(u.has_value());
  CHECK(*u == pt(even, ":1"));

  auto sft001 = builtin_shift("sft001");
  auto cfg00 = follower_config(sft001, {wd(sft001, "00")});
  CHECK(follower_nonempty(sft001, cfg00));
  auto u00 = follower_unique_point(sft001, cfg00);
  REQUIRE(u00.has_value());
  CHECK(*u00 == pt(sft001, ":0"));

  auto full2 = builtin_shift("full2");
  auto cfgf = follower_config(full2, {wd(full2, "0")});
  CHECK_FALSE(follower_unique_point(full2, cfgf).has_value());

  auto cfg_mixed = follower_config(even, {wd(even, "0"), wd(even, "01")});
  CHECK(follower_nonempty(even, cfg_mixed));  // 1^inf survives both

  // beta outside the language gives the canonical empty configuration.
  auto dead = follower_config(sft001, {wd(sft001, "001")});
  CHECK(dead.dead());
  CHECK_FALSE(follower_nonempty(sft001, dead));
}

TEST_CASE("config equality is sound for follower languages") {
  auto even = builtin_shift("even");
  auto words = all_words(2, 5, 1);
  std::map<std::vector<StateSet>, std::vector<Word>> by_cfg;
  for (auto const& b : words) {
    if (!in_language(even, b)) continue;
    by_cfg[follower_config(even, {b}).parts].push_back(b);
  }
  CHECK(by_cfg.size() >= 2);
  for (auto const& [parts, group] : by_cfg) {
    auto lang_of = [&](Word const& b) {
      std::set<Word> lang;
      for (auto const& w : all_words(2, 8))
        if (in_language(even, concat(b, w))) lang.insert(w);
      return lang;
    };
    auto first = lang_of(group.front());
    for (auto const& b : group) CHECK(lang_of(b) == first);
  }
}

TEST_CASE("surjectivity") {
  CHECK(is_surjective(builtin_shift("even")).value);
  CHECK(is_surjective(builtin_shift("full2")).value);
  auto m3 = builtin_shift("markov3");
  auto v = is_surjective(m3);
  CHECK_FALSE(v.value);
  REQUIRE(v.witness_word.has_value());
  CHECK(*v.witness_word == wd(m3, "1"));
  for (Sym a = 0; a < m3.alphabet().size(); ++a) {
    Word aw{a};
    aw.insert(aw.end(), v.witness_word->begin(), v.witness_word->end());
    CHECK_FALSE(in_language(m3, aw));
  }
}

TEST_CASE("finite type detection") {
  auto ve = is_finite_type(builtin_shift("even"), 8);
  CHECK_FALSE(ve.value);
  CHECK_FALSE(ve.exact);
  CHECK(ve.depth == 8);

  auto v1 = is_finite_type(builtin_shift("sft001"));
  CHECK(v1.value);
  CHECK(v1.memory == 2);
  auto v2 = is_finite_type(builtin_shift("golden"));
  CHECK(v2.value);
  CHECK(v2.memory == 1);

  // A sofic presentation of a true SFT is recognized with its least memory.
  Alphabet bin({"0", "1"});
  Automaton aut(bin, 2);
  aut.add_edge(0, 0, 0);
  aut.add_edge(0, 1, 1);
  aut.add_edge(1, 0, 0);
  auto golden_sofic = Subshift::sofic(bin, std::move(aut));
  auto v3 = is_finite_type(golden_sofic, 4);
  CHECK(v3.value);
  CHECK(v3.memory == 1);
}

TEST_CASE("left extensions") {
  auto full2 = builtin_shift("full2");
  CHECK(lambda_l(full2, pt(full2, ":01"), 2).size() == 4);
  auto m3 = builtin_shift("markov3");
  auto ext = lambda_l(m3, pt(m3, ":2"), 1);
  CHECK(ext == std::vector<Word>{wd(m3, "1"), wd(m3, "2"), wd(m3, "3")});
}

TEST_CASE("oracle shifts validate and answer within depth") {
  auto pow2 = builtin_shift("pow2");
  CHECK(in_language(pow2, wd(pow2, "0110")));
  CHECK_FALSE(in_language(pow2, wd(pow2, "01110")));
  CHECK(in_language(pow2, wd(pow2, "011110")));
  CHECK(contains_point(pow2, pt(pow2, ":1")));
  CHECK_THROWS_AS(in_language(pow2, Word(300, 1)), DepthExceeded);
  CHECK_THROWS(follower_config(pow2, {wd(pow2, "0")}));

  auto ex14 = builtin_shift("ex14");
  CHECK(in_language(ex14, wd(ex14, "0122")));  // prefix of 0.z
  CHECK_FALSE(in_language(ex14, wd(ex14, "0121")));
  CHECK_FALSE(in_language(ex14, wd(ex14, "10")));
}

TEST_CASE("spec files round trip and reject unknown fields") {
  for (auto const& name : builtin_shift_names()) {
    auto loaded = load_spec_file(std::string(SYMDYN_SOURCE_DIR) + "/specs/" + name + ".json");
    auto built = builtin_shift(name);
    CHECK(loaded.kind() == built.kind());
    CHECK(loaded.alphabet() == built.alphabet());
    if (loaded.exact()) {
      CHECK(same_language(loaded.automaton(), built.automaton()));
    } else {
      CHECK(loaded.rule_name() == built.rule_name());
      CHECK(loaded.depth_bound() == built.depth_bound());
    }
    auto echoed = load_spec_json(spec_json(built));
    if (echoed.exact()) CHECK(same_language(echoed.automaton(), built.automaton()));
  }
  json bad = {{"alphabet", {"0", "1"}}, {"kind", "full"}, {"bogus", 1}};
  CHECK_THROWS(load_spec_json(bad));
  json bad2 = {{"alphabet", {"0", "1"}}, {"kind", "sft"}, {"states", {"a"}}};
  CHECK_THROWS(load_spec_json(bad2));
}

TEST_CASE("oracle construction rejects broken rules") {
  register_oracle_rule("bad-factorial", [](Alphabet const&) -> OracleRule {
    return [](Word const& w) { return w.size() != 1; };
  });
  CHECK_THROWS(Subshift::oracle(Alphabet({"0", "1"}), "bad-factorial", 16));
  register_oracle_rule("bad-extend", [](Alphabet const&) -> OracleRule {
    return [](Word const& w) { return w.empty(); };
  });
  CHECK_THROWS(Subshift::oracle(Alphabet({"0", "1"}), "bad-extend", 16));
}
