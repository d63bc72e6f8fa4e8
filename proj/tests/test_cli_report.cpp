#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdyn/report.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::testing;

TEST_CASE("reports are deterministic") {
  auto even = builtin_shift("even");
  auto v1 = is_topologically_free(even);
  auto v2 = is_topologically_free(even);
  json a = report_document(even, "criteria", verdict_json(even, "topologically-free", v1));
  json b = report_document(even, "criteria", verdict_json(even, "topologically-free", v2));
  CHECK(a.dump() == b.dump());
  CHECK(a["tool"] == "symdyn");
  CHECK(a["result"]["value"] == false);
}

TEST_CASE("reports round trip through json text") {
  auto m3 = builtin_shift("markov3");
  json doc = report_document(m3, "cost", cost_json(m3, thomsen_sup(m3, {{1}})));
  json parsed = json::parse(doc.dump());
  CHECK(parsed == doc);
  // The shift echo reloads to the same shift.
  auto echoed = load_spec_json(parsed["shift"]);
  CHECK(same_language(echoed.automaton(), m3.automaton()));
}

TEST_CASE("false verdicts ship replayable scripts") {
  auto even = builtin_shift("even");
  json tf = verdict_json(even, "topologically-free", is_topologically_free(even));
  REQUIRE(tf.contains("replay"));
  bool ran = false;
  for (auto const& step : tf["replay"]) {
    if (step["op"] == "follower_unique_point") {
      std::vector<Word> B;
      for (auto const& b : step["B"]) B.push_back(parse_word(even.alphabet(), b));
      auto u = follower_unique_point(even, follower_config(even, B));
      REQUIRE(u.has_value());
      CHECK(point_str(even.alphabet(), *u) == step["expect_point"].get<std::string>());
      ran = true;
    }
  }
  CHECK(ran);

  json cc = verdict_json(even, "collectively-cofinal", is_collectively_cofinal(even));
  REQUIRE(cc.contains("replay"));
  for (auto const& step : cc["replay"]) {
    if (step["op"] == "cost") {
      std::vector<Word> B;
      for (auto const& b : step["B"]) B.push_back(parse_word(even.alphabet(), b));
      auto x = parse_point(even.alphabet(), step["x"].get<std::string>());
      auto r = cost(even, B, x);
      CHECK(r.infinite);
    }
  }

  auto m3 = builtin_shift("markov3");
  json sj = verdict_json(m3, "surjective", is_surjective(m3));
  REQUIRE(sj.contains("replay"));
  CHECK(sj["replay"][0]["op"] == "left_extendable");
}

TEST_CASE("bounded verdicts carry their depth") {
  auto pow2 = builtin_shift("pow2");
  json j = verdict_json(pow2, "strongly-cofinal", is_strongly_cofinal(pow2));
  CHECK(j["confidence"] == "bounded");
  CHECK(j["depth"].get<std::size_t>() > 0);
}

TEST_CASE("reproduce registry covers the examples and passes") {
  auto ids = reproduce_ids();
  CHECK(ids.size() == 9);
  CHECK_THROWS(reproduce("no-such-id"));
}

TEST_CASE("cost reports serialize growth tables") {
  auto pow2 = builtin_shift("pow2");
  auto sup = sup_cost(pow2, {{0}});
  json j = cost_json(pow2, sup);
  CHECK(j["cost"] == "infinite");
  REQUIRE(j.contains("growth"));
  CHECK(j["growth"].size() >= 4);
}
