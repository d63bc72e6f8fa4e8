#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdyn/circuits.hpp"
#include "test_helpers.hpp"

using namespace symdyn;
using namespace symdyn::testing;

namespace {
EvPeriodic pt(Subshift const& s, std::string const& t) { return parse_point(s.alphabet(), t); }
Word wd(Subshift const& s, std::string const& t) { return parse_word(s.alphabet(), t); }
}  // namespace

TEST_CASE("circuit detection") {
  auto sft001 = builtin_shift("sft001");
  CHECK(is_circuit(sft001, wd(sft001, "0")));
  CHECK_FALSE(is_circuit(sft001, wd(sft001, "001")));
  auto even = builtin_shift("even");
  CHECK(is_circuit(even, wd(even, "1")));
  CHECK_THROWS(is_circuit(even, Word{}));
}

TEST_CASE("exits") {
  auto sft001 = builtin_shift("sft001");
  auto e0 = exit_of(sft001, wd(sft001, "0"));
  REQUIRE(e0.has_value());
  CHECK(*e0 != pt(sft001, ":0"));
  CHECK(contains_point(sft001, e0->with_prefix(wd(sft001, "0"))));

  CHECK_FALSE(exit_of(sft001, wd(sft001, "00")).has_value());

  auto even = builtin_shift("even");
  auto e1 = exit_of(even, wd(even, "1"));
  REQUIRE(e1.has_value());
  CHECK(*e1 == pt(even, ":0"));

  CHECK_THROWS(exit_of(sft001, wd(sft001, "001")));
}

TEST_CASE("strong exits on the even shift") {
  auto even = builtin_shift("even");
  // All-ones circuits exit through zeros.
  for (std::size_t k = 1; k <= 4; ++k) {
    auto se = strong_exit(even, Word(k, 1));
    REQUIRE(se.has_value());
    CHECK(se->period() == Word{0});
  }
  // Every circuit of length <= 6 has a strong exit.
  for (auto const& g : all_words(2, 6, 1)) {
    if (!is_circuit(even, g)) continue;
    auto se = strong_exit(even, g);
    REQUIRE(se.has_value());
    // The witness exits every small power.
    EvPeriodic ginf(Word{}, g);
    CHECK(*se != ginf);
    Word p;
    for (std::size_t n = 1; n <= 5; ++n) {
      p.insert(p.end(), g.begin(), g.end());
      CHECK(contains_point(even, se->with_prefix(p)));
    }
  }
}

TEST_CASE("strong exit absent for the 0 circuit of sft001") {
  auto sft001 = builtin_shift("sft001");
  CHECK_FALSE(strong_exit(sft001, wd(sft001, "0")).has_value());
}

TEST_CASE("power chains stabilize within the subset lattice") {
  for (auto const& name : {"even", "sft001", "golden"}) {
    auto s = builtin_shift(name);
    std::size_t lattice = reachable_endpoint_sets(s.automaton()).size();
    for (auto const& g : all_words(2, 4, 1)) {
      if (!is_circuit(s, g)) continue;
      StateSet cur = s.automaton().endpoints(g);
      std::size_t steps = 0;
      for (;;) {
        StateSet next = s.automaton().step_word(cur, g);
        if (next == cur) break;
        cur = next;
        ++steps;
        REQUIRE(steps <= lattice + 1);
      }
      // The stabilized set carries exactly the followers of every power.
      ConfigAnalysis an(s.automaton(), {cur});
      for (auto const& y : all_points(2, 4)) {
        bool all_powers = true;
        Word p;
        for (std::size_t n = 1; n <= 6 && all_powers; ++n) {
          p.insert(p.end(), g.begin(), g.end());
          all_powers = contains_point(s, y.with_prefix(p));
        }
        // Within the checked horizon: survivors of the stabilized chain
        // satisfy all powers.
        if (an.start_alive() && an.accepts(y)) CHECK(all_powers);
      }
    }
  }
}

TEST_CASE("oracle circuits are depth-verified") {
  auto pow2 = builtin_shift("pow2");
  auto rep = circuit_report(pow2, wd(pow2, "1"));
  CHECK(rep.circuit);
  REQUIRE(rep.exit.has_value());
  CHECK_FALSE(rep.exact);
}
