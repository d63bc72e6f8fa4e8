#ifndef SYMDYN_TEST_HELPERS_HPP
#define SYMDYN_TEST_HELPERS_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "symdyn/builtins.hpp"
#include "symdyn/shifts.hpp"

// Independent oracles for the built-in shifts: direct statements of the
// rules, written against the word alone.  These deliberately avoid the
// library's automaton machinery so the two routes check each other.

namespace symdyn::testing {

// Delimited blocks of 1s in the even shift have even length.
inline bool even_word_ok(Word const& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 0) {
      std::size_t j = i + 1, run = 0;
      while (j < w.size() && w[j] == 1) ++run, ++j;
      if (j < w.size() && run % 2 == 1) return false;
      i = j;
    } else {
      ++i;
    }
  }
  return true;
}

inline bool golden_word_ok(Word const& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 1 && w[i + 1] == 1) return false;
  return true;
}

inline bool sft001_word_ok(Word const& w) {
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (w[i] == 0 && w[i + 1] == 0 && w[i + 2] == 1) return false;
  return true;
}

// markov3 alphabet {1,2,3} as indices {0,1,2}; nothing may precede letter 1.
inline bool markov3_word_ok(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == 0) return false;
  return true;
}

// Exact membership of an eventually periodic point by scanning a window
// that exhibits every factor of length <= probe.
inline bool point_ok_by_scan(std::function<bool(Word const&)> const& word_ok, EvPeriodic const& x,
                             std::size_t probe = 24) {
  return word_ok(x.prefix(x.preperiod().size() + 2 * x.period().size() + probe));
}

inline std::vector<Word> all_words(std::size_t alphabet, std::size_t max_len,
                                   std::size_t min_len = 0) {
  std::vector<Word> out;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    Word w(len, 0);
    for (;;) {
      out.push_back(w);
      std::size_t i = w.size();
      while (i > 0 && std::size_t(w[i - 1]) + 1 == alphabet) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  return out;
}

// All canonical eventually periodic words with small descriptions (not
// filtered by any shift).
inline std::vector<EvPeriodic> all_points(std::size_t alphabet, std::size_t max_desc) {
  std::set<EvPeriodic> out;
  for (auto const& pre : all_words(alphabet, max_desc))
    for (auto const& per : all_words(alphabet, max_desc, 1)) {
      if (pre.size() + per.size() > max_desc) continue;
      out.insert(EvPeriodic(pre, per));
    }
  return {out.begin(), out.end()};
}

}  // namespace symdyn::testing

#endif
