#ifndef SYMDYN_VERDICT_HPP
#define SYMDYN_VERDICT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/words.hpp"

namespace symdyn {

// Outcome of a decision procedure.  `exact` is false for depth-bounded
// verdicts (oracle shifts, limit constructions); such verdicts carry the
// depth they were checked at.  A false verdict carries a witness that
// replays through the underlying modules.
struct Verdict {
  bool value = false;
  bool exact = true;
  std::size_t depth = 0;

  std::optional<std::vector<Word>> witness_words;  // the constraint set B
  std::optional<Word> witness_word;                // e.g. a circuit, or a word
  std::optional<Word> witness_word2;               // secondary word (pump cycle etc.)
  std::optional<EvPeriodic> witness_point;
  std::optional<std::size_t> memory;               // finite-type memory when known
  std::string note;

  static Verdict yes() { return Verdict{true, true, 0, {}, {}, {}, {}, {}, ""}; }
  static Verdict no() { return Verdict{false, true, 0, {}, {}, {}, {}, {}, ""}; }
  Verdict bounded(std::size_t d) const {
    Verdict v = *this;
    v.exact = false;
    v.depth = d;
    return v;
  }
};

// Result of a cost computation.  x absent means the supremum over all of X.
struct CostReport {
  std::vector<Word> constraint;          // B
  std::optional<EvPeriodic> point;       // absent: sup over X
  bool infinite = false;
  std::uint64_t cost = 0;
  Word alpha;                            // deleted prefix (witness, finite case)
  Word gamma;                            // bridge word (witness, finite case)
  std::optional<EvPeriodic> attained_at; // sup case: a maximizing point
  bool exact = true;
  std::size_t depth = 0;
  // Growth evidence for an infinite supremum: (point, cost) samples.
  std::vector<std::pair<EvPeriodic, std::uint64_t>> growth;
  std::string note;
};

}  // namespace symdyn

#endif  // SYMDYN_VERDICT_HPP
