#ifndef SYMDYN_CRITERIA_HPP
#define SYMDYN_CRITERIA_HPP

#include "symdyn/shifts.hpp"
#include "symdyn/verdict.hpp"

namespace symdyn {

// All eventually periodic points of the shift with |preperiod| + |period|
// bounded by max_desc, in canonical order.
std::vector<EvPeriodic> enumerate_points(Subshift const& s, std::size_t max_desc);

// cost(B, x): the least |alpha| + |gamma| with x = alpha.y and beta gamma y
// in X for every beta in B.  Exact on finite presentations (search over the
// finite configuration graph per tail of x); breadth-bounded on oracles.
CostReport cost(Subshift const& s, std::vector<Word> const& B, EvPeriodic const& x,
                std::size_t oracle_cap = 48);

// sup over x in X of cost(B, x).  On finite presentations the finiteness of
// the supremum is decided exactly: it is infinite iff the backward-step graph
// on profiles admits a cycle inside the profiles with no finite bridge (such
// a cycle pumps points of unbounded cost, and conversely unbounded costs pin
// a repeated profile on a realized trajectory).  The finite value is taken
// over eventually periodic points and checked against the structural cap.
CostReport sup_cost(Subshift const& s, std::vector<Word> const& B,
                    std::size_t enum_desc = 8);

// sup over x in X of the least |gamma| with beta gamma x in X for all beta:
// no prefix deletion allowed.  Exact via the cyclic parts of the reachable
// relation monoid.
CostReport thomsen_sup(Subshift const& s, std::vector<Word> const& B);

Verdict is_cofinal(Subshift const& s);
Verdict is_collectively_cofinal(Subshift const& s);
Verdict is_strongly_cofinal(Subshift const& s);
Verdict is_hyper_cofinal(Subshift const& s);

// Whether some follower intersection is a single periodic orbit closure
// {gamma^inf}; quantification over constraint sets runs through the finite
// configuration closure.
Verdict is_topologically_free(Subshift const& s, std::size_t oracle_depth = 0);

Verdict has_non_ev_periodic_point(Subshift const& s);

Verdict is_minimal(Subshift const& s);
Verdict is_simple(Subshift const& s);

// Shortest-first search for (mu, nu) with F_mu subset F_{B nu}.
std::optional<std::pair<Word, Word>> find_crazy_inclusion(Subshift const& s,
                                                          std::vector<Word> const& B,
                                                          std::size_t budget = 6);

}  // namespace symdyn

#endif  // SYMDYN_CRITERIA_HPP
