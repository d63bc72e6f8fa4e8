#ifndef SYMDYN_AUTOMATON_HPP
#define SYMDYN_AUTOMATON_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symdyn/words.hpp"

// Labeled transition graphs presenting one-sided subshifts.  Throughout, the
// shift presented by an automaton is
//
//     X = { labels of infinite paths starting at any state },
//
// and its language is the set of labels of finite paths.  All follower-set,
// profile and cost machinery below is exact for any automaton with this
// semantics whose every state has an outgoing edge (see prune_dead).

namespace symdyn {

using State = std::uint32_t;

// A sorted set of states; small everywhere we use it.
using StateSet = std::vector<State>;

StateSet set_union_of(StateSet const& a, StateSet const& b);
bool set_contains(StateSet const& s, State q);
bool set_subset(StateSet const& a, StateSet const& b);
bool sets_intersect(StateSet const& a, StateSet const& b);

class Automaton {
 public:
  Automaton(Alphabet alph, std::size_t n_states);

  Alphabet const& alphabet() const { return alph_; }
  std::size_t n_states() const { return n_; }
  std::vector<std::string>& names() { return names_; }
  std::vector<std::string> const& names() const { return names_; }

  void add_edge(State src, Sym label, State dst);
  bool deterministic() const;

  std::vector<State> const& succ(State q, Sym a) const { return succ_[q][a]; }
  std::vector<State> const& pred(State q, Sym a) const { return pred_[q][a]; }
  std::size_t out_degree(State q) const;
  std::size_t in_degree(State q) const;

  StateSet all_states() const;

  // One step of the subset run: endpoints of a-labeled edges from S.
  StateSet step(StateSet const& s, Sym a) const;
  StateSet step_word(StateSet const& s, Word const& w) const;
  // Backward step: states with an a-labeled edge into S.
  StateSet pre(StateSet const& s, Sym a) const;
  StateSet pre_word(StateSet const& s, Word const& w) const;

  // Endpoints of w-labeled paths starting anywhere; empty iff w is not the
  // label of any path.
  StateSet endpoints(Word const& w) const { return step_word(all_states(), w); }

  // States that can read w (= pre_word over all states).
  StateSet readers(Word const& w) const { return pre_word(all_states(), w); }

  // Largest S with S = pre_word(S, q): the states from which q^inf runs
  // forever.  Computed as the stabilization of the decreasing pre-powers.
  StateSet periodic_runners(Word const& q) const;

  // States from which the eventually periodic word runs forever.
  StateSet profile(EvPeriodic const& y) const;

  // True iff y runs forever from some state of S.
  bool survives(StateSet const& s, EvPeriodic const& y) const;

  // Removes states with no outgoing edge, iteratively (they cannot start an
  // infinite path).  Keeps the presented shift intact.  Returns the kept-state
  // mapping; throws if nothing remains.
  Automaton prune_dead() const;

  // Removes, in addition, states with no incoming edge (iteratively): the
  // essential core used for user-supplied sofic presentations.
  Automaton trim_essential() const;

  bool has_any_state() const { return n_ > 0; }

 private:
  Alphabet alph_;
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<State>>> succ_;  // [state][letter]
  std::vector<std::vector<std::vector<State>>> pred_;

  Automaton restrict_to(std::vector<bool> const& keep) const;
};

// Builds the prefix automaton of the SFT over `alph` forbidding `forbidden`:
// states are the allowed words of length < m plus the allowed words of length
// m (m = longest forbidden word minus one), so the presented shift is exactly
// the set of infinite words avoiding every forbidden factor, including points
// that cannot be extended to the left.  The result is dead-pruned.
Automaton sft_prefix_automaton(Alphabet const& alph, std::vector<Word> const& forbidden);

// Single-state presentation of the full shift.
Automaton full_shift_automaton(Alphabet const& alph);

// The family of profile sets pre_w(Q) over all finite words w, i.e. the
// closure of the full state set under pre-steps.  Every set of the form
// "states that can run y forever" belongs to this family.
std::vector<StateSet> profile_lattice(Automaton const& aut);

// Reachable subset states step*(Q, w), including the root Q but not the empty
// set.  These canonicalize single-word follower sets: endpoints(b) for b in
// the language are exactly these sets.
std::vector<StateSet> reachable_endpoint_sets(Automaton const& aut);

// Language equality of two presentations over the same alphabet (labels of
// finite paths; both automatons must be dead-pruned).  Since a subshift is
// determined by its language, this decides equality of the presented shifts.
bool same_language(Automaton const& a, Automaton const& b);

// Shortest word whose endpoint set equals `target`, if any (BFS over subset
// states; deterministic shortest-then-lex order).
std::optional<Word> shortest_word_with_endpoints(Automaton const& aut, StateSet const& target);

// The subset-construction presentation: states are the reachable endpoint
// sets, transitions the subset steps.  Deterministic and presents the same
// shift.
Automaton determinized(Automaton const& aut);

}  // namespace symdyn

#endif  // SYMDYN_AUTOMATON_HPP
