#ifndef SYMDYN_SHIFTS_HPP
#define SYMDYN_SHIFTS_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/automaton.hpp"
#include "symdyn/verdict.hpp"
#include "symdyn/words.hpp"

namespace symdyn {

enum class Kind { Full, SFT, Sofic, Oracle };

std::string kind_name(Kind k);

// Depth-bounded language predicate for shifts given by a named rule.  The
// predicate decides membership in L_X for words up to the depth bound.
using OracleRule = std::function<bool(Word const&)>;

void register_oracle_rule(std::string const& name,
                          std::function<OracleRule(Alphabet const&)> make);
bool oracle_rule_known(std::string const& name);

// A one-sided subshift over a finite alphabet.  Full, SFT and Sofic kinds are
// backed by a finite presentation (labels of infinite paths = X) on which all
// analyses are exact; Oracle kinds support depth-bounded operations only.
class Subshift {
 public:
  static Subshift full(Alphabet alph);
  static Subshift sft(Alphabet alph, std::vector<Word> forbidden);
  // The presentation is trimmed to its essential core on construction.
  static Subshift sofic(Alphabet alph, Automaton presentation);
  static Subshift oracle(Alphabet alph, std::string rule_name, std::size_t depth_bound);

  Kind kind() const { return kind_; }
  Alphabet const& alphabet() const { return alph_; }
  bool exact() const { return kind_ != Kind::Oracle; }

  Automaton const& automaton() const;  // throws for Oracle kind
  std::vector<Word> const& forbidden() const { return forbidden_; }
  std::string const& rule_name() const { return rule_name_; }
  std::size_t depth_bound() const { return depth_bound_; }

  // Oracle language membership; |w| must not exceed the depth bound.
  bool rule(Word const& w) const;

  std::string label;  // optional builtin name

 private:
  Subshift() = default;
  Kind kind_ = Kind::Full;
  Alphabet alph_;
  std::vector<Word> forbidden_;
  std::shared_ptr<Automaton const> aut_;
  std::string rule_name_;
  OracleRule rule_fn_;
  std::size_t depth_bound_ = 0;
};

struct DepthExceeded : std::runtime_error {
  explicit DepthExceeded(std::string const& what) : std::runtime_error(what) {}
};

// --- language and points ---------------------------------------------------

bool in_language(Subshift const& s, Word const& w);
bool contains_point(Subshift const& s, EvPeriodic const& x);

// --- follower sets ----------------------------------------------------------

// The finite configuration carrying F_B exactly: one alive set per
// constraint word, canonicalized (sorted, deduplicated, inclusion-minimal;
// a single empty set encodes the empty follower set).  An infinite word lies
// in F_B iff running it from every alive set keeps all of them nonempty.
struct FollowerConfig {
  std::vector<StateSet> parts;
  std::vector<Word> source;  // the B it was built from (reporting only)

  bool dead() const { return parts.size() == 1 && parts[0].empty(); }
  bool operator==(FollowerConfig const& o) const { return parts == o.parts; }
  bool operator<(FollowerConfig const& o) const { return parts < o.parts; }

  static std::vector<StateSet> canonicalize(std::vector<StateSet> parts);
};

FollowerConfig follower_config(Subshift const& s, std::vector<Word> const& B);
bool follower_nonempty(Subshift const& s, FollowerConfig const& cfg);
// The unique point of F_B when it is a singleton; absent when |F_B| >= 2;
// throws when F_B is empty.
std::optional<EvPeriodic> follower_unique_point(Subshift const& s, FollowerConfig const& cfg);

// Exploration of the deterministic graph of configurations reachable from a
// start configuration, with greatest-fixpoint pruning: a node survives iff
// some letter leads to a surviving node, so the surviving subgraph carries
// exactly the infinite words of F_B.
class ConfigAnalysis {
 public:
  ConfigAnalysis(Automaton const& aut, std::vector<StateSet> start_parts);

  bool start_alive() const { return alive_[0]; }
  std::size_t n_nodes() const { return nodes_.size(); }

  // Absent when the pruned graph reachable from the start branches.
  std::optional<EvPeriodic> unique_point() const;
  // Lexicographically least surviving word from the start.
  std::optional<EvPeriodic> least_point() const;
  // Least surviving word that does not begin with `avoid`.
  std::optional<EvPeriodic> least_point_outside_cylinder(Word const& avoid) const;
  // True iff the eventually periodic word survives from the start.
  bool accepts(EvPeriodic const& y) const;

  std::vector<std::vector<StateSet>> const& nodes() const { return nodes_; }
  int next(int node, Sym a) const { return next_[static_cast<std::size_t>(node)][a]; }
  bool alive(int node) const { return alive_[static_cast<std::size_t>(node)]; }

 private:
  Automaton const& aut_;
  std::vector<std::vector<StateSet>> nodes_;
  std::map<std::vector<StateSet>, int> ids_;
  std::vector<std::vector<int>> next_;
  std::vector<bool> alive_;
};

// --- structure tests ---------------------------------------------------------

// Whether the shift map is onto.  Decided through left-extendability of
// language words; a false verdict carries a shortest non-extendable word.
Verdict is_surjective(Subshift const& s);

// SFT detection.  SFT inputs answer immediately with their memory; sofic
// inputs search memories 1..m_max by language comparison.
Verdict is_finite_type(Subshift const& s, std::size_t m_max = 8);

// All length-l left extensions of x.
std::vector<Word> lambda_l(Subshift const& s, EvPeriodic const& x, std::size_t l);

// --- configuration closure (quantification over all finite B) ---------------

struct ClosureEntry {
  std::vector<StateSet> parts;  // canonical
  std::vector<Word> rep;        // representative B generating these parts
};

// The closure of single-word follower configurations under intersection of
// follower sets (= union of part families).  Two constraint sets with equal
// canonical configurations have the same follower semantics, so this finite
// family exhausts all F_B up to equivalence.
std::vector<ClosureEntry> config_meet_closure(Subshift const& s, std::size_t cap = 4096);

}  // namespace symdyn

#endif  // SYMDYN_SHIFTS_HPP
