#ifndef SYMDYN_SPECTRUM_HPP
#define SYMDYN_SPECTRUM_HPP

#include <functional>
#include <set>

#include "symdyn/partial_action.hpp"
#include "symdyn/shifts.hpp"

namespace symdyn {

enum class Provenance { ExactPoint, LimitOf, Translated };

// A radius-R truncation of a spectrum element xi, viewed as a subset of the
// free group: full knowledge of xi within the ball of the radius, nothing
// claimed outside it.
struct SpectrumBall {
  std::size_t radius = 0;
  std::set<GroupElement> members;
  Provenance provenance = Provenance::ExactPoint;
  // The full stem when known: the generating point for ExactPoint balls, the
  // detected limit stem for stabilized limits.
  std::optional<EvPeriodic> stem_exact;
  bool exact = true;     // bounded-confidence flag (oracle / limit data)
  std::size_t depth = 0;
  std::string origin;

  bool contains(GroupElement const& g) const { return members.count(g) > 0; }
};

// The truncation of xi_x: all alpha beta^-1 of length <= R with alpha a
// prefix of x and beta.(tail of x) in the shift.
SpectrumBall xi_ball(Subshift const& s, EvPeriodic const& x, std::size_t radius);

// The positive chain through the ball starting at the unit (resp. at g).
Word stem_of(SpectrumBall const& xi);
Word stem_at(SpectrumBall const& xi, GroupElement const& g);

struct Validation {
  bool ok = true;
  std::string violated;  // first violated clause, empty when ok
};

// Checks the membership constraints every spectrum element satisfies: the
// unit belongs; convexity; unique one-letter extension; factors of members
// lie in the language; members factor as alpha beta^-1; positive members are
// exactly the stem prefixes; and containment in the basin of the stem.
Validation validate_element(Subshift const& s, SpectrumBall const& xi);

// The left translate g.xi at radius R - |g|; requires g^-1 in xi.
SpectrumBall spectral_translate(Subshift const& s, GroupElement const& g, SpectrumBall const& xi);

enum class Membership { Forbidden, NecessaryOnly, CertifiedIn };

// Membership of g = alpha beta^-1 in an element with the given stem:
// Forbidden when the stem at g leaves the follower set of beta (no element
// with this stem contains g); CertifiedIn when the tail lies in the interior
// of the follower set (every element with this stem contains g);
// NecessaryOnly otherwise - resolved to "in" only for exact-point elements.
Membership membership_test(Subshift const& s, EvPeriodic const& stem, GroupElement const& g);

struct BasicOpenSpec {
  Word alpha;
  std::vector<Word> betas;
  std::vector<Word> gammas;
};

struct RadiusError : std::runtime_error {
  explicit RadiusError(std::string const& m) : std::runtime_error(m) {}
};

// xi in V_{alpha; betas; gammas}; throws RadiusError when the ball is too
// small to answer.
bool basic_open_contains(SpectrumBall const& xi, BasicOpenSpec const& v);

struct LimitReport {
  SpectrumBall ball;
  bool stabilized = false;
  std::size_t stabilized_at = 0;  // first index of the agreeing window
  std::size_t window = 0;
  std::size_t k_max = 0;
};

// Runs xi_ball along the point sequence until the member sets agree over a
// confirmation window; the result is labeled bounded-confidence and carries
// the detected eventually periodic stem when the sequence's prefixes fit one.
LimitReport limit_ball(Subshift const& s, std::function<EvPeriodic(std::size_t)> const& family,
                       std::size_t radius, std::size_t k_max, std::size_t window = 3);

// Cayley-graph rendering: members highlighted, stem edges solid, tributary
// edges dashed, non-member ball edges dotted.
std::string ball_dot(Subshift const& s, SpectrumBall const& xi);

}  // namespace symdyn

#endif  // SYMDYN_SPECTRUM_HPP
