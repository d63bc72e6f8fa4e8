#ifndef SYMDYN_PARTIAL_ACTION_HPP
#define SYMDYN_PARTIAL_ACTION_HPP

#include <cstdint>
#include <optional>

#include "symdyn/shifts.hpp"

namespace symdyn {

// The standard partial action of F(alphabet) on X: for g = alpha beta^-1 in
// reduced form, theta_g maps beta.y to alpha.y whenever y lies in the
// follower sets of both alpha and beta.

// x in X_g, i.e. x = alpha.y with y in F_alpha cap F_beta.
bool domain_contains(Subshift const& s, GroupElement const& g, EvPeriodic const& x);

// theta_g(x) for x in X_{g^-1}; throws std::domain_error outside the domain.
EvPeriodic act(Subshift const& s, GroupElement const& g, EvPeriodic const& x);

// Partial application: absent outside the domain.
std::optional<EvPeriodic> try_act(Subshift const& s, GroupElement const& g, EvPeriodic const& x);

// The unique fixed point of theta_g for g != 1: exists iff g = nu a^{+-1}
// nu^-1 in reduced form with nu.a^inf in X, and then equals nu.a^inf.
std::optional<EvPeriodic> fixed_point(Subshift const& s, GroupElement const& g);

struct AxiomCheck {
  bool ok = true;
  std::uint64_t checks = 0;
  std::string counterexample;  // empty when ok
};

// Pointwise verification of the partial-representation identities on sampled
// group elements (the ball of the given radius) and sampled points:
//   PR1   the unit acts as the identity,
//   PR2   u_g u_h u_{h^-1} = u_{gh} u_{h^-1}  (including definedness),
//   PR3   theta_{g^-1} inverts theta_g on its range,
//   SS    theta_{gh} = theta_g . theta_h whenever |gh| = |g| + |h|.
AxiomCheck check_partial_rep_axioms(Subshift const& s, std::size_t radius,
                                    std::size_t n_points, std::uint64_t seed);

// Deterministic sample of points of the shift with small descriptions.
std::vector<EvPeriodic> sample_points(Subshift const& s, std::size_t n, std::uint64_t seed,
                                      std::size_t max_desc = 4);

}  // namespace symdyn

#endif  // SYMDYN_PARTIAL_ACTION_HPP
