#include "symdyn/partial_action.hpp"

#include <random>
#include <sstream>

namespace symdyn {

bool domain_contains(Subshift const& s, GroupElement const& g, EvPeriodic const& x) {
  auto pp = positive_pair(g);
  if (!pp) return false;
  if (!is_prefix(pp->alpha, x.prefix(pp->alpha.size()))) return false;
  EvPeriodic y = x.shifted(pp->alpha.size());
  // y lies in F_alpha automatically since x = alpha.y is a point.
  return contains_point(s, y.with_prefix(pp->beta));
}

EvPeriodic act(Subshift const& s, GroupElement const& g, EvPeriodic const& x) {
  if (!domain_contains(s, g.inverse(), x))
    throw std::domain_error("point outside the domain of the partial map");
  auto pp = positive_pair(g);
  EvPeriodic y = x.shifted(pp->beta.size());
  return y.with_prefix(pp->alpha);
}

std::optional<EvPeriodic> try_act(Subshift const& s, GroupElement const& g,
                                  EvPeriodic const& x) {
  if (!domain_contains(s, g.inverse(), x)) return std::nullopt;
  auto pp = positive_pair(g);
  return x.shifted(pp->beta.size()).with_prefix(pp->alpha);
}

std::optional<EvPeriodic> fixed_point(Subshift const& s, GroupElement const& g) {
  if (g.is_unit()) throw std::invalid_argument("every point is fixed by the unit");
  auto pp = positive_pair(g);
  if (!pp) return std::nullopt;
  // g = nu a nu^-1 needs one of alpha, beta to be a proper prefix of the
  // other; nu is the shorter one and a the leftover.
  Word const &a = pp->alpha, &b = pp->beta;
  Word nu, circ;
  if (a.size() > b.size() && is_prefix(b, a)) {
    nu = b;
    circ = Word(a.begin() + static_cast<long>(b.size()), a.end());
  } else if (b.size() > a.size() && is_prefix(a, b)) {
    nu = a;
    circ = Word(b.begin() + static_cast<long>(a.size()), b.end());
  } else {
    return std::nullopt;
  }
  EvPeriodic cand = EvPeriodic(Word{}, circ).with_prefix(nu);
  if (!contains_point(s, cand)) return std::nullopt;
  return cand;
}

std::vector<EvPeriodic> sample_points(Subshift const& s, std::size_t n, std::uint64_t seed,
                                      std::size_t max_desc) {
  std::mt19937_64 rng(seed);
  std::vector<EvPeriodic> out;
  std::set<EvPeriodic> seen;
  std::size_t const k = s.alphabet().size();
  std::size_t attempts = 0;
  while (out.size() < n && attempts < 200 * n + 1000) {
    ++attempts;
    std::size_t pre_len = rng() % (max_desc);
    std::size_t per_len = 1 + rng() % max_desc;
    Word pre, per;
    for (std::size_t i = 0; i < pre_len; ++i) pre.push_back(static_cast<Sym>(rng() % k));
    for (std::size_t i = 0; i < per_len; ++i) per.push_back(static_cast<Sym>(rng() % k));
    EvPeriodic x(std::move(pre), std::move(per));
    if (!seen.insert(x).second) continue;
    if (contains_point(s, x)) out.push_back(std::move(x));
  }
  if (out.empty()) throw std::runtime_error("could not sample any point of the shift");
  return out;
}

namespace {

bool same_opt(std::optional<EvPeriodic> const& a, std::optional<EvPeriodic> const& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || *a == *b;
}

std::string describe(Alphabet const& alph, GroupElement const& g, GroupElement const& h,
                     EvPeriodic const& x, char const* axiom) {
  std::ostringstream os;
  os << axiom << " fails at g=" << group_str(alph, g) << " h=" << group_str(alph, h)
     << " x=" << point_str(alph, x);
  return os.str();
}

}  // namespace

AxiomCheck check_partial_rep_axioms(Subshift const& s, std::size_t radius,
                                    std::size_t n_points, std::uint64_t seed) {
  AxiomCheck res;
  auto points = sample_points(s, n_points, seed);
  auto ball = group_ball(s.alphabet(), radius);
  GroupElement const unit;

  for (auto const& x : points) {
    ++res.checks;
    auto u = try_act(s, unit, x);
    if (!u || *u != x) {
      res.ok = false;
      res.counterexample = describe(s.alphabet(), unit, unit, x, "PR1");
      return res;
    }
  }

  for (auto const& g : ball) {
    for (auto const& h : ball) {
      GroupElement gh = g * h;
      bool saturated = gh.length() == g.length() + h.length();
      for (auto const& x : points) {
        ++res.checks;
        // PR2: u_g u_h u_{h^-1} versus u_{gh} u_{h^-1}, as partial maps.
        auto lhs = try_act(s, h.inverse(), x);
        if (lhs) lhs = try_act(s, h, *lhs);
        if (lhs) lhs = try_act(s, g, *lhs);
        auto rhs = try_act(s, h.inverse(), x);
        if (rhs) rhs = try_act(s, gh, *rhs);
        if (!same_opt(lhs, rhs)) {
          res.ok = false;
          res.counterexample = describe(s.alphabet(), g, h, x, "PR2");
          return res;
        }
        // Semi-saturation: theta_{gh} = theta_g theta_h on length-additive pairs.
        if (saturated) {
          auto one = try_act(s, h, x);
          if (one) one = try_act(s, g, *one);
          auto two = try_act(s, gh, x);
          if (!same_opt(one, two)) {
            res.ok = false;
            res.counterexample = describe(s.alphabet(), g, h, x, "semi-saturation");
            return res;
          }
        }
      }
    }
    // PR3: theta_{g^-1} inverts theta_g.
    for (auto const& x : points) {
      ++res.checks;
      auto y = try_act(s, g, x);
      if (y) {
        auto back = try_act(s, g.inverse(), *y);
        if (!back || *back != x) {
          res.ok = false;
          res.counterexample = describe(s.alphabet(), g, g, x, "PR3");
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace symdyn
