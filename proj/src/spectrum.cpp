#include "symdyn/spectrum.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace symdyn {

SpectrumBall xi_ball(Subshift const& s, EvPeriodic const& x, std::size_t radius) {
  if (!contains_point(s, x)) throw std::invalid_argument("point is not in the shift");
  SpectrumBall xi;
  xi.radius = radius;
  xi.provenance = Provenance::ExactPoint;
  xi.stem_exact = x;
  xi.exact = s.exact();
  xi.depth = s.exact() ? 0 : s.depth_bound();
  xi.origin = "xi(" + point_str(s.alphabet(), x) + ")";

  for (std::size_t p = 0; p <= radius; ++p) {
    Word alpha = x.prefix(p);
    EvPeriodic y = x.shifted(p);
    // Enumerate tributaries beta with beta.y in X; reduced form requires the
    // last letters of alpha and beta to differ (or one of them empty).
    std::vector<Word> level{Word{}};
    xi.members.insert(GroupElement::from_word(alpha));
    for (std::size_t blen = 1; blen <= radius - p; ++blen) {
      std::vector<Word> next;
      for (auto const& b : level) {
        for (Sym c = 0; c < s.alphabet().size(); ++c) {
          Word beta = b;
          beta.push_back(c);
          next.push_back(beta);
          if (!alpha.empty() && beta.back() == alpha.back()) continue;
          if (contains_point(s, y.with_prefix(beta)))
            xi.members.insert(from_positive_pair(alpha, beta));
        }
      }
      level = std::move(next);
    }
  }
  return xi;
}

Word stem_of(SpectrumBall const& xi) { return stem_at(xi, GroupElement()); }

Word stem_at(SpectrumBall const& xi, GroupElement const& g) {
  if (!xi.contains(g)) throw std::invalid_argument("group element is not a member");
  Word stem;
  GroupElement cur = g;
  for (;;) {
    GroupElement nxt;
    int found = -1;
    for (Sym a = 0; a < 250; ++a) {
      GroupElement cand = cur.times({a, false});
      if (cand.length() > xi.radius) {
        if (a == 0) break;
        continue;
      }
      if (xi.contains(cand)) {
        found = a;
        nxt = cand;
        break;
      }
    }
    if (found < 0) return stem;
    stem.push_back(static_cast<Sym>(found));
    cur = nxt;
  }
}

namespace {

// Geodesic from g to h: the partial products g . (g^-1 h)[1..j].
std::vector<GroupElement> segment(GroupElement const& g, GroupElement const& h) {
  std::vector<GroupElement> seg{g};
  GroupElement w = g.inverse() * h;
  GroupElement cur = g;
  for (auto c : w.letters()) {
    cur = cur.times(c);
    seg.push_back(cur);
  }
  return seg;
}

}  // namespace

Validation validate_element(Subshift const& s, SpectrumBall const& xi) {
  auto fail = [](std::string const& clause) { return Validation{false, clause}; };

  if (!xi.contains(GroupElement())) return fail("unit-missing");

  for (auto const& g : xi.members) {
    if (!positive_pair(g)) return fail("member-not-positive-pair");
    if (g.length() > xi.radius) return fail("member-outside-radius");
  }

  // Convexity within the ball.
  for (auto const& g : xi.members) {
    for (auto const& h : xi.members) {
      for (auto const& k : segment(g, h)) {
        if (k.length() <= xi.radius && !xi.contains(k))
          return fail("not-convex");
      }
    }
  }

  // Unique one-letter extension for interior members.
  for (auto const& g : xi.members) {
    if (g.length() >= xi.radius) continue;
    std::size_t count = 0;
    for (Sym a = 0; a < s.alphabet().size(); ++a)
      if (xi.contains(g.times({a, false}))) ++count;
    if (count != 1) return fail("extension-not-unique");
  }

  // Positive factors between members belong to the language.
  for (auto const& g : xi.members) {
    for (auto const& h : xi.members) {
      GroupElement w = g.inverse() * h;
      auto pp = positive_pair(w);
      if (!pp || !pp->beta.empty()) continue;
      if (!in_language(s, pp->alpha)) return fail("factor-outside-language");
    }
  }

  // Positive members are exactly the stem prefixes.
  Word stem = stem_of(xi);
  for (auto const& g : xi.members) {
    auto pp = positive_pair(g);
    if (pp && pp->beta.empty()) {
      if (!is_prefix(pp->alpha, stem)) return fail("positive-member-off-stem");
    }
  }

  // Basin containment: every member must belong to the exact-point ball of
  // the stem.
  if (xi.stem_exact) {
    SpectrumBall basin = xi_ball(s, *xi.stem_exact, xi.radius);
    for (auto const& g : xi.members)
      if (!basin.contains(g)) return fail("exceeds-stem-basin");
  }
  return Validation{};
}

SpectrumBall spectral_translate(Subshift const& s, GroupElement const& g,
                                SpectrumBall const& xi) {
  if (g.length() > xi.radius)
    throw RadiusError("translation length exceeds the ball radius");
  if (!xi.contains(g.inverse()))
    throw std::invalid_argument("g^-1 is not a member: the ball is outside the domain");
  SpectrumBall out;
  out.radius = xi.radius - g.length();
  out.provenance = Provenance::Translated;
  out.exact = xi.exact;
  out.depth = xi.depth;
  out.origin = "translate(" + group_str(s.alphabet(), g) + ", " + xi.origin + ")";
  for (auto const& h : xi.members) {
    GroupElement gh = g * h;
    if (gh.length() <= out.radius) out.members.insert(gh);
  }
  if (xi.stem_exact) {
    auto moved = try_act(s, g, *xi.stem_exact);
    if (moved) out.stem_exact = *moved;
  }
  return out;
}

namespace {

// Decides F_w subset F_{prefix w} by searching the product of the two alive
// runs for a word surviving on the left and dead on the right.
bool follower_included(Automaton const& aut, StateSet const& left, StateSet const& right) {
  ConfigAnalysis keep(aut, {left});
  if (!keep.start_alive()) return true;  // empty F_w
  struct Key {
    int node;
    StateSet right;
    bool operator<(Key const& o) const {
      return std::tie(node, right) < std::tie(o.node, o.right);
    }
  };
  std::set<Key> seen;
  std::deque<Key> queue;
  Key start{0, right};
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    if (k.right.empty()) return false;  // left side still alive, right side dead
    for (Sym a = 0; a < aut.alphabet().size(); ++a) {
      int t = keep.next(k.node, a);
      if (t < 0 || !keep.alive(t)) continue;
      Key nk{t, aut.step(k.right, a)};
      if (seen.insert(nk).second) queue.push_back(nk);
    }
  }
  return true;
}

}  // namespace

Membership membership_test(Subshift const& s, EvPeriodic const& stem, GroupElement const& g) {
  auto pp = positive_pair(g);
  if (!pp) return Membership::Forbidden;
  if (pp->alpha != stem.prefix(pp->alpha.size())) return Membership::Forbidden;
  EvPeriodic y = stem.shifted(pp->alpha.size());
  Word const& beta = pp->beta;
  if (!contains_point(s, y.with_prefix(beta))) return Membership::Forbidden;
  if (!s.exact()) return Membership::NecessaryOnly;

  // Interior criterion: some cylinder around the tail sits inside F_beta,
  // i.e. F_{y[1..n]} subset F_{beta y[1..n]} for some n.  Along an eventually
  // periodic tail the pair of endpoint sets cycles, so finitely many n decide.
  Automaton const& aut = s.automaton();
  StateSet w_ends = aut.all_states();
  StateSet bw_ends = aut.endpoints(beta);
  std::set<std::tuple<std::size_t, StateSet, StateSet>> seen;
  std::size_t i = 0;
  for (;;) {
    if (follower_included(aut, w_ends, bw_ends)) return Membership::CertifiedIn;
    std::size_t phase = i < y.preperiod().size()
                            ? i
                            : y.preperiod().size() +
                                  (i - y.preperiod().size()) % y.period().size();
    if (!seen.insert({phase, w_ends, bw_ends}).second) break;
    w_ends = aut.step(w_ends, y.at(i));
    bw_ends = aut.step(bw_ends, y.at(i));
    ++i;
  }
  return Membership::NecessaryOnly;
}

bool basic_open_contains(SpectrumBall const& xi, BasicOpenSpec const& v) {
  auto need = [&](Word const& beta) {
    GroupElement g = from_positive_pair(v.alpha, beta);
    if (g.length() > xi.radius)
      throw RadiusError("ball radius too small for the neighborhood spec");
    return g;
  };
  GroupElement a = GroupElement::from_word(v.alpha);
  if (a.length() > xi.radius) throw RadiusError("ball radius too small for the neighborhood spec");
  if (!xi.contains(a)) return false;
  for (auto const& b : v.betas)
    if (!xi.contains(need(b))) return false;
  for (auto const& c : v.gammas)
    if (xi.contains(need(c))) return false;
  return true;
}

namespace {

// Fits an eventually periodic word to an observed prefix: the least
// (preperiod, period) sizes whose pattern matches the whole window.
std::optional<EvPeriodic> fit_ev_periodic(Word const& w) {
  for (std::size_t total = 1; 3 * total <= w.size() + 2; ++total) {
    for (std::size_t per = 1; per <= total; ++per) {
      std::size_t pre = total - per;
      bool ok = true;
      for (std::size_t i = pre; i + per < w.size() && ok; ++i)
        ok = w[i] == w[i + per];
      if (ok) {
        Word p(w.begin(), w.begin() + static_cast<long>(pre));
        Word q(w.begin() + static_cast<long>(pre),
               w.begin() + static_cast<long>(pre + per));
        return EvPeriodic(std::move(p), std::move(q));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

LimitReport limit_ball(Subshift const& s, std::function<EvPeriodic(std::size_t)> const& family,
                       std::size_t radius, std::size_t k_max, std::size_t window) {
  LimitReport rep;
  rep.window = window;
  rep.k_max = k_max;
  std::vector<SpectrumBall> balls;
  std::vector<EvPeriodic> pts;
  for (std::size_t k = 1; k <= k_max; ++k) {
    EvPeriodic xk = family(k);
    pts.push_back(xk);
    balls.push_back(xi_ball(s, xk, radius));
    if (balls.size() >= window) {
      bool stable = true;
      for (std::size_t j = balls.size() - window + 1; j < balls.size() && stable; ++j)
        stable = balls[j].members == balls[balls.size() - window].members;
      if (stable) {
        rep.stabilized = true;
        rep.stabilized_at = balls.size() - window + 1;
        break;
      }
    }
  }
  SpectrumBall out;
  out.radius = radius;
  out.provenance = Provenance::LimitOf;
  out.exact = false;  // limit data is bounded-confidence by nature
  out.depth = pts.size();
  out.origin = "limit(k=" + std::to_string(pts.size()) + ")";
  out.members = balls.back().members;

  // Detect the limit stem: the longest prefix on which the window agrees,
  // fitted to an eventually periodic pattern.
  if (rep.stabilized && pts.size() >= window) {
    std::size_t probe = radius + 24;
    Word common = pts.back().prefix(probe);
    std::size_t agree = probe;
    for (std::size_t j = pts.size() - window; j < pts.size(); ++j) {
      Word w = pts[j].prefix(probe);
      std::size_t i = 0;
      while (i < agree && w[i] == common[i]) ++i;
      agree = i;
    }
    common.resize(agree);
    if (agree >= radius)
      if (auto fitted = fit_ev_periodic(common)) out.stem_exact = fitted;
  }
  rep.ball = std::move(out);
  return rep;
}

std::string ball_dot(Subshift const& s, SpectrumBall const& xi) {
  Alphabet const& alph = s.alphabet();
  std::ostringstream os;
  os << "digraph spectrum_ball {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  auto ball = group_ball(alph, xi.radius);
  auto nid = [&](GroupElement const& g) { return '"' + group_str(alph, g) + '"'; };

  // Stem chain: the positive members.
  Word stem = xi.members.empty() ? Word{} : stem_of(xi);
  std::set<GroupElement> stem_nodes;
  GroupElement cur;
  stem_nodes.insert(cur);
  for (Sym a : stem) {
    cur = cur.times({a, false});
    stem_nodes.insert(cur);
  }

  for (auto const& g : ball) {
    os << "  " << nid(g);
    if (xi.contains(g))
      os << " [style=filled, fillcolor=" << (stem_nodes.count(g) ? "lightblue" : "gray90") << "]";
    os << ";\n";
  }
  for (auto const& g : ball) {
    for (Sym a = 0; a < alph.size(); ++a) {
      GroupElement h = g.times({a, false});
      if (h.length() > xi.radius) continue;
      bool both = xi.contains(g) && xi.contains(h);
      bool on_stem = stem_nodes.count(g) && stem_nodes.count(h) &&
                     h.length() == g.length() + 1;
      os << "  " << nid(g) << " -> " << nid(h) << " [label=\"" << alph.name(a) << "\", style="
         << (both ? (on_stem ? "solid" : "dashed") : "dotted");
      if (!both) os << ", color=gray";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace symdyn
