#include "symdyn/circuits.hpp"

namespace symdyn {

bool is_circuit(Subshift const& s, Word const& gamma) {
  if (gamma.empty()) throw std::invalid_argument("circuits are nonempty words");
  return contains_point(s, EvPeriodic(Word{}, gamma));
}

namespace {

// Oracle fallback: scan eventually periodic candidates with small
// descriptions, testing gamma^n y in X up to the depth bound.
std::optional<EvPeriodic> oracle_exit_scan(Subshift const& s, Word const& gamma,
                                           std::size_t powers) {
  EvPeriodic ginf(Word{}, gamma);
  std::size_t const n = s.alphabet().size();
  std::vector<Word> pres{Word{}}, pers;
  for (std::size_t len = 1; len <= 4; ++len) {
    Word w(len, 0);
    for (;;) {
      pers.push_back(w);
      pres.push_back(w);
      std::size_t i = w.size();
      while (i > 0 && std::size_t(w[i - 1]) + 1 == n) w[--i] = 0;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
  std::optional<EvPeriodic> best;
  for (auto const& pre : pres) {
    for (auto const& per : pers) {
      EvPeriodic y(pre, per);
      if (y == ginf) continue;
      bool ok = true;
      Word power;
      for (std::size_t k = 1; k <= powers && ok; ++k) {
        power.insert(power.end(), gamma.begin(), gamma.end());
        if (power.size() + 4 > s.depth_bound()) break;
        ok = contains_point(s, y.with_prefix(power));
      }
      if (ok && (!best || y < *best)) best = y;
    }
  }
  return best;
}

}  // namespace

std::optional<EvPeriodic> exit_of(Subshift const& s, Word const& gamma) {
  if (!is_circuit(s, gamma)) throw std::invalid_argument("not a circuit");
  if (s.kind() == Kind::Oracle) return oracle_exit_scan(s, gamma, 1);
  ConfigAnalysis an(s.automaton(), {s.automaton().endpoints(gamma)});
  return an.least_point_outside_cylinder(gamma);
}

std::optional<EvPeriodic> strong_exit(Subshift const& s, Word const& gamma) {
  if (!is_circuit(s, gamma)) throw std::invalid_argument("not a circuit");
  if (s.kind() == Kind::Oracle)
    return oracle_exit_scan(s, gamma, std::max<std::size_t>(1, s.depth_bound() / (2 * gamma.size())));
  // The alive sets of {gamma^n} decrease with n and stabilize; survivors of
  // the stabilized set are the common exits of all powers.
  Automaton const& aut = s.automaton();
  StateSet cur = aut.endpoints(gamma);
  for (;;) {
    StateSet next = aut.step_word(cur, gamma);
    if (next == cur) break;
    cur = next;
  }
  ConfigAnalysis an(aut, {cur});
  if (!an.start_alive()) return std::nullopt;
  return an.least_point_outside_cylinder(gamma);
}

CircuitReport circuit_report(Subshift const& s, Word const& gamma) {
  CircuitReport r;
  r.gamma = gamma;
  r.circuit = is_circuit(s, gamma);
  r.exact = s.exact();
  r.depth = s.exact() ? 0 : s.depth_bound();
  if (r.circuit) {
    r.exit = exit_of(s, gamma);
    r.strong = strong_exit(s, gamma);
  }
  return r;
}

}  // namespace symdyn
