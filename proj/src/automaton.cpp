#include "symdyn/automaton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace symdyn {

StateSet set_union_of(StateSet const& a, StateSet const& b) {
  StateSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

bool set_contains(StateSet const& s, State q) {
  return std::binary_search(s.begin(), s.end(), q);
}

bool set_subset(StateSet const& a, StateSet const& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool sets_intersect(StateSet const& a, StateSet const& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j)
      ++i;
    else
      ++j;
  }
  return false;
}

Automaton::Automaton(Alphabet alph, std::size_t n_states)
    : alph_(std::move(alph)), n_(n_states) {
  names_.resize(n_);
  for (std::size_t q = 0; q < n_; ++q) names_[q] = "s" + std::to_string(q);
  succ_.assign(n_, std::vector<std::vector<State>>(alph_.size()));
  pred_.assign(n_, std::vector<std::vector<State>>(alph_.size()));
}

void Automaton::add_edge(State src, Sym label, State dst) {
  if (src >= n_ || dst >= n_ || label >= alph_.size())
    throw std::invalid_argument("edge out of range");
  auto& v = succ_[src][label];
  if (std::find(v.begin(), v.end(), dst) != v.end()) return;
  v.push_back(dst);
  std::sort(v.begin(), v.end());
  auto& p = pred_[dst][label];
  p.push_back(src);
  std::sort(p.begin(), p.end());
}

bool Automaton::deterministic() const {
  for (std::size_t q = 0; q < n_; ++q)
    for (std::size_t a = 0; a < alph_.size(); ++a)
      if (succ_[q][a].size() > 1) return false;
  return true;
}

std::size_t Automaton::out_degree(State q) const {
  std::size_t d = 0;
  for (auto const& v : succ_[q]) d += v.size();
  return d;
}

std::size_t Automaton::in_degree(State q) const {
  std::size_t d = 0;
  for (auto const& v : pred_[q]) d += v.size();
  return d;
}

StateSet Automaton::all_states() const {
  StateSet s(n_);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

StateSet Automaton::step(StateSet const& s, Sym a) const {
  std::vector<bool> mark(n_, false);
  for (State q : s)
    for (State r : succ_[q][a]) mark[r] = true;
  StateSet out;
  for (State q = 0; q < n_; ++q)
    if (mark[q]) out.push_back(q);
  return out;
}

StateSet Automaton::step_word(StateSet const& s, Word const& w) const {
  StateSet cur = s;
  for (Sym a : w) cur = step(cur, a);
  return cur;
}

StateSet Automaton::pre(StateSet const& s, Sym a) const {
  std::vector<bool> mark(n_, false);
  for (State q : s)
    for (State r : pred_[q][a]) mark[r] = true;
  StateSet out;
  for (State q = 0; q < n_; ++q)
    if (mark[q]) out.push_back(q);
  return out;
}

StateSet Automaton::pre_word(StateSet const& s, Word const& w) const {
  StateSet cur = s;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = pre(cur, *it);
  return cur;
}

StateSet Automaton::periodic_runners(Word const& q) const {
  StateSet cur = all_states();
  for (;;) {
    StateSet next = pre_word(cur, q);
    if (next == cur) return cur;
    cur = next;
  }
}

StateSet Automaton::profile(EvPeriodic const& y) const {
  return pre_word(periodic_runners(y.period()), y.preperiod());
}

bool Automaton::survives(StateSet const& s, EvPeriodic const& y) const {
  return sets_intersect(s, profile(y));
}

Automaton Automaton::restrict_to(std::vector<bool> const& keep) const {
  std::vector<State> remap(n_, 0);
  std::size_t m = 0;
  for (State q = 0; q < n_; ++q)
    if (keep[q]) remap[q] = static_cast<State>(m++);
  if (m == 0) throw std::runtime_error("presentation is empty: the shift has no points");
  Automaton out(alph_, m);
  for (State q = 0; q < n_; ++q) {
    if (!keep[q]) continue;
    out.names_[remap[q]] = names_[q];
    for (std::size_t a = 0; a < alph_.size(); ++a)
      for (State r : succ_[q][a])
        if (keep[r]) out.add_edge(remap[q], static_cast<Sym>(a), remap[r]);
  }
  return out;
}

Automaton Automaton::prune_dead() const {
  std::vector<bool> keep(n_, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (State q = 0; q < n_; ++q) {
      if (!keep[q]) continue;
      bool has_out = false;
      for (std::size_t a = 0; a < alph_.size() && !has_out; ++a)
        for (State r : succ_[q][a])
          if (keep[r]) {
            has_out = true;
            break;
          }
      if (!has_out) {
        keep[q] = false;
        changed = true;
      }
    }
  }
  return restrict_to(keep);
}

Automaton Automaton::trim_essential() const {
  std::vector<bool> keep(n_, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (State q = 0; q < n_; ++q) {
      if (!keep[q]) continue;
      bool has_out = false, has_in = false;
      for (std::size_t a = 0; a < alph_.size(); ++a) {
        for (State r : succ_[q][a])
          if (keep[r]) has_out = true;
        for (State r : pred_[q][a])
          if (keep[r]) has_in = true;
      }
      if (!has_out || !has_in) {
        keep[q] = false;
        changed = true;
      }
    }
  }
  return restrict_to(keep);
}

Automaton sft_prefix_automaton(Alphabet const& alph, std::vector<Word> const& forbidden) {
  for (auto const& f : forbidden)
    if (f.empty()) throw std::invalid_argument("forbidden words must be nonempty");
  std::size_t maxlen = 0;
  for (auto const& f : forbidden) maxlen = std::max(maxlen, f.size());
  std::size_t const m = maxlen == 0 ? 0 : maxlen - 1;

  auto allowed = [&](Word const& w) {
    for (auto const& f : forbidden)
      if (is_factor_of(f, w)) return false;
    return true;
  };

  // States: allowed words of length <= m; the word of length < m reached so
  // far pins down every factor seen, words of length m keep a sliding window.
  std::map<Word, State> id;
  std::vector<Word> words;
  std::deque<Word> queue;
  Word empty;
  id[empty] = 0;
  words.push_back(empty);
  queue.push_back(empty);
  std::vector<std::tuple<State, Sym, State>> edges;
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    State src = id[w];
    for (Sym a = 0; a < alph.size(); ++a) {
      Word wa = w;
      wa.push_back(a);
      if (!allowed(wa)) continue;
      Word nxt = wa;
      if (nxt.size() > m) nxt.erase(nxt.begin(), nxt.begin() + static_cast<long>(nxt.size() - m));
      auto it = id.find(nxt);
      if (it == id.end()) {
        it = id.emplace(nxt, static_cast<State>(words.size())).first;
        words.push_back(nxt);
        queue.push_back(nxt);
      }
      edges.emplace_back(src, a, it->second);
    }
  }
  Automaton aut(alph, words.size());
  for (std::size_t q = 0; q < words.size(); ++q)
    aut.names()[q] = words[q].empty() ? "~" : word_str(alph, words[q]);
  for (auto const& [s, a, t] : edges) aut.add_edge(s, a, t);
  return aut.prune_dead();
}

Automaton full_shift_automaton(Alphabet const& alph) {
  Automaton aut(alph, 1);
  aut.names()[0] = "q";
  for (Sym a = 0; a < alph.size(); ++a) aut.add_edge(0, a, 0);
  return aut;
}

std::vector<StateSet> profile_lattice(Automaton const& aut) {
  std::set<StateSet> seen;
  std::deque<StateSet> queue;
  StateSet q0 = aut.all_states();
  seen.insert(q0);
  queue.push_back(q0);
  while (!queue.empty()) {
    StateSet s = queue.front();
    queue.pop_front();
    for (Sym a = 0; a < aut.alphabet().size(); ++a) {
      StateSet t = aut.pre(s, a);
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return std::vector<StateSet>(seen.begin(), seen.end());
}

std::vector<StateSet> reachable_endpoint_sets(Automaton const& aut) {
  std::set<StateSet> seen;
  std::deque<StateSet> queue;
  StateSet q0 = aut.all_states();
  seen.insert(q0);
  queue.push_back(q0);
  while (!queue.empty()) {
    StateSet s = queue.front();
    queue.pop_front();
    for (Sym a = 0; a < aut.alphabet().size(); ++a) {
      StateSet t = aut.step(s, a);
      if (t.empty()) continue;
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  return std::vector<StateSet>(seen.begin(), seen.end());
}

bool same_language(Automaton const& a, Automaton const& b) {
  if (a.alphabet() != b.alphabet()) return false;
  // Product subset construction; a mismatch is a pair where exactly one side
  // still has a run.
  std::set<std::pair<StateSet, StateSet>> seen;
  std::deque<std::pair<StateSet, StateSet>> queue;
  auto start = std::make_pair(a.all_states(), b.all_states());
  seen.insert(start);
  queue.push_back(start);
  while (!queue.empty()) {
    auto [sa, sb] = queue.front();
    queue.pop_front();
    for (Sym c = 0; c < a.alphabet().size(); ++c) {
      StateSet ta = a.step(sa, c);
      StateSet tb = b.step(sb, c);
      if (ta.empty() != tb.empty()) return false;
      if (ta.empty()) continue;
      auto nxt = std::make_pair(std::move(ta), std::move(tb));
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return true;
}

Automaton determinized(Automaton const& aut) {
  auto sets = reachable_endpoint_sets(aut);
  std::map<StateSet, State> id;
  for (std::size_t i = 0; i < sets.size(); ++i) id[sets[i]] = static_cast<State>(i);
  Automaton out(aut.alphabet(), sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string nm = "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j)
      nm += (j ? "," : "") + aut.names()[sets[i][j]];
    out.names()[i] = nm + "}";
    for (Sym a = 0; a < aut.alphabet().size(); ++a) {
      StateSet t = aut.step(sets[i], a);
      if (t.empty()) continue;
      out.add_edge(static_cast<State>(i), a, id.at(t));
    }
  }
  return out;
}

std::optional<Word> shortest_word_with_endpoints(Automaton const& aut, StateSet const& target) {
  std::map<StateSet, Word> seen;
  std::deque<StateSet> queue;
  StateSet q0 = aut.all_states();
  seen.emplace(q0, Word{});
  if (q0 == target) return Word{};
  queue.push_back(q0);
  while (!queue.empty()) {
    StateSet s = queue.front();
    queue.pop_front();
    Word const w = seen[s];
    for (Sym a = 0; a < aut.alphabet().size(); ++a) {
      StateSet t = aut.step(s, a);
      if (t.empty()) continue;
      if (seen.count(t)) continue;
      Word wa = w;
      wa.push_back(a);
      if (t == target) return wa;
      seen.emplace(t, wa);
      queue.push_back(t);
    }
  }
  return std::nullopt;
}

}  // namespace symdyn
