#include "symdyn/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symdyn {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  if (symbols_.size() > 250) throw std::invalid_argument("alphabet too large");
  std::set<std::string> seen;
  for (auto const& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("empty alphabet symbol");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate alphabet symbol: " + s);
  }
}

Sym Alphabet::index_of(std::string const& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<Sym>(i);
  throw std::invalid_argument("unknown symbol: " + name);
}

bool Alphabet::has(std::string const& name) const {
  for (auto const& s : symbols_)
    if (s == name) return true;
  return false;
}

bool Alphabet::single_char() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](std::string const& s) { return s.size() == 1; });
}

Word concat(Word const& a, Word const& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool is_prefix(Word const& p, Word const& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_factor_of(Word const& f, Word const& w) {
  if (f.empty()) return true;
  if (f.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

std::string word_str(Alphabet const& alph, Word const& w) {
  if (w.empty()) return "~";
  std::ostringstream os;
  bool compact = alph.single_char();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << alph.name(w[i]);
  }
  return os.str();
}

Word parse_word(Alphabet const& alph, std::string const& text) {
  Word w;
  if (text.empty() || text == "~") return w;
  if (alph.single_char() && text.find(',') == std::string::npos) {
    for (char c : text) w.push_back(alph.index_of(std::string(1, c)));
    return w;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) w.push_back(alph.index_of(tok));
  }
  return w;
}

namespace {

// Shortest u with per = u^k.
Word primitive_root(Word const& per) {
  for (std::size_t d = 1; d <= per.size(); ++d) {
    if (per.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < per.size() && ok; ++i) ok = per[i] == per[i - d];
    if (ok) return Word(per.begin(), per.begin() + static_cast<long>(d));
  }
  return per;
}

}  // namespace

EvPeriodic::EvPeriodic(Word pre, Word per) : pre_(std::move(pre)), per_(std::move(per)) {
  if (per_.empty()) throw std::invalid_argument("period must be nonempty");
  per_ = primitive_root(per_);
  // Absorb into the period while the last preperiod letter matches the last
  // period letter; each step rotates the period right without changing the
  // infinite word.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    per_.insert(per_.begin(), per_.back());
    per_.pop_back();
    pre_.pop_back();
  }
}

Sym EvPeriodic::at(std::size_t i) const {
  if (i < pre_.size()) return pre_[i];
  return per_[(i - pre_.size()) % per_.size()];
}

Word EvPeriodic::prefix(std::size_t n) const {
  Word w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) w.push_back(at(i));
  return w;
}

EvPeriodic EvPeriodic::shifted(std::size_t n) const {
  Word pre = pre_;
  Word per = per_;
  std::size_t drop_pre = std::min(n, pre.size());
  pre.erase(pre.begin(), pre.begin() + static_cast<long>(drop_pre));
  std::size_t rot = (n - drop_pre) % per.size();
  std::rotate(per.begin(), per.begin() + static_cast<long>(rot), per.end());
  return EvPeriodic(std::move(pre), std::move(per));
}

EvPeriodic EvPeriodic::with_prefix(Word const& alpha) const {
  return EvPeriodic(concat(alpha, pre_), per_);
}

bool EvPeriodic::operator<(EvPeriodic const& o) const {
  if (pre_ != o.pre_) return pre_ < o.pre_;
  return per_ < o.per_;
}

std::string point_str(Alphabet const& alph, EvPeriodic const& x) {
  std::string s = word_str(alph, x.preperiod());
  if (x.preperiod().empty()) s = "";
  return s + ":" + word_str(alph, x.period());
}

EvPeriodic parse_point(Alphabet const& alph, std::string const& text) {
  auto pos = text.find(':');
  if (pos == std::string::npos)
    throw std::invalid_argument("point must have the form pre:per, got " + text);
  Word pre = parse_word(alph, text.substr(0, pos));
  Word per = parse_word(alph, text.substr(pos + 1));
  if (per.empty()) throw std::invalid_argument("point needs a nonempty period: " + text);
  return EvPeriodic(std::move(pre), std::move(per));
}

GroupElement GroupElement::from_letters(std::vector<SignedSym> letters) {
  GroupElement g;
  for (auto c : letters) {
    if (!g.letters_.empty() && g.letters_.back().sym == c.sym &&
        g.letters_.back().inverse != c.inverse) {
      g.letters_.pop_back();
    } else {
      g.letters_.push_back(c);
    }
  }
  return g;
}

GroupElement GroupElement::from_word(Word const& w) {
  GroupElement g;
  for (Sym s : w) g.letters_.push_back({s, false});
  return g;
}

GroupElement GroupElement::from_word_inverse(Word const& w) {
  GroupElement g;
  for (auto it = w.rbegin(); it != w.rend(); ++it) g.letters_.push_back({*it, true});
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    g.letters_.push_back({it->sym, !it->inverse});
  return g;
}

GroupElement GroupElement::operator*(GroupElement const& o) const {
  GroupElement g = *this;
  for (auto c : o.letters_) g = g.times(c);
  return g;
}

GroupElement GroupElement::times(SignedSym c) const {
  GroupElement g = *this;
  if (!g.letters_.empty() && g.letters_.back().sym == c.sym &&
      g.letters_.back().inverse != c.inverse) {
    g.letters_.pop_back();
  } else {
    g.letters_.push_back(c);
  }
  return g;
}

bool GroupElement::operator<(GroupElement const& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  return std::lexicographical_compare(letters_.begin(), letters_.end(), o.letters_.begin(),
                                      o.letters_.end());
}

std::optional<PositivePair> positive_pair(GroupElement const& g) {
  auto const& ls = g.letters();
  std::size_t i = 0;
  while (i < ls.size() && !ls[i].inverse) ++i;
  for (std::size_t j = i; j < ls.size(); ++j)
    if (!ls[j].inverse) return std::nullopt;
  PositivePair p;
  for (std::size_t k = 0; k < i; ++k) p.alpha.push_back(ls[k].sym);
  for (std::size_t k = ls.size(); k > i; --k) p.beta.push_back(ls[k - 1].sym);
  return p;
}

GroupElement from_positive_pair(Word const& alpha, Word const& beta) {
  return GroupElement::from_word(alpha) * GroupElement::from_word_inverse(beta);
}

std::vector<GroupElement> group_ball(Alphabet const& alph, std::size_t radius) {
  std::vector<GroupElement> out;
  out.push_back(GroupElement());
  std::size_t level_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      GroupElement const g = out[i];
      for (bool inv : {false, true}) {
        for (Sym s = 0; s < alph.size(); ++s) {
          GroupElement h = g.times({s, inv});
          if (h.length() == g.length() + 1) out.push_back(h);
        }
      }
    }
    level_begin = level_end;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string group_str(Alphabet const& alph, GroupElement const& g) {
  if (g.is_unit()) return "e";
  std::ostringstream os;
  bool compact = alph.single_char();
  bool first = true;
  for (auto c : g.letters()) {
    if (!compact && !first) os << ',';
    os << alph.name(c.sym);
    if (c.inverse) os << '-';
    first = false;
  }
  return os.str();
}

GroupElement parse_group(Alphabet const& alph, std::string const& text) {
  std::vector<SignedSym> ls;
  if (text.empty() || text == "e") return GroupElement();
  if (alph.single_char() && text.find(',') == std::string::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      Sym s = alph.index_of(std::string(1, text[i]));
      bool inv = i + 1 < text.size() && text[i + 1] == '-';
      if (inv) ++i;
      ls.push_back({s, inv});
    }
    return GroupElement::from_letters(std::move(ls));
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    bool inv = tok.back() == '-';
    if (inv) tok.pop_back();
    ls.push_back({alph.index_of(tok), inv});
  }
  return GroupElement::from_letters(std::move(ls));
}

}  // namespace symdyn
