#include "symdyn/builtins.hpp"

#include <mutex>

namespace symdyn {

namespace {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// Delimited 1-blocks must have power-of-two length.
bool pow2_ok(Word const& w) {
  std::size_t i = 0;
  while (i < w.size()) {
    if (w[i] == 0) {
      std::size_t j = i + 1, run = 0;
      while (j < w.size() && w[j] == 1) {
        ++run;
        ++j;
      }
      if (j < w.size() && w[j] == 0 && run > 0 && !is_power_of_two(run)) return false;
      i = j;
    } else {
      ++i;
    }
  }
  return true;
}

// Thue-Morse-type substitution fixed point over symbols {1,2}, returned as
// indices of the ex14 alphabet {0,1,2}.
Word tm_prefix(std::size_t n) {
  Word z;
  z.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i, bits = 0;
    while (x) {
      bits ^= x & 1;
      x >>= 1;
    }
    z.push_back(static_cast<Sym>(1 + bits));
  }
  return z;
}

// The symbol 0 occurs only at the start of a word, and then the rest must
// follow the substitution point z.
bool ex14_ok(Word const& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == 0) return false;
  if (w.empty() || w[0] != 0) return true;
  Word z = tm_prefix(w.size() - 1);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] != z[i - 1]) return false;
  return true;
}

std::once_flag rules_flag;

}  // namespace

void ensure_builtin_rules_registered() {
  std::call_once(rules_flag, [] {
    register_oracle_rule("pow2", [](Alphabet const& alph) -> OracleRule {
      if (alph.size() != 2) throw std::invalid_argument("pow2 rule needs a binary alphabet");
      return pow2_ok;
    });
    register_oracle_rule("ex14", [](Alphabet const& alph) -> OracleRule {
      if (alph.size() != 3) throw std::invalid_argument("ex14 rule needs a ternary alphabet");
      return ex14_ok;
    });
  });
}

Word ex14_z_prefix(std::size_t n) { return tm_prefix(n); }

Subshift builtin_shift(std::string const& name) {
  ensure_builtin_rules_registered();
  Alphabet bin({"0", "1"});
  Subshift s = [&]() {
    if (name == "even") {
      Automaton aut(bin, 2);
      aut.names() = {"q0", "q1"};
      aut.add_edge(0, 0, 0);
      aut.add_edge(0, 1, 1);
      aut.add_edge(1, 1, 0);
      return Subshift::sofic(bin, std::move(aut));
    }
    if (name == "sft001") return Subshift::sft(bin, {parse_word(bin, "001")});
    if (name == "golden") return Subshift::sft(bin, {parse_word(bin, "11")});
    if (name == "full2") return Subshift::full(bin);
    if (name == "markov3") {
      Alphabet tri({"1", "2", "3"});
      return Subshift::sft(tri, {parse_word(tri, "11"), parse_word(tri, "21"),
                                 parse_word(tri, "31")});
    }
    if (name == "pow2") return Subshift::oracle(bin, "pow2", 256);
    if (name == "ex14") return Subshift::oracle(Alphabet({"0", "1", "2"}), "ex14", 64);
    throw std::invalid_argument("unknown builtin shift: " + name);
  }();
  s.label = name;
  return s;
}

std::vector<std::string> builtin_shift_names() {
  return {"even", "sft001", "golden", "full2", "markov3", "pow2", "ex14"};
}

std::function<EvPeriodic(std::size_t)> builtin_family(std::string const& name,
                                                      Alphabet const& alph) {
  if (name == "even-odd-ones") {
    if (alph.size() < 2) throw std::invalid_argument("family needs a binary alphabet");
    return [](std::size_t k) {
      Word pre(2 * k + 1, 1);
      return EvPeriodic(pre, Word{0});
    };
  }
  if (name.rfind("const:", 0) == 0) {
    EvPeriodic x = parse_point(alph, name.substr(6));
    return [x](std::size_t) { return x; };
  }
  if (name.rfind("prefixes:", 0) == 0) {
    // prefixes:<point>:<pad letter> - the truncations x[1..k] pad^inf.
    auto rest = name.substr(9);
    auto cut = rest.rfind(':');
    if (cut == std::string::npos) throw std::invalid_argument("family syntax: prefixes:<pt>:<pad>");
    EvPeriodic x = parse_point(alph, rest.substr(0, cut));
    Sym pad = alph.index_of(rest.substr(cut + 1));
    return [x, pad](std::size_t k) { return EvPeriodic(x.prefix(k), Word{pad}); };
  }
  throw std::invalid_argument("unknown point family: " + name);
}

std::vector<std::string> builtin_family_names() {
  return {"even-odd-ones", "const:<pre>:<per>", "prefixes:<pre>:<per>:<pad>"};
}

}  // namespace symdyn
