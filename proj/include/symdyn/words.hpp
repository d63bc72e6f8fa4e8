#ifndef SYMDYN_WORDS_HPP
#define SYMDYN_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Finite words, eventually periodic infinite words, and reduced words in the
// free group over an alphabet.  Everything here is an immutable value type;
// canonical forms are established on construction so that equality is plain
// structural comparison.

namespace symdyn {

using Sym = std::uint8_t;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  std::string const& name(Sym s) const { return symbols_.at(s); }
  std::vector<std::string> const& symbols() const { return symbols_; }

  // Symbol lookup by name; throws on unknown symbols.
  Sym index_of(std::string const& name) const;
  bool has(std::string const& name) const;

  bool operator==(Alphabet const& other) const { return symbols_ == other.symbols_; }
  bool operator!=(Alphabet const& other) const { return !(*this == other); }

  // True when every symbol is a single character, which enables the compact
  // unseparated rendering of words.
  bool single_char() const;

 private:
  std::vector<std::string> symbols_;
};

// A finite word over an alphabet, possibly empty.  The word does not carry
// its alphabet; callers pair words with the alphabet they live over.
using Word = std::vector<Sym>;

Word concat(Word const& a, Word const& b);
bool is_prefix(Word const& p, Word const& w);
bool is_factor_of(Word const& f, Word const& w);
std::string word_str(Alphabet const& alph, Word const& w);
Word parse_word(Alphabet const& alph, std::string const& text);

// Eventually periodic infinite word pre . per^inf, stored in canonical form:
// the period is primitive (not a power of a shorter word) and the preperiod
// is shortest possible, so value equality is structural equality.
class EvPeriodic {
 public:
  EvPeriodic(Word pre, Word per);

  Word const& preperiod() const { return pre_; }
  Word const& period() const { return per_; }

  Sym at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  bool purely_periodic() const { return pre_.empty(); }

  // Drops the first n letters.  The result is again canonical.
  EvPeriodic shifted(std::size_t n = 1) const;
  EvPeriodic with_prefix(Word const& alpha) const;

  std::size_t description_size() const { return pre_.size() + per_.size(); }

  bool operator==(EvPeriodic const& o) const { return pre_ == o.pre_ && per_ == o.per_; }
  bool operator!=(EvPeriodic const& o) const { return !(*this == o); }
  bool operator<(EvPeriodic const& o) const;

 private:
  Word pre_;
  Word per_;
};

std::string point_str(Alphabet const& alph, EvPeriodic const& x);
// Parses "pre:per" (either part may be empty except per), e.g. ":1" is 1^inf.
EvPeriodic parse_point(Alphabet const& alph, std::string const& text);

// One letter of a free group word: an alphabet symbol or its inverse.
struct SignedSym {
  Sym sym;
  bool inverse;

  bool operator==(SignedSym const& o) const { return sym == o.sym && inverse == o.inverse; }
  bool operator!=(SignedSym const& o) const { return !(*this == o); }
  // Positive letters precede inverse letters; within a sign, alphabet order.
  bool operator<(SignedSym const& o) const {
    if (inverse != o.inverse) return !inverse;
    return sym < o.sym;
  }
};

// A reduced word in the free group F(alphabet): no adjacent s s^-1 pair.
// The empty word is the unit.
class GroupElement {
 public:
  GroupElement() = default;

  // Reduces the given letter sequence.
  static GroupElement from_letters(std::vector<SignedSym> letters);
  static GroupElement from_word(Word const& w);          // positive word
  static GroupElement from_word_inverse(Word const& w);  // w^-1

  std::vector<SignedSym> const& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_unit() const { return letters_.empty(); }

  GroupElement inverse() const;
  GroupElement operator*(GroupElement const& o) const;  // reduced concatenation
  GroupElement times(SignedSym c) const;

  bool operator==(GroupElement const& o) const { return letters_ == o.letters_; }
  bool operator!=(GroupElement const& o) const { return !(*this == o); }
  // Total order: by length, then letterwise; gives deterministic reports.
  bool operator<(GroupElement const& o) const;

 private:
  std::vector<SignedSym> letters_;  // reduced
};

// The alpha beta^-1 decomposition of an element of F+ F+^-1, in reduced form
// (the last letters of alpha and beta differ unless one of them is empty).
struct PositivePair {
  Word alpha;
  Word beta;
};

// Returns the unique reduced-form pair when g lies in F+ F+^-1, i.e. when no
// inverse letter of g precedes a positive one; absent otherwise.
std::optional<PositivePair> positive_pair(GroupElement const& g);

GroupElement from_positive_pair(Word const& alpha, Word const& beta);

// All reduced words of length <= radius, in the canonical order.
std::vector<GroupElement> group_ball(Alphabet const& alph, std::size_t radius);

std::string group_str(Alphabet const& alph, GroupElement const& g);
// Parses a group element: either symbol tokens each optionally suffixed by
// '-' (single-char alphabets, e.g. "10-" = 1 . 0^-1), or comma-separated
// tokens "sym" / "sym-".  "e" denotes the unit.
GroupElement parse_group(Alphabet const& alph, std::string const& text);

}  // namespace symdyn

#endif  // SYMDYN_WORDS_HPP
