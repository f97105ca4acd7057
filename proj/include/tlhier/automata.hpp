#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tlhier/errors.hpp"

namespace tlhier {

// A word is a sequence of letter indices into some Alphabet.
using Word = std::vector<int>;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letter(int i) const { return letters_.at(i); }
  std::optional<int> index(const std::string& name) const;
  const std::vector<std::string>& letters() const { return letters_; }
  std::string format_word(const Word& w) const;
  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> letters_;
};

// Epsilon-free NFA with a set of initial states.
struct Nfa {
  Alphabet alphabet;
  int num_states = 0;
  std::vector<int> initial;                       // sorted
  std::vector<std::vector<std::vector<int>>> next;  // [state][letter] -> sorted targets
  std::vector<uint8_t> accepting;

  static Nfa empty(const Alphabet& a);
  static Nfa epsilon(const Alphabet& a);
  static Nfa letter(const Alphabet& a, int letter);
  static Nfa word(const Alphabet& a, const Word& w);
};

// Complete DFA. States are 0..num_states-1; every (state, letter) has a target.
struct Dfa {
  Alphabet alphabet;
  int num_states = 0;
  int initial = 0;
  std::vector<int> trans;  // num_states * |alphabet|
  std::vector<uint8_t> accepting;

  int step(int q, int a) const { return trans[q * alphabet.size() + a]; }
  int run(const Word& w) const;
};

bool operator==(const Dfa& x, const Dfa& y);

enum class BoolOp { And, Or, Diff, Xor };

// Regex grammar (single-character letters looked up in the alphabet):
//   union | intersection & concatenation, postfix * +, prefix !,
//   ~ = empty word, @ = empty language, parentheses, spaces ignored.
Nfa parse_regex(const std::string& text, const Alphabet& alphabet);

Nfa nfa_union(const Nfa& x, const Nfa& y);
Nfa nfa_concat(const Nfa& x, const Nfa& y);
Nfa nfa_star(const Nfa& x);
Nfa nfa_plus(const Nfa& x);
Nfa nfa_from_dfa(const Dfa& d);
// Reverses the language: reverse all edges, swap initial/accepting roles.
Nfa nfa_reverse(const Dfa& d);

// Subset construction. `max_states` guards against blowup.
Dfa determinize(const Nfa& n, int max_states = 1 << 20);

// Canonical minimal DFA: unreachable states dropped, Moore refinement, and
// states renumbered in BFS order (letters in alphabet order) from the initial
// state.  Two minimized DFAs over the same alphabet are structurally equal
// iff their languages are equal.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa product(const Dfa& x, const Dfa& y, BoolOp op);
Dfa intersect(const Dfa& x, const Dfa& y);

bool accepts(const Dfa& d, const Word& w);
bool is_empty(const Dfa& d);
bool equivalent(const Dfa& x, const Dfa& y);
bool subset_of(const Dfa& x, const Dfa& y);

// u^{-1} L and L u^{-1}.
Dfa left_quotient(const Dfa& d, const Word& u);
Dfa right_quotient(const Dfa& d, const Word& u);

// All accepted words of length <= max_len, shortest first, then by letter
// order.  Guarded against alphabet^max_len explosion.
std::vector<Word> enumerate_words(const Dfa& d, int max_len,
                                  std::size_t guard = 5'000'000);

// Applies a letter-to-word substitution (a monoid morphism between free
// monoids) to the language: every letter transition is replaced by a path
// spelling its image.  Images must be nonempty words over `target`.
Dfa substitute(const Dfa& d, const Alphabet& target,
               const std::function<Word(int)>& image);

Dfa dfa_from_regex(const std::string& text, const Alphabet& alphabet);

// Inverse of dfa_from_regex up to language equality, via state elimination.
// Requires every letter name to be a single character.
std::string regex_of(const Dfa& d);

std::string to_dot(const Dfa& d);

}  // namespace tlhier
