#pragma once

#include <memory>
#include <string>

#include "tlhier/automata.hpp"

namespace tlhier {

// Unary temporal formulas evaluated on positions 0..|w|+1 of a word, where
// positions 0 and |w|+1 are unlabeled endpoints.  The two modalities are
// guarded by a regular language parameter constraining the infix strictly
// between the current position and the witness position.
struct TlFormula;
using TlPtr = std::shared_ptr<const TlFormula>;

struct TlFormula {
  enum class Kind { True, False, Min, Max, Letter, Not, And, Or, Finally, Previously };
  Kind kind;
  int letter = -1;   // Kind::Letter
  TlPtr lhs, rhs;    // operands (unary ops use lhs)
  Dfa lang;          // modality parameter, stored minimized

  static TlPtr make_true();
  static TlPtr make_false();
  static TlPtr make_min();
  static TlPtr make_max();
  static TlPtr make_letter(int letter);
  static TlPtr make_not(TlPtr f);
  static TlPtr make_and(TlPtr a, TlPtr b);
  static TlPtr make_or(TlPtr a, TlPtr b);
  static TlPtr make_finally(Dfa lang, TlPtr f);
  static TlPtr make_previously(Dfa lang, TlPtr f);
};

int formula_size(const TlPtr& f);
int formula_depth(const TlPtr& f);  // modal nesting depth

// Satisfaction vector over positions 0..|w|+1.
std::vector<uint8_t> satisfaction(const TlPtr& f, const Alphabet& a, const Word& w);
bool eval_formula(const TlPtr& f, const Alphabet& a, const Word& w, int position);
// Word membership: satisfaction at position 0.
bool word_in_language(const TlPtr& f, const Alphabet& a, const Word& w);

// Compiles the formula to the minimal DFA of its language.
// `max_states` bounds every intermediate determinization.
Dfa compile_formula(const TlPtr& f, const Alphabet& a, int max_states = 1 << 20);

// Text format:
//   T | F | min | max | 'x' | !phi | phi & psi | phi | psi
//   | F[regex]{phi} | P[regex]{phi}
TlPtr parse_formula(const std::string& text, const Alphabet& a);
std::string format_formula(const TlPtr& f, const Alphabet& a);

}  // namespace tlhier
