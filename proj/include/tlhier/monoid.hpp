#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tlhier/automata.hpp"

namespace tlhier {

// Finite monoid given by its multiplication table.
struct Monoid {
  int size = 0;
  std::vector<int> mult;  // size * size
  int identity = 0;

  int mul(int a, int b) const { return mult[a * size + b]; }
  int pow(int s, long long k) const;

  // Validates identity laws and associativity (O(size^3)).
  static Monoid validated(int size, std::vector<int> mult, int identity);
};

// Monoid morphism A* -> M, determined by letter images.
struct Morphism {
  Alphabet alphabet;
  Monoid codomain;
  std::vector<int> letter_image;

  int image_of(const Word& w) const;
};

// alpha^{-1}(accepting) describes a regular language recognized by alpha.
struct RecognizedLanguage {
  Morphism morphism;          // surjective
  std::vector<int> accepting;  // sorted element list
};

// Transition monoid of a complete DFA, with the canonical morphism.
// Elements are numbered in BFS order over words (letters in alphabet order),
// starting from the identity transformation; the numbering is canonical for
// a canonically numbered DFA.
std::pair<Monoid, Morphism> transition_monoid(const Dfa& d);

// Syntactic morphism = transition monoid of the minimal DFA.
RecognizedLanguage syntactic_morphism(const Dfa& d);

std::vector<int> idempotents(const Monoid& m);

// Least k >= 1 such that s^k is idempotent for every s.  Guarded at 10^6.
long long omega_exponent(const Monoid& m);
int omega_power(const Monoid& m, int s);

bool is_surjective(const Morphism& a);

// Bitset over M: elements hit by some word of K.
std::vector<uint8_t> value_set(const Morphism& a, const Dfa& k);

// Bitset over M: elements hit by some nonempty word.
std::vector<uint8_t> nonempty_word_image(const Morphism& a);

// Shortest word mapping to each element (BFS), or nullopt if none found
// within the codomain closure (cannot happen for surjective morphisms).
std::vector<std::optional<Word>> shortest_preimages(const Morphism& a);

// DFA for alpha^{-1}(accepting): the right Cayley graph of M.
Dfa preimage_dfa(const Morphism& a, const std::vector<int>& accepting);

// Independent oracle: groups words of length <= max_len by the state
// transformation they induce on the (assumed minimal) DFA.  Classes are
// ordered by first appearance in length/letter order.
std::vector<std::vector<Word>> brute_force_congruence(const Dfa& d, int max_len);

}  // namespace tlhier
