#pragma once

#include "tlhier/automata.hpp"

namespace tlhier {

// Witness language families used throughout the test suites.  All return
// canonical minimal DFAs.

// Over {a, b}: D_0 = {empty word}, D_n = (a D_{n-1} b)*.  Guard n <= 6.
Dfa dyck_level(int n);

// Over {a, b}, with blocks x_i = a b^i and y_i = a+ b^i:
//   K_0 = {empty word},  K_n = (Q K_{n-1} R)*   where Q = x1+ x2+ x1,
//                                                      R = x3+ x4+ x3
//   L_0 = a*,            L_n = ((a + S L_{n-1} T))*  where S = y1+ y2+ y1,
//                                                      T = y3+ y4+ y3
// Guard n <= 2.
Dfa k_level(int n);
Dfa l_level(int n);

// Alphabet {l0, .., lk} (letter names "0".."k").
Alphabet level_alphabet(int k);

// U_0 = {empty word}, V_0 = l0+,
// U_k = (lk V_{k-1})*, V_k = (lk V_{k-1})* lk U_{k-1} (lk V_{k-1})*.
// Guard k <= 3.
struct UvPair {
  Dfa u, v;
};
UvPair uv_level(int k);

// Substitution l_i -> a^i b a^{k-i} into {a, b}.  Guard k <= 3.
Dfa encode_positional(int k, const Dfa& d);

// delta_k(gamma_k^{-1}(L)) for L over level_alphabet(k):
// first allow the marker letter b freely (a self-loop on every state), then
// substitute b -> b and l_i -> b a^{i+1} over {a, b}.  Guard k <= 3.
Dfa encode_marker(int k, const Dfa& d);

}  // namespace tlhier
