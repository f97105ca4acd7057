#pragma once

#include "tlhier/rating.hpp"

namespace tlhier {

// Bounds on the optimal imprint of covers drawn from the "next-letter +
// suffix/prefix" logic level (the level whose membership test is the tl/dd
// equation).  The alphabet is a finite set Q of semiring elements, rated by
// the identity map on letters.

struct TlxBudget {
  int max_monoid = 4;        // exhaustive codomain enumeration up to this size
  int max_threshold = 6;     // length-counting candidates up to this threshold
  long long map_enum_cap = 200000;  // skip families whose letter-map count explodes
};

// Surjective morphism test: does eta's codomain satisfy the tl/dd equation
// over its dd-pairs?
bool is_tlx_morphism(const Morphism& eta);

// Sound overapproximation: intersection of the imprints of candidate
// morphisms that pass the tl/dd test.
Imprint tlx_upper(const IdemSemiring& R, const std::vector<int>& Q,
                  const TlxBudget& budget = {});

// Sound underapproximation: word values, closed under multiplication,
// downward closure, and the merge rule forced by the tl/dd equation
// (instances of the equation evaluated in R at a stabilized exponent).
Imprint tlx_lower(const IdemSemiring& R, const std::vector<int>& Q);

struct ImprintBounds {
  Imprint lower, upper;
  bool exact = false;
};

// Runs both bounds, escalating the upper-bound budget until they meet or the
// budget tops out.  Throws if the soundness invariant lower <= upper breaks.
ImprintBounds tlx_imprint(const IdemSemiring& R, const std::vector<int>& Q,
                          const TlxBudget& budget = {});

// Closed form for a one-letter alphabet {q}: with t, p the multiplicative
// threshold and period of q, the optimal imprint is
//   down({q^1..q^t})                                   if p == 1
//   down({q^1..q^{t+p-1}} + {q^t + q^{t+1} + ... + q^{t+p-1}})  otherwise.
Imprint single_letter_exact(const IdemSemiring& R, int q);

}  // namespace tlhier
