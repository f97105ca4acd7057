#pragma once

#include "tlhier/membership.hpp"
#include "tlhier/tl_logic.hpp"
#include "tlhier/tlx_oracle.hpp"

namespace tlhier {

// Three-valued covering decisions for the level built on letter-content
// parameters.  The decision procedure saturates a table indexed by letter
// contents B (subsets of the alphabet) holding downward closed sets of
// semiring values; the closure rules are: values of actual words, downward
// closure, multiplication, and (per content row) the optimal imprint over
// the row treated as an alphabet at the previous level, delegated to the
// lower/upper bound oracles.

enum class SatMode { Lower, Upper };

struct SaturationState {
  SatMode mode = SatMode::Lower;
  int alphabet_size = 0;
  std::vector<Imprint> rows;  // indexed by content mask

  const Imprint& row(int mask) const { return rows[mask]; }
  Imprint row_union() const;
};

SaturationState saturate(const RatingMap& rho, SatMode mode,
                         const TlxBudget& budget = {});

// Re-checks that a state is closed under all rules (with the same-mode
// oracle); used as a fixpoint audit.
bool is_saturated(const SaturationState& s, const RatingMap& rho,
                  const TlxBudget& budget = {});

enum class CoverDecision { Coverable, NotCoverable, Unknown };
enum class SepDecision { Separable, NotSeparable, Unknown };

std::string to_string(CoverDecision d);
std::string to_string(SepDecision d);

struct CoverOutcome {
  CoverDecision decision = CoverDecision::Unknown;
  SaturationState lower, upper;
  CoveringInstance instance;
  bool exact = false;  // lower and upper saturations agree
};

CoverOutcome decide_covering_full(const Dfa& l0, const std::vector<Dfa>& ls,
                                  const TlxBudget& budget = {});
CoverDecision decide_covering(const Dfa& l0, const std::vector<Dfa>& ls,
                              const TlxBudget& budget = {});
SepDecision decide_separation(const Dfa& l1, const Dfa& l2,
                              const TlxBudget& budget = {});

// Pair relation for this level: (s, t) present when alpha^{-1}(s) is not
// separable from alpha^{-1}(t); `partial` set when some query was unknown
// (unknown queries are recorded as pairs, erring on the safe side for the
// membership equation).
PairSet tlat_pairs(const Morphism& alpha, const TlxBudget& budget = {});

// Membership at the next level, via the membership equation over tlat_pairs.
Tri decide_tl3_st(const Dfa& d, const TlxBudget& budget = {});

// Constructive cover synthesis (feature-gated stretch goal): produces
// verified formulas whose languages cover l0, each member disjoint from some
// target.  Only content-based covers are synthesized; throws when the
// instance needs more than that (or is not coverable).
std::vector<TlPtr> synthesize_cover(const Dfa& l0, const std::vector<Dfa>& ls);

}  // namespace tlhier
