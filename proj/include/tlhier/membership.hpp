#pragma once

#include <array>
#include <optional>
#include <string>

#include "tlhier/cpairs.hpp"

namespace tlhier {

enum class Tri { True, False, Unknown };

enum class ClassName { SF, TL_ST, TLX, TL_MOD, TL2_ST, IPOL2_ST, TL3_ST };

ClassName class_from_string(const std::string& name);
std::string class_to_string(ClassName c);

struct EqCheckResult {
  bool holds = true;
  // Violating (e, s, t) when the equation fails.
  std::optional<std::array<int, 3>> witness;
};

// For all idempotents e and all s, t with (e, s) and (e, t) in `pairs`:
//   (esete)^w  ==  (esete)^w ete (esete)^w
EqCheckResult check_eq_tl(const Monoid& m, const PairSet& pairs);

// For all idempotents e, all s with (e, s) in `pairs`, and ALL t:
//   (esete)^{w+1}  ==  (esete)^w ete (esete)^w
EqCheckResult check_eq_ipol2(const Monoid& m, const PairSet& pairs);

// s^{w+1} == s^w for all s; witness stored as (s, s, s).
EqCheckResult check_aperiodic(const Monoid& m);
bool is_aperiodic(const Monoid& m);

struct MembershipResult {
  Tri value = Tri::Unknown;
  // Human-readable reason; on False carries the violating triple with
  // shortest witness words.
  std::string certificate;
  std::optional<std::array<int, 3>> witness;
  std::vector<Word> witness_words;
};

MembershipResult decide_membership(const Dfa& d, ClassName cls);

}  // namespace tlhier
