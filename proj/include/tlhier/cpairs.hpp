#pragma once

#include <string>
#include <vector>

#include "tlhier/monoid.hpp"

namespace tlhier {

// Symmetric relation on monoid elements: (s, t) present when the preimages
// of s and t cannot be separated within the parameter base.
struct PairSet {
  int monoid_size = 0;
  std::vector<uint8_t> bits;  // monoid_size * monoid_size
  bool partial = false;       // true when some queries came back unknown

  explicit PairSet(int n = 0) : monoid_size(n), bits(static_cast<std::size_t>(n) * n, 0) {}
  bool contains(int s, int t) const { return bits[static_cast<std::size_t>(s) * monoid_size + t]; }
  void add(int s, int t) {
    bits[static_cast<std::size_t>(s) * monoid_size + t] = 1;
    bits[static_cast<std::size_t>(t) * monoid_size + s] = 1;
  }
  std::size_t count() const;
};

enum class BaseClass { ST, DD, MOD, AT, GR, AMT };

BaseClass base_from_string(const std::string& name);  // GR/AMT parse but have no engine
std::string base_to_string(BaseClass b);

// All engines require a surjective morphism.
PairSet st_pairs(const Morphism& alpha);
PairSet dd_pairs(const Morphism& alpha);
PairSet at_pairs(const Morphism& alpha);
PairSet mod_pairs(const Morphism& alpha);

// Pairs for an arbitrary finite-codomain comparison morphism eta over the
// same alphabet: (alpha(u), alpha(v)) for all u, v with eta(u) = eta(v).
PairSet eta_pairs(const Morphism& alpha, const Morphism& eta);

// The letter-content morphism into (2^A, union).
Morphism at_morphism(const Alphabet& a);

PairSet pairs_for_base(BaseClass base, const Morphism& alpha);

}  // namespace tlhier
