#pragma once

#include <functional>
#include <optional>

#include "tlhier/monoid.hpp"

namespace tlhier {

// Finite idempotent semiring: (R,+) commutative idempotent with neutral 0,
// (R,*) a monoid with neutral 1, * distributes over +, 0 absorbs.
// The canonical order is r <= s iff r + s == s.
struct IdemSemiring {
  int size = 0;
  std::vector<int> add;   // size * size
  std::vector<int> mult;  // size * size
  int zero = 0;
  int one = 0;
  // Optional diagnostic payload for semirings of monoid subsets: the subset
  // mask each element stands for.  Empty when not applicable.
  std::vector<uint32_t> masks;

  int plus(int a, int b) const { return add[a * size + b]; }
  int times(int a, int b) const { return mult[a * size + b]; }
  bool leq(int a, int b) const { return plus(a, b) == b; }
  int pow(int r, long long k) const;
  Monoid mult_monoid() const;

  // Least k >= 1 that is a multiple of every multiplicative period and at
  // least every multiplicative threshold; r^k is idempotent and r^(k*m)=r^k.
  long long stabilization_exponent() const;

  static IdemSemiring validated(int size, std::vector<int> add,
                                std::vector<int> mult, int zero, int one);
};

// Downward closed subset of a semiring.
struct Imprint {
  int semiring_size = 0;
  std::vector<uint8_t> bits;

  Imprint() = default;
  explicit Imprint(int n) : semiring_size(n), bits(n, 0) {}
  bool contains(int r) const { return bits[r] != 0; }
  // Inserts r and everything below it.
  void add_down(int r, const IdemSemiring& R);
  bool subset_of(const Imprint& other) const;
  bool operator==(const Imprint&) const = default;
  std::vector<int> elements() const;
  std::vector<int> maximal_elements(const IdemSemiring& R) const;
};

Imprint imprint_union(const Imprint& a, const Imprint& b);
Imprint imprint_intersection(const Imprint& a, const Imprint& b);

// Multiplicative rating map determined by letter images (extended to words
// multiplicatively and to languages by summation over the value set).
struct RatingMap {
  IdemSemiring semiring;
  Alphabet alphabet;
  std::vector<int> letter_rating;

  Morphism star_morphism() const;  // word-level morphism into (R,*)
  int rate_word(const Word& w) const;
};

// rho(K): sum over the values of words in K.  Empty language rates to 0.
int rate(const RatingMap& rho, const Dfa& k);

// Downward closure of { rho(K) : K in cover }.
Imprint imprint_of_cover(const RatingMap& rho, const std::vector<Dfa>& cover);

// Reduction of a covering instance (L0, {L1..Ln}) to an imprint question.
// alpha recognizes all inputs; rho is the canonical rating map into the
// subsemiring of 2^M generated by singleton images; bad_sets marks the
// semiring elements X with X ∩ F_i nonempty for every i (including i = 0):
// the instance is coverable iff the optimal imprint over A* avoids bad_sets.
struct CoveringInstance {
  Morphism alpha;
  RatingMap rho;
  std::vector<uint8_t> bad_sets;   // bitset over rho.semiring
  std::vector<uint32_t> f_masks;   // F_0..F_n as masks over M (diagnostic)
  Dfa restriction;                 // minimized L0
};

CoveringInstance covering_to_imprint(const Dfa& l0, const std::vector<Dfa>& ls);

// Same construction when the inputs are element sets of a given surjective
// morphism (F_0 for the restriction language, F_1.. for the targets).
CoveringInstance covering_to_imprint_morphism(const Morphism& alpha,
                                              const std::vector<std::vector<int>>& fs);

// Canonical rating map for alpha: semiring of subsets of M (restricted to
// the subsemiring generated by word images under union and lifted product),
// letter a rated to the singleton {alpha(a)}.  Guards: |M| <= 16 and
// generated subsemiring size <= max_size.
RatingMap canonical_rating_map(const Morphism& alpha, int max_size = 4096);

// Optimal-imprint computation from a covering oracle (three-valued:
// 1 = coverable, 0 = not coverable, -1 = unknown).  Returns nullopt when an
// unknown oracle answer prevents an exact result.
std::optional<Imprint> imprint_via_covering_decisions(
    const Dfa& l, const RatingMap& rho,
    const std::function<int(const Dfa&, const std::vector<Dfa>&)>& oracle);

}  // namespace tlhier
