#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tlhier/rating.hpp"

using namespace tlhier;

namespace {

const Alphabet kAb({"a", "b"});

Dfa rx(const std::string& s) { return dfa_from_regex(s, kAb); }

// Boolean semiring {0, 1}: + = or, * = and.
IdemSemiring boolean_semiring() {
  return IdemSemiring::validated(2, {0, 1, 1, 1}, {0, 0, 0, 1}, 0, 1);
}

}  // namespace

TEST_CASE("semiring validation catches each axiom") {
  CHECK_NOTHROW(boolean_semiring());
  // Non-idempotent addition (Z2 under xor).
  CHECK_THROWS(IdemSemiring::validated(2, {0, 1, 1, 0}, {0, 0, 0, 1}, 0, 1));
  // Non-commutative "addition".
  CHECK_THROWS(IdemSemiring::validated(2, {0, 0, 1, 1}, {0, 0, 0, 1}, 0, 1));
  // Zero fails to absorb multiplicatively.
  CHECK_THROWS(IdemSemiring::validated(2, {0, 1, 1, 1}, {1, 0, 0, 1}, 0, 1));
  // Distributivity failure: join on the chain 0 < 1 < 2 with Z2-style
  // multiplication on {1, 2}: 2 * (1 + 2) = 1 but 2*1 + 2*2 = 2.
  CHECK_THROWS(IdemSemiring::validated(3, {0, 1, 2, 1, 1, 2, 2, 2, 2},
                                       {0, 0, 0, 0, 1, 2, 0, 2, 1}, 0, 1));
}

TEST_CASE("canonical order and powers") {
  IdemSemiring b = boolean_semiring();
  CHECK(b.leq(0, 1));
  CHECK_FALSE(b.leq(1, 0));
  CHECK(b.pow(1, 5) == 1);
  CHECK(b.stabilization_exponent() == 1);
  Monoid mm = b.mult_monoid();
  CHECK(mm.size == 2);
  CHECK(mm.identity == 1);
}

TEST_CASE("imprint operations") {
  IdemSemiring b = boolean_semiring();
  Imprint i(2);
  i.add_down(1, b);
  CHECK(i.contains(0));  // 0 <= 1
  CHECK(i.contains(1));
  Imprint j(2);
  j.add_down(0, b);
  CHECK(j.subset_of(i));
  CHECK_FALSE(i.subset_of(j));
  CHECK(imprint_union(i, j) == i);
  CHECK(imprint_intersection(i, j) == j);
  CHECK(i.maximal_elements(b) == std::vector<int>{1});
}

TEST_CASE("canonical rating map of the parity morphism") {
  Morphism a =
      syntactic_morphism(dfa_from_regex("(aa)*", Alphabet({"a"}))).morphism;  // Z2
  RatingMap rho = canonical_rating_map(a);
  // Subsets of Z2 generated from the empty set, {1} and {g}: all four.
  CHECK(rho.semiring.size == 4);
  REQUIRE(rho.semiring.masks.size() == 4);
  // Word values are singletons tracking parity.
  uint32_t even = rho.semiring.masks[rho.rate_word({})];
  uint32_t odd = rho.semiring.masks[rho.rate_word({0})];
  CHECK(even != odd);
  CHECK(rho.semiring.masks[rho.rate_word({0, 0})] == even);
  // rho(K) unions the values of the words of K.
  Alphabet one({"a"});
  CHECK(rho.semiring.masks[rate(rho, dfa_from_regex("a*", one))] == (even | odd));
  CHECK(rho.semiring.masks[rate(rho, dfa_from_regex("a(aa)*", one))] == odd);
  CHECK(rate(rho, dfa_from_regex("@", one)) == rho.semiring.zero);
}

TEST_CASE("rating a language equals folding its value set") {
  Morphism a = syntactic_morphism(rx("(ab)*")).morphism;
  RatingMap rho = canonical_rating_map(a);
  for (const char* s : {"(ab)*", "a(a|b)*", "b*", "(a|b)(a|b)"}) {
    Dfa k = rx(s);
    uint32_t expect = 0;
    auto vs = value_set(rho.star_morphism(), k);
    for (int r = 0; r < rho.semiring.size; ++r)
      if (vs[r]) expect |= rho.semiring.masks[r];
    CHECK(rho.semiring.masks[rate(rho, k)] == expect);
  }
}

TEST_CASE("imprint of a cover") {
  Morphism a = syntactic_morphism(rx("(aa)*")).morphism;
  RatingMap rho = canonical_rating_map(a);
  Imprint imp = imprint_of_cover(rho, {rx("(aa)*"), rx("a(aa)*")});
  // The two blocks rate to the two parity singletons; their union is not in
  // the imprint.
  CHECK(imp.contains(rho.rate_word({})));
  CHECK(imp.contains(rho.rate_word({0})));
  CHECK_FALSE(imp.contains(rate(rho, rx("(a|b)*"))));
}

TEST_CASE("covering instance for parity against co-parity") {
  // Restriction = odd length, target to avoid = even length (all over {a,b}
  // but length-counting only, so the joint monoid is Z2).
  CoveringInstance inst =
      covering_to_imprint(rx("(a|b)((a|b)(a|b))*"), {rx("((a|b)(a|b))*")});
  const IdemSemiring& R = inst.rho.semiring;
  REQUIRE(inst.f_masks.size() == 2);
  // Bad elements are exactly the subsets meeting both the odd and the even
  // class, i.e. the full set {1, g}.
  int bad_count = 0;
  for (int r = 0; r < R.size; ++r)
    if (inst.bad_sets[r]) {
      ++bad_count;
      CHECK(R.masks[r] == (inst.f_masks[0] | inst.f_masks[1]));
    }
  CHECK(bad_count == 1);
}

TEST_CASE("covering instance from morphism element sets") {
  RecognizedLanguage rl = syntactic_morphism(rx("(a|b)*a(a|b)*"));
  CoveringInstance inst =
      covering_to_imprint_morphism(rl.morphism, {{0, 1}, rl.accepting});
  CHECK(inst.f_masks.size() == 2);
  CHECK(inst.rho.semiring.size >= 2);
  CHECK_THROWS_AS(covering_to_imprint_morphism(rl.morphism, {{0}}), InputError);
}

TEST_CASE("imprint reconstruction from a covering oracle") {
  Morphism a = syntactic_morphism(rx("(aa)*")).morphism;
  RatingMap rho = canonical_rating_map(a);
  // A sum lands in the reconstructed imprint exactly when the oracle reports
  // the corresponding avoidance instance as not coverable.
  auto always_yes = [](const Dfa&, const std::vector<Dfa>&) { return 1; };
  auto imp = imprint_via_covering_decisions(rx("(a|b)*"), rho, always_yes);
  REQUIRE(imp.has_value());
  CHECK(imp->contains(rho.semiring.zero));
  CHECK_FALSE(imp->contains(rho.rate_word({0})));
  auto always_no = [](const Dfa&, const std::vector<Dfa>&) { return 0; };
  auto full = imprint_via_covering_decisions(rx("(a|b)*"), rho, always_no);
  REQUIRE(full.has_value());
  CHECK(full->contains(rho.rate_word({})));
  CHECK(full->contains(rho.rate_word({0})));
  // Unknown oracle answers surface as nullopt.
  auto unknown = [](const Dfa&, const std::vector<Dfa>&) { return -1; };
  CHECK_FALSE(imprint_via_covering_decisions(rx("(a|b)*"), rho, unknown).has_value());
}

TEST_CASE("canonical rating map guard") {
  // 17 states in a cycle: syntactic monoid Z17 exceeds the subset guard.
  Alphabet one({"a"});
  std::string s = "(aaaaaaaaaaaaaaaaa)*";
  Morphism a = syntactic_morphism(dfa_from_regex(s, one)).morphism;
  CHECK_THROWS_AS(canonical_rating_map(a), ResourceError);
}
