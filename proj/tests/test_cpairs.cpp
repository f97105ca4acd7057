#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tlhier/cpairs.hpp"

using namespace tlhier;

namespace {

const Alphabet kAb({"a", "b"});

Dfa rx(const std::string& s) { return dfa_from_regex(s, kAb); }

Morphism syn(const std::string& s) { return syntactic_morphism(rx(s)).morphism; }

// Brute-force modulus oracle: images grouped by word length, lengths up to
// `max_len`.  (s, t) is a pair iff no modulus n <= max_mod separates the
// length sets: for every n, some length l of an s-word and length m of a
// t-word satisfy l = m, or l, m both reachable with l = m mod n at lengths
// where the counting has stabilized.  Since we only see lengths <= max_len
// we take the definitional finite view: s and t are n-separable if the
// residue sets {l mod n} of their witness lengths are disjoint.
PairSet brute_mod_pairs(const Morphism& a, int max_len, int max_mod) {
  std::vector<std::set<int>> lengths(a.codomain.size);
  // Lengths realized per element, by unrolling words breadth-first; the layer
  // at depth d is the set of images of length-d words.
  std::set<int> cur = {a.codomain.identity};
  for (int d = 0; d <= max_len; ++d) {
    for (int s : cur) lengths[s].insert(d);
    std::set<int> next;
    for (int s : cur)
      for (int img : a.letter_image) next.insert(a.codomain.mul(s, img));
    cur = std::move(next);
  }
  PairSet p(a.codomain.size);
  for (int s = 0; s < a.codomain.size; ++s)
    for (int t = s; t < a.codomain.size; ++t) {
      if (lengths[s].empty() || lengths[t].empty()) continue;
      bool separable = false;
      for (int n = 1; n <= max_mod && !separable; ++n) {
        std::set<int> rs, rt;
        for (int l : lengths[s]) rs.insert(l % n);
        for (int l : lengths[t]) rt.insert(l % n);
        bool disjoint = true;
        for (int r : rs)
          if (rt.count(r)) disjoint = false;
        if (disjoint) separable = true;
      }
      if (!separable) p.add(s, t);
    }
  return p;
}

}  // namespace

TEST_CASE("st pairs are the full square") {
  Morphism a = syn("(ab)*");
  PairSet p = st_pairs(a);
  CHECK(p.count() == static_cast<std::size_t>(a.codomain.size) * a.codomain.size);
}

TEST_CASE("dd pairs on frozen examples") {
  // (ab)*: identity is hit only by the empty word, every other element only
  // by nonempty words, and neither {empty} nor its complement can split two
  // nonempty-only elements.
  Morphism a = syn("(ab)*");
  PairSet p = dd_pairs(a);
  int id = a.codomain.identity;
  for (int s = 0; s < a.codomain.size; ++s)
    for (int t = 0; t < a.codomain.size; ++t) {
      bool expect = (s == id) == (t == id);
      CHECK(p.contains(s, t) == expect);
    }
  // a(a|b)*: M = {1, a-class, b-class}; 1 is hit by the empty word only,
  // the other two only by nonempty words.
  Morphism b = syn("a(a|b)*");
  PairSet q = dd_pairs(b);
  int idb = b.codomain.identity;
  for (int s = 0; s < b.codomain.size; ++s)
    for (int t = 0; t < b.codomain.size; ++t)
      CHECK(q.contains(s, t) == ((s == idb) == (t == idb)));
  // a*: the identity is hit by the empty word AND nonempty words, so nothing
  // separates it from alpha(a)... over a one-letter language with M = {1}.
  Morphism c = syntactic_morphism(dfa_from_regex("a*", Alphabet({"a"}))).morphism;
  CHECK(dd_pairs(c).contains(0, 0));
}

TEST_CASE("dd pairs refine st pairs and contain the diagonal") {
  for (const char* s : {"(ab)*", "(aa)*", "(a|b)*a", "a(a|b)*"}) {
    Morphism a = syn(s);
    PairSet dd = dd_pairs(a);
    for (int x = 0; x < a.codomain.size; ++x) {
      CHECK(dd.contains(x, x));
      for (int y = 0; y < a.codomain.size; ++y)
        CHECK(dd.contains(x, y) == dd.contains(y, x));
    }
  }
}

TEST_CASE("mod pairs match the brute-force modulus oracle") {
  for (const char* s :
       {"(aa)*", "(ab)*", "(aaa)*", "(a|b)*a(a|b)*", "a(a|b)*", "(ab|ba)*"}) {
    Morphism a = syn(s);
    PairSet fast = mod_pairs(a);
    PairSet slow = brute_mod_pairs(a, 60, 8);
    for (int x = 0; x < a.codomain.size; ++x)
      for (int y = 0; y < a.codomain.size; ++y)
        CHECK(fast.contains(x, y) == slow.contains(x, y));
  }
}

TEST_CASE("mod pairs on parity are trivial on the group part") {
  // (aa)*: Z2; even and odd lengths are separated by counting mod 2.
  Morphism a = syn("(aa)*");
  PairSet p = mod_pairs(a);
  CHECK(p.contains(0, 0));
  CHECK(p.contains(1, 1));
  CHECK_FALSE(p.contains(0, 1));
}

TEST_CASE("at pairs equal eta pairs of the content morphism") {
  for (const char* s : {"(aa)*", "(ab)*", "(a|b)*a(a|b)*", "a(a|b)*", "(ab|ba)*"}) {
    Morphism a = syn(s);
    PairSet fast = at_pairs(a);
    PairSet slow = eta_pairs(a, at_morphism(a.alphabet));
    CHECK(fast.bits == slow.bits);
  }
}

TEST_CASE("at pairs separate by letter content") {
  // A*aA*: content {a} or {a,b} words map to the absorbing element, content
  // {b} and {} words to the identity; pairs split along content reachability.
  Morphism a = syn("(a|b)*a(a|b)*");
  PairSet p = at_pairs(a);
  int s_a = a.image_of({0});   // contains a
  int s_b = a.image_of({1});   // no a
  CHECK(p.contains(s_a, s_a));
  CHECK(p.contains(s_b, s_b));
  CHECK_FALSE(p.contains(s_a, s_b));
}

TEST_CASE("eta pairs with eta = alpha is the diagonal") {
  Morphism a = syn("(ab)*");
  PairSet p = eta_pairs(a, a);
  for (int x = 0; x < a.codomain.size; ++x)
    for (int y = 0; y < a.codomain.size; ++y)
      CHECK(p.contains(x, y) == (x == y));
}

TEST_CASE("base dispatch and unsupported engines") {
  Morphism a = syn("(aa)*");
  CHECK(pairs_for_base(BaseClass::ST, a).bits == st_pairs(a).bits);
  CHECK(pairs_for_base(BaseClass::MOD, a).bits == mod_pairs(a).bits);
  CHECK_THROWS_AS(pairs_for_base(BaseClass::GR, a), UnsupportedBaseError);
  CHECK_THROWS_AS(pairs_for_base(BaseClass::AMT, a), UnsupportedBaseError);
  CHECK(base_from_string("dd") == BaseClass::DD);
  CHECK_THROWS_AS(base_from_string("nope"), InputError);
}
