// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tlhier/corpus.hpp"
#include "tlhier/membership.hpp"
#include "tlhier/tlat_cover.hpp"

using namespace tlhier;

namespace {

const Alphabet kAb({"a", "b"});
const Alphabet kA({"a"});

Dfa rx(const std::string& s) { return dfa_from_regex(s, kAb); }

int g_failures = 0;

void report(int criterion, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

void guarded(int criterion, const char* what, void (*fn)()) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(criterion, what, false, std::string("exception: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Shared corpus: 20 small languages whose minimal DFA has at most 8 states.

struct Entry {
  std::string name;
  Dfa dfa;
};

std::vector<Entry> corpus() {
  std::vector<Entry> out;
  auto add = [&](const std::string& n, Dfa d) { out.push_back({n, minimize(d)}); };
  add("(aa)* over a", dfa_from_regex("(aa)*", kA));
  add("(aaa)* over a", dfa_from_regex("(aaa)*", kA));
  add("(ab)*", rx("(ab)*"));
  add("some a", rx("(a|b)*a(a|b)*"));
  add("starts with a", rx("a(a|b)*"));
  add("only b", rx("b*"));
  add("ends with a", rx("(a|b)*a"));
  add("a-block then b-block", rx("a*b*"));
  add("factor ab", rx("(a|b)*ab(a|b)*"));
  add("factor aa", rx("(a|b)*aa(a|b)*"));
  add("(ab|ba)*", rx("(ab|ba)*"));
  add("a..b bracket", rx("a(a|b)*b"));
  add("nonempty", rx("(a|b)(a|b)*"));
  add("empty word", rx("~"));
  add("ends with bb", rx("(a|b)*bb"));
  add("b then (ab)*", rx("b(ab)*"));
  add("(abb)*", rx("(abb)*"));
  add("nesting depth 2", dyck_level(2));
  add("interleave u1", uv_level(1).u);
  add("interleave v1", uv_level(1).v);
  return out;
}

// Brute-force modulus pair oracle: pair iff no modulus n <= 8 splits the
// residue sets of the realized word lengths.  The length horizon must reach
// T + n*P for the largest modulus checked, otherwise a congruent witness can
// be missed (e.g. lengths {0} vs the even numbers need length 14 for n = 7);
// 60 covers every monoid with at most 6 elements comfortably.
PairSet brute_mod(const Morphism& a) {
  std::vector<std::set<int>> lengths(a.codomain.size);
  std::set<int> cur = {a.codomain.identity};
  for (int d = 0; d <= 60; ++d) {
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
      for (int n = 1; n <= 8 && !separable; ++n) {
        std::set<int> rs, rt;
        for (int l : lengths[s]) rs.insert(l % n);
        for (int l : lengths[t]) rt.insert(l % n);
        separable = true;
        for (int r : rs)
          if (rt.count(r)) separable = false;
      }
      if (!separable) p.add(s, t);
    }
  return p;
}

void criterion1() {
  auto entries = corpus();
  std::string detail;
  bool ok = true;
  for (const Entry& e : entries) {
    if (e.dfa.num_states > 8) {
      ok = false;
      detail = e.name + " has more than 8 states";
      break;
    }
    auto [m, alpha] = transition_monoid(e.dfa);
    auto classes = brute_force_congruence(e.dfa, 8);
    if (static_cast<int>(classes.size()) != m.size) {
      ok = false;
      detail = e.name + ": monoid size vs congruence classes differ";
      break;
    }
    std::set<int> images;
    for (const auto& cls : classes) {
      int img = alpha.image_of(cls.front());
      images.insert(img);
      for (const auto& w : cls)
        if (alpha.image_of(w) != img) {
          ok = false;
          detail = e.name + ": class members map to different elements";
        }
    }
    if (static_cast<int>(images.size()) != m.size) {
      ok = false;
      detail = e.name + ": distinct classes collide in the monoid";
    }
    if (!ok) break;
  }
  if (ok && transition_monoid(rx("(ab)*")).first.size != 6) {
    ok = false;
    detail = "(ab)* monoid size is not 6";
  }
  if (ok && transition_monoid(dfa_from_regex("(aa)*", kA)).first.size != 2) {
    ok = false;
    detail = "(aa)* monoid size is not 2";
  }
  report(1, "transition monoids match the word congruence on 20 languages", ok, detail);
}

void criterion2() {
  struct Row {
    const char* lang;
    const Alphabet* alpha;
    ClassName cls;
    bool expect;
  };
  std::vector<Row> rows = {
      {"(aa)*", &kA, ClassName::SF, false},
      {"(aa)*", &kA, ClassName::TL_ST, false},
      {"(aa)*", &kA, ClassName::TL_MOD, true},
      {"(aa)*", &kA, ClassName::TL2_ST, false},
      {"(ab)*", &kAb, ClassName::SF, true},
      {"(ab)*", &kAb, ClassName::TL_ST, false},
      {"(ab)*", &kAb, ClassName::TLX, true},
      {"(ab)*", &kAb, ClassName::TL2_ST, true},
      {"(a|b)*a(a|b)*", &kAb, ClassName::TL_ST, true},
      {"a(a|b)*", &kAb, ClassName::TLX, true},
  };
  bool ok = true;
  std::string detail;
  for (const Row& r : rows) {
    MembershipResult m =
        decide_membership(dfa_from_regex(r.lang, *r.alpha), r.cls);
    bool got = m.value == Tri::True;
    if (m.value == Tri::Unknown || got != r.expect) {
      ok = false;
      detail = std::string(r.lang) + " in " + class_to_string(r.cls);
      break;
    }
  }
  report(2, "membership regression table is exact", ok, detail);
}

void criterion3() {
  bool ok = true;
  std::string detail;
  for (const Entry& e : corpus()) {
    Morphism a = syntactic_morphism(e.dfa).morphism;
    if (a.codomain.size <= 6) {
      PairSet fast = mod_pairs(a);
      PairSet slow = brute_mod(a);
      if (fast.bits != slow.bits) {
        ok = false;
        detail = e.name + ": modulus pairs disagree with brute force";
        break;
      }
    }
    PairSet at = at_pairs(a);
    PairSet eta = eta_pairs(a, at_morphism(a.alphabet));
    if (at.bits != eta.bits) {
      ok = false;
      detail = e.name + ": content pairs disagree with the content morphism";
      break;
    }
  }
  report(3, "pair engines agree with their independent oracles", ok, detail);
}

// Reference evaluator, straight from the semantics.
bool ref_eval(const TlPtr& f, const Word& w, int i) {
  using K = TlFormula::Kind;
  int n = static_cast<int>(w.size());
  switch (f->kind) {
    case K::True: return true;
    case K::False: return false;
    case K::Min: return i == 0;
    case K::Max: return i == n + 1;
    case K::Letter: return i >= 1 && i <= n && w[i - 1] == f->letter;
    case K::Not: return !ref_eval(f->lhs, w, i);
    case K::And: return ref_eval(f->lhs, w, i) && ref_eval(f->rhs, w, i);
    case K::Or: return ref_eval(f->lhs, w, i) || ref_eval(f->rhs, w, i);
    case K::Finally:
      for (int j = i + 1; j <= n + 1; ++j)
        if (accepts(f->lang, Word(w.begin() + i, w.begin() + (j - 1))) &&
            ref_eval(f->lhs, w, j))
          return true;
      return false;
    case K::Previously:
      for (int j = 0; j < i; ++j)
        if (accepts(f->lang, Word(w.begin() + j, w.begin() + (i - 1))) &&
            ref_eval(f->lhs, w, j))
          return true;
      return false;
  }
  return false;
}

void criterion4() {
  // Modality parameters must be unions of letter-content classes.
  std::vector<Dfa> params;
  for (const char* p : {"~", "a*", "b*", "(a|b)*", "a+", "b+",
                        "(a|b)(a|b)*", "!(a*)&!(b*)"})
    params.push_back(rx(p));
  std::mt19937 rng(20260823);
  std::function<TlPtr(int)> gen = [&](int depth) -> TlPtr {
    int pick = static_cast<int>(rng() % (depth > 0 ? 10 : 7));
    switch (pick) {
      case 0: return TlFormula::make_true();
      case 1: return TlFormula::make_false();
      case 2: return TlFormula::make_min();
      case 3: return TlFormula::make_max();
      case 4: return TlFormula::make_letter(static_cast<int>(rng() % 2));
      case 5: return TlFormula::make_not(gen(depth));
      case 6: {
        TlPtr l = gen(depth), r = gen(depth);
        return rng() % 2 ? TlFormula::make_and(l, r) : TlFormula::make_or(l, r);
      }
      default: {
        const Dfa& lang = params[rng() % params.size()];
        return pick == 7 ? TlFormula::make_previously(lang, gen(depth - 1))
                         : TlFormula::make_finally(lang, gen(depth - 1));
      }
    }
  };
  std::vector<Word> words = {Word{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (static_cast<int>(words[i].size()) >= 8) continue;
    for (int c = 0; c < 2; ++c) {
      Word w = words[i];
      w.push_back(c);
      words.push_back(std::move(w));
    }
  }
  bool ok = true;
  std::string detail;
  int tested = 0;
  while (tested < 32 && ok) {
    TlPtr f = gen(3);
    if (formula_depth(f) == 0) continue;  // only count genuinely modal formulas
    ++tested;
    Dfa d = compile_formula(f, kAb);
    for (const Word& w : words)
      if (accepts(d, w) != ref_eval(f, w, 0)) {
        ok = false;
        detail = "compiled language disagrees with evaluation: " +
                 format_formula(f, kAb) + " on " + kAb.format_word(w);
        break;
      }
    if (ok) {
      MembershipResult m = decide_membership(d, ClassName::TL2_ST);
      if (m.value != Tri::True) {
        ok = false;
        detail = "compiled language not in the content-parameter level: " +
                 format_formula(f, kAb);
      }
    }
  }
  report(4, "32 compiled formulas agree with evaluation and land in the level",
         ok, detail);
}

std::vector<std::pair<Dfa, std::vector<Dfa>>> g_instances;  // for criterion 6

bool run_separation(const Dfa& x, const Dfa& y, SepDecision expect,
                    std::string& detail, const char* tag) {
  g_instances.push_back({x, {y}});
  SepDecision got = decide_separation(x, y);
  if (got != expect) {
    detail = std::string(tag) + ": unexpected separation answer";
    return false;
  }
  return true;
}

void criterion5() {
  bool ok = true;
  std::string detail;
  ok = ok && run_separation(dfa_from_regex("(aa)*", kA), dfa_from_regex("a(aa)*", kA),
                            SepDecision::NotSeparable, detail, "parity vs co-parity");
  ok = ok && run_separation(rx("(a|b)*a(a|b)*"), rx("b*"), SepDecision::Separable,
                            detail, "some-a vs no-a");
  UvPair uv1 = uv_level(1);
  ok = ok && run_separation(uv1.u, uv1.v, SepDecision::Separable, detail,
                            "interleave level 1");
  for (int k = 0; k <= 2 && ok; ++k) {
    UvPair uv = uv_level(k);
    MembershipResult m = decide_membership(uv.u, ClassName::TL2_ST);
    if (m.value != Tri::True) {
      ok = false;
      detail = "interleave level " + std::to_string(k) + " not a member";
    }
  }
  // Random minimized DFAs (rejection-sampled to keep the syntactic monoid
  // within the subset-semiring guard).
  std::mt19937 rng(424242);
  int done = 0;
  while (ok && done < 15) {
    int n = 2 + static_cast<int>(rng() % 3);
    Dfa d;
    d.alphabet = kAb;
    d.num_states = n;
    d.initial = 0;
    d.trans.resize(2 * n);
    d.accepting.resize(n);
    for (int q = 0; q < n; ++q) {
      d.accepting[q] = rng() % 2;
      for (int c = 0; c < 2; ++c) d.trans[q * 2 + c] = static_cast<int>(rng() % n);
    }
    d = minimize(d);
    if (d.num_states > 4) continue;
    Morphism alpha = syntactic_morphism(d).morphism;
    if (alpha.codomain.size > 16) continue;
    try {
      canonical_rating_map(alpha);  // skip samples beyond the subset guard
    } catch (const ResourceError&) {
      continue;
    }
    Dfa co = complement(d);
    g_instances.push_back({d, {co}});
    SepDecision sep = decide_separation(d, co);
    Tri mem = decide_membership(d, ClassName::TL2_ST).value;
    if (sep == SepDecision::Unknown || mem == Tri::Unknown) {
      ok = false;
      detail = "unknown on a random instance";
      break;
    }
    if ((sep == SepDecision::Separable) != (mem == Tri::True)) {
      ok = false;
      detail = "separation from the complement contradicts membership";
      break;
    }
    ++done;
  }
  report(5, "separation suite (witness families, random consistency law)", ok, detail);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (const auto& [l0, ls] : g_instances) {
    CoverOutcome o = decide_covering_full(l0, ls);
    if (!o.exact) {
      ok = false;
      detail = "lower and upper saturations differ";
      break;
    }
    if (!is_saturated(o.lower, o.instance.rho) ||
        !is_saturated(o.upper, o.instance.rho)) {
      ok = false;
      detail = "saturation audit failed";
      break;
    }
    if (o.instance.rho.semiring.size <= 16) {
      auto oracle = [](const Dfa& l, const std::vector<Dfa>& ts) {
        switch (decide_covering(l, ts)) {
          case CoverDecision::Coverable: return 1;
          case CoverDecision::NotCoverable: return 0;
          default: return -1;
        }
      };
      Dfa all = dfa_from_regex("@", o.instance.rho.alphabet);
      all = complement(intersect(all, all));  // full language over the alphabet
      auto imp = imprint_via_covering_decisions(all, o.instance.rho, oracle);
      if (!imp.has_value() || !(*imp == o.upper.row_union())) {
        ok = false;
        detail = "oracle-reconstructed imprint differs from the saturation";
        break;
      }
    }
  }
  report(6, "saturations are exact verified fixpoints matching the oracle imprint",
         ok, detail);
}

IdemSemiring subset_semiring(const Monoid& m) {
  int n = 1 << m.size;
  std::vector<int> add(static_cast<std::size_t>(n) * n), mult(add);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      add[x * n + y] = x | y;
      int prod = 0;
      for (int i = 0; i < m.size; ++i)
        if (x >> i & 1)
          for (int j = 0; j < m.size; ++j)
            if (y >> j & 1) prod |= 1 << m.mul(i, j);
      mult[x * n + y] = prod;
    }
  IdemSemiring r = IdemSemiring::validated(n, add, mult, 0, 1 << m.identity);
  r.masks.resize(n);
  for (int x = 0; x < n; ++x) r.masks[x] = static_cast<uint32_t>(x);
  return r;
}

std::vector<Monoid> small_monoids() {
  return {
      Monoid::validated(1, {0}, 0),
      Monoid::validated(2, {0, 1, 1, 0}, 0),              // Z2
      Monoid::validated(2, {0, 1, 1, 1}, 0),              // aa = a
      Monoid::validated(3, {0, 1, 2, 1, 2, 0, 2, 0, 1}, 0),  // Z3
      Monoid::validated(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0),  // chain
      Monoid::validated(3, {0, 1, 2, 1, 1, 1, 2, 2, 2}, 0),  // left zeros + 1
  };
}

void criterion7() {
  bool ok = true;
  std::string detail;
  // Closed form vs bounds on every single-letter instance, |R| <= 8.
  for (const Monoid& m : small_monoids()) {
    if (m.size > 3) continue;
    IdemSemiring r = subset_semiring(m);
    if (r.size > 8) continue;
    for (int q = 1; q < r.size && ok; ++q) {
      Imprint exact = single_letter_exact(r, q);
      ImprintBounds b = tlx_imprint(r, {q});
      if (!b.exact || !(b.lower == exact)) {
        ok = false;
        detail = "single-letter closed form mismatch";
      }
    }
    if (!ok) break;
  }
  // Ten fixed multi-letter instances with |Q| <= 3: bounds must coincide.
  if (ok) {
    std::mt19937 rng(7171);
    auto monoids = small_monoids();
    int done = 0;
    while (done < 10 && ok) {
      const Monoid& m = monoids[rng() % monoids.size()];
      IdemSemiring r = subset_semiring(m);
      std::vector<int> q;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i)
        q.push_back(1 + static_cast<int>(rng() % (r.size - 1)));
      ImprintBounds b = tlx_imprint(r, q);
      if (!b.exact) {
        ok = false;
        detail = "bounds fail to coincide on a fixed-seed instance";
      }
      ++done;
    }
  }
  // 200 random instances: the soundness invariant must hold throughout.
  if (ok) {
    std::mt19937 rng(5050);
    auto monoids = small_monoids();
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const Monoid& m = monoids[rng() % monoids.size()];
      IdemSemiring r = subset_semiring(m);
      std::vector<int> q;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i)
        q.push_back(1 + static_cast<int>(rng() % (r.size - 1)));
      Imprint lo = tlx_lower(r, q);
      Imprint up = tlx_upper(r, q);
      if (!lo.subset_of(up)) {
        ok = false;
        detail = "lower bound escaped the upper bound";
      }
    }
  }
  report(7, "previous-level imprint bounds (closed form, coincidence, soundness)",
         ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  // All 16 unions of letter-content classes over {a, b}.
  const char* blocks[4] = {"~", "a+", "b+", "!(a*)&!(b*)"};
  for (int mask = 0; mask < 16 && ok; ++mask) {
    Dfa lang = rx("@");
    for (int i = 0; i < 4; ++i)
      if (mask >> i & 1) lang = minimize(product(lang, rx(blocks[i]), BoolOp::Or));
    Tri t = decide_tl3_st(lang);
    if (t != Tri::True) {
      ok = false;
      detail = "content language rejected (mask " + std::to_string(mask) + ")";
    }
  }
  if (ok && decide_tl3_st(rx("(ab)*")) != Tri::True) {
    ok = false;
    detail = "(ab)* rejected";
  }
  if (ok && decide_tl3_st(dfa_from_regex("(aa)*", kA)) != Tri::False) {
    ok = false;
    detail = "parity accepted";
  }
  report(8, "third-level membership on content languages, (ab)*, and parity",
         ok, detail);
}

}  // namespace

int main() {
  guarded(1, "transition monoids", criterion1);
  guarded(2, "membership regression table", criterion2);
  guarded(3, "pair engine oracles", criterion3);
  guarded(4, "formula compilation", criterion4);
  guarded(5, "separation suite", criterion5);
  guarded(6, "saturation fixpoints", criterion6);
  guarded(7, "imprint bounds", criterion7);
  guarded(8, "third-level membership", criterion8);
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
