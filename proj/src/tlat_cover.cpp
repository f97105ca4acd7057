#include "tlhier/tlat_cover.hpp"

#include <algorithm>
#include <map>

namespace tlhier {

std::string to_string(CoverDecision d) {
  switch (d) {
    case CoverDecision::Coverable: return "coverable";
    case CoverDecision::NotCoverable: return "not_coverable";
    case CoverDecision::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(SepDecision d) {
  switch (d) {
    case SepDecision::Separable: return "separable";
    case SepDecision::NotSeparable: return "not_separable";
    case SepDecision::Unknown: return "unknown";
  }
  return "?";
}

Imprint SaturationState::row_union() const {
  Imprint out = rows.at(0);
  for (const Imprint& r : rows) out = imprint_union(out, r);
  return out;
}

namespace {

// Trivial elements: for every word w, the row of its letter content must
// contain its value.  Computed as a closure over (content, value) facts.
void seed_trivial(const RatingMap& rho, std::vector<Imprint>& rows) {
  const IdemSemiring& R = rho.semiring;
  const int k = rho.alphabet.size();
  std::vector<uint8_t> seen(static_cast<std::size_t>(1 << k) * R.size, 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int mask, int r) {
    auto& b = seen[static_cast<std::size_t>(mask) * R.size + r];
    if (!b) {
      b = 1;
      stack.emplace_back(mask, r);
    }
  };
  push(0, R.one);
  while (!stack.empty()) {
    auto [mask, r] = stack.back();
    stack.pop_back();
    rows[mask].add_down(r, R);
    for (int a = 0; a < k; ++a)
      push(mask | (1 << a), R.times(r, rho.letter_rating[a]));
  }
}

// Multiplication closure across rows (downward closure is preserved because
// both operations are monotone and the seeds are downward closed).
bool multiply_rows(const IdemSemiring& R, std::vector<Imprint>& rows) {
  bool changed = false;
  const int nrows = static_cast<int>(rows.size());
  for (bool local = true; local;) {
    local = false;
    for (int b1 = 0; b1 < nrows; ++b1)
      for (int b2 = b1; b2 < nrows; ++b2) {
        int target = b1 | b2;
        for (int r1 = 0; r1 < R.size; ++r1) {
          if (!rows[b1].contains(r1)) continue;
          for (int r2 = 0; r2 < R.size; ++r2) {
            if (!rows[b2].contains(r2)) continue;
            int p = R.times(r1, r2);
            int q = R.times(r2, r1);
            if (!rows[target].contains(p)) {
              rows[target].add_down(p, R);
              local = changed = true;
            }
            if (!rows[target].contains(q)) {
              rows[target].add_down(q, R);
              local = changed = true;
            }
          }
        }
      }
  }
  return changed;
}

Imprint row_oracle(const IdemSemiring& R, const Imprint& row, SatMode mode,
                   const TlxBudget& budget,
                   std::map<std::vector<uint8_t>, Imprint>& cache) {
  auto it = cache.find(row.bits);
  if (it != cache.end()) return it->second;
  // The row is downward closed, so its maximal elements dominate every
  // letter; restricting the previous-level alphabet to them changes nothing
  // (dominated letters factor through a letter-to-letter renaming).
  std::vector<int> q = row.maximal_elements(R);
  Imprint res = mode == SatMode::Lower ? tlx_lower(R, q) : tlx_upper(R, q, budget);
  cache.emplace(row.bits, res);
  return res;
}

}  // namespace

SaturationState saturate(const RatingMap& rho, SatMode mode,
                         const TlxBudget& budget) {
  const IdemSemiring& R = rho.semiring;
  const int k = rho.alphabet.size();
  if (k > 10) throw ResourceError("saturate: alphabet too large");
  if (static_cast<long long>(1 << k) * R.size > 8'000'000)
    throw ResourceError("saturate: table size guard exceeded");
  SaturationState st;
  st.mode = mode;
  st.alphabet_size = k;
  st.rows.assign(1 << k, Imprint(R.size));
  seed_trivial(rho, st.rows);
  std::map<std::vector<uint8_t>, Imprint> cache;
  for (bool changed = true; changed;) {
    changed = false;
    if (multiply_rows(R, st.rows)) changed = true;
    for (int b = 0; b < (1 << k); ++b) {
      Imprint add = row_oracle(R, st.rows[b], mode, budget, cache);
      for (int r = 0; r < R.size; ++r)
        if (add.contains(r) && !st.rows[b].contains(r)) {
          st.rows[b].add_down(r, R);
          changed = true;
        }
    }
  }
  return st;
}

bool is_saturated(const SaturationState& s, const RatingMap& rho,
                  const TlxBudget& budget) {
  const IdemSemiring& R = rho.semiring;
  std::vector<Imprint> rows = s.rows;
  seed_trivial(rho, rows);
  for (std::size_t b = 0; b < rows.size(); ++b)
    if (!(rows[b] == s.rows[b])) return false;
  if (multiply_rows(R, rows)) return false;
  std::map<std::vector<uint8_t>, Imprint> cache;
  for (std::size_t b = 0; b < rows.size(); ++b) {
    Imprint add = row_oracle(R, rows[b], s.mode, budget, cache);
    if (!add.subset_of(rows[b])) return false;
  }
  return true;
}

namespace {

CoverOutcome decide_from_instance(CoveringInstance inst, const TlxBudget& budget) {
  CoverOutcome out;
  out.instance = std::move(inst);
  out.upper = saturate(out.instance.rho, SatMode::Upper, budget);
  out.lower = saturate(out.instance.rho, SatMode::Lower, budget);
  Imprint opt_up = out.upper.row_union();
  Imprint opt_low = out.lower.row_union();
  out.exact = opt_low == opt_up;
  const auto& bad = out.instance.bad_sets;
  bool up_hits = false, low_hits = false;
  for (int r = 0; r < out.instance.rho.semiring.size; ++r) {
    if (bad[r] && opt_up.contains(r)) up_hits = true;
    if (bad[r] && opt_low.contains(r)) low_hits = true;
  }
  if (!up_hits)
    out.decision = CoverDecision::Coverable;
  else if (low_hits)
    out.decision = CoverDecision::NotCoverable;
  else
    out.decision = CoverDecision::Unknown;
  return out;
}

}  // namespace

CoverOutcome decide_covering_full(const Dfa& l0, const std::vector<Dfa>& ls,
                                  const TlxBudget& budget) {
  return decide_from_instance(covering_to_imprint(l0, ls), budget);
}

CoverDecision decide_covering(const Dfa& l0, const std::vector<Dfa>& ls,
                              const TlxBudget& budget) {
  return decide_covering_full(l0, ls, budget).decision;
}

SepDecision decide_separation(const Dfa& l1, const Dfa& l2,
                              const TlxBudget& budget) {
  switch (decide_covering(l1, {l2}, budget)) {
    case CoverDecision::Coverable: return SepDecision::Separable;
    case CoverDecision::NotCoverable: return SepDecision::NotSeparable;
    case CoverDecision::Unknown: return SepDecision::Unknown;
  }
  return SepDecision::Unknown;
}

PairSet tlat_pairs(const Morphism& alpha, const TlxBudget& budget) {
  if (!is_surjective(alpha)) throw InputError("tlat_pairs: not surjective");
  const int n = alpha.codomain.size;
  // All preimages are recognized by alpha itself, so one saturation serves
  // every (s, t) query; only the bad-set test changes.
  RatingMap rho = canonical_rating_map(alpha);
  SaturationState up = saturate(rho, SatMode::Upper, budget);
  SaturationState low = saturate(rho, SatMode::Lower, budget);
  Imprint opt_up = up.row_union();
  Imprint opt_low = low.row_union();
  PairSet p(n);
  for (int s = 0; s < n; ++s)
    for (int t = s; t < n; ++t) {
      uint32_t need = (1u << s) | (1u << t);
      bool up_hit = false, low_hit = false;
      for (int r = 0; r < rho.semiring.size; ++r) {
        if ((rho.semiring.masks[r] & need) != need) continue;
        if (opt_up.contains(r)) up_hit = true;
        if (opt_low.contains(r)) low_hit = true;
      }
      if (low_hit) {
        p.add(s, t);  // definitely not separable
      } else if (up_hit) {
        p.add(s, t);  // unknown: keep the pair, flag partiality
        p.partial = true;
      }
    }
  return p;
}

Tri decide_tl3_st(const Dfa& d, const TlxBudget& budget) {
  RecognizedLanguage rl = syntactic_morphism(d);
  PairSet p = tlat_pairs(rl.morphism, budget);
  if (p.partial) return Tri::Unknown;
  return check_eq_tl(rl.morphism.codomain, p).holds ? Tri::True : Tri::False;
}

std::vector<TlPtr> synthesize_cover(const Dfa& l0, const std::vector<Dfa>& ls) {
  CoverOutcome outcome = decide_covering_full(l0, ls);
  if (outcome.decision != CoverDecision::Coverable)
    throw InputError("synthesize_cover: instance is not known to be coverable");
  const Alphabet& a = l0.alphabet;
  if (a.size() > 10) throw ResourceError("synthesize_cover: alphabet too large");
  // Try a content-based cover: one block per letter content that meets l0;
  // each block must avoid some target.
  Morphism eta = at_morphism(a);
  auto content_block = [&](uint32_t mask) {
    std::vector<int> acc = {static_cast<int>(mask)};
    return minimize(preimage_dfa(eta, acc));
  };
  struct Kept {
    uint32_t mask;
    int avoided;  // index into ls
  };
  std::vector<Kept> kept;
  for (uint32_t mask = 0; mask < (1u << a.size()); ++mask) {
    Dfa block = content_block(mask);
    if (is_empty(intersect(block, l0))) continue;
    int avoided = -1;
    for (std::size_t i = 0; i < ls.size(); ++i)
      if (is_empty(intersect(block, ls[i]))) {
        avoided = static_cast<int>(i);
        break;
      }
    if (avoided < 0)
      throw InputError(
          "synthesize_cover: no content-based cover exists; synthesis beyond "
          "content covers is not implemented");
    kept.push_back({mask, avoided});
  }
  // Merge blocks that avoid the same target; when the merged family is
  // closed downward under content inclusion it has a short formula.
  std::map<int, std::vector<uint32_t>> groups;
  for (const Kept& kb : kept) groups[kb.avoided].push_back(kb.mask);
  auto star = dfa_from_regex("@", a);  // placeholder, unused
  (void)star;
  std::vector<TlPtr> out;
  Dfa full = complement(dfa_from_regex("@", a));
  auto letter_seen = [&](int c) {
    return TlFormula::make_finally(full, TlFormula::make_letter(c));
  };
  for (auto& [avoided, masks] : groups) {
    std::sort(masks.begin(), masks.end());
    uint32_t top = 0;
    for (uint32_t m : masks) top |= m;
    bool down_closed = true;
    std::vector<uint8_t> in_group(1u << a.size(), 0);
    for (uint32_t m : masks) in_group[m] = 1;
    for (uint32_t m = 0; m <= top; ++m)
      if ((m & top) == m && !in_group[m]) down_closed = false;
    TlPtr f;
    if (down_closed && top == 0) {
      // Exactly the empty word.
      f = TlFormula::make_not(
          TlFormula::make_finally(full, TlFormula::make_not(TlFormula::make_max())));
    } else if (down_closed) {
      // "No letter outside top occurs."
      for (int c = 0; c < a.size(); ++c) {
        if (top & (1u << c)) continue;
        TlPtr g = TlFormula::make_not(letter_seen(c));
        f = f ? TlFormula::make_and(f, g) : g;
      }
      if (!f) f = TlFormula::make_true();
    } else {
      // Disjunction of exact-content formulas.
      for (uint32_t m : masks) {
        TlPtr g;
        for (int c = 0; c < a.size(); ++c) {
          TlPtr atom = (m & (1u << c))
                           ? letter_seen(c)
                           : TlFormula::make_not(letter_seen(c));
          g = g ? TlFormula::make_and(g, atom) : atom;
        }
        f = f ? TlFormula::make_or(f, g) : g;
      }
    }
    out.push_back(f);
  }
  // Verify the synthesized cover before handing it out.
  Dfa covered = dfa_from_regex("@", a);
  std::vector<int> avoided_of;
  {
    int gi = 0;
    for (auto& [avoided, masks] : groups) {
      Dfa lang = compile_formula(out[gi], a);
      covered = minimize(product(covered, lang, BoolOp::Or));
      if (!is_empty(intersect(lang, ls[avoided])))
        throw std::logic_error("synthesize_cover: verification failed (overlap)");
      ++gi;
    }
  }
  if (!subset_of(l0, covered))
    throw std::logic_error("synthesize_cover: verification failed (not a cover)");
  return out;
}

}  // namespace tlhier
