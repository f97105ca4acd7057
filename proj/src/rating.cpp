#include "tlhier/rating.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace tlhier {

int IdemSemiring::pow(int r, long long k) const {
  int acc = one;
  int base = r;
  while (k > 0) {
    if (k & 1) acc = times(acc, base);
    base = times(base, base);
    k >>= 1;
  }
  return acc;
}

Monoid IdemSemiring::mult_monoid() const {
  Monoid m;
  m.size = size;
  m.mult = mult;
  m.identity = one;
  return m;
}

long long IdemSemiring::stabilization_exponent() const {
  return omega_exponent(mult_monoid());
}

IdemSemiring IdemSemiring::validated(int size, std::vector<int> add,
                                     std::vector<int> mult, int zero, int one) {
  IdemSemiring r{size, std::move(add), std::move(mult), zero, one, {}};
  if (size <= 0) throw InputError("semiring: size must be positive");
  if (static_cast<int>(r.add.size()) != size * size ||
      static_cast<int>(r.mult.size()) != size * size)
    throw InputError("semiring: table has wrong shape");
  auto in_range = [&](int v) { return v >= 0 && v < size; };
  for (int v : r.add)
    if (!in_range(v)) throw InputError("semiring: add entry out of range");
  for (int v : r.mult)
    if (!in_range(v)) throw InputError("semiring: mult entry out of range");
  if (!in_range(zero) || !in_range(one))
    throw InputError("semiring: neutral element out of range");
  for (int a = 0; a < size; ++a) {
    if (r.plus(a, a) != a) throw InputError("semiring: addition not idempotent");
    if (r.plus(r.zero, a) != a || r.plus(a, r.zero) != a)
      throw InputError("semiring: zero not neutral for addition");
    if (r.times(r.one, a) != a || r.times(a, r.one) != a)
      throw InputError("semiring: one not neutral for multiplication");
    if (r.times(r.zero, a) != r.zero || r.times(a, r.zero) != r.zero)
      throw InputError("semiring: zero not absorbing");
    for (int b = 0; b < size; ++b) {
      if (r.plus(a, b) != r.plus(b, a))
        throw InputError("semiring: addition not commutative");
      for (int c = 0; c < size; ++c) {
        if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c)))
          throw InputError("semiring: addition not associative");
        if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c)))
          throw InputError("semiring: multiplication not associative");
        if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c)))
          throw InputError("semiring: left distributivity fails");
        if (r.times(r.plus(a, b), c) != r.plus(r.times(a, c), r.times(b, c)))
          throw InputError("semiring: right distributivity fails");
      }
    }
  }
  return r;
}

void Imprint::add_down(int r, const IdemSemiring& R) {
  if (bits[r]) return;
  for (int x = 0; x < semiring_size; ++x)
    if (R.leq(x, r)) bits[x] = 1;
}

bool Imprint::subset_of(const Imprint& other) const {
  for (int i = 0; i < semiring_size; ++i)
    if (bits[i] && !other.bits[i]) return false;
  return true;
}

std::vector<int> Imprint::elements() const {
  std::vector<int> out;
  for (int i = 0; i < semiring_size; ++i)
    if (bits[i]) out.push_back(i);
  return out;
}

std::vector<int> Imprint::maximal_elements(const IdemSemiring& R) const {
  std::vector<int> out;
  for (int i = 0; i < semiring_size; ++i) {
    if (!bits[i]) continue;
    bool maximal = true;
    for (int j = 0; j < semiring_size; ++j)
      if (j != i && bits[j] && R.leq(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(i);
  }
  return out;
}

Imprint imprint_union(const Imprint& a, const Imprint& b) {
  Imprint out = a;
  for (int i = 0; i < out.semiring_size; ++i)
    if (b.bits[i]) out.bits[i] = 1;
  return out;
}

Imprint imprint_intersection(const Imprint& a, const Imprint& b) {
  Imprint out = a;
  for (int i = 0; i < out.semiring_size; ++i)
    if (!b.bits[i]) out.bits[i] = 0;
  return out;
}

Morphism RatingMap::star_morphism() const {
  Morphism m;
  m.alphabet = alphabet;
  m.codomain = semiring.mult_monoid();
  m.letter_image = letter_rating;
  return m;
}

int RatingMap::rate_word(const Word& w) const {
  int r = semiring.one;
  for (int c : w) r = semiring.times(r, letter_rating.at(c));
  return r;
}

int rate(const RatingMap& rho, const Dfa& k) {
  std::vector<uint8_t> vals = value_set(rho.star_morphism(), k);
  int sum = rho.semiring.zero;
  for (int r = 0; r < rho.semiring.size; ++r)
    if (vals[r]) sum = rho.semiring.plus(sum, r);
  return sum;
}

Imprint imprint_of_cover(const RatingMap& rho, const std::vector<Dfa>& cover) {
  Imprint imp(rho.semiring.size);
  for (const Dfa& k : cover)
    if (!is_empty(k)) imp.add_down(rate(rho, k), rho.semiring);
  return imp;
}

RatingMap canonical_rating_map(const Morphism& alpha, int max_size) {
  const int n = alpha.codomain.size;
  if (n > 16)
    throw ResourceError("canonical_rating_map: monoid larger than 16 elements");
  const Monoid& m = alpha.codomain;
  // Lifted product on subset masks: X*Y = { xy : x in X, y in Y }.
  // Precompute x * Ymask by peeling the lowest bit.
  std::vector<std::vector<uint32_t>> elem_times_mask(
      n, std::vector<uint32_t>(1u << n, 0));
  for (int x = 0; x < n; ++x)
    for (uint32_t ym = 1; ym < (1u << n); ++ym) {
      uint32_t low = ym & (ym - 1);
      int y = std::countr_zero(ym);
      elem_times_mask[x][ym] =
          elem_times_mask[x][low] | (1u << m.mul(x, y));
    }
  auto mask_times = [&](uint32_t xm, uint32_t ym) {
    uint32_t out = 0;
    while (xm) {
      int x = std::countr_zero(xm);
      xm &= xm - 1;
      out |= elem_times_mask[x][ym];
    }
    return out;
  };
  // Generated subsemiring: close singleton letter images (plus 0 and 1)
  // under union and lifted product.
  std::map<uint32_t, int> id;
  std::vector<uint32_t> elems;
  auto intern = [&](uint32_t mask) {
    auto it = id.find(mask);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(elems.size());
    if (i >= max_size)
      throw ResourceError("canonical_rating_map: subsemiring size guard exceeded");
    id.emplace(mask, i);
    elems.push_back(mask);
    return i;
  };
  intern(0);                              // zero = empty set
  intern(1u << m.identity);               // one = {1}
  for (int img : alpha.letter_image) intern(1u << img);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      uint32_t a = elems[i], b = elems[j];
      intern(a | b);
      intern(mask_times(a, b));
      intern(mask_times(b, a));
    }
  const int rn = static_cast<int>(elems.size());
  IdemSemiring R;
  R.size = rn;
  R.zero = 0;
  R.one = 1;
  R.masks = elems;
  R.add.resize(static_cast<std::size_t>(rn) * rn);
  R.mult.resize(static_cast<std::size_t>(rn) * rn);
  for (int i = 0; i < rn; ++i)
    for (int j = 0; j < rn; ++j) {
      R.add[i * rn + j] = id.at(elems[i] | elems[j]);
      R.mult[i * rn + j] = id.at(mask_times(elems[i], elems[j]));
    }
  RatingMap rho;
  rho.semiring = std::move(R);
  rho.alphabet = alpha.alphabet;
  rho.letter_rating.resize(alpha.alphabet.size());
  for (int c = 0; c < alpha.alphabet.size(); ++c)
    rho.letter_rating[c] = id.at(1u << alpha.letter_image[c]);
  return rho;
}

CoveringInstance covering_to_imprint_morphism(
    const Morphism& alpha, const std::vector<std::vector<int>>& fs) {
  if (fs.size() < 2)
    throw InputError("covering_to_imprint: need a restriction and >= 1 target");
  CoveringInstance inst;
  inst.alpha = alpha;
  inst.rho = canonical_rating_map(alpha);
  for (const auto& f : fs) {
    uint32_t mask = 0;
    for (int e : f) {
      if (e < 0 || e >= alpha.codomain.size)
        throw InputError("covering_to_imprint: element out of range");
      mask |= 1u << e;
    }
    inst.f_masks.push_back(mask);
  }
  const IdemSemiring& R = inst.rho.semiring;
  inst.bad_sets.assign(R.size, 0);
  for (int r = 0; r < R.size; ++r) {
    bool bad = true;
    for (uint32_t fm : inst.f_masks)
      if ((R.masks[r] & fm) == 0) {
        bad = false;
        break;
      }
    inst.bad_sets[r] = bad;
  }
  inst.restriction = minimize(preimage_dfa(alpha, fs[0]));
  return inst;
}

CoveringInstance covering_to_imprint(const Dfa& l0, const std::vector<Dfa>& ls) {
  if (ls.empty()) throw InputError("covering_to_imprint: empty target list");
  for (const Dfa& l : ls)
    if (!(l.alphabet == l0.alphabet))
      throw InputError("covering_to_imprint: alphabet mismatch");
  // One DFA product recognizing all inputs; its transition monoid recognizes
  // each via its own accepting element set.
  std::vector<Dfa> all;
  all.push_back(minimize(l0));
  for (const Dfa& l : ls) all.push_back(minimize(l));
  const int k = l0.alphabet.size();
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> states;
  auto intern = [&](std::vector<int> s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(states.size());
    id.emplace(s, i);
    states.push_back(std::move(s));
    return i;
  };
  std::vector<int> init;
  for (const Dfa& d : all) init.push_back(d.initial);
  Dfa prod;
  prod.alphabet = l0.alphabet;
  prod.initial = intern(std::move(init));
  for (std::size_t cur = 0; cur < states.size(); ++cur)
    for (int a = 0; a < k; ++a) {
      std::vector<int> t(all.size());
      for (std::size_t i = 0; i < all.size(); ++i)
        t[i] = all[i].step(states[cur][i], a);
      int tid = intern(std::move(t));
      prod.trans.resize(states.size() * k, -1);
      prod.trans[cur * k + a] = tid;
    }
  prod.num_states = static_cast<int>(states.size());
  prod.trans.resize(static_cast<std::size_t>(prod.num_states) * k);
  prod.accepting.assign(prod.num_states, 0);  // not used
  auto [mon, alpha] = transition_monoid(prod);
  // Element e lands language i iff applying e's transformation to the
  // initial tuple yields a state accepting in component i.  Recover the
  // transformations by replaying shortest preimage words on prod.
  auto pre = shortest_preimages(alpha);
  std::vector<std::vector<int>> fs(all.size());
  for (int e = 0; e < mon.size; ++e) {
    if (!pre[e]) continue;  // unreachable: alpha is surjective by construction
    int st = prod.initial;
    for (int c : *pre[e]) st = prod.step(st, c);
    for (std::size_t i = 0; i < all.size(); ++i)
      if (all[i].accepting[states[st][i]]) fs[i].push_back(e);
  }
  CoveringInstance inst = covering_to_imprint_morphism(alpha, fs);
  inst.restriction = all[0];
  return inst;
}

std::optional<Imprint> imprint_via_covering_decisions(
    const Dfa& l, const RatingMap& rho,
    const std::function<int(const Dfa&, const std::vector<Dfa>&)>& oracle) {
  const IdemSemiring& R = rho.semiring;
  Imprint out(R.size);
  if (!is_empty(l)) out.add_down(R.zero, R);
  // Only values realized by some word matter: an unrealized value has an
  // empty preimage, which makes any instance mentioning it trivially
  // coverable.
  Morphism star = rho.star_morphism();
  std::vector<uint8_t> img = nonempty_word_image(star);
  img[R.one] = 1;  // the empty word
  std::vector<int> realized;
  for (int r = 0; r < R.size; ++r)
    if (img[r]) realized.push_back(r);
  if (realized.size() > 20)
    throw ResourceError("imprint_via_covering_decisions: too many realized values");
  bool unknown_hit = false;
  for (uint32_t sub = 1; sub < (1u << realized.size()); ++sub) {
    std::vector<Dfa> targets;
    int sum = R.zero;
    for (std::size_t i = 0; i < realized.size(); ++i)
      if (sub & (1u << i)) {
        int q = realized[i];
        sum = R.plus(sum, q);
        targets.push_back(minimize(preimage_dfa(star, {q})));
      }
    if (out.contains(sum)) continue;  // already justified by a smaller set
    int dec = oracle(l, targets);
    if (dec < 0) {
      unknown_hit = true;
      continue;
    }
    if (dec == 0) out.add_down(sum, R);
  }
  if (unknown_hit) {
    // Unknown answers can only have hidden additional elements.
    return std::nullopt;
  }
  return out;
}

}  // namespace tlhier
