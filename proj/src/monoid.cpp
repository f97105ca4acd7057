#include "tlhier/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace tlhier {

int Monoid::pow(int s, long long k) const {
  int acc = identity;
  int base = s;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

Monoid Monoid::validated(int size, std::vector<int> mult, int identity) {
  if (size <= 0) throw InputError("monoid: size must be positive");
  if (static_cast<int>(mult.size()) != size * size)
    throw InputError("monoid: multiplication table has wrong shape");
  for (int v : mult)
    if (v < 0 || v >= size) throw InputError("monoid: table entry out of range");
  if (identity < 0 || identity >= size)
    throw InputError("monoid: identity out of range");
  Monoid m{size, std::move(mult), identity};
  for (int s = 0; s < size; ++s)
    if (m.mul(m.identity, s) != s || m.mul(s, m.identity) != s)
      throw InputError("monoid: identity law fails");
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      for (int c = 0; c < size; ++c)
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)))
          throw InputError("monoid: associativity fails");
  return m;
}

int Morphism::image_of(const Word& w) const {
  int m = codomain.identity;
  for (int c : w) m = codomain.mul(m, letter_image.at(c));
  return m;
}

std::pair<Monoid, Morphism> transition_monoid(const Dfa& d) {
  const int n = d.num_states;
  const int k = d.alphabet.size();
  std::vector<std::vector<int>> letter_tf(k, std::vector<int>(n));
  for (int a = 0; a < k; ++a)
    for (int q = 0; q < n; ++q) letter_tf[a][q] = d.step(q, a);

  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> elems;
  std::vector<int> identity_tf(n);
  std::iota(identity_tf.begin(), identity_tf.end(), 0);
  id.emplace(identity_tf, 0);
  elems.push_back(identity_tf);
  // BFS in word order: guarantees a canonical element numbering.
  for (std::size_t cur = 0; cur < elems.size(); ++cur) {
    for (int a = 0; a < k; ++a) {
      std::vector<int> t(n);
      for (int q = 0; q < n; ++q) t[q] = letter_tf[a][elems[cur][q]];
      if (id.emplace(t, static_cast<int>(elems.size())).second) elems.push_back(t);
    }
  }
  const int m = static_cast<int>(elems.size());
  Monoid mon;
  mon.size = m;
  mon.identity = 0;
  mon.mult.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> t(n);
      for (int q = 0; q < n; ++q) t[q] = elems[j][elems[i][q]];
      mon.mult[i * m + j] = id.at(t);
    }
  Morphism alpha;
  alpha.alphabet = d.alphabet;
  alpha.codomain = mon;
  alpha.letter_image.resize(k);
  for (int a = 0; a < k; ++a) alpha.letter_image[a] = id.at(letter_tf[a]);
  return {std::move(mon), std::move(alpha)};
}

RecognizedLanguage syntactic_morphism(const Dfa& d) {
  Dfa min = minimize(d);
  auto [mon, alpha] = transition_monoid(min);
  const int n = min.num_states;
  // Element m is accepting iff its transformation sends the initial state
  // into the accepting set.  Recover transformations by replaying shortest
  // words; cheaper: recompute transformation per element via BFS again.
  // We instead track state images directly.
  std::vector<int> init_image(mon.size, -1);
  // BFS mirror of transition_monoid's element order.
  {
    std::map<std::vector<int>, int> id;
    std::vector<std::vector<int>> elems;
    std::vector<int> identity_tf(n);
    std::iota(identity_tf.begin(), identity_tf.end(), 0);
    id.emplace(identity_tf, 0);
    elems.push_back(identity_tf);
    for (std::size_t cur = 0; cur < elems.size(); ++cur)
      for (int a = 0; a < min.alphabet.size(); ++a) {
        std::vector<int> t(n);
        for (int q = 0; q < n; ++q) t[q] = min.step(elems[cur][q], a);
        if (id.emplace(t, static_cast<int>(elems.size())).second)
          elems.push_back(t);
      }
    for (int e = 0; e < static_cast<int>(elems.size()); ++e)
      init_image[e] = elems[e][min.initial];
  }
  RecognizedLanguage out;
  out.morphism = std::move(alpha);
  for (int e = 0; e < mon.size; ++e)
    if (min.accepting[init_image[e]]) out.accepting.push_back(e);
  return out;
}

std::vector<int> idempotents(const Monoid& m) {
  std::vector<int> out;
  for (int s = 0; s < m.size; ++s)
    if (m.mul(s, s) == s) out.push_back(s);
  return out;
}

long long omega_exponent(const Monoid& m) {
  constexpr long long kCap = 1'000'000;
  long long lcm = 1;
  long long max_threshold = 1;
  for (int s = 0; s < m.size; ++s) {
    // Walk powers until a repeat; derive threshold and period.
    std::vector<int> seen_at(m.size, -1);
    int cur = s;
    int i = 1;
    while (seen_at[cur] < 0) {
      seen_at[cur] = i;
      cur = m.mul(cur, s);
      ++i;
    }
    long long threshold = seen_at[cur];
    long long period = i - seen_at[cur];
    max_threshold = std::max(max_threshold, threshold);
    lcm = std::lcm(lcm, period);
    if (lcm > kCap) throw ResourceError("omega_exponent: exceeds 10^6 cap");
  }
  long long k = ((max_threshold + lcm - 1) / lcm) * lcm;
  if (k > kCap) throw ResourceError("omega_exponent: exceeds 10^6 cap");
  return k;
}

int omega_power(const Monoid& m, int s) { return m.pow(s, omega_exponent(m)); }

bool is_surjective(const Morphism& a) {
  std::vector<uint8_t> hit = nonempty_word_image(a);
  hit[a.codomain.identity] = 1;
  return std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b != 0; });
}

std::vector<uint8_t> value_set(const Morphism& a, const Dfa& k) {
  if (!(a.alphabet == k.alphabet)) throw InputError("value_set: alphabet mismatch");
  const int m = a.codomain.size;
  std::vector<uint8_t> seen(static_cast<std::size_t>(k.num_states) * m, 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int q, int e) {
    if (!seen[static_cast<std::size_t>(q) * m + e]) {
      seen[static_cast<std::size_t>(q) * m + e] = 1;
      stack.emplace_back(q, e);
    }
  };
  push(k.initial, a.codomain.identity);
  std::vector<uint8_t> out(m, 0);
  while (!stack.empty()) {
    auto [q, e] = stack.back();
    stack.pop_back();
    if (k.accepting[q]) out[e] = 1;
    for (int c = 0; c < k.alphabet.size(); ++c)
      push(k.step(q, c), a.codomain.mul(e, a.letter_image[c]));
  }
  return out;
}

std::vector<uint8_t> nonempty_word_image(const Morphism& a) {
  std::vector<uint8_t> hit(a.codomain.size, 0);
  std::vector<int> stack;
  for (int img : a.letter_image)
    if (!hit[img]) {
      hit[img] = 1;
      stack.push_back(img);
    }
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (int img : a.letter_image) {
      int t = a.codomain.mul(e, img);
      if (!hit[t]) {
        hit[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return hit;
}

std::vector<std::optional<Word>> shortest_preimages(const Morphism& a) {
  std::vector<std::optional<Word>> out(a.codomain.size);
  std::queue<int> q;
  out[a.codomain.identity] = Word{};
  q.push(a.codomain.identity);
  while (!q.empty()) {
    int e = q.front();
    q.pop();
    for (int c = 0; c < a.alphabet.size(); ++c) {
      int t = a.codomain.mul(e, a.letter_image[c]);
      if (!out[t]) {
        Word w = *out[e];
        w.push_back(c);
        out[t] = std::move(w);
        q.push(t);
      }
    }
  }
  return out;
}

Dfa preimage_dfa(const Morphism& a, const std::vector<int>& accepting) {
  Dfa d;
  d.alphabet = a.alphabet;
  d.num_states = a.codomain.size;
  d.initial = a.codomain.identity;
  d.trans.resize(static_cast<std::size_t>(d.num_states) * d.alphabet.size());
  d.accepting.assign(d.num_states, 0);
  for (int e = 0; e < d.num_states; ++e)
    for (int c = 0; c < d.alphabet.size(); ++c)
      d.trans[e * d.alphabet.size() + c] = a.codomain.mul(e, a.letter_image[c]);
  for (int e : accepting) d.accepting.at(e) = 1;
  return d;
}

std::vector<std::vector<Word>> brute_force_congruence(const Dfa& d, int max_len) {
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<Word>> classes;
  const int n = d.num_states;
  Word w;
  std::function<void(int)> gen = [&](int remaining) {
    std::vector<int> tf(n);
    for (int q = 0; q < n; ++q) {
      int t = q;
      for (int c : w) t = d.step(t, c);
      tf[q] = t;
    }
    auto [it, fresh] = id.emplace(std::move(tf), static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(w);
    (void)remaining;
  };
  // Length/letter order.
  std::function<void(int, int)> rec = [&](int depth, int limit) {
    if (depth == limit) {
      gen(0);
      return;
    }
    for (int a = 0; a < d.alphabet.size(); ++a) {
      w.push_back(a);
      rec(depth + 1, limit);
      w.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(0, len);
  return classes;
}

}  // namespace tlhier
