#include "tlhier/cpairs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tlhier {

std::size_t PairSet::count() const {
  std::size_t c = 0;
  for (uint8_t b : bits) c += b;
  return c;
}

BaseClass base_from_string(const std::string& name) {
  if (name == "st") return BaseClass::ST;
  if (name == "dd") return BaseClass::DD;
  if (name == "mod") return BaseClass::MOD;
  if (name == "at") return BaseClass::AT;
  if (name == "gr") return BaseClass::GR;
  if (name == "amt") return BaseClass::AMT;
  throw InputError("unknown base: " + name);
}

std::string base_to_string(BaseClass b) {
  switch (b) {
    case BaseClass::ST: return "st";
    case BaseClass::DD: return "dd";
    case BaseClass::MOD: return "mod";
    case BaseClass::AT: return "at";
    case BaseClass::GR: return "gr";
    case BaseClass::AMT: return "amt";
  }
  return "?";
}

namespace {

void require_surjective(const Morphism& a, const char* who) {
  if (!is_surjective(a))
    throw InputError(std::string(who) + ": morphism must be surjective");
}

}  // namespace

PairSet st_pairs(const Morphism& alpha) {
  require_surjective(alpha, "st_pairs");
  PairSet p(alpha.codomain.size);
  std::fill(p.bits.begin(), p.bits.end(), 1);
  return p;
}

PairSet dd_pairs(const Morphism& alpha) {
  require_surjective(alpha, "dd_pairs");
  const int n = alpha.codomain.size;
  const int one = alpha.codomain.identity;
  std::vector<uint8_t> plus_hit = nonempty_word_image(alpha);
  PairSet p(n);
  for (int s = 0; s < n; ++s) {
    // Facts about alpha^{-1}(s): contains epsilon iff s = 1; meets A+ iff
    // some nonempty word maps to s.
    bool s_has_eps = (s == one);
    bool s_has_plus = plus_hit[s];
    for (int t = 0; t < n; ++t) {
      bool t_has_eps = (t == one);
      bool t_has_plus = plus_hit[t];
      // Try each candidate separator L: need preimage(s) inside L and
      // preimage(t) disjoint from L.  Empty set and A* never separate
      // (both preimages are nonempty).
      bool sep_eps = !s_has_plus && s_has_eps && !t_has_eps;  // L = {epsilon}
      bool sep_plus = !s_has_eps && !t_has_plus;              // L = A+
      bool sep_eps_r = !t_has_plus && t_has_eps && !s_has_eps;  // symmetric
      bool sep_plus_r = !t_has_eps && !s_has_plus;
      if (!(sep_eps || sep_plus || sep_eps_r || sep_plus_r)) p.add(s, t);
    }
  }
  return p;
}

PairSet at_pairs(const Morphism& alpha) {
  require_surjective(alpha, "at_pairs");
  const int n = alpha.codomain.size;
  const int k = alpha.alphabet.size();
  if (k > 20) throw ResourceError("at_pairs: alphabet too large");
  // Reachable (content, value) facts.
  std::map<std::pair<int, int>, char> seen;
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int mask, int e) {
    if (seen.emplace(std::make_pair(mask, e), 1).second) stack.emplace_back(mask, e);
  };
  push(0, alpha.codomain.identity);
  while (!stack.empty()) {
    auto [mask, e] = stack.back();
    stack.pop_back();
    for (int a = 0; a < k; ++a)
      push(mask | (1 << a), alpha.codomain.mul(e, alpha.letter_image[a]));
  }
  std::map<int, std::vector<int>> by_content;
  for (const auto& [key, _] : seen) by_content[key.first].push_back(key.second);
  PairSet p(n);
  for (const auto& [mask, vals] : by_content)
    for (int s : vals)
      for (int t : vals) p.add(s, t);
  return p;
}

PairSet mod_pairs(const Morphism& alpha) {
  require_surjective(alpha, "mod_pairs");
  const int n = alpha.codomain.size;
  // R_len = set of values of words of a given length; the sequence of these
  // sets is ultimately periodic.
  std::vector<uint8_t> cur(n, 0);
  cur[alpha.codomain.identity] = 1;
  std::map<std::vector<uint8_t>, int> first_at;
  std::vector<std::vector<uint8_t>> layers;
  int threshold = -1, period = -1;
  for (int len = 0;; ++len) {
    auto it = first_at.find(cur);
    if (it != first_at.end()) {
      threshold = it->second;
      period = len - it->second;
      break;
    }
    first_at.emplace(cur, len);
    layers.push_back(cur);
    std::vector<uint8_t> nxt(n, 0);
    for (int e = 0; e < n; ++e)
      if (cur[e])
        for (int img : alpha.letter_image) nxt[alpha.codomain.mul(e, img)] = 1;
    cur = std::move(nxt);
  }
  const int bound = threshold + period;
  // Length sets restricted to [0, threshold + period).
  auto lengths = [&](int e) {
    std::vector<int> out;
    for (int len = 0; len < bound; ++len)
      if (layers[len][e]) out.push_back(len);
    return out;
  };
  PairSet p(n);
  for (int s = 0; s < n; ++s) {
    auto ls = lengths(s);
    for (int t = s; t < n; ++t) {
      auto lt = lengths(t);
      bool pair = false;
      for (int x : ls) {
        for (int y : lt) {
          // Same residue modulo the global period, with at least one witness
          // in the periodic tail (or literally equal lengths), defeats every
          // modulus.
          if ((x - y) % period == 0 && (x == y || x >= threshold || y >= threshold)) {
            pair = true;
            break;
          }
        }
        if (pair) break;
      }
      if (pair) p.add(s, t);
    }
  }
  return p;
}

PairSet eta_pairs(const Morphism& alpha, const Morphism& eta) {
  require_surjective(alpha, "eta_pairs");
  if (!(alpha.alphabet == eta.alphabet))
    throw InputError("eta_pairs: alphabet mismatch");
  // Reachable joint images (alpha(w), eta(w)).
  std::map<std::pair<int, int>, char> seen;
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int a, int b) {
    if (seen.emplace(std::make_pair(a, b), 1).second) stack.emplace_back(a, b);
  };
  push(alpha.codomain.identity, eta.codomain.identity);
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (int c = 0; c < alpha.alphabet.size(); ++c)
      push(alpha.codomain.mul(a, alpha.letter_image[c]),
           eta.codomain.mul(b, eta.letter_image[c]));
  }
  std::map<int, std::vector<int>> by_eta;
  for (const auto& [key, _] : seen) by_eta[key.second].push_back(key.first);
  PairSet p(alpha.codomain.size);
  for (const auto& [e, vals] : by_eta)
    for (int s : vals)
      for (int t : vals) p.add(s, t);
  return p;
}

Morphism at_morphism(const Alphabet& a) {
  const int k = a.size();
  if (k > 16) throw ResourceError("at_morphism: alphabet too large");
  const int n = 1 << k;
  Monoid m;
  m.size = n;
  m.identity = 0;
  m.mult.resize(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) m.mult[x * n + y] = x | y;
  Morphism eta;
  eta.alphabet = a;
  eta.codomain = std::move(m);
  eta.letter_image.resize(k);
  for (int i = 0; i < k; ++i) eta.letter_image[i] = 1 << i;
  return eta;
}

PairSet pairs_for_base(BaseClass base, const Morphism& alpha) {
  switch (base) {
    case BaseClass::ST: return st_pairs(alpha);
    case BaseClass::DD: return dd_pairs(alpha);
    case BaseClass::MOD: return mod_pairs(alpha);
    case BaseClass::AT: return at_pairs(alpha);
    case BaseClass::GR:
    case BaseClass::AMT:
      throw UnsupportedBaseError("base " + base_to_string(base) +
                                 " has no pair engine");
  }
  throw InputError("pairs_for_base: bad base");
}

}  // namespace tlhier
