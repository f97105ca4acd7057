#include "tlhier/tlx_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tlhier/cpairs.hpp"
#include "tlhier/membership.hpp"

namespace tlhier {

namespace {

// Threshold and period of an element in a finite monoid.
std::pair<int, int> cycle_of(const Monoid& m, int s) {
  std::vector<int> seen_at(m.size, -1);
  int cur = s;
  int i = 1;
  while (seen_at[cur] < 0) {
    seen_at[cur] = i;
    cur = m.mul(cur, s);
    ++i;
  }
  return {seen_at[cur], i - seen_at[cur]};
}

Alphabet q_alphabet(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return Alphabet(std::move(names));
}

// Restrict a candidate (codomain, letter images) to the submonoid generated
// by the images, so the resulting morphism is surjective.
struct Candidate {
  Monoid n;
  std::vector<int> img;  // one per letter of Q
};

Candidate restrict_to_generated(const Monoid& n, const std::vector<int>& img) {
  std::vector<int> id(n.size, -1);
  std::vector<int> elems;
  auto intern = [&](int e) {
    if (id[e] < 0) {
      id[e] = static_cast<int>(elems.size());
      elems.push_back(e);
    }
    return id[e];
  };
  intern(n.identity);
  for (int e : img) intern(e);
  // Right-multiplication by generators reaches every product of generators.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int g : img) intern(n.mul(elems[i], g));
  Candidate c;
  c.n.identity = 0;
  c.n.mult.assign(static_cast<std::size_t>(elems.size()) * elems.size(), 0);
  c.n.size = static_cast<int>(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      int prod = n.mul(elems[i], elems[j]);
      if (id[prod] < 0) throw std::logic_error("submonoid closure incomplete");
      c.n.mult[i * elems.size() + j] = id[prod];
    }
  c.img.reserve(img.size());
  for (int e : img) c.img.push_back(id[e]);
  return c;
}

// Imprint of the cover of Q+ by the classes of the candidate morphism:
// down-closure of the class values sum_{w in class} pi(w).
Imprint candidate_class_imprint(const IdemSemiring& R, const std::vector<int>& Q,
                                const Candidate& c) {
  const int nn = c.n.size;
  std::vector<uint8_t> seen(static_cast<std::size_t>(nn) * R.size, 0);
  std::vector<std::pair<int, int>> stack;
  auto push = [&](int n, int r) {
    auto& b = seen[static_cast<std::size_t>(n) * R.size + r];
    if (!b) {
      b = 1;
      stack.emplace_back(n, r);
    }
  };
  for (std::size_t i = 0; i < Q.size(); ++i) push(c.img[i], Q[i]);
  while (!stack.empty()) {
    auto [n, r] = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < Q.size(); ++i)
      push(c.n.mul(n, c.img[i]), R.times(r, Q[i]));
  }
  std::vector<int> class_sum(nn, -1);
  for (int n = 0; n < nn; ++n)
    for (int r = 0; r < R.size; ++r)
      if (seen[static_cast<std::size_t>(n) * R.size + r])
        class_sum[n] = class_sum[n] < 0 ? r : R.plus(class_sum[n], r);
  Imprint imp(R.size);
  for (int n = 0; n < nn; ++n)
    if (class_sum[n] >= 0) imp.add_down(class_sum[n], R);
  return imp;
}

// Chain monoid {0..t} with capped addition.
Monoid chain_monoid(int t) {
  Monoid m;
  m.size = t + 1;
  m.identity = 0;
  m.mult.resize(static_cast<std::size_t>(t + 1) * (t + 1));
  for (int i = 0; i <= t; ++i)
    for (int j = 0; j <= t; ++j) m.mult[i * (t + 1) + j] = std::min(i + j, t);
  return m;
}

Monoid union_monoid(int k) {
  Monoid m;
  m.size = 1 << k;
  m.identity = 0;
  m.mult.resize(static_cast<std::size_t>(m.size) * m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) m.mult[i * m.size + j] = i | j;
  return m;
}

Monoid direct_product(const Monoid& a, const Monoid& b) {
  Monoid m;
  m.size = a.size * b.size;
  m.identity = a.identity * b.size + b.identity;
  m.mult.resize(static_cast<std::size_t>(m.size) * m.size);
  for (int i = 0; i < m.size; ++i)
    for (int j = 0; j < m.size; ++j) {
      int x = a.mul(i / b.size, j / b.size);
      int y = b.mul(i % b.size, j % b.size);
      m.mult[i * m.size + j] = x * b.size + y;
    }
  return m;
}

// All monoid multiplication tables of a given size (identity fixed at 0),
// deduplicated up to isomorphism.  Sizes <= 4 only.
const std::vector<Monoid>& enumerated_monoids(int size) {
  static std::map<int, std::vector<Monoid>> cache;
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  std::vector<Monoid> out;
  const int n = size;
  const int free_cells = (n - 1) * (n - 1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<int>> canon_seen;
  std::vector<int> table(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    table[0 * n + i] = i;
    table[i * n + 0] = i;
  }
  long long total = 1;
  for (int i = 0; i < free_cells; ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        table[i * n + j] = static_cast<int>(c % n);
        c /= n;
      }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int d = 0; d < n && ok; ++d)
          if (table[table[a * n + b] * n + d] != table[a * n + table[b * n + d]])
            ok = false;
    if (!ok) continue;
    // Canonical form over permutations fixing the identity.
    std::vector<int> sub(n - 1);
    std::iota(sub.begin(), sub.end(), 1);
    std::vector<int> best;
    do {
      std::vector<int> p(n);
      p[0] = 0;
      for (int i = 1; i < n; ++i) p[i] = sub[i - 1];
      std::vector<int> relab(static_cast<std::size_t>(n) * n);
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[p[i]] = i;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          relab[p[i] * n + p[j]] = p[table[i * n + j]];
      if (best.empty() || relab < best) best = std::move(relab);
    } while (std::next_permutation(sub.begin(), sub.end()));
    if (canon_seen.insert(best).second) {
      Monoid m;
      m.size = n;
      m.identity = 0;
      m.mult = best;
      out.push_back(std::move(m));
    }
  }
  return cache.emplace(size, std::move(out)).first->second;
}

int max_element_threshold(const IdemSemiring& R) {
  Monoid m = R.mult_monoid();
  int t = 1;
  for (int r = 0; r < R.size; ++r) t = std::max(t, cycle_of(m, r).first);
  return t;
}

}  // namespace

bool is_tlx_morphism(const Morphism& eta) {
  if (!is_surjective(eta)) throw InputError("is_tlx_morphism: not surjective");
  return check_eq_tl(eta.codomain, dd_pairs(eta)).holds;
}

Imprint tlx_upper(const IdemSemiring& R, const std::vector<int>& Q,
                  const TlxBudget& budget) {
  Imprint upper(R.size);
  if (Q.empty()) return upper;
  for (int q : Q)
    if (q < 0 || q >= R.size) throw InputError("tlx_upper: letter out of range");
  const int nq = static_cast<int>(Q.size());
  Alphabet qa = q_alphabet(nq);
  std::fill(upper.bits.begin(), upper.bits.end(), 1);

  auto apply = [&](const Candidate& cand, bool check) {
    Candidate c = restrict_to_generated(cand.n, cand.img);
    if (check) {
      Morphism eta;
      eta.alphabet = qa;
      eta.codomain = c.n;
      eta.letter_image = c.img;
      if (!is_tlx_morphism(eta)) return;
    }
    upper = imprint_intersection(upper, candidate_class_imprint(R, Q, c));
  };

  int tmax = std::max(budget.max_threshold, max_element_threshold(R));

  // Trivial morphism.
  {
    Candidate c;
    c.n = chain_monoid(0);
    c.img.assign(nq, 0);
    apply(c, false);
  }
  // Length counting up to a threshold.
  for (int t = 1; t <= tmax; ++t) {
    Candidate c;
    c.n = chain_monoid(t);
    c.img.assign(nq, 1);
    apply(c, false);
  }
  // Letter content, per-letter counting, and content x length refinements.
  if (nq <= 8) {
    Candidate c;
    c.n = union_monoid(nq);
    c.img.resize(nq);
    for (int i = 0; i < nq; ++i) c.img[i] = 1 << i;
    apply(c, false);
    for (int t = 1; t <= std::min(tmax, 4); ++t) {
      if (static_cast<long long>(c.n.size) * (t + 1) > 1024) break;
      Candidate cx;
      cx.n = direct_product(c.n, chain_monoid(t));
      cx.img.resize(nq);
      for (int i = 0; i < nq; ++i) cx.img[i] = c.img[i] * (t + 1) + 1;
      apply(cx, false);
    }
  }
  if (nq <= 4) {
    for (int t = 1; t <= std::min(tmax, 3); ++t) {
      // Count each letter separately up to t.
      Monoid per = chain_monoid(t);
      Monoid prod = per;
      for (int i = 1; i < nq; ++i) prod = direct_product(prod, per);
      Candidate c;
      c.n = std::move(prod);
      c.img.resize(nq);
      for (int i = 0; i < nq; ++i) {
        // Unit vector in coordinate i (mixed-radix with base t+1).
        int v = 1;
        for (int j = i + 1; j < nq; ++j) v *= (t + 1);
        c.img[i] = v;
      }
      apply(c, true);
    }
  }
  // The multiplicative submonoid of R itself, when it happens to qualify.
  {
    Candidate c;
    c.n = R.mult_monoid();
    c.img = Q;
    apply(c, true);
  }
  // Exhaustive small codomains.
  for (int size = 2; size <= budget.max_monoid && size <= 4; ++size) {
    long long maps = 1;
    for (int i = 0; i < nq; ++i) {
      maps *= size;
      if (maps > budget.map_enum_cap) break;
    }
    if (maps > budget.map_enum_cap) continue;
    for (const Monoid& n : enumerated_monoids(size)) {
      if (!is_aperiodic(n)) continue;  // tl/dd forces aperiodicity
      for (long long code = 0; code < maps; ++code) {
        Candidate c;
        c.n = n;
        c.img.resize(nq);
        long long cc = code;
        for (int i = 0; i < nq; ++i) {
          c.img[i] = static_cast<int>(cc % size);
          cc /= size;
        }
        apply(c, true);
      }
    }
  }
  return upper;
}

Imprint tlx_lower(const IdemSemiring& R, const std::vector<int>& Q) {
  Imprint low(R.size);
  if (Q.empty()) return low;
  for (int q : Q)
    if (q < 0 || q >= R.size) throw InputError("tlx_lower: letter out of range");
  // Subsemigroup generated by Q: all word values.
  std::vector<uint8_t> in_s(R.size, 0);
  std::vector<int> s_list;
  std::vector<int> stack;
  auto s_add = [&](int r) {
    if (!in_s[r]) {
      in_s[r] = 1;
      s_list.push_back(r);
      stack.push_back(r);
    }
  };
  for (int q : Q) s_add(q);
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int q : Q) s_add(R.times(r, q));
  }
  // Stabilized exponent: lcm of periods times (max threshold + 1).
  Monoid mm = R.mult_monoid();
  long long lcm = 1;
  long long tmax = 1;
  for (int r = 0; r < R.size; ++r) {
    auto [t, p] = cycle_of(mm, r);
    lcm = std::lcm(lcm, static_cast<long long>(p));
    tmax = std::max(tmax, static_cast<long long>(t));
    if (lcm > 1'000'000) throw ResourceError("tlx_lower: exponent cap exceeded");
  }
  long long kstar = lcm * (tmax + 1);

  std::vector<uint8_t> present(R.size, 0);
  std::vector<int> work;
  auto put = [&](int r) {
    if (present[r]) return;
    // Downward closure is maintained eagerly.
    for (int x = 0; x < R.size; ++x)
      if (!present[x] && R.leq(x, r)) {
        present[x] = 1;
        work.push_back(x);
      }
  };
  for (int r : s_list) put(r);
  // Merge rule: every qualifying morphism identifies the two expressions
  // below, so any cover has a member containing both; their sum is forced.
  {
    std::set<int> ps;
    for (int z : s_list) ps.insert(R.pow(z, kstar));
    double est = static_cast<double>(ps.size()) * s_list.size() * s_list.size();
    if (est > 5e8) throw ResourceError("tlx_lower: merge rule instance too large");
    for (int p : ps)
      for (int u : s_list)
        for (int v : s_list) {
          int pvp = R.times(R.times(p, v), p);
          int c = R.times(R.times(R.times(R.times(p, u), p), v), p);
          int w1 = R.pow(c, kstar);
          int w2 = R.times(R.times(w1, pvp), w1);
          put(R.plus(w1, w2));
        }
  }
  // Close under multiplication.
  for (std::size_t i = 0; i < work.size(); ++i) {
    int x = work[i];
    for (std::size_t j = 0; j <= i; ++j) {
      int y = work[j];
      put(R.times(x, y));
      put(R.times(y, x));
    }
  }
  low.bits = present;
  return low;
}

ImprintBounds tlx_imprint(const IdemSemiring& R, const std::vector<int>& Q,
                          const TlxBudget& budget) {
  ImprintBounds b;
  b.lower = tlx_lower(R, Q);
  b.upper = tlx_upper(R, Q, budget);
  if (!b.lower.subset_of(b.upper))
    throw std::logic_error("tlx_imprint: lower bound exceeds upper bound");
  b.exact = b.lower == b.upper;
  if (!b.exact && budget.max_monoid < 4) {
    TlxBudget bigger = budget;
    bigger.max_monoid = 4;
    Imprint up2 = tlx_upper(R, Q, bigger);
    b.upper = imprint_intersection(b.upper, up2);
    if (!b.lower.subset_of(b.upper))
      throw std::logic_error("tlx_imprint: lower bound exceeds upper bound");
    b.exact = b.lower == b.upper;
  }
  return b;
}

Imprint single_letter_exact(const IdemSemiring& R, int q) {
  if (q < 0 || q >= R.size) throw InputError("single_letter_exact: out of range");
  auto [t, p] = cycle_of(R.mult_monoid(), q);
  Imprint imp(R.size);
  if (p == 1) {
    int cur = q;
    for (int i = 1; i <= t; ++i) {
      imp.add_down(cur, R);
      cur = R.times(cur, q);
    }
    return imp;
  }
  int cur = q;
  int tail_sum = -1;
  for (int i = 1; i <= t + p - 1; ++i) {
    imp.add_down(cur, R);
    if (i >= t) tail_sum = tail_sum < 0 ? cur : R.plus(tail_sum, cur);
    cur = R.times(cur, q);
  }
  imp.add_down(tail_sum, R);
  return imp;
}

}  // namespace tlhier
