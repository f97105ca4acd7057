#include "tlhier/automata.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tlhier {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  std::set<std::string> seen;
  for (const auto& l : letters_) {
    if (l.empty()) throw InputError("alphabet letter must be nonempty");
    if (!seen.insert(l).second) throw InputError("duplicate alphabet letter: " + l);
  }
}

std::optional<int> Alphabet::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (letters_[i] == name) return i;
  return std::nullopt;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "~";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter(w[i]);
  }
  return out;
}

namespace {

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void normalize(Nfa& n) {
  sort_unique(n.initial);
  for (auto& row : n.next)
    for (auto& tgts : row) sort_unique(tgts);
}

}  // namespace

Nfa Nfa::empty(const Alphabet& a) {
  Nfa n;
  n.alphabet = a;
  return n;
}

Nfa Nfa::epsilon(const Alphabet& a) {
  Nfa n;
  n.alphabet = a;
  n.num_states = 1;
  n.initial = {0};
  n.next.assign(1, std::vector<std::vector<int>>(a.size()));
  n.accepting = {1};
  return n;
}

Nfa Nfa::letter(const Alphabet& a, int letter) {
  Nfa n;
  n.alphabet = a;
  n.num_states = 2;
  n.initial = {0};
  n.next.assign(2, std::vector<std::vector<int>>(a.size()));
  n.next[0][letter] = {1};
  n.accepting = {0, 1};
  n.accepting[0] = 0;
  n.accepting[1] = 1;
  return n;
}

Nfa Nfa::word(const Alphabet& a, const Word& w) {
  Nfa n = Nfa::epsilon(a);
  for (int c : w) n = nfa_concat(n, Nfa::letter(a, c));
  return n;
}

int Dfa::run(const Word& w) const {
  int q = initial;
  for (int c : w) q = step(q, c);
  return q;
}

bool operator==(const Dfa& x, const Dfa& y) {
  return x.alphabet == y.alphabet && x.num_states == y.num_states &&
         x.initial == y.initial && x.trans == y.trans && x.accepting == y.accepting;
}

Nfa nfa_union(const Nfa& x, const Nfa& y) {
  if (!(x.alphabet == y.alphabet)) throw InputError("nfa_union: alphabet mismatch");
  Nfa n;
  n.alphabet = x.alphabet;
  n.num_states = x.num_states + y.num_states;
  n.next.assign(n.num_states, std::vector<std::vector<int>>(n.alphabet.size()));
  n.accepting.assign(n.num_states, 0);
  for (int q = 0; q < x.num_states; ++q) {
    n.next[q] = x.next[q];
    n.accepting[q] = x.accepting[q];
  }
  int off = x.num_states;
  for (int q = 0; q < y.num_states; ++q) {
    for (int a = 0; a < n.alphabet.size(); ++a)
      for (int t : y.next[q][a]) n.next[off + q][a].push_back(t + off);
    n.accepting[off + q] = y.accepting[q];
  }
  n.initial = x.initial;
  for (int i : y.initial) n.initial.push_back(i + off);
  normalize(n);
  return n;
}

Nfa nfa_concat(const Nfa& x, const Nfa& y) {
  if (!(x.alphabet == y.alphabet)) throw InputError("nfa_concat: alphabet mismatch");
  Nfa n;
  n.alphabet = x.alphabet;
  n.num_states = x.num_states + y.num_states;
  n.next.assign(n.num_states, std::vector<std::vector<int>>(n.alphabet.size()));
  n.accepting.assign(n.num_states, 0);
  int off = x.num_states;
  for (int q = 0; q < x.num_states; ++q) n.next[q] = x.next[q];
  for (int q = 0; q < y.num_states; ++q)
    for (int a = 0; a < n.alphabet.size(); ++a)
      for (int t : y.next[q][a]) n.next[off + q][a].push_back(t + off);
  // Glue: transitions leaving an initial state of y are copied onto every
  // accepting state of x.
  for (int q = 0; q < x.num_states; ++q) {
    if (!x.accepting[q]) continue;
    for (int i : y.initial)
      for (int a = 0; a < n.alphabet.size(); ++a)
        for (int t : y.next[i][a]) n.next[q][a].push_back(t + off);
  }
  bool y_eps = false;
  for (int i : y.initial) y_eps = y_eps || y.accepting[i];
  for (int q = 0; q < y.num_states; ++q) n.accepting[off + q] = y.accepting[q];
  if (y_eps)
    for (int q = 0; q < x.num_states; ++q)
      if (x.accepting[q]) n.accepting[q] = 1;
  n.initial = x.initial;
  bool x_eps = false;
  for (int i : x.initial) x_eps = x_eps || x.accepting[i];
  if (x_eps)
    for (int i : y.initial) n.initial.push_back(i + off);
  normalize(n);
  return n;
}

Nfa nfa_plus(const Nfa& x) {
  Nfa n = x;
  // Loop back: from each accepting state, allow the moves available from an
  // initial state.
  for (int q = 0; q < x.num_states; ++q) {
    if (!x.accepting[q]) continue;
    for (int i : x.initial)
      for (int a = 0; a < n.alphabet.size(); ++a)
        for (int t : x.next[i][a]) n.next[q][a].push_back(t);
  }
  normalize(n);
  return n;
}

Nfa nfa_star(const Nfa& x) {
  Nfa n = nfa_plus(x);
  // Fresh accepting initial state for the empty word.
  int s0 = n.num_states++;
  n.next.emplace_back(n.alphabet.size());
  n.accepting.push_back(1);
  for (int i : n.initial)
    for (int a = 0; a < n.alphabet.size(); ++a)
      for (int t : n.next[i][a]) n.next[s0][a].push_back(t);
  n.initial = {s0};
  normalize(n);
  return n;
}

Nfa nfa_from_dfa(const Dfa& d) {
  Nfa n;
  n.alphabet = d.alphabet;
  n.num_states = d.num_states;
  n.initial = {d.initial};
  n.accepting = d.accepting;
  n.next.assign(d.num_states, std::vector<std::vector<int>>(d.alphabet.size()));
  for (int q = 0; q < d.num_states; ++q)
    for (int a = 0; a < d.alphabet.size(); ++a) n.next[q][a] = {d.step(q, a)};
  return n;
}

Nfa nfa_reverse(const Dfa& d) {
  Nfa n;
  n.alphabet = d.alphabet;
  n.num_states = d.num_states;
  n.next.assign(d.num_states, std::vector<std::vector<int>>(d.alphabet.size()));
  n.accepting.assign(d.num_states, 0);
  n.accepting[d.initial] = 1;
  for (int q = 0; q < d.num_states; ++q) {
    if (d.accepting[q]) n.initial.push_back(q);
    for (int a = 0; a < d.alphabet.size(); ++a) n.next[d.step(q, a)][a].push_back(q);
  }
  normalize(n);
  return n;
}

Dfa determinize(const Nfa& n, int max_states) {
  const int k = n.alphabet.size();
  Dfa d;
  d.alphabet = n.alphabet;
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(subsets.size());
    if (i >= max_states)
      throw ResourceError("determinize: state guard exceeded (" +
                          std::to_string(max_states) + ")");
    id.emplace(s, i);
    subsets.push_back(std::move(s));
    return i;
  };
  d.initial = intern(n.initial);
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    for (int a = 0; a < k; ++a) {
      std::vector<int> t;
      for (int q : subsets[cur])
        for (int r : n.next[q][a]) t.push_back(r);
      sort_unique(t);
      int tid = intern(std::move(t));
      d.trans.resize(subsets.size() * k, -1);
      d.trans[cur * k + a] = tid;
    }
  }
  d.num_states = static_cast<int>(subsets.size());
  d.trans.resize(static_cast<std::size_t>(d.num_states) * k);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < d.num_states; ++i)
    for (int q : subsets[i])
      if (n.accepting[q]) d.accepting[i] = 1;
  return d;
}

Dfa minimize(const Dfa& d) {
  const int k = d.alphabet.size();
  // Reachable restriction.
  std::vector<int> order, id(d.num_states, -1);
  order.push_back(d.initial);
  id[d.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < k; ++a) {
      int t = d.step(order[i], a);
      if (id[t] < 0) {
        id[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  int n = static_cast<int>(order.size());
  std::vector<int> trans(static_cast<std::size_t>(n) * k);
  std::vector<uint8_t> acc(n);
  for (int i = 0; i < n; ++i) {
    acc[i] = d.accepting[order[i]];
    for (int a = 0; a < k; ++a) trans[i * k + a] = id[d.step(order[i], a)];
  }
  // Moore refinement.
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = acc[i] ? 1 : 0;
  int num_cls = 2;
  {
    bool any0 = false, any1 = false;
    for (int i = 0; i < n; ++i) (cls[i] ? any1 : any0) = true;
    if (!any0 || !any1) {
      num_cls = 1;
      std::fill(cls.begin(), cls.end(), 0);
    }
  }
  for (;;) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next_cls(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> sig;
      sig.reserve(k + 1);
      sig.push_back(cls[i]);
      for (int a = 0; a < k; ++a) sig.push_back(cls[trans[i * k + a]]);
      auto [it, ins] = sig_id.emplace(std::move(sig), static_cast<int>(sig_id.size()));
      next_cls[i] = it->second;
      (void)ins;
    }
    int m = static_cast<int>(sig_id.size());
    cls = std::move(next_cls);
    if (m == num_cls) break;
    num_cls = m;
  }
  // Quotient + BFS canonical renumbering.
  std::vector<int> bfs_id(num_cls, -1);
  std::vector<int> rep;  // representative (in reachable numbering) per new id
  bfs_id[cls[0]] = 0;
  rep.push_back(0);
  for (std::size_t i = 0; i < rep.size(); ++i)
    for (int a = 0; a < k; ++a) {
      int c = cls[trans[rep[i] * k + a]];
      if (bfs_id[c] < 0) {
        bfs_id[c] = static_cast<int>(rep.size());
        rep.push_back(trans[rep[i] * k + a]);
      }
    }
  Dfa out;
  out.alphabet = d.alphabet;
  out.num_states = static_cast<int>(rep.size());
  out.initial = 0;
  out.trans.assign(static_cast<std::size_t>(out.num_states) * k, 0);
  out.accepting.assign(out.num_states, 0);
  for (int i = 0; i < out.num_states; ++i) {
    out.accepting[i] = acc[rep[i]];
    for (int a = 0; a < k; ++a) out.trans[i * k + a] = bfs_id[cls[trans[rep[i] * k + a]]];
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& b : out.accepting) b = !b;
  return out;
}

Dfa product(const Dfa& x, const Dfa& y, BoolOp op) {
  if (!(x.alphabet == y.alphabet)) throw InputError("product: alphabet mismatch");
  const int k = x.alphabet.size();
  auto comb = [op](bool a, bool b) {
    switch (op) {
      case BoolOp::And: return a && b;
      case BoolOp::Or: return a || b;
      case BoolOp::Diff: return a && !b;
      case BoolOp::Xor: return a != b;
    }
    return false;
  };
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> states;
  auto intern = [&](std::pair<int, int> p) {
    auto it = id.find(p);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(states.size());
    id.emplace(p, i);
    states.push_back(p);
    return i;
  };
  Dfa d;
  d.alphabet = x.alphabet;
  d.initial = intern({x.initial, y.initial});
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    auto [p, q] = states[cur];
    for (int a = 0; a < k; ++a) {
      int t = intern({x.step(p, a), y.step(q, a)});
      d.trans.resize(states.size() * k, -1);
      d.trans[cur * k + a] = t;
    }
  }
  d.num_states = static_cast<int>(states.size());
  d.trans.resize(static_cast<std::size_t>(d.num_states) * k);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < d.num_states; ++i)
    d.accepting[i] = comb(x.accepting[states[i].first], y.accepting[states[i].second]);
  return d;
}

Dfa intersect(const Dfa& x, const Dfa& y) { return product(x, y, BoolOp::And); }

bool accepts(const Dfa& d, const Word& w) { return d.accepting[d.run(w)]; }

bool is_empty(const Dfa& d) {
  std::vector<uint8_t> seen(d.num_states, 0);
  std::vector<int> stack = {d.initial};
  seen[d.initial] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    if (d.accepting[q]) return false;
    for (int a = 0; a < d.alphabet.size(); ++a) {
      int t = d.step(q, a);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  return true;
}

bool equivalent(const Dfa& x, const Dfa& y) {
  return is_empty(product(x, y, BoolOp::Xor));
}

bool subset_of(const Dfa& x, const Dfa& y) {
  return is_empty(product(x, y, BoolOp::Diff));
}

Dfa left_quotient(const Dfa& d, const Word& u) {
  Dfa out = d;
  out.initial = d.run(u);
  return out;
}

Dfa right_quotient(const Dfa& d, const Word& u) {
  Dfa out = d;
  for (int q = 0; q < d.num_states; ++q) {
    int t = q;
    for (int c : u) t = d.step(t, c);
    out.accepting[q] = d.accepting[t];
  }
  return out;
}

std::vector<Word> enumerate_words(const Dfa& d, int max_len, std::size_t guard) {
  std::vector<Word> out;
  std::size_t visited = 0;
  // Depth-first by length layers so output is shortest-first, letter order.
  Word w;
  std::function<void(int, int, int)> rec = [&](int q, int depth, int limit) {
    if (++visited > guard)
      throw ResourceError("enumerate_words: exploration guard exceeded");
    if (depth == limit) {
      if (d.accepting[q]) out.push_back(w);
      return;
    }
    for (int a = 0; a < d.alphabet.size(); ++a) {
      w.push_back(a);
      rec(d.step(q, a), depth + 1, limit);
      w.pop_back();
    }
  };
  for (int len = 0; len <= max_len; ++len) rec(d.initial, 0, len);
  return out;
}

Dfa substitute(const Dfa& d, const Alphabet& target,
               const std::function<Word(int)>& image) {
  // Build an NFA over `target` where each letter edge of d becomes a path.
  Nfa n;
  n.alphabet = target;
  n.num_states = d.num_states;
  n.next.assign(d.num_states, std::vector<std::vector<int>>(target.size()));
  n.accepting = d.accepting;
  n.initial = {d.initial};
  for (int q = 0; q < d.num_states; ++q) {
    for (int a = 0; a < d.alphabet.size(); ++a) {
      Word img = image(a);
      if (img.empty()) throw InputError("substitute: empty letter image");
      int src = q;
      for (std::size_t i = 0; i + 1 < img.size(); ++i) {
        int mid = n.num_states++;
        n.next.emplace_back(target.size());
        n.accepting.push_back(0);
        n.next[src][img[i]].push_back(mid);
        src = mid;
      }
      n.next[src][img.back()].push_back(d.step(q, a));
    }
  }
  normalize(n);
  return minimize(determinize(n));
}

namespace {

class RegexParser {
 public:
  RegexParser(const std::string& text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  Nfa parse() {
    Nfa n = parse_union();
    skip_ws();
    if (pos_ != text_.size())
      throw InputError("regex: unexpected character at position " +
                       std::to_string(pos_));
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool atom_ahead() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '~' || c == '@' || c == '!' ||
           alphabet_.index(std::string(1, c)).has_value();
  }

  Nfa parse_union() {
    Nfa n = parse_inter();
    while (peek_is('|')) {
      ++pos_;
      n = nfa_union(n, parse_inter());
    }
    return n;
  }

  Nfa parse_inter() {
    Nfa n = parse_concat();
    while (peek_is('&')) {
      ++pos_;
      Nfa rhs = parse_concat();
      n = nfa_from_dfa(minimize(intersect(determinize(n), determinize(rhs))));
    }
    return n;
  }

  Nfa parse_concat() {
    if (!atom_ahead())
      throw InputError("regex: expected expression at position " +
                       std::to_string(pos_));
    Nfa n = parse_prefix();
    while (atom_ahead()) n = nfa_concat(n, parse_prefix());
    return n;
  }

  Nfa parse_prefix() {
    if (peek_is('!')) {
      ++pos_;
      Nfa inner = parse_prefix();
      return nfa_from_dfa(minimize(complement(determinize(inner))));
    }
    return parse_postfix();
  }

  Nfa parse_postfix() {
    Nfa n = parse_atom();
    for (;;) {
      if (peek_is('*')) {
        ++pos_;
        n = nfa_star(n);
      } else if (peek_is('+')) {
        ++pos_;
        n = nfa_plus(n);
      } else {
        break;
      }
    }
    return n;
  }

  Nfa parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw InputError("regex: unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Nfa n = parse_union();
      if (!peek_is(')')) throw InputError("regex: missing ')'");
      ++pos_;
      return n;
    }
    if (c == '~') {
      ++pos_;
      return Nfa::epsilon(alphabet_);
    }
    if (c == '@') {
      ++pos_;
      return Nfa::empty(alphabet_);
    }
    auto idx = alphabet_.index(std::string(1, c));
    if (!idx)
      throw InputError(std::string("regex: letter '") + c +
                       "' not in alphabet (position " + std::to_string(pos_) + ")");
    ++pos_;
    return Nfa::letter(alphabet_, *idx);
  }

  const std::string& text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Nfa parse_regex(const std::string& text, const Alphabet& alphabet) {
  if (alphabet.size() == 0) throw InputError("regex: empty alphabet");
  return RegexParser(text, alphabet).parse();
}

Dfa dfa_from_regex(const std::string& text, const Alphabet& alphabet) {
  return minimize(determinize(parse_regex(text, alphabet)));
}

namespace {

// Regex-string combinators for state elimination.  "@" is the empty language
// and "~" the empty word; parentheses are added only when needed.
bool is_atomic(const std::string& x) {
  if (x.size() == 1) return true;
  if (x.front() == '(' && x.back() == ')') {
    int depth = 0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      depth += x[i] == '(' ? 1 : x[i] == ')' ? -1 : 0;
      if (depth == 0) return false;
    }
    return true;
  }
  return false;
}

std::string runion(const std::string& x, const std::string& y) {
  if (x == "@") return y;
  if (y == "@" || x == y) return x;
  return x + "|" + y;
}

std::string group_for_concat(const std::string& x) {
  // Union binds weakest; wrap anything with a top-level '|'.
  int depth = 0;
  for (char c : x) {
    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
    if (depth == 0 && c == '|') return "(" + x + ")";
  }
  return x;
}

std::string rconcat(const std::string& x, const std::string& y) {
  if (x == "@" || y == "@") return "@";
  if (x == "~") return y;
  if (y == "~") return x;
  return group_for_concat(x) + group_for_concat(y);
}

std::string rstar(const std::string& x) {
  if (x == "@" || x == "~") return "~";
  std::string base = x;
  if (base.size() >= 2 && base.back() == '*' &&
      is_atomic(base.substr(0, base.size() - 1)))
    return base;
  if (!is_atomic(base)) base = "(" + base + ")";
  return base + "*";
}

}  // namespace

std::string regex_of(const Dfa& d) {
  for (const std::string& l : d.alphabet.letters())
    if (l.size() != 1)
      throw InputError("regex_of: needs single-character letter names");
  // Generalized NFA over states 0..n-1 plus init n and final n+1.
  int n = d.num_states;
  std::vector<std::vector<std::string>> e(n + 2,
                                          std::vector<std::string>(n + 2, "@"));
  for (int q = 0; q < n; ++q)
    for (int a = 0; a < d.alphabet.size(); ++a)
      e[q][d.step(q, a)] = runion(e[q][d.step(q, a)], d.alphabet.letter(a));
  e[n][d.initial] = "~";
  for (int q = 0; q < n; ++q)
    if (d.accepting[q]) e[q][n + 1] = "~";
  std::vector<int> alive(n);
  for (int q = 0; q < n; ++q) alive[q] = q;
  for (int s : alive) {
    std::string loop = rstar(e[s][s]);
    for (int p = 0; p < n + 2; ++p) {
      if (p == s || e[p][s] == "@") continue;
      for (int q = 0; q < n + 2; ++q) {
        if (q == s || e[s][q] == "@") continue;
        e[p][q] = runion(e[p][q], rconcat(rconcat(e[p][s], loop), e[s][q]));
      }
    }
    for (int p = 0; p < n + 2; ++p) e[p][s] = e[s][p] = "@";
  }
  return e[n][n + 1];
}

std::string to_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int q = 0; q < d.num_states; ++q)
    os << "  q" << q << " [shape=" << (d.accepting[q] ? "doublecircle" : "circle")
       << "];\n";
  os << "  init -> q" << d.initial << ";\n";
  for (int q = 0; q < d.num_states; ++q)
    for (int a = 0; a < d.alphabet.size(); ++a)
      os << "  q" << q << " -> q" << d.step(q, a) << " [label=\""
         << d.alphabet.letter(a) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace tlhier
