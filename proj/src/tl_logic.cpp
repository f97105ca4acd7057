#include "tlhier/tl_logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace tlhier {

namespace {

TlPtr node(TlFormula f) { return std::make_shared<const TlFormula>(std::move(f)); }

}  // namespace

TlPtr TlFormula::make_true() { return node({Kind::True}); }
TlPtr TlFormula::make_false() { return node({Kind::False}); }
TlPtr TlFormula::make_min() { return node({Kind::Min}); }
TlPtr TlFormula::make_max() { return node({Kind::Max}); }
TlPtr TlFormula::make_letter(int letter) {
  TlFormula f{Kind::Letter};
  f.letter = letter;
  return node(std::move(f));
}
TlPtr TlFormula::make_not(TlPtr f) {
  TlFormula g{Kind::Not};
  g.lhs = std::move(f);
  return node(std::move(g));
}
TlPtr TlFormula::make_and(TlPtr a, TlPtr b) {
  TlFormula g{Kind::And};
  g.lhs = std::move(a);
  g.rhs = std::move(b);
  return node(std::move(g));
}
TlPtr TlFormula::make_or(TlPtr a, TlPtr b) {
  TlFormula g{Kind::Or};
  g.lhs = std::move(a);
  g.rhs = std::move(b);
  return node(std::move(g));
}
TlPtr TlFormula::make_finally(Dfa lang, TlPtr f) {
  TlFormula g{Kind::Finally};
  g.lang = minimize(lang);
  g.lhs = std::move(f);
  return node(std::move(g));
}
TlPtr TlFormula::make_previously(Dfa lang, TlPtr f) {
  TlFormula g{Kind::Previously};
  g.lang = minimize(lang);
  g.lhs = std::move(f);
  return node(std::move(g));
}

int formula_size(const TlPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

int formula_depth(const TlPtr& f) {
  if (!f) return 0;
  int d = std::max(formula_depth(f->lhs), formula_depth(f->rhs));
  if (f->kind == TlFormula::Kind::Finally || f->kind == TlFormula::Kind::Previously)
    ++d;
  return d;
}

std::vector<uint8_t> satisfaction(const TlPtr& f, const Alphabet& a, const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<uint8_t> sat(n + 2, 0);
  using K = TlFormula::Kind;
  switch (f->kind) {
    case K::True:
      std::fill(sat.begin(), sat.end(), 1);
      break;
    case K::False:
      break;
    case K::Min:
      sat[0] = 1;
      break;
    case K::Max:
      sat[n + 1] = 1;
      break;
    case K::Letter:
      for (int i = 1; i <= n; ++i) sat[i] = (w[i - 1] == f->letter);
      break;
    case K::Not: {
      auto s = satisfaction(f->lhs, a, w);
      for (int i = 0; i <= n + 1; ++i) sat[i] = !s[i];
      break;
    }
    case K::And: {
      auto s1 = satisfaction(f->lhs, a, w);
      auto s2 = satisfaction(f->rhs, a, w);
      for (int i = 0; i <= n + 1; ++i) sat[i] = s1[i] && s2[i];
      break;
    }
    case K::Or: {
      auto s1 = satisfaction(f->lhs, a, w);
      auto s2 = satisfaction(f->rhs, a, w);
      for (int i = 0; i <= n + 1; ++i) sat[i] = s1[i] || s2[i];
      break;
    }
    case K::Finally: {
      if (!(f->lang.alphabet == a))
        throw InputError("modality language alphabet mismatch");
      auto s = satisfaction(f->lhs, a, w);
      const Dfa& L = f->lang;
      // S(i) = states q such that some j > i has the infix between i and j
      // in L (read from q) and the operand true at j.
      std::vector<uint8_t> S(L.num_states, 0);  // S(n+1) = empty
      auto out_of = [&](const std::vector<uint8_t>& S_) {
        return S_[L.initial] != 0;
      };
      sat[n + 1] = 0;
      for (int i = n; i >= 0; --i) {
        std::vector<uint8_t> Snew(L.num_states, 0);
        if (s[i + 1])
          for (int q = 0; q < L.num_states; ++q)
            if (L.accepting[q]) Snew[q] = 1;
        if (i + 1 <= n)
          for (int q = 0; q < L.num_states; ++q)
            if (S[L.step(q, w[i])]) Snew[q] = 1;
        S = std::move(Snew);
        sat[i] = out_of(S);
      }
      break;
    }
    case K::Previously: {
      if (!(f->lang.alphabet == a))
        throw InputError("modality language alphabet mismatch");
      auto s = satisfaction(f->lhs, a, w);
      const Dfa& L = f->lang;
      // T(i) = states reached from the initial state of L by the infix
      // between some j < i (with operand true at j) and i.
      std::vector<uint8_t> T(L.num_states, 0);  // T(0) = empty
      auto hit = [&](const std::vector<uint8_t>& T_) {
        for (int q = 0; q < L.num_states; ++q)
          if (T_[q] && L.accepting[q]) return true;
        return false;
      };
      sat[0] = 0;
      for (int i = 1; i <= n + 1; ++i) {
        std::vector<uint8_t> Tnew(L.num_states, 0);
        if (s[i - 1]) Tnew[L.initial] = 1;
        if (i - 1 >= 1 && i - 1 <= n)
          for (int q = 0; q < L.num_states; ++q)
            if (T[q]) Tnew[L.step(q, w[i - 2])] = 1;
        T = std::move(Tnew);
        sat[i] = hit(T);
      }
      break;
    }
  }
  return sat;
}

bool eval_formula(const TlPtr& f, const Alphabet& a, const Word& w, int position) {
  if (position < 0 || position > static_cast<int>(w.size()) + 1)
    throw InputError("eval: position out of range");
  return satisfaction(f, a, w)[position] != 0;
}

bool word_in_language(const TlPtr& f, const Alphabet& a, const Word& w) {
  return satisfaction(f, a, w)[0] != 0;
}

// ---------------------------------------------------------------------------
// Compilation: each subformula is turned into a DFA over a decorated alphabet
// (base symbol, mark bit) that accepts exactly the sentinel-wrapped decorated
// strings whose mark track equals the truth value of the subformula at every
// position.  For every plain string there is exactly one accepted decoration,
// which makes existential projection of inner tracks safe.
// ---------------------------------------------------------------------------

namespace {

struct DecAlphabet {
  Alphabet al;
  int base_count = 0;  // |A| + 2 sentinels
  int tracks = 0;
  int lt = 0, gt = 0;  // sentinel base indices

  int idx(int base, int bits) const { return base * (1 << tracks) + bits; }
};

DecAlphabet make_dec(const Alphabet& a, int tracks) {
  DecAlphabet d;
  d.base_count = a.size() + 2;
  d.tracks = tracks;
  d.lt = a.size();
  d.gt = a.size() + 1;
  std::vector<std::string> names;
  for (int b = 0; b < d.base_count; ++b) {
    std::string bn = b == d.lt ? "<" : b == d.gt ? ">" : a.letter(b);
    for (int bits = 0; bits < (1 << tracks); ++bits)
      names.push_back(bn + "#" + std::to_string(bits));
  }
  d.al = Alphabet(std::move(names));
  return d;
}

// Graph whose single mark track must equal pred(base) at every position.
Dfa atom_graph(const DecAlphabet& dec, const std::function<bool(int)>& pred) {
  Dfa d;
  d.alphabet = dec.al;
  d.num_states = 2;  // 0 = live (accepting), 1 = dead
  d.initial = 0;
  d.accepting = {1, 0};
  d.trans.assign(2 * dec.al.size(), 1);
  for (int b = 0; b < dec.base_count; ++b)
    for (int m = 0; m < 2; ++m)
      d.trans[0 * dec.al.size() + dec.idx(b, m)] = (m == (pred(b) ? 1 : 0)) ? 0 : 1;
  return d;
}

Dfa flip_mark(const DecAlphabet& dec, const Dfa& g) {
  Dfa d = g;
  for (int q = 0; q < g.num_states; ++q)
    for (int b = 0; b < dec.base_count; ++b)
      for (int m = 0; m < 2; ++m)
        d.trans[q * dec.al.size() + dec.idx(b, m)] =
            g.trans[q * dec.al.size() + dec.idx(b, 1 - m)];
  return d;
}

Dfa bool_graph(const DecAlphabet& dec, const Dfa& g1, const Dfa& g2, bool is_and,
               int max_states) {
  Nfa n;
  n.alphabet = dec.al;
  n.num_states = g1.num_states * g2.num_states;
  n.next.assign(n.num_states, std::vector<std::vector<int>>(dec.al.size()));
  n.accepting.assign(n.num_states, 0);
  auto sid = [&](int p, int q) { return p * g2.num_states + q; };
  n.initial = {sid(g1.initial, g2.initial)};
  for (int p = 0; p < g1.num_states; ++p)
    for (int q = 0; q < g2.num_states; ++q) {
      n.accepting[sid(p, q)] = g1.accepting[p] && g2.accepting[q];
      for (int b = 0; b < dec.base_count; ++b)
        for (int m1 = 0; m1 < 2; ++m1)
          for (int m2 = 0; m2 < 2; ++m2) {
            int m = is_and ? (m1 && m2) : (m1 || m2);
            int p2 = g1.step(p, dec.idx(b, m1));
            int q2 = g2.step(q, dec.idx(b, m2));
            n.next[sid(p, q)][dec.idx(b, m)].push_back(sid(p2, q2));
          }
    }
  return minimize(determinize(n, max_states));
}

// Deterministic consistency checker for the "finally" mark, reading the
// decorated word right to left.  Letter bits: bit1 = operand mark, bit0 =
// own mark.  State = set of L-states q such that some already-seen position
// j (to the right) has the infix in L from q and the operand true at j.
Dfa finally_checker_reversed(const DecAlphabet& dec2, const Alphabet& base_al,
                             const Dfa& L, int max_states) {
  std::map<std::vector<uint8_t>, int> id;
  std::vector<std::vector<uint8_t>> states;
  auto intern = [&](std::vector<uint8_t> s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(states.size());
    if (i >= max_states) throw ResourceError("compile: checker state guard exceeded");
    id.emplace(s, i);
    states.push_back(std::move(s));
    return i;
  };
  Dfa d;
  d.alphabet = dec2.al;
  d.initial = intern(std::vector<uint8_t>(L.num_states, 0));
  std::vector<int> trans;
  std::vector<uint8_t> acc;
  const int dead = -1;
  std::vector<std::vector<int>> rows;
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    std::vector<int> row(dec2.al.size(), dead);
    std::vector<uint8_t> S = states[cur];
    bool own_mark = S[L.initial] != 0;
    for (int b = 0; b < dec2.base_count; ++b)
      for (int mc = 0; mc < 2; ++mc)
        for (int mo = 0; mo < 2; ++mo) {
          if ((mo != 0) != own_mark) continue;  // stays dead
          std::vector<uint8_t> Snew(L.num_states, 0);
          if (mc)
            for (int q = 0; q < L.num_states; ++q)
              if (L.accepting[q]) Snew[q] = 1;
          if (b < base_al.size())
            for (int q = 0; q < L.num_states; ++q)
              if (S[L.step(q, b)]) Snew[q] = 1;
          row[dec2.idx(b, (mc << 1) | mo)] = intern(std::move(Snew));
        }
    rows.push_back(std::move(row));
  }
  // Materialize with an explicit dead state at the end.
  int nd = static_cast<int>(states.size());
  d.num_states = nd + 1;
  d.trans.assign(static_cast<std::size_t>(d.num_states) * dec2.al.size(), nd);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < nd; ++i) {
    d.accepting[i] = 1;
    for (int c = 0; c < dec2.al.size(); ++c)
      d.trans[i * dec2.al.size() + c] = rows[i][c] < 0 ? nd : rows[i][c];
  }
  return d;
}

// Same for the "previously" mark, reading left to right (no reversal needed).
// State = set of L-states reached from the initial state of L by the infix
// from some already-seen position j (with operand true at j) up to here.
Dfa previously_checker(const DecAlphabet& dec2, const Alphabet& base_al,
                       const Dfa& L, int max_states) {
  std::map<std::vector<uint8_t>, int> id;
  std::vector<std::vector<uint8_t>> states;
  auto intern = [&](std::vector<uint8_t> s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    int i = static_cast<int>(states.size());
    if (i >= max_states) throw ResourceError("compile: checker state guard exceeded");
    id.emplace(s, i);
    states.push_back(std::move(s));
    return i;
  };
  Dfa d;
  d.alphabet = dec2.al;
  d.initial = intern(std::vector<uint8_t>(L.num_states, 0));
  std::vector<std::vector<int>> rows;
  for (std::size_t cur = 0; cur < states.size(); ++cur) {
    std::vector<int> row(dec2.al.size(), -1);
    std::vector<uint8_t> T = states[cur];
    bool own_mark = false;
    for (int q = 0; q < L.num_states; ++q)
      if (T[q] && L.accepting[q]) own_mark = true;
    for (int b = 0; b < dec2.base_count; ++b)
      for (int mc = 0; mc < 2; ++mc)
        for (int mo = 0; mo < 2; ++mo) {
          if ((mo != 0) != own_mark) continue;
          std::vector<uint8_t> Tnew(L.num_states, 0);
          if (mc) Tnew[L.initial] = 1;
          if (b < base_al.size())
            for (int q = 0; q < L.num_states; ++q)
              if (T[q]) Tnew[L.step(q, b)] = 1;
          row[dec2.idx(b, (mc << 1) | mo)] = intern(std::move(Tnew));
        }
    rows.push_back(std::move(row));
  }
  int nd = static_cast<int>(states.size());
  d.num_states = nd + 1;
  d.trans.assign(static_cast<std::size_t>(d.num_states) * dec2.al.size(), nd);
  d.accepting.assign(d.num_states, 0);
  for (int i = 0; i < nd; ++i) {
    d.accepting[i] = 1;
    for (int c = 0; c < dec2.al.size(); ++c)
      if (rows[i][c] >= 0) d.trans[i * dec2.al.size() + c] = rows[i][c];
  }
  return d;
}

// Product of a 2-track checker with the 1-track operand graph, projecting the
// operand mark away.  Result is a 1-track graph for the modal formula.
Dfa combine_checker(const DecAlphabet& dec1, const DecAlphabet& dec2,
                    const Dfa& checker, const Dfa& child, int max_states) {
  Nfa n;
  n.alphabet = dec1.al;
  n.num_states = checker.num_states * child.num_states;
  n.next.assign(n.num_states, std::vector<std::vector<int>>(dec1.al.size()));
  n.accepting.assign(n.num_states, 0);
  auto sid = [&](int p, int q) { return p * child.num_states + q; };
  n.initial = {sid(checker.initial, child.initial)};
  for (int p = 0; p < checker.num_states; ++p)
    for (int q = 0; q < child.num_states; ++q) {
      n.accepting[sid(p, q)] = checker.accepting[p] && child.accepting[q];
      for (int b = 0; b < dec1.base_count; ++b)
        for (int mo = 0; mo < 2; ++mo)
          for (int mc = 0; mc < 2; ++mc) {
            int p2 = checker.step(p, dec2.idx(b, (mc << 1) | mo));
            int q2 = child.step(q, dec1.idx(b, mc));
            n.next[sid(p, q)][dec1.idx(b, mo)].push_back(sid(p2, q2));
          }
    }
  return minimize(determinize(n, max_states));
}

Dfa marked_graph(const TlPtr& f, const Alphabet& a, const DecAlphabet& dec1,
                 int max_states) {
  using K = TlFormula::Kind;
  switch (f->kind) {
    case K::True:
      return atom_graph(dec1, [](int) { return true; });
    case K::False:
      return atom_graph(dec1, [](int) { return false; });
    case K::Min:
      return atom_graph(dec1, [&](int b) { return b == dec1.lt; });
    case K::Max:
      return atom_graph(dec1, [&](int b) { return b == dec1.gt; });
    case K::Letter:
      if (f->letter < 0 || f->letter >= a.size())
        throw InputError("compile: letter atom out of alphabet range");
      return atom_graph(dec1, [&](int b) { return b == f->letter; });
    case K::Not:
      return flip_mark(dec1, marked_graph(f->lhs, a, dec1, max_states));
    case K::And:
    case K::Or: {
      Dfa g1 = marked_graph(f->lhs, a, dec1, max_states);
      Dfa g2 = marked_graph(f->rhs, a, dec1, max_states);
      return bool_graph(dec1, g1, g2, f->kind == K::And, max_states);
    }
    case K::Finally: {
      if (!(f->lang.alphabet == a))
        throw InputError("compile: modality language alphabet mismatch");
      Dfa child = marked_graph(f->lhs, a, dec1, max_states);
      DecAlphabet dec2 = make_dec(a, 2);
      Dfa rev = finally_checker_reversed(dec2, a, f->lang, max_states);
      Dfa checker = determinize(nfa_reverse(rev), max_states);
      return combine_checker(dec1, dec2, checker, child, max_states);
    }
    case K::Previously: {
      if (!(f->lang.alphabet == a))
        throw InputError("compile: modality language alphabet mismatch");
      Dfa child = marked_graph(f->lhs, a, dec1, max_states);
      DecAlphabet dec2 = make_dec(a, 2);
      Dfa checker = previously_checker(dec2, a, f->lang, max_states);
      return combine_checker(dec1, dec2, checker, child, max_states);
    }
  }
  throw InputError("compile: bad formula node");
}

}  // namespace

Dfa compile_formula(const TlPtr& f, const Alphabet& a, int max_states) {
  DecAlphabet dec1 = make_dec(a, 1);
  Dfa g = marked_graph(f, a, dec1, max_states);

  // Keep only decorations whose mark at the leading sentinel is 1, project
  // the mark, then strip the sentinels.
  Nfa proj;
  std::vector<std::string> wrapped_names = a.letters();
  wrapped_names.push_back("<");
  wrapped_names.push_back(">");
  Alphabet wrapped(std::move(wrapped_names));
  proj.alphabet = wrapped;
  proj.num_states = 2 * g.num_states;  // flag: still before first symbol?
  proj.next.assign(proj.num_states, std::vector<std::vector<int>>(wrapped.size()));
  proj.accepting.assign(proj.num_states, 0);
  auto sid = [&](int q, int started) { return q * 2 + started; };
  proj.initial = {sid(g.initial, 0)};
  for (int q = 0; q < g.num_states; ++q) {
    proj.accepting[sid(q, 1)] = g.accepting[q];
    for (int b = 0; b < dec1.base_count; ++b)
      for (int m = 0; m < 2; ++m) {
        int t = g.step(q, dec1.idx(b, m));
        // First symbol must carry mark 1 (the formula holds at position 0).
        if (m == 1) proj.next[sid(q, 0)][b].push_back(sid(t, 1));
        proj.next[sid(q, 1)][b].push_back(sid(t, 1));
      }
  }
  Dfa wrapped_dfa = determinize(proj, max_states);
  // Valid words have the exact shape < w >; peel the sentinels off.
  Dfa out;
  out.alphabet = a;
  out.num_states = wrapped_dfa.num_states;
  out.initial = wrapped_dfa.step(wrapped_dfa.initial, *wrapped.index("<"));
  out.trans.resize(static_cast<std::size_t>(out.num_states) * a.size());
  out.accepting.assign(out.num_states, 0);
  for (int q = 0; q < out.num_states; ++q) {
    out.accepting[q] =
        wrapped_dfa.accepting[wrapped_dfa.step(q, *wrapped.index(">"))];
    for (int c = 0; c < a.size(); ++c)
      out.trans[q * a.size() + c] = wrapped_dfa.step(q, c);
  }
  return minimize(out);
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

class FormulaParser {
 public:
  FormulaParser(const std::string& text, const Alphabet& a) : text_(text), a_(a) {}

  TlPtr parse() {
    TlPtr f = parse_or();
    skip_ws();
    if (pos_ != text_.size())
      throw InputError("formula: unexpected character at position " +
                       std::to_string(pos_));
    return f;
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
  bool match_word(const std::string& w) {
    skip_ws();
    if (text_.compare(pos_, w.size(), w) == 0) {
      std::size_t end = pos_ + w.size();
      if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])))
        return false;
      pos_ = end;
      return true;
    }
    return false;
  }

  TlPtr parse_or() {
    TlPtr f = parse_and();
    while (peek_is('|')) {
      ++pos_;
      f = TlFormula::make_or(f, parse_and());
    }
    return f;
  }

  TlPtr parse_and() {
    TlPtr f = parse_unary();
    while (peek_is('&')) {
      ++pos_;
      f = TlFormula::make_and(f, parse_unary());
    }
    return f;
  }

  TlPtr parse_modal(bool is_finally) {
    if (!peek_is('[')) throw InputError("formula: expected '[' after modality");
    ++pos_;
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size() && !(text_[pos_] == ']' && depth == 0)) {
      if (text_[pos_] == '[') ++depth;
      if (text_[pos_] == ']') --depth;
      ++pos_;
    }
    if (pos_ >= text_.size()) throw InputError("formula: missing ']'");
    std::string rx = text_.substr(start, pos_ - start);
    ++pos_;
    Dfa lang = dfa_from_regex(rx, a_);
    if (!peek_is('{')) throw InputError("formula: expected '{' after modality language");
    ++pos_;
    TlPtr body = parse_or();
    if (!peek_is('}')) throw InputError("formula: missing '}'");
    ++pos_;
    return is_finally ? TlFormula::make_finally(lang, body)
                      : TlFormula::make_previously(lang, body);
  }

  TlPtr parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) throw InputError("formula: unexpected end of input");
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return TlFormula::make_not(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      TlPtr f = parse_or();
      if (!peek_is(')')) throw InputError("formula: missing ')'");
      ++pos_;
      return f;
    }
    if (c == 'F' || c == 'P') {
      // Lookahead: modality iff followed by '['.
      std::size_t save = pos_;
      ++pos_;
      if (peek_is('[')) return parse_modal(c == 'F');
      pos_ = save;
      if (c == 'F') {
        ++pos_;
        return TlFormula::make_false();
      }
    }
    if (match_word("T")) return TlFormula::make_true();
    if (match_word("min")) return TlFormula::make_min();
    if (match_word("max")) return TlFormula::make_max();
    if (c == '\'') {
      std::size_t end = text_.find('\'', pos_ + 1);
      if (end == std::string::npos) throw InputError("formula: unterminated letter");
      std::string name = text_.substr(pos_ + 1, end - pos_ - 1);
      auto idx = a_.index(name);
      if (!idx) throw InputError("formula: letter '" + name + "' not in alphabet");
      pos_ = end + 1;
      return TlFormula::make_letter(*idx);
    }
    throw InputError("formula: unexpected character at position " +
                     std::to_string(pos_));
  }

  const std::string& text_;
  const Alphabet& a_;
  std::size_t pos_ = 0;
};

void format_rec(const TlPtr& f, const Alphabet& a, std::ostringstream& os) {
  using K = TlFormula::Kind;
  switch (f->kind) {
    case K::True: os << "T"; break;
    case K::False: os << "F"; break;
    case K::Min: os << "min"; break;
    case K::Max: os << "max"; break;
    case K::Letter: os << "'" << a.letter(f->letter) << "'"; break;
    case K::Not:
      os << "!(";
      format_rec(f->lhs, a, os);
      os << ")";
      break;
    case K::And:
    case K::Or:
      os << "(";
      format_rec(f->lhs, a, os);
      os << (f->kind == K::And ? " & " : " | ");
      format_rec(f->rhs, a, os);
      os << ")";
      break;
    case K::Finally:
    case K::Previously:
      os << (f->kind == K::Finally ? "F" : "P") << "[" << regex_of(f->lang)
         << "]{";
      format_rec(f->lhs, a, os);
      os << "}";
      break;
  }
}

}  // namespace

TlPtr parse_formula(const std::string& text, const Alphabet& a) {
  return FormulaParser(text, a).parse();
}

std::string format_formula(const TlPtr& f, const Alphabet& a) {
  std::ostringstream os;
  format_rec(f, a, os);
  return os.str();
}

}  // namespace tlhier
