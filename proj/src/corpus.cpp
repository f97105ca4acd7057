#include "tlhier/corpus.hpp"

namespace tlhier {

namespace {

const Alphabet kAb({"a", "b"});

Nfa word_block(const Word& w) { return Nfa::word(kAb, w); }

// x_i = a b^i as a word.
Word x_word(int i) {
  Word w = {0};
  for (int j = 0; j < i; ++j) w.push_back(1);
  return w;
}

// y_i = a+ b^i as a language.
Nfa y_block(int i) {
  Nfa n = nfa_plus(Nfa::letter(kAb, 0));
  for (int j = 0; j < i; ++j) n = nfa_concat(n, Nfa::letter(kAb, 1));
  return n;
}

void guard(int value, int cap, const char* who) {
  if (value < 0 || value > cap)
    throw ResourceError(std::string(who) + ": level out of supported range");
}

}  // namespace

Dfa dyck_level(int n) {
  guard(n, 6, "dyck_level");
  Nfa cur = Nfa::epsilon(kAb);
  for (int i = 0; i < n; ++i)
    cur = nfa_star(nfa_concat(nfa_concat(Nfa::letter(kAb, 0), cur),
                              Nfa::letter(kAb, 1)));
  return minimize(determinize(cur));
}

Dfa k_level(int n) {
  guard(n, 2, "k_level");
  Nfa q = nfa_concat(nfa_concat(nfa_plus(word_block(x_word(1))),
                                nfa_plus(word_block(x_word(2)))),
                     word_block(x_word(1)));
  Nfa r = nfa_concat(nfa_concat(nfa_plus(word_block(x_word(3))),
                                nfa_plus(word_block(x_word(4)))),
                     word_block(x_word(3)));
  Nfa cur = Nfa::epsilon(kAb);
  for (int i = 0; i < n; ++i)
    cur = nfa_star(nfa_concat(nfa_concat(q, cur), r));
  return minimize(determinize(cur));
}

Dfa l_level(int n) {
  guard(n, 2, "l_level");
  Nfa s = nfa_concat(nfa_concat(nfa_plus(y_block(1)), nfa_plus(y_block(2))),
                     y_block(1));
  Nfa t = nfa_concat(nfa_concat(nfa_plus(y_block(3)), nfa_plus(y_block(4))),
                     y_block(3));
  Nfa cur = nfa_star(Nfa::letter(kAb, 0));
  for (int i = 0; i < n; ++i)
    cur = nfa_star(nfa_union(Nfa::letter(kAb, 0),
                             nfa_concat(nfa_concat(s, cur), t)));
  return minimize(determinize(cur));
}

Alphabet level_alphabet(int k) {
  guard(k, 9, "level_alphabet");
  std::vector<std::string> names;
  for (int i = 0; i <= k; ++i) names.push_back(std::to_string(i));
  return Alphabet(std::move(names));
}

UvPair uv_level(int k) {
  guard(k, 3, "uv_level");
  Alphabet a = level_alphabet(k);
  // Build bottom-up, re-embedding lower levels into the growing alphabet.
  Nfa u = Nfa::epsilon(a);
  Nfa v = nfa_plus(Nfa::letter(a, 0));
  for (int i = 1; i <= k; ++i) {
    Nfa li = Nfa::letter(a, i);
    Nfa lv = nfa_concat(li, v);
    Nfa lv_star = nfa_star(lv);
    Nfa new_u = lv_star;
    Nfa new_v = nfa_concat(nfa_concat(lv_star, nfa_concat(li, u)), lv_star);
    u = std::move(new_u);
    v = std::move(new_v);
  }
  return {minimize(determinize(u)), minimize(determinize(v))};
}

Dfa encode_positional(int k, const Dfa& d) {
  guard(k, 3, "encode_positional");
  if (!(d.alphabet == level_alphabet(k)))
    throw InputError("encode_positional: wrong input alphabet");
  return substitute(d, kAb, [&](int letter) {
    Word w;
    for (int j = 0; j < letter; ++j) w.push_back(0);
    w.push_back(1);
    for (int j = 0; j < k - letter; ++j) w.push_back(0);
    return w;
  });
}

Dfa encode_marker(int k, const Dfa& d) {
  guard(k, 3, "encode_marker");
  if (!(d.alphabet == level_alphabet(k)))
    throw InputError("encode_marker: wrong input alphabet");
  // Marker letter may appear anywhere (self-loop on every state), then each
  // level letter l_i is spelled b a^{i+1}.
  Nfa n;
  n.alphabet = kAb;
  n.num_states = d.num_states;
  n.next.assign(d.num_states, std::vector<std::vector<int>>(2));
  n.accepting = d.accepting;
  n.initial = {d.initial};
  for (int q = 0; q < d.num_states; ++q) {
    n.next[q][1].push_back(q);  // free marker
    for (int c = 0; c < d.alphabet.size(); ++c) {
      // Path b a^{c+1} to the target.
      int src = q;
      for (int step = 0; step <= c + 1; ++step) {
        int letter = step == 0 ? 1 : 0;
        int dst;
        if (step == c + 1) {
          dst = d.step(q, c);
        } else {
          dst = n.num_states++;
          n.next.emplace_back(2);
          n.accepting.push_back(0);
        }
        n.next[src][letter].push_back(dst);
        src = dst;
      }
    }
  }
  return minimize(determinize(n));
}

}  // namespace tlhier
