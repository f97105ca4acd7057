#include "tlhier/json_io.hpp"

namespace tlhier {

Json alphabet_to_json(const Alphabet& a) { return Json(a.letters()); }

Alphabet alphabet_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("alphabet: expected an array of letters");
  std::vector<std::string> letters;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError("alphabet: letters must be strings");
    letters.push_back(x.get<std::string>());
  }
  return Alphabet(std::move(letters));
}

Json dfa_to_json(const Dfa& d) {
  Json j;
  j["alphabet"] = alphabet_to_json(d.alphabet);
  j["states"] = d.num_states;
  j["initial"] = d.initial;
  Json acc = Json::array();
  for (int q = 0; q < d.num_states; ++q)
    if (d.accepting[q]) acc.push_back(q);
  j["accepting"] = acc;
  Json trans = Json::array();
  for (int q = 0; q < d.num_states; ++q)
    for (int a = 0; a < d.alphabet.size(); ++a)
      trans.push_back({q, d.alphabet.letter(a), d.step(q, a)});
  j["transitions"] = trans;
  return j;
}

Dfa dfa_from_json(const Json& j) {
  try {
    Dfa d;
    d.alphabet = alphabet_from_json(j.at("alphabet"));
    d.num_states = j.at("states").get<int>();
    if (d.num_states <= 0) throw InputError("dfa: need at least one state");
    d.initial = j.at("initial").get<int>();
    if (d.initial < 0 || d.initial >= d.num_states)
      throw InputError("dfa: initial state out of range");
    d.accepting.assign(d.num_states, 0);
    for (const auto& q : j.at("accepting")) {
      int s = q.get<int>();
      if (s < 0 || s >= d.num_states)
        throw InputError("dfa: accepting state out of range");
      d.accepting[s] = 1;
    }
    d.trans.assign(static_cast<std::size_t>(d.num_states) * d.alphabet.size(), -1);
    for (const auto& t : j.at("transitions")) {
      if (!t.is_array() || t.size() != 3)
        throw InputError("dfa: transition must be [src, letter, dst]");
      int src = t[0].get<int>();
      auto letter = d.alphabet.index(t[1].get<std::string>());
      int dst = t[2].get<int>();
      if (!letter) throw InputError("dfa: transition letter not in alphabet");
      if (src < 0 || src >= d.num_states || dst < 0 || dst >= d.num_states)
        throw InputError("dfa: transition state out of range");
      int& cell = d.trans[src * d.alphabet.size() + *letter];
      if (cell >= 0) throw InputError("dfa: duplicate transition");
      cell = dst;
    }
    for (int cell : d.trans)
      if (cell < 0) throw InputError("dfa: transition table is not complete");
    return d;
  } catch (const Json::exception& e) {
    throw InputError(std::string("dfa: malformed json: ") + e.what());
  }
}

Json monoid_to_json(const Monoid& m) {
  Json j;
  j["size"] = m.size;
  j["identity"] = m.identity;
  j["mult"] = m.mult;
  return j;
}

Monoid monoid_from_json(const Json& j) {
  try {
    return Monoid::validated(j.at("size").get<int>(),
                             j.at("mult").get<std::vector<int>>(),
                             j.at("identity").get<int>());
  } catch (const Json::exception& e) {
    throw InputError(std::string("monoid: malformed json: ") + e.what());
  }
}

Json morphism_to_json(const Morphism& m) {
  Json j;
  j["alphabet"] = alphabet_to_json(m.alphabet);
  j["codomain"] = monoid_to_json(m.codomain);
  j["letter_image"] = m.letter_image;
  return j;
}

Morphism morphism_from_json(const Json& j) {
  try {
    Morphism m;
    m.alphabet = alphabet_from_json(j.at("alphabet"));
    m.codomain = monoid_from_json(j.at("codomain"));
    m.letter_image = j.at("letter_image").get<std::vector<int>>();
    if (static_cast<int>(m.letter_image.size()) != m.alphabet.size())
      throw InputError("morphism: one letter image per letter required");
    for (int img : m.letter_image)
      if (img < 0 || img >= m.codomain.size)
        throw InputError("morphism: letter image out of range");
    return m;
  } catch (const Json::exception& e) {
    throw InputError(std::string("morphism: malformed json: ") + e.what());
  }
}

Json semiring_to_json(const IdemSemiring& r) {
  Json j;
  j["size"] = r.size;
  j["zero"] = r.zero;
  j["one"] = r.one;
  j["add"] = r.add;
  j["mult"] = r.mult;
  if (!r.masks.empty()) j["masks"] = r.masks;
  return j;
}

IdemSemiring semiring_from_json(const Json& j) {
  try {
    IdemSemiring r = IdemSemiring::validated(
        j.at("size").get<int>(), j.at("add").get<std::vector<int>>(),
        j.at("mult").get<std::vector<int>>(), j.at("zero").get<int>(),
        j.at("one").get<int>());
    if (j.contains("masks")) r.masks = j.at("masks").get<std::vector<uint32_t>>();
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("semiring: malformed json: ") + e.what());
  }
}

Json formula_to_json(const TlPtr& f, const Alphabet& a) {
  using K = TlFormula::Kind;
  Json j;
  switch (f->kind) {
    case K::True: j["op"] = "true"; break;
    case K::False: j["op"] = "false"; break;
    case K::Min: j["op"] = "min"; break;
    case K::Max: j["op"] = "max"; break;
    case K::Letter:
      j["op"] = "letter";
      j["letter"] = a.letter(f->letter);
      break;
    case K::Not:
      j["op"] = "not";
      j["arg"] = formula_to_json(f->lhs, a);
      break;
    case K::And:
    case K::Or:
      j["op"] = f->kind == K::And ? "and" : "or";
      j["lhs"] = formula_to_json(f->lhs, a);
      j["rhs"] = formula_to_json(f->rhs, a);
      break;
    case K::Finally:
    case K::Previously:
      j["op"] = f->kind == K::Finally ? "finally" : "previously";
      j["lang"] = dfa_to_json(f->lang);
      j["arg"] = formula_to_json(f->lhs, a);
      break;
  }
  return j;
}

TlPtr formula_from_json(const Json& j, const Alphabet& a) {
  try {
    std::string op = j.at("op").get<std::string>();
    if (op == "true") return TlFormula::make_true();
    if (op == "false") return TlFormula::make_false();
    if (op == "min") return TlFormula::make_min();
    if (op == "max") return TlFormula::make_max();
    if (op == "letter") {
      auto idx = a.index(j.at("letter").get<std::string>());
      if (!idx) throw InputError("formula: letter not in alphabet");
      return TlFormula::make_letter(*idx);
    }
    if (op == "not") return TlFormula::make_not(formula_from_json(j.at("arg"), a));
    if (op == "and" || op == "or") {
      TlPtr l = formula_from_json(j.at("lhs"), a);
      TlPtr r = formula_from_json(j.at("rhs"), a);
      return op == "and" ? TlFormula::make_and(l, r) : TlFormula::make_or(l, r);
    }
    if (op == "finally" || op == "previously") {
      Dfa lang = dfa_from_json(j.at("lang"));
      if (!(lang.alphabet == a))
        throw InputError("formula: modality language alphabet mismatch");
      TlPtr arg = formula_from_json(j.at("arg"), a);
      return op == "finally" ? TlFormula::make_finally(lang, arg)
                             : TlFormula::make_previously(lang, arg);
    }
    throw InputError("formula: unknown op: " + op);
  } catch (const Json::exception& e) {
    throw InputError(std::string("formula: malformed json: ") + e.what());
  }
}

Json envelope(const std::string& command, Json result) {
  Json j;
  j["format"] = "tlhier/1";
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

}  // namespace tlhier
