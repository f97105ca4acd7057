#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "tlhier/corpus.hpp"
#include "tlhier/json_io.hpp"
#include "tlhier/membership.hpp"
#include "tlhier/tlat_cover.hpp"

using namespace tlhier;

namespace {

constexpr const char* kVersion = "1.0.0";

Alphabet parse_alphabet(const std::string& text) {
  if (text.empty()) throw InputError("--alphabet must not be empty");
  std::vector<std::string> letters;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      letters.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  } else {
    for (char c : text) letters.push_back(std::string(1, c));
  }
  return Alphabet(std::move(letters));
}

Word parse_word(const std::string& text, const Alphabet& a) {
  Word w;
  if (text == "~") return w;
  for (char c : text) {
    auto idx = a.index(std::string(1, c));
    if (!idx) throw InputError(std::string("word letter '") + c + "' not in alphabet");
    w.push_back(*idx);
  }
  return w;
}

Dfa load_language(const std::string& regex, const std::string& dfa_path,
                  const Alphabet& a) {
  if (!regex.empty() && !dfa_path.empty())
    throw InputError("give either a regex or a dfa file, not both");
  if (!regex.empty()) return dfa_from_regex(regex, a);
  if (dfa_path.empty()) throw InputError("missing language (use --lang or --dfa)");
  std::ifstream in(dfa_path);
  if (!in) throw InputError("cannot open " + dfa_path);
  Json j = Json::parse(in, nullptr, true);
  // Accept both a bare DFA object and the tool's own output envelopes.
  if (j.contains("result")) j = j["result"];
  if (j.contains("dfa")) j = j["dfa"];
  Dfa d = dfa_from_json(j);
  if (!(d.alphabet == a))
    throw InputError("dfa alphabet does not match --alphabet");
  return d;
}

void emit(const std::string& command, Json result, const std::string& out_path,
          std::chrono::steady_clock::time_point start) {
  Json env = envelope(command, std::move(result));
  env["version"] = kVersion;
  env["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  if (out_path.empty()) {
    std::cout << env.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << env.dump(2) << "\n";
  }
}

Json pairs_to_json(const PairSet& p) {
  Json pairs = Json::array();
  for (int s = 0; s < p.monoid_size; ++s)
    for (int t = 0; t < p.monoid_size; ++t)
      if (p.contains(s, t)) pairs.push_back({s, t});
  Json j;
  j["monoid_size"] = p.monoid_size;
  j["pairs"] = pairs;
  j["partial"] = p.partial;
  return j;
}

Json imprint_to_json(const Imprint& imp, const IdemSemiring& r) {
  Json els = Json::array();
  for (int e : imp.elements()) {
    if (!r.masks.empty()) {
      Json el;
      el["element"] = e;
      el["mask"] = r.masks[e];
      els.push_back(el);
    } else {
      els.push_back(e);
    }
  }
  return els;
}

void require_tl2(const std::string& cls) {
  if (cls != "tl2-st" && cls != "tl-at")
    throw UnsupportedBaseError("only class tl2-st has a covering engine");
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  CLI::App app{"decision toolkit for unary-temporal-logic hierarchies"};
  app.require_subcommand(1);

  std::string alphabet_s, lang, dfa_path, out_path;
  std::string cls = "tl2-st", base = "st";
  std::string lhs, rhs, target, formula_s, word_s, semiring_path, letters_s;
  std::string family, encode = "none";
  std::vector<std::string> avoid;
  int position = 0, level = 0;

  auto add_common = [&](CLI::App* sub, bool needs_alphabet = true) {
    if (needs_alphabet)
      sub->add_option("--alphabet", alphabet_s, "alphabet letters")->required();
    sub->add_option("--out", out_path, "write JSON here instead of stdout");
  };

  auto* c_monoid = app.add_subcommand("monoid", "syntactic monoid of a language");
  add_common(c_monoid);
  c_monoid->add_option("--lang", lang, "regex");
  c_monoid->add_option("--dfa", dfa_path, "dfa json file");

  auto* c_pairs = app.add_subcommand("pairs", "inseparability pairs over a base");
  add_common(c_pairs);
  c_pairs->add_option("--base", base, "st|dd|mod|at|tlat|gr|amt")->required();
  c_pairs->add_option("--lang", lang, "regex");
  c_pairs->add_option("--dfa", dfa_path, "dfa json file");

  auto* c_member = app.add_subcommand("member", "class membership");
  add_common(c_member);
  c_member->add_option("--class", cls, "class tag")->required();
  c_member->add_option("--lang", lang, "regex");
  c_member->add_option("--dfa", dfa_path, "dfa json file");

  auto* c_sep = app.add_subcommand("separate", "separation decision");
  add_common(c_sep);
  c_sep->add_option("--class", cls, "class tag (tl2-st)");
  c_sep->add_option("--lhs", lhs, "regex")->required();
  c_sep->add_option("--rhs", rhs, "regex")->required();

  auto* c_cover = app.add_subcommand("cover", "covering decision");
  add_common(c_cover);
  c_cover->add_option("--class", cls, "class tag (tl2-st)");
  c_cover->add_option("--target", target, "regex for the covered language")->required();
  c_cover->add_option("--avoid", avoid, "regexes to avoid")->required();

  auto* c_imprint = app.add_subcommand("imprint", "optimal imprint of a covering instance");
  add_common(c_imprint);
  c_imprint->add_option("--target", target, "regex")->required();
  c_imprint->add_option("--avoid", avoid, "regexes to avoid")->required();

  auto* c_compile = app.add_subcommand("compile-formula", "formula to minimal DFA");
  add_common(c_compile);
  c_compile->add_option("--formula", formula_s, "formula text")->required();

  auto* c_eval = app.add_subcommand("eval-formula", "evaluate formula on a word");
  add_common(c_eval);
  c_eval->add_option("--formula", formula_s, "formula text")->required();
  c_eval->add_option("--word", word_s, "word (~ for empty)")->required();
  c_eval->add_option("--position", position, "position, default 0");

  auto* c_corpus = app.add_subcommand("corpus", "witness language families");
  c_corpus->add_option("--family", family, "h|k|l|u|v")->required();
  c_corpus->add_option("--n,--k", level, "level")->required();
  c_corpus->add_option("--encode", encode, "none|positional|marker (u/v only)");
  c_corpus->add_option("--out", out_path, "write JSON here instead of stdout");

  auto* c_tlx = app.add_subcommand("tlx-imprint", "bounds for the previous-level imprint");
  c_tlx->add_option("--semiring", semiring_path, "semiring json file")->required();
  c_tlx->add_option("--letters", letters_s, "comma-separated element indices")->required();
  c_tlx->add_option("--out", out_path, "write JSON here instead of stdout");

  int exit_code = 0;
  try {
    app.parse(argc, argv);

    if (c_monoid->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      Dfa d = load_language(lang, dfa_path, a);
      RecognizedLanguage rl = syntactic_morphism(d);
      Json r;
      r["morphism"] = morphism_to_json(rl.morphism);
      r["accepting"] = rl.accepting;
      r["size"] = rl.morphism.codomain.size;
      r["idempotents"] = idempotents(rl.morphism.codomain);
      r["omega_exponent"] = omega_exponent(rl.morphism.codomain);
      emit("monoid", r, out_path, start);
    } else if (c_pairs->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      Dfa d = load_language(lang, dfa_path, a);
      RecognizedLanguage rl = syntactic_morphism(d);
      PairSet p = base == "tlat" ? tlat_pairs(rl.morphism)
                                 : pairs_for_base(base_from_string(base), rl.morphism);
      Json r = pairs_to_json(p);
      r["base"] = base;
      emit("pairs", r, out_path, start);
      if (p.partial) exit_code = 2;
    } else if (c_member->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      Dfa d = load_language(lang, dfa_path, a);
      MembershipResult m = decide_membership(d, class_from_string(cls));
      Json r;
      if (m.value == Tri::Unknown) {
        r["member"] = "unknown";
        exit_code = 2;
      } else {
        r["member"] = m.value == Tri::True;
      }
      r["class"] = cls;
      r["certificate"] = m.certificate;
      emit("member", r, out_path, start);
    } else if (c_sep->parsed()) {
      require_tl2(cls);
      Alphabet a = parse_alphabet(alphabet_s);
      CoverOutcome o = decide_covering_full(dfa_from_regex(lhs, a),
                                            {dfa_from_regex(rhs, a)});
      SepDecision s = o.decision == CoverDecision::Coverable
                          ? SepDecision::Separable
                      : o.decision == CoverDecision::NotCoverable
                          ? SepDecision::NotSeparable
                          : SepDecision::Unknown;
      Json r;
      r["result"] = to_string(s);
      r["mode_detail"] = {{"exact", o.exact},
                          {"semiring_size", o.instance.rho.semiring.size}};
      emit("separate", r, out_path, start);
      if (s == SepDecision::Unknown) exit_code = 2;
    } else if (c_cover->parsed()) {
      require_tl2(cls);
      Alphabet a = parse_alphabet(alphabet_s);
      std::vector<Dfa> ls;
      for (const auto& rx : avoid) ls.push_back(dfa_from_regex(rx, a));
      CoverOutcome o = decide_covering_full(dfa_from_regex(target, a), ls);
      Json r;
      r["result"] = to_string(o.decision);
      r["mode_detail"] = {{"exact", o.exact},
                          {"semiring_size", o.instance.rho.semiring.size}};
      emit("cover", r, out_path, start);
      if (o.decision == CoverDecision::Unknown) exit_code = 2;
    } else if (c_imprint->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      std::vector<Dfa> ls;
      for (const auto& rx : avoid) ls.push_back(dfa_from_regex(rx, a));
      CoverOutcome o = decide_covering_full(dfa_from_regex(target, a), ls);
      const IdemSemiring& R = o.instance.rho.semiring;
      Json r;
      r["semiring"] = semiring_to_json(R);
      r["imprint_lower"] = imprint_to_json(o.lower.row_union(), R);
      r["imprint_upper"] = imprint_to_json(o.upper.row_union(), R);
      r["exact"] = o.exact;
      Json bad = Json::array();
      for (int e = 0; e < R.size; ++e)
        if (o.instance.bad_sets[e]) bad.push_back(e);
      r["bad_sets"] = bad;
      r["result"] = to_string(o.decision);
      emit("imprint", r, out_path, start);
      if (o.decision == CoverDecision::Unknown) exit_code = 2;
    } else if (c_compile->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      TlPtr f = parse_formula(formula_s, a);
      Dfa d = compile_formula(f, a);
      Json r;
      r["dfa"] = dfa_to_json(d);
      r["formula"] = formula_to_json(f, a);
      emit("compile-formula", r, out_path, start);
    } else if (c_eval->parsed()) {
      Alphabet a = parse_alphabet(alphabet_s);
      TlPtr f = parse_formula(formula_s, a);
      Word w = parse_word(word_s, a);
      Json r;
      r["value"] = eval_formula(f, a, w, position);
      r["position"] = position;
      emit("eval-formula", r, out_path, start);
    } else if (c_corpus->parsed()) {
      Dfa d;
      if (family == "h") {
        d = dyck_level(level);
      } else if (family == "k") {
        d = k_level(level);
      } else if (family == "l") {
        d = l_level(level);
      } else if (family == "u" || family == "v") {
        UvPair uv = uv_level(level);
        d = family == "u" ? uv.u : uv.v;
        if (encode == "positional")
          d = encode_positional(level, d);
        else if (encode == "marker")
          d = encode_marker(level, d);
        else if (encode != "none")
          throw InputError("unknown encoding: " + encode);
      } else {
        throw InputError("unknown family: " + family);
      }
      Json r;
      r["dfa"] = dfa_to_json(d);
      r["family"] = family;
      r["level"] = level;
      emit("corpus", r, out_path, start);
    } else if (c_tlx->parsed()) {
      std::ifstream in(semiring_path);
      if (!in) throw InputError("cannot open " + semiring_path);
      IdemSemiring R = semiring_from_json(Json::parse(in, nullptr, true));
      std::vector<int> q;
      std::size_t pos = 0;
      while (pos <= letters_s.size() && !letters_s.empty()) {
        std::size_t end = letters_s.find(',', pos);
        if (end == std::string::npos) end = letters_s.size();
        q.push_back(std::stoi(letters_s.substr(pos, end - pos)));
        pos = end + 1;
      }
      ImprintBounds b = tlx_imprint(R, q);
      Json r;
      r["lower"] = imprint_to_json(b.lower, R);
      r["upper"] = imprint_to_json(b.upper, R);
      r["exact"] = b.exact;
      emit("tlx-imprint", r, out_path, start);
      if (!b.exact) exit_code = 2;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const UnsupportedBaseError& e) {
    std::cout << Json{{"error", {{"kind", "unsupported_base"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 3;
  } catch (const ResourceError& e) {
    std::cout << Json{{"error", {{"kind", "resource_guard"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 5;
  } catch (const InputError& e) {
    std::cout << Json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return 4;
  }
  return exit_code;
}
