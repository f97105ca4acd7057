#include "tlhier/membership.hpp"

#include <sstream>

#include "tlhier/tlat_cover.hpp"

namespace tlhier {

ClassName class_from_string(const std::string& name) {
  if (name == "sf") return ClassName::SF;
  if (name == "tl-st") return ClassName::TL_ST;
  if (name == "tlx" || name == "tl-dd") return ClassName::TLX;
  if (name == "tl-mod") return ClassName::TL_MOD;
  if (name == "tl2-st" || name == "tl-at") return ClassName::TL2_ST;
  if (name == "ipol2-st") return ClassName::IPOL2_ST;
  if (name == "tl3-st") return ClassName::TL3_ST;
  // Recognized hierarchy tags without an engine stay distinct from typos.
  if (name == "tl-lt" || name == "tl-gr" || name == "tl-amt" ||
      name == "tl2-dd" || name == "tl2-mod" || name == "tl2-lt" ||
      name == "tl2-gr" || name == "tl2-amt" || name == "tl3-dd" ||
      name == "tl3-mod" || name == "tl3-lt" || name == "tl3-gr" ||
      name == "tl3-amt")
    throw UnsupportedBaseError("class " + name + " has no decision engine");
  throw InputError("unknown class: " + name);
}

std::string class_to_string(ClassName c) {
  switch (c) {
    case ClassName::SF: return "sf";
    case ClassName::TL_ST: return "tl-st";
    case ClassName::TLX: return "tlx";
    case ClassName::TL_MOD: return "tl-mod";
    case ClassName::TL2_ST: return "tl2-st";
    case ClassName::IPOL2_ST: return "ipol2-st";
    case ClassName::TL3_ST: return "tl3-st";
  }
  return "?";
}

EqCheckResult check_eq_tl(const Monoid& m, const PairSet& pairs) {
  long long w = omega_exponent(m);
  for (int e : idempotents(m))
    for (int s = 0; s < m.size; ++s) {
      if (!pairs.contains(e, s)) continue;
      for (int t = 0; t < m.size; ++t) {
        if (!pairs.contains(e, t)) continue;
        int ete = m.mul(m.mul(e, t), e);
        int esete = m.mul(m.mul(m.mul(m.mul(e, s), e), t), e);
        int lhs = m.pow(esete, w);
        int rhs = m.mul(m.mul(lhs, ete), lhs);
        if (lhs != rhs) return {false, std::array<int, 3>{e, s, t}};
      }
    }
  return {true, std::nullopt};
}

EqCheckResult check_eq_ipol2(const Monoid& m, const PairSet& pairs) {
  long long w = omega_exponent(m);
  for (int e : idempotents(m))
    for (int s = 0; s < m.size; ++s) {
      if (!pairs.contains(e, s)) continue;
      for (int t = 0; t < m.size; ++t) {
        int ete = m.mul(m.mul(e, t), e);
        int esete = m.mul(m.mul(m.mul(m.mul(e, s), e), t), e);
        int pw = m.pow(esete, w);
        int lhs = m.mul(pw, esete);
        int rhs = m.mul(m.mul(pw, ete), pw);
        if (lhs != rhs) return {false, std::array<int, 3>{e, s, t}};
      }
    }
  return {true, std::nullopt};
}

EqCheckResult check_aperiodic(const Monoid& m) {
  long long w = omega_exponent(m);
  for (int s = 0; s < m.size; ++s) {
    int pw = m.pow(s, w);
    if (m.mul(pw, s) != pw) return {false, std::array<int, 3>{s, s, s}};
  }
  return {true, std::nullopt};
}

bool is_aperiodic(const Monoid& m) { return check_aperiodic(m).holds; }

namespace {

MembershipResult from_eq(const Morphism& alpha, const EqCheckResult& eq,
                         const char* eq_name) {
  MembershipResult r;
  r.value = eq.holds ? Tri::True : Tri::False;
  if (eq.holds) {
    r.certificate = std::string("equation ") + eq_name +
                    " holds for all required instances";
    return r;
  }
  r.witness = eq.witness;
  auto words = shortest_preimages(alpha);
  std::ostringstream os;
  os << "equation " << eq_name << " fails at (e,s,t)=(" << (*eq.witness)[0] << ","
     << (*eq.witness)[1] << "," << (*eq.witness)[2] << ")";
  for (int i = 0; i < 3; ++i) {
    int el = (*eq.witness)[i];
    if (words[el]) {
      r.witness_words.push_back(*words[el]);
      os << " [" << alpha.alphabet.format_word(*words[el]) << "]";
    }
  }
  r.certificate = os.str();
  return r;
}

}  // namespace

MembershipResult decide_membership(const Dfa& d, ClassName cls) {
  RecognizedLanguage rl = syntactic_morphism(d);
  const Morphism& alpha = rl.morphism;
  const Monoid& m = alpha.codomain;
  switch (cls) {
    case ClassName::SF:
      return from_eq(alpha, check_aperiodic(m), "s^{w+1}=s^w");
    case ClassName::TL_ST:
      return from_eq(alpha, check_eq_tl(m, st_pairs(alpha)), "tl/st");
    case ClassName::TLX:
      return from_eq(alpha, check_eq_tl(m, dd_pairs(alpha)), "tl/dd");
    case ClassName::TL_MOD:
      return from_eq(alpha, check_eq_tl(m, mod_pairs(alpha)), "tl/mod");
    case ClassName::TL2_ST:
      return from_eq(alpha, check_eq_tl(m, at_pairs(alpha)), "tl/at");
    case ClassName::IPOL2_ST:
      return from_eq(alpha, check_eq_ipol2(m, st_pairs(alpha)), "ipol2/st");
    case ClassName::TL3_ST: {
      PairSet p = tlat_pairs(alpha);
      if (p.partial) {
        MembershipResult r;
        r.value = Tri::Unknown;
        r.certificate = "tl(at)-pair computation was partial";
        return r;
      }
      return from_eq(alpha, check_eq_tl(m, p), "tl/tl(at)-pairs");
    }
  }
  throw InputError("decide_membership: bad class");
}

}  // namespace tlhier
