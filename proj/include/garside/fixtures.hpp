#pragma once

// The executable fixture corpus: presentations, germ tables and RC-systems
// from the exercise literature, each carrying machine-checkable expectations
// with their citations.  `verify` replays every expectation.

#include <iostream>
#include <sstream>

#include "garside/families.hpp"
#include "garside/fixtures_data.hpp"
#include "garside/germ.hpp"
#include "garside/rc.hpp"

namespace garside::fixtures {

/// Where an expected value comes from: stated in the cited exercise, or
/// derived here by an independent computation.
enum class Provenance { Exercise, Derived };

inline const char* to_string(Provenance p) {
  return p == Provenance::Exercise ? "exercise" : "derived";
}

struct Expectation {
  std::string op;
  std::vector<std::string> args;
  std::string expected;
  Provenance prov = Provenance::Derived;
  std::string cite;
};

struct Fixture {
  std::string name;
  std::string kind;  // pres | germ | rc
  std::string_view payload;
  std::vector<Expectation> expectations;
};

/// Expands Coxeter data with constant exponent m into explicit alternating
/// braid relations prod(s,t;m) = prod(t,s;m).
inline std::string make_artin_tits(int n, int m) {
  if (n < 2 || n > 26 || m < 2) throw error("make_artin_tits: bad parameters");
  std::ostringstream out;
  out << "gens:";
  for (int i = 0; i < n; ++i) out << (i ? ", " : " ") << char('a' + i);
  out << "\nrels:\n";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < m; ++k)
        out << (k ? " " : "") << char('a' + (k % 2 == 0 ? i : j));
      out << " = ";
      for (int k = 0; k < m; ++k)
        out << (k ? " " : "") << char('a' + (k % 2 == 0 ? j : i));
      out << '\n';
    }
  return out.str();
}

inline std::string_view raw_payload(std::string_view name) {
  for (const auto& f : fixture_data::raw)
    if (f.name == name) return f.text;
  throw error("unknown fixture '" + std::string(name) + "'");
}

namespace detail_fx {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  for (auto part : garside::detail::split(s, ';'))
    out.emplace_back(garside::detail::trim(part));
  return out;
}

inline std::string word_set_str(const Presentation& p,
                                std::vector<Word> words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  std::string out = "{";
  for (std::size_t i = 0; i < words.size(); ++i)
    out += (i ? ", " : "") + word_str(p, words[i]);
  return out + "}";
}

inline std::string path_str(const Presentation& p, const NormalPath& np) {
  std::string out;
  for (const Word& e : np.entries) out += "(" + word_str(p, e) + ")";
  return out.empty() ? "()" : out;
}

struct Context {
  const Fixture* fx = nullptr;
  std::optional<Presentation> pres;
  std::optional<Backend> backend;
  std::optional<GermTable> germ;
  std::optional<RCSystem> rc;

  const Presentation& presentation() {
    if (!pres) pres = parse_presentation(fx->payload);
    return *pres;
  }
  const Backend& b() {
    if (!backend) backend = Backend::make(presentation());
    return *backend;
  }
  const GermTable& germ_table() {
    if (!germ) germ = parse_germ_csv(fx->payload);
    return *germ;
  }
  const RCSystem& rc_system() {
    if (!rc) rc = parse_rc_csv(fx->payload);
    return *rc;
  }
};

inline Family parse_family_spec(Context& cx, const std::string& spec) {
  return family_from_spec(cx.b(), spec);
}

inline std::string bool_str(bool v) { return v ? "true" : "false"; }

inline std::string status_str(ReversalStatus s, bool loop) {
  switch (s) {
    case ReversalStatus::Terminated: return "terminated";
    case ReversalStatus::Stuck: return "stuck";
    case ReversalStatus::Diverged: return loop ? "diverged-loop" : "diverged";
  }
  return "?";
}

}  // namespace detail_fx

/// Evaluates one expectation and returns the canonical output string.
inline std::string run_expectation(const Fixture& fx, const Expectation& e) {
  using namespace detail_fx;
  Context cx;
  cx.fx = &fx;
  const std::string& op = e.op;
  auto arg = [&](std::size_t i) -> const std::string& { return e.args.at(i); };

  if (op == "classify") {
    const Classification& c = cx.presentation().classification;
    if (arg(0) == "complemented") return bool_str(c.complemented);
    if (arg(0) == "homogeneous") return bool_str(c.homogeneous);
    if (arg(0) == "triangular") return bool_str(c.triangular);
    if (arg(0) == "length-reducing-confluent")
      return bool_str(c.length_reducing_confluent);
    throw error("unknown classification flag " + arg(0));
  }
  if (op == "theta") {
    const Presentation& p = cx.presentation();
    ThetaTable th = build_theta(p);
    auto v = th(p.generator_index(arg(0)), p.generator_index(arg(1)));
    return v ? word_str(p, *v) : "undefined";
  }
  if (op == "reverse") {
    const Presentation& p = cx.presentation();
    auto out = right_reverse(p, parse_signed_letters(p, arg(0)));
    if (out.status != ReversalStatus::Terminated)
      return status_str(out.status, out.loop_detected);
    return signed_word_str(p, out.result);
  }
  if (op == "reverse-status") {
    const Presentation& p = cx.presentation();
    ReversalOptions opts;
    if (e.args.size() > 1) opts.budget = std::stol(arg(1));
    auto out = right_reverse(p, parse_signed_letters(p, arg(0)), opts);
    return status_str(out.status, out.loop_detected);
  }
  if (op == "left-reverse-status") {
    const Presentation& p = cx.presentation();
    auto out = left_reverse(p, parse_signed_letters(p, arg(0)));
    return status_str(out.status, out.loop_detected);
  }
  if (op == "eq") {
    const Presentation& p = cx.presentation();
    return bool_str(cx.b().equal(parse_positive_word(p, arg(0)),
                                 parse_positive_word(p, arg(1))));
  }
  if (op == "div") {  // args: left|right, u, v
    const Presentation& p = cx.presentation();
    Word u = parse_positive_word(p, arg(1));
    Word v = parse_positive_word(p, arg(2));
    return bool_str(arg(0) == "left" ? cx.b().left_divides(u, v)
                                     : cx.b().right_divides(u, v));
  }
  if (op == "divisors") {
    const Presentation& p = cx.presentation();
    return word_set_str(p, cx.b().left_divisors(parse_positive_word(p, arg(0))));
  }
  if (op == "divisors-count") {
    const Presentation& p = cx.presentation();
    return std::to_string(
        cx.b().left_divisors(parse_positive_word(p, arg(0))).size());
  }
  if (op == "lcm") {
    const Presentation& p = cx.presentation();
    LcmResult r = right_lcm(cx.b(), parse_positive_word(p, arg(0)),
                            parse_positive_word(p, arg(1)));
    switch (r.status) {
      case LcmStatus::Exists: return word_str(p, r.value);
      case LcmStatus::None: return "none";
      case LcmStatus::NotUnique: return "not-unique";
      case LcmStatus::Inconclusive: return "inconclusive";
    }
  }
  if (op == "mcm") {
    const Presentation& p = cx.presentation();
    MCMSet m = right_mcms(cx.b(), parse_positive_word(p, arg(0)),
                          parse_positive_word(p, arg(1)));
    return word_set_str(p, m.elements);
  }
  if (op == "gcd") {
    const Presentation& p = cx.presentation();
    GcdResult r = left_gcd(cx.b(), parse_positive_word(p, arg(0)),
                           parse_positive_word(p, arg(1)));
    if (r.status == GcdStatus::NotUnique) return "not-unique";
    return word_str(p, r.value);
  }
  if (op == "atoms") {
    const Presentation& p = cx.presentation();
    return word_set_str(p, atoms(cx.b()));
  }
  if (op == "height") {
    const Presentation& p = cx.presentation();
    return std::to_string(height(cx.b(), parse_positive_word(p, arg(0))));
  }
  if (op == "nf") {  // args: family spec, word
    const Presentation& p = cx.presentation();
    Family S = parse_family_spec(cx, arg(0));
    NormalPath np =
        normal_decomposition(cx.b(), S, parse_positive_word(p, arg(1)));
    return path_str(p, np);
  }
  if (op == "symnf") {  // args: u, v  (fraction v u^-1)
    const Presentation& p = cx.presentation();
    Family S = parse_family_spec(cx, "auto");
    auto sym = symmetric_normal(cx.b(), S, parse_positive_word(p, arg(0)),
                                parse_positive_word(p, arg(1)));
    return "neg: " + path_str(p, sym.negative) +
           " pos: " + path_str(p, sym.positive);
  }
  if (op == "canlen") {
    const Presentation& p = cx.presentation();
    DeltaStructure d = delta_structure(cx.b(), parse_positive_word(p, arg(0)));
    return std::to_string(
        canonical_length(cx.b(), d, parse_signed_letters(p, arg(1))));
  }
  if (op == "complete") {
    auto v = completeness_check(cx.presentation(), cx.b().cube_oracle());
    switch (v.status) {
      case CompletenessStatus::Complete: return "complete";
      case CompletenessStatus::Incomplete: return "incomplete";
      case CompletenessStatus::Unknown: return "unknown";
    }
  }
  if (op == "cube-gens") {
    const Presentation& p = cx.presentation();
    const int n = static_cast<int>(p.generators.size());
    for (int a = 0; a < n; ++a)
      for (int b2 = 0; b2 < n; ++b2)
        for (int c = 0; c < n; ++c) {
          auto cv = cube_check(p, {a}, {b2}, {c}, cx.b().cube_oracle());
          if (cv.unknown) return "unknown";
          if (!cv.holds) return "false";
        }
    return "true";
  }
  if (op == "family-smallest") {
    const Presentation& p = cx.presentation();
    return word_set_str(p, smallest_garside_family(cx.b()).closed);
  }
  if (op == "family-smallest-count")
    return std::to_string(smallest_garside_family(cx.b()).closed.size());
  if (op == "family-close-mcm") {
    const Presentation& p = cx.presentation();
    std::vector<Word> in;
    for (const auto& w : split_list(arg(0)))
      in.push_back(parse_positive_word(p, w));
    return word_set_str(p, close_under_right_mcm(cx.b(), in).closed);
  }
  if (op == "family-close-div") {
    const Presentation& p = cx.presentation();
    std::vector<Word> in;
    for (const auto& w : split_list(arg(0)))
      in.push_back(parse_positive_word(p, w));
    return word_set_str(p, close_under_right_divisors(cx.b(), in).closed);
  }
  if (op == "family-check") {
    Family S = parse_family_spec(cx, arg(0));
    return bool_str(is_garside_family(cx.b(), S).is_garside);
  }
  if (op == "family-check-sub") {  // args: subgens, family
    const Presentation& p = cx.presentation();
    std::vector<Word> gens;
    for (const auto& w : split_list(arg(0)))
      gens.push_back(parse_positive_word(p, w));
    SubmonoidView view(cx.b(), gens, 8);
    Family S = parse_family_spec(cx, arg(1));
    return bool_str(is_garside_family_in(view, S, 6).is_garside);
  }
  if (op == "solid") {
    Family S = parse_family_spec(cx, arg(0));
    return bool_str(is_solid(cx.b(), S).solid);
  }
  if (op == "compat") {  // args: subgens, family
    const Presentation& p = cx.presentation();
    std::vector<Word> gens;
    for (const auto& w : split_list(arg(0)))
      gens.push_back(parse_positive_word(p, w));
    Family S = parse_family_spec(cx, arg(1));
    auto rep = check_compatibility(cx.b(), gens, S);
    return rep.compatible ? "compatible" : "incompatible";
  }
  if (op == "compat-sizes") {  // |S#| ambient / |S /\ N| for the sharp family
    const Presentation& p = cx.presentation();
    std::vector<Word> gens;
    for (const auto& w : split_list(arg(0)))
      gens.push_back(parse_positive_word(p, w));
    Family S = parse_family_spec(cx, arg(1));
    Family sharp = sharp_family(cx.b(), S);
    auto rep = check_compatibility(cx.b(), gens, sharp);
    return std::to_string(sharp.elements.size()) + "/" +
           std::to_string(rep.family_in_sub_size);
  }
  if (op == "delta-check") {
    DeltaStructure d = delta_structure(
        cx.b(), parse_positive_word(cx.presentation(), arg(0)));
    return phi_injective_on_divisor_pairs(cx.b(), d) ? "ok" : "phi-not-injective";
  }

  // ---- germ fixtures ----
  if (op == "germ-valid") {
    auto f = validate_germ(cx.germ_table());
    return bool_str(f.is_germ);
  }
  if (op == "germ-flags") {
    auto f = validate_germ(cx.germ_table());
    std::string out;
    if (f.is_germ) out += "germ";
    if (f.left_associative) out += " left-associative";
    if (f.left_cancellative) out += " left-cancellative";
    if (f.noetherian) out += " noetherian";
    return out;
  }
  if (op == "germ-embed") {
    auto v = embedding_test(cx.germ_table());
    if (v.status == EmbeddingStatus::Fails)
      return "fails(" + cx.germ_table().labels[v.witness->first] + ", " +
             cx.germ_table().labels[v.witness->second] + ")";
    return v.status == EmbeddingStatus::Embeds ? "embeds" : "inconclusive";
  }
  if (op == "germ-mon-rels") {
    Presentation mon = mon_from_germ(cx.germ_table());
    std::vector<std::string> rels;
    for (const Relation& r : mon.relations)
      rels.push_back(word_str(mon, r.lhs) + " = " + word_str(mon, r.rhs));
    std::sort(rels.begin(), rels.end());
    std::string out = "{";
    for (std::size_t i = 0; i < rels.size(); ++i) out += (i ? ", " : "") + rels[i];
    return out + "}";
  }
  if (op == "germ-atoms") {
    Presentation mon = mon_from_germ(cx.germ_table());
    Backend mb = Backend::make(mon);
    return word_set_str(mon, atoms(mb));
  }
  if (op == "germ-sub") {
    const GermTable& t = cx.germ_table();
    std::vector<int> subset;
    for (const auto& l : split_list(arg(0))) subset.push_back(t.label_index(l));
    GermTable sub = subgerm_closure(t, subset);
    std::string out = "{";
    for (std::size_t i = 0; i < sub.labels.size(); ++i)
      out += (i ? ", " : "") + sub.labels[i];
    return out + "}";
  }
  if (op == "germ-sub-rq") {
    const GermTable& t = cx.germ_table();
    std::vector<int> subset;
    for (const auto& l : split_list(arg(0))) subset.push_back(t.label_index(l));
    return subgerm_right_quotient_failure(t, subset) ? "not-closed" : "closed";
  }
  if (op == "germ-sub-mon-eq") {  // args: subset, lhs labels, rhs labels
    const GermTable& t = cx.germ_table();
    std::vector<int> subset;
    for (const auto& l : split_list(arg(0))) subset.push_back(t.label_index(l));
    GermTable sub = subgerm_closure(t, subset);
    Presentation mon = mon_from_germ(sub);
    auto to_word = [&](const std::string& labels) {
      Word w;
      for (const auto& l : split_list(labels)) {
        int g = mon.generator_index(garside::detail::sanitized_label(l));
        if (g < 0) throw error("unknown subgerm label " + l);
        w.push_back(g);
      }
      return w;
    };
    auto eq = germ_mon_equal(mon, to_word(arg(1)), to_word(arg(2)), 16);
    return eq ? bool_str(*eq) : "inconclusive";
  }
  if (op == "germ-normal") {  // args: s1, s2
    const GermTable& t = cx.germ_table();
    auto v = normality_via_j(t, t.label_index(arg(0)), t.label_index(arg(1)));
    return bool_str(v.normal);
  }

  // ---- rc fixtures ----
  if (op == "rc-valid") return detail_fx::bool_str(validate_rc(cx.rc_system()).quasigroup);
  if (op == "rc-double-bij") {
    auto s = double_bijectivity(cx.rc_system());
    return s.consistent ? (s.double_bijective ? "bijective" : "not-bijective")
                        : "inconsistent";
  }
  if (op == "rc-mon-classify") {
    Presentation mon = structure_monoid(cx.rc_system());
    std::string out;
    if (mon.classification.complemented) out += "complemented";
    if (mon.classification.homogeneous) out += " homogeneous";
    return out;
  }
  if (op == "rc-mon-complete") {
    Presentation mon = structure_monoid(cx.rc_system());
    Backend mb = Backend::make(mon);
    auto v = completeness_check(mon, mb.cube_oracle());
    return v.status == CompletenessStatus::Complete ? "complete" : "other";
  }
  if (op == "rc-delta" || op == "rc-delta-len") {
    const RCSystem& x = cx.rc_system();
    std::vector<int> I;
    for (const auto& l : split_list(arg(0))) I.push_back(x.label_index(l));
    Word d = delta_i(x, I);
    if (op == "rc-delta-len") return std::to_string(d.size());
    Presentation mon = structure_monoid(x);
    return word_str(mon, d);
  }
  if (op == "rc-nu-agree") {  // args: multiset labels
    const RCSystem& x = cx.rc_system();
    std::vector<int> ms;
    for (const auto& l : split_list(arg(0))) ms.push_back(x.label_index(l));
    Presentation mon = structure_monoid(x);
    Backend mb = Backend::make(mon);
    std::sort(ms.begin(), ms.end());
    Word first = nu_map(x, ms);
    bool ok = true;
    do {
      if (!mb.equal(first, nu_map(x, ms))) ok = false;
    } while (std::next_permutation(ms.begin(), ms.end()) && ok);
    return bool_str(ok);
  }
  if (op == "rc-parabolic") {
    const RCSystem& x = cx.rc_system();
    std::vector<int> I;
    for (const auto& l : split_list(arg(0))) I.push_back(x.label_index(l));
    return bool_str(parabolic_check(x, I));
  }
  throw error("unknown expectation op '" + op + "'");
}

inline std::vector<Fixture> build_corpus() {
  using P = Provenance;
  std::vector<Fixture> all;
  auto add = [&](std::string name, std::string kind,
                 std::vector<Expectation> exp) {
    Fixture f;
    f.payload = raw_payload(name);
    f.name = std::move(name);
    f.kind = std::move(kind);
    f.expectations = std::move(exp);
    all.push_back(std::move(f));
  };

  add("braid3", "pres",
      {
          {"classify", {"complemented"}, "true", P::Derived, "Ex. 22"},
          {"theta", {"a", "b"}, "b a", P::Derived, "Ex. 22"},
          {"reverse", {"a^-1 b"}, "b a b^-1 a^-1", P::Derived, "Ex. 20"},
          {"divisors-count", {"a b a"}, "6", P::Exercise, "Ex. 90"},
          {"nf", {"div:a b a", "a b a a b a"}, "(a b a)(a b a)", P::Derived,
           "Ex. 41"},
          {"lcm", {"a", "b"}, "a b a", P::Derived, "Ex. 22"},
          {"complete", {}, "complete", P::Derived, "Ex. 23(3)"},
          {"delta-check", {"a b a"}, "ok", P::Derived, "Prop. V.2.34"},
          {"atoms", {}, "{a, b}", P::Derived, "Ex. 4"},
          {"canlen", {"a b a", "a b a b"}, "1", P::Derived, "Ex. 97"},
          {"eq", {"b a b a b a", "a b a a b a"}, "true", P::Exercise,
           "Ex. 90(2)"},
          {"symnf", {"a", "b"}, "neg: (b a) pos: (a b)", P::Derived,
           "Prop. III.2.56"},
      });
  add("ex10", "pres",
      {
          {"divisors", {"a b"}, "{1, a, b, c, d, a b}", P::Derived, "Ex. 10(1)"},
          {"atoms", {}, "{a, b, c, d}", P::Derived, "Ex. 10"},
          {"eq", {"a c", "c a"}, "false", P::Exercise, "Ex. 10(2)"},
          {"classify", {"complemented"}, "true", P::Derived, "Ex. 10(1)"},
      });
  add("ex45", "pres",
      {
          {"classify", {"complemented"}, "false", P::Derived, "Ex. 45"},
          {"mcm", {"a", "b"}, "{a b, a a'}", P::Exercise, "Ex. 45(3)"},
          {"mcm", {"a", "a'"}, "{}", P::Exercise, "Ex. 45(3)"},
          {"lcm", {"a", "b"}, "not-unique", P::Exercise, "Ex. 45(3)"},
          {"eq", {"a a b' a' a'", "a b a' b' b'"}, "true", P::Exercise,
           "Ex. 45(5)"},
          {"nf", {"a; b; a'; b'; a b; a' b'; a a'; a' a", "a a b' a' a'"},
           "(a b)(a' b')(b')", P::Exercise, "Ex. 45(5)"},
          {"complete", {}, "complete", P::Exercise, "Ex. 45(1)"},
          {"cube-gens", {}, "true", P::Exercise, "Ex. 45(1)"},
          {"family-check", {"a; b; a'; b'; a b; a' b'; a a'; a' a"}, "true",
           P::Exercise, "Ex. 45(4)"},
          {"family-close-mcm", {"a; b; a'; b'"},
           "{a, b, a', b', a b, a a', a' a, a' b'}", P::Exercise, "Ex. 45(4)"},
      });
  add("ex48", "pres",
      {
          {"classify", {"homogeneous"}, "false", P::Derived, "Ex. 48"},
          {"classify", {"length-reducing-confluent"}, "true", P::Derived,
           "Ex. 48(1)"},
          {"eq", {"e a", "a"}, "true", P::Exercise, "Ex. 48"},
          {"eq", {"a e", "a"}, "false", P::Exercise, "Ex. 48(1)"},
          {"atoms", {}, "{a, a e}", P::Exercise, "Ex. 67(2)"},
          {"solid", {"1; a; e"}, "true", P::Exercise, "Ex. 48(2)"},
          {"height", {"a a e"}, "2", P::Derived, "Ex. 4"},
      });
  add("ex49", "pres",
      {
          {"solid", {"a; e"}, "false", P::Exercise, "Ex. 49(2)"},
          {"eq", {"e a", "a e"}, "true", P::Derived, "Ex. 49"},
      });
  add("ex75", "pres",
      {
          {"family-check-sub", {"a; a b", "1; a; a b"}, "false", P::Exercise,
           "Ex. 75(2)"},
          {"divisors", {"a b"}, "{1, a, b, a b}", P::Derived, "Ex. 75"},
      });
  add("ex76", "pres",
      {
          {"compat", {"a; e", "a"}, "incompatible", P::Exercise, "Ex. 76(4)"},
          {"compat", {"a; e", "sharp:a"}, "compatible", P::Exercise,
           "Ex. 76(5)"},
          {"compat-sizes", {"a; e", "a"}, "8/6", P::Exercise, "Ex. 76(5)"},
      });
  add("ex102-free3", "pres",
      {
          {"family-smallest", {}, "{1, a, b, c, a b, a c, b c, a b c}",
           P::Exercise, "Ex. 102(2)"},
          {"divisors", {"a b"}, "{1, a, b, a b}", P::Exercise, "Ex. 102(1)"},
          {"div", {"right", "c", "a b"}, "false", P::Exercise, "Ex. 102(1)"},
      });
  add("ex102-ra", "pres",
      {
          {"family-smallest", {}, "{1, a, b, c, a b, b c}", P::Derived,
           "Ex. 102(2)"},
          {"left-reverse-status", {"a b c^-1"}, "stuck", P::Exercise,
           "Ex. 102(1)"},
      });
  add("ex103-n2-m3", "pres",
      {{"family-smallest-count", {}, "6", P::Exercise, "Ex. 103(5)"}});
  add("ex103-n3-m3", "pres",
      {{"family-smallest-count", {}, "16", P::Exercise, "Ex. 103(5)"}});
  add("ex103-n3-m4", "pres",
      {{"family-smallest-count", {}, "22", P::Derived, "Ex. 103(5)"}});
  add("ex103-n4-m3", "pres",
      {{"family-smallest-count", {}, "35", P::Derived, "Ex. 103(5)"}});
  add("ex116-divergence", "pres",
      {
          {"theta", {"a", "b"}, "1", P::Derived, "Ex. 116"},
          {"theta", {"b", "a"}, "b a b", P::Derived, "Ex. 116"},
          {"reverse-status", {"a^-1 b a"}, "diverged-loop", P::Exercise,
           "Ex. 116(2)"},
          {"complete", {}, "unknown", P::Derived, "Ex. 116"},
      });
  add("ex65", "germ",
      {
          {"germ-valid", {}, "true", P::Exercise, "Ex. 65(1)"},
          {"germ-embed", {}, "fails(i, n)", P::Exercise, "Ex. 65(2)"},
      });
  add("ex67", "germ",
      {
          {"germ-valid", {}, "true", P::Derived, "Ex. 67"},
          {"germ-mon-rels", {}, "{e a = a, e e = 1}", P::Exercise, "Ex. 67(2)"},
          {"germ-atoms", {}, "{a, a e}", P::Exercise, "Ex. 67(2)"},
          {"germ-embed", {}, "embeds", P::Derived, "Ex. 48(1)"},
      });
  add("ex90", "germ",
      {
          {"germ-flags", {}, "germ left-associative left-cancellative noetherian",
           P::Exercise, "Ex. 90"},
          {"germ-sub", {"a; b a"}, "{1, a, b a, a b a}", P::Exercise,
           "Ex. 90(2)"},
          {"germ-sub-rq", {"a; b a; a b a"}, "not-closed", P::Exercise,
           "Ex. 90(2)"},
          {"germ-sub-mon-eq", {"a; b a", "b a; b a; b a", "a; b a; a; b a"},
           "false", P::Exercise, "Ex. 90(2)"},
          {"germ-sub", {"a; b"}, "{1, a, b, a b, b a, a b a}", P::Exercise,
           "Ex. 90(1)"},
          {"germ-normal", {"a b", "b"}, "true", P::Derived, "Ex. 68(1)"},
          {"germ-normal", {"a", "b"}, "false", P::Derived, "Ex. 68(1)"},
      });
  add("rc-cyclic-3", "rc",
      {
          {"rc-valid", {}, "true", P::Derived, "Ex. 125"},
          {"rc-double-bij", {}, "bijective", P::Exercise, "Ex. 125"},
          {"rc-mon-classify", {}, "complemented homogeneous", P::Derived,
           "Ex. 126"},
          {"rc-mon-complete", {}, "complete", P::Derived, "Ex. 126"},
          {"rc-delta-len", {"0; 1; 2"}, "3", P::Exercise, "Ex. 126(2)"},
          {"rc-delta", {"0; 1"}, "0 2", P::Exercise, "Ex. 126"},
          {"rc-nu-agree", {"0; 1"}, "true", P::Derived, "Ex. 128(2)"},
          {"rc-parabolic", {"0"}, "false", P::Derived, "Ex. 129(2)"},
          {"rc-parabolic", {"0; 1; 2"}, "true", P::Derived, "Ex. 129(2)"},
      });
  return all;
}

inline const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> all = build_corpus();
  return all;
}

struct VerifyLine {
  bool pass = false;
  std::string text;
};

struct VerifyReport {
  int total = 0;
  int passed = 0;
  std::vector<VerifyLine> lines;
  bool ok() const { return passed == total; }
};

inline VerifyReport verify(std::string_view filter = "") {
  VerifyReport rep;
  for (const Fixture& fx : corpus()) {
    if (!filter.empty() && fx.name.find(filter) == std::string::npos) continue;
    for (const Expectation& e : fx.expectations) {
      ++rep.total;
      std::string got;
      bool pass = false;
      try {
        got = run_expectation(fx, e);
        pass = got == e.expected;
      } catch (const std::exception& ex) {
        got = std::string("error: ") + ex.what();
      }
      if (pass) ++rep.passed;
      std::string args;
      for (const auto& a : e.args) args += (args.empty() ? "" : " | ") + a;
      VerifyLine line;
      line.pass = pass;
      line.text = std::string(pass ? "[PASS] " : "[FAIL] ") + fx.name + " " +
                  e.op + (args.empty() ? "" : "(" + args + ")") + " = " + got +
                  (pass ? "" : "  (expected " + e.expected + ")") + "  [" +
                  to_string(e.prov) + ", " + e.cite + "]";
      rep.lines.push_back(std::move(line));
    }
  }
  return rep;
}

}  // namespace garside::fixtures
