// garside: command line front end for the toolkit.
//
// One verb per operation: parse/classify presentations, run subword
// reversing, query the divisibility lattice, compute normal forms, recognize
// Garside families, validate germs and RC-systems, and replay the fixture
// corpus.  Exit codes: 0 success, 1 computational failure (divergence or an
// inconclusive search), 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "garside/fixtures.hpp"
#include "json.hpp"

using namespace garside;
using nlohmann::json;

namespace {

struct Globals {
  long max_steps = 10000;
  long max_length = 24;
  bool json_out = false;
  bool trace = false;
  std::string backend = "auto";
};

std::string read_input(const std::string& path) {
  std::ifstream in(path);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  // fall back to the embedded corpus by base name
  std::string base = std::filesystem::path(path).stem().string();
  for (const auto& f : fixture_data::raw)
    if (f.name == base) return std::string(f.text);
  throw error("cannot open '" + path + "' (and no embedded fixture matches)");
}

Presentation load_presentation(const std::string& path) {
  return parse_presentation(read_input(path));
}

Backend make_backend(const Presentation& p, const Globals& g) {
  std::optional<BackendKind> kind;
  if (g.backend == "bfs") kind = BackendKind::HomogeneousBFS;
  else if (g.backend == "rewrite") kind = BackendKind::ConfluentRewriting;
  else if (g.backend == "reverse") kind = BackendKind::DoubleReversing;
  else if (g.backend != "auto") throw error("unknown backend " + g.backend);
  Backend b = Backend::make(p, kind);
  b.budget = g.max_steps;
  b.length_cap = g.max_length;
  return b;
}

json classification_json(const Classification& c) {
  return json{{"complemented", c.complemented},
              {"homogeneous", c.homogeneous},
              {"triangular", c.triangular},
              {"lengthReducingConfluent", c.length_reducing_confluent}};
}

const char* status_name(ReversalStatus s) {
  switch (s) {
    case ReversalStatus::Terminated: return "terminated";
    case ReversalStatus::Diverged: return "diverged";
    case ReversalStatus::Stuck: return "stuck";
  }
  return "?";
}

json words_json(const Presentation& p, const std::vector<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(word_str(p, w));
  return out;
}

json path_json(const Presentation& p, const NormalPath& np) {
  json out;
  out["entries"] = words_json(p, np.entries);
  out["strict"] = np.strict;
  return out;
}

std::string path_text(const Presentation& p, const NormalPath& np) {
  std::string out;
  for (const Word& e : np.entries) out += "(" + word_str(p, e) + ")";
  return out.empty() ? "()" : out;
}

int emit(const Globals& g, const json& j, const std::string& text,
         int code = 0) {
  if (g.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"garside: subword reversing, divisibility and Garside "
               "families for finitely presented left-cancellative monoids"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-steps", g.max_steps, "reversing step budget");
  app.add_option("--max-length", g.max_length, "length cap for searches");
  app.add_flag("--json", g.json_out, "machine readable output");
  app.add_flag("--trace", g.trace, "emit reversing traces");
  app.add_option("--backend", g.backend, "auto|bfs|rewrite|reverse");

  // ---- presentation level -------------------------------------------------
  std::string file, word1, word2, word3;
  std::string family_spec = "auto", sub_gens, subset, op_name = "mcm";
  bool right_side = false, count_only = false, left_rev = false;
  long bound = -1;

  auto* parse_cmd = app.add_subcommand("parse", "parse and echo a presentation");
  parse_cmd->add_option("file", file)->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "structural classification flags");
  classify_cmd->add_option("file", file)->required();

  auto* reverse_cmd =
      app.add_subcommand("reverse", "right reversing of a signed word");
  reverse_cmd->add_option("file", file)->required();
  reverse_cmd->add_option("word", word1)->required();
  reverse_cmd->add_flag("--left", left_rev, "left reversing instead");

  auto* theta_cmd =
      app.add_subcommand("theta", "syntactic right-complement table");
  theta_cmd->add_option("file", file)->required();

  auto* cube_cmd = app.add_subcommand("cube", "cube condition on a triple");
  cube_cmd->add_option("file", file)->required();
  cube_cmd->add_option("u", word1)->required();
  cube_cmd->add_option("v", word2)->required();
  cube_cmd->add_option("w", word3)->required();

  auto* complete_cmd =
      app.add_subcommand("complete", "completeness of right reversing");
  complete_cmd->add_option("file", file)->required();

  auto* eq_cmd = app.add_subcommand("eq", "word equality");
  eq_cmd->add_option("file", file)->required();
  eq_cmd->add_option("u", word1)->required();
  eq_cmd->add_option("v", word2)->required();

  auto* div_cmd = app.add_subcommand("div", "divisibility test");
  div_cmd->add_option("file", file)->required();
  div_cmd->add_option("u", word1)->required();
  div_cmd->add_option("v", word2)->required();
  div_cmd->add_flag("--right", right_side, "right divisibility");

  auto* lcm_cmd = app.add_subcommand("lcm", "right lcm");
  lcm_cmd->add_option("file", file)->required();
  lcm_cmd->add_option("u", word1)->required();
  lcm_cmd->add_option("v", word2)->required();

  auto* gcd_cmd = app.add_subcommand("gcd", "left gcd (or right with --right)");
  gcd_cmd->add_option("file", file)->required();
  gcd_cmd->add_option("u", word1)->required();
  gcd_cmd->add_option("v", word2)->required();
  gcd_cmd->add_flag("--right", right_side);

  auto* mcm_cmd = app.add_subcommand("mcm", "minimal common right-multiples");
  mcm_cmd->add_option("file", file)->required();
  mcm_cmd->add_option("u", word1)->required();
  mcm_cmd->add_option("v", word2)->required();
  mcm_cmd->add_option("--bound", bound, "search length bound");

  auto* atoms_cmd = app.add_subcommand("atoms", "atoms of the monoid");
  atoms_cmd->add_option("file", file)->required();

  auto* nf_cmd = app.add_subcommand("nf", "greedy normal decomposition");
  nf_cmd->add_option("file", file)->required();
  nf_cmd->add_option("word", word1)->required();
  nf_cmd->add_option("--family", family_spec,
                     "auto | div:<word> | w1; w2; ... (sharp: prefix allowed)");

  auto* symnf_cmd = app.add_subcommand(
      "symnf", "symmetric normal decomposition of the fraction v u^-1");
  symnf_cmd->add_option("file", file)->required();
  symnf_cmd->add_option("u", word1)->required();
  symnf_cmd->add_option("v", word2)->required();
  symnf_cmd->add_option("--family", family_spec);

  auto* canlen_cmd =
      app.add_subcommand("canlen", "canonical length of a signed word");
  canlen_cmd->add_option("file", file)->required();
  canlen_cmd->add_option("word", word1)->required();
  canlen_cmd->add_option("--delta", word2, "Garside element (default: lcm of atoms)");

  auto* family_cmd = app.add_subcommand("family", "Garside family operations");
  family_cmd->require_subcommand(1);
  auto* fam_smallest = family_cmd->add_subcommand(
      "smallest", "closure of atoms and 1 under right-mcm and right-divisor");
  fam_smallest->add_option("file", file)->required();
  fam_smallest->add_flag("--count", count_only, "print only the size");
  auto* fam_check = family_cmd->add_subcommand("check", "is it Garside?");
  fam_check->add_option("file", file)->required();
  fam_check->add_option("--family", family_spec)->required();
  fam_check->add_option("--sub", sub_gens,
                        "check inside the submonoid generated by these words");
  auto* fam_close = family_cmd->add_subcommand("close", "closure of a set");
  fam_close->add_option("file", file)->required();
  fam_close->add_option("--set", subset, "';'-separated words")->required();
  fam_close->add_option("--op", op_name, "mcm | divisors");

  auto* solid_cmd = app.add_subcommand("solid", "solidity of a family");
  solid_cmd->add_option("file", file)->required();
  solid_cmd->add_option("--family", family_spec)->required();

  auto* compat_cmd =
      app.add_subcommand("compat", "compatibility of a submonoid with a family");
  compat_cmd->add_option("file", file)->required();
  compat_cmd->add_option("--sub", sub_gens)->required();
  compat_cmd->add_option("--family", family_spec)->required();

  auto* germ_cmd = app.add_subcommand("germ", "germ table operations");
  germ_cmd->require_subcommand(1);
  auto* germ_check = germ_cmd->add_subcommand("check", "validate the axioms");
  germ_check->add_option("file", file)->required();
  auto* germ_mon = germ_cmd->add_subcommand("mon", "presented monoid");
  germ_mon->add_option("file", file)->required();
  auto* germ_embed = germ_cmd->add_subcommand("embed", "embedding test");
  germ_embed->add_option("file", file)->required();
  germ_embed->add_option("--bound", bound, "equality search length bound");
  auto* germ_sub = germ_cmd->add_subcommand("sub", "subgerm closure");
  germ_sub->add_option("file", file)->required();
  germ_sub->add_option("--subset", subset, "';'-separated labels")->required();

  auto* rc_cmd = app.add_subcommand("rc", "RC-system operations");
  rc_cmd->require_subcommand(1);
  auto* rc_check = rc_cmd->add_subcommand("check", "validate the RC law");
  rc_check->add_option("file", file)->required();
  auto* rc_mon = rc_cmd->add_subcommand("mon", "structure monoid");
  rc_mon->add_option("file", file)->required();
  auto* rc_delta = rc_cmd->add_subcommand("delta", "right-lcm of a subset");
  rc_delta->add_option("file", file)->required();
  rc_delta->add_option("--subset", subset)->required();
  auto* rc_nu = rc_cmd->add_subcommand("nu", "nu image of a multiset");
  rc_nu->add_option("file", file)->required();
  rc_nu->add_option("--multiset", subset)->required();

  auto* fixtures_cmd = app.add_subcommand("fixtures", "fixture corpus");
  fixtures_cmd->require_subcommand(1);
  auto* fx_list = fixtures_cmd->add_subcommand("list", "list fixtures");
  std::string filter;
  auto* fx_verify =
      fixtures_cmd->add_subcommand("verify", "replay all expectations");
  fx_verify->add_option("filter", filter, "substring filter on fixture names");
  std::string dump_dir = "fixtures";
  auto* fx_dump =
      fixtures_cmd->add_subcommand("dump", "write fixture files to a directory");
  fx_dump->add_option("dir", dump_dir);
  auto* fx_show = fixtures_cmd->add_subcommand("show", "print one fixture");
  fx_show->add_option("name", filter)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse_cmd) {
      Presentation p = load_presentation(file);
      json j{{"objects", p.objects},
             {"classification", classification_json(p.classification)},
             {"serialized", serialize(p)}};
      return emit(g, j, serialize(p));
    }
    if (*classify_cmd) {
      Presentation p = load_presentation(file);
      const Classification& c = p.classification;
      std::ostringstream out;
      out << "complemented: " << (c.complemented ? "true" : "false")
          << "\nhomogeneous: " << (c.homogeneous ? "true" : "false")
          << "\ntriangular: " << (c.triangular ? "true" : "false")
          << "\nlengthReducingConfluent: "
          << (c.length_reducing_confluent ? "true" : "false");
      return emit(g, classification_json(c), out.str());
    }
    if (*reverse_cmd) {
      Presentation p = load_presentation(file);
      ReversalOptions opts;
      opts.budget = g.max_steps;
      opts.keep_trace = g.trace;
      SignedLetters w = parse_signed_letters(p, word1);
      ReversalOutcome out = left_rev ? left_reverse(p, w, opts)
                                     : right_reverse(p, w, opts);
      json j{{"status", status_name(out.status)},
             {"stepsUsed", out.steps_used},
             {"loopDetected", out.loop_detected},
             {"result", signed_word_str(p, out.result)}};
      if (g.trace) {
        json steps = json::array();
        for (const auto& s : out.trace)
          steps.push_back(json{
              {"position", s.position},
              {"pairReversed", json::array({p.generators[s.pair_reversed.first].name,
                                            p.generators[s.pair_reversed.second].name})},
              {"replacement", signed_word_str(p, s.replacement)}});
        j["trace"] = steps;
      }
      std::string text = out.status == ReversalStatus::Terminated
                             ? signed_word_str(p, out.result)
                             : std::string(status_name(out.status)) +
                                   (out.loop_detected ? " (loop detected)" : "");
      return emit(g, j, text, out.status == ReversalStatus::Terminated ? 0 : 1);
    }
    if (*theta_cmd) {
      Presentation p = load_presentation(file);
      ThetaTable th = build_theta(p);
      json j;
      std::ostringstream out;
      for (auto& [key, value] : th.table) {
        std::string k = "theta(" + p.generators[key.first].name + ", " +
                        p.generators[key.second].name + ")";
        j[k] = word_str(p, value);
        out << k << " = " << word_str(p, value) << "\n";
      }
      std::string text = out.str();
      if (!text.empty()) text.pop_back();
      return emit(g, j, text);
    }
    if (*cube_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      CubeVerdict v = cube_check(p, parse_positive_word(p, word1),
                                 parse_positive_word(p, word2),
                                 parse_positive_word(p, word3), b.cube_oracle());
      json j{{"holds", v.holds}, {"unknown", v.unknown}, {"method", v.method}};
      if (v.witness)
        j["witness"] = json::array({word_str(p, v.witness->first),
                                    word_str(p, v.witness->second)});
      return emit(g, j,
                  v.unknown ? "unknown" : (v.holds ? "holds" : "fails"),
                  v.unknown ? 1 : 0);
    }
    if (*complete_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      CompletenessVerdict v = completeness_check(p, b.cube_oracle());
      const char* s = v.status == CompletenessStatus::Complete ? "complete"
                      : v.status == CompletenessStatus::Incomplete
                          ? "incomplete"
                          : "unknown";
      return emit(g, json{{"status", s}, {"method", v.method}}, s,
                  v.status == CompletenessStatus::Unknown ? 1 : 0);
    }
    if (*eq_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      bool r = b.equal(parse_positive_word(p, word1),
                       parse_positive_word(p, word2));
      return emit(g, json{{"equal", r}}, r ? "true" : "false");
    }
    if (*div_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      Word u = parse_positive_word(p, word1), v = parse_positive_word(p, word2);
      bool r = right_side ? b.right_divides(u, v) : b.left_divides(u, v);
      return emit(g, json{{"divides", r}}, r ? "true" : "false");
    }
    if (*lcm_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      LcmResult r = right_lcm(b, parse_positive_word(p, word1),
                              parse_positive_word(p, word2));
      std::string text;
      switch (r.status) {
        case LcmStatus::Exists: text = word_str(p, r.value); break;
        case LcmStatus::None: text = "none"; break;
        case LcmStatus::NotUnique: text = "not-unique"; break;
        case LcmStatus::Inconclusive: text = "inconclusive"; break;
      }
      return emit(g, json{{"lcm", text}}, text,
                  r.status == LcmStatus::Inconclusive ? 1 : 0);
    }
    if (*gcd_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      GcdResult r = right_side ? right_gcd(b, parse_positive_word(p, word1),
                                           parse_positive_word(p, word2))
                               : left_gcd(b, parse_positive_word(p, word1),
                                          parse_positive_word(p, word2));
      std::string text = r.status == GcdStatus::NotUnique
                             ? "not-unique"
                             : word_str(p, r.value);
      return emit(g, json{{"gcd", text}}, text);
    }
    if (*mcm_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      std::optional<long> bd;
      if (bound > 0) bd = bound;
      MCMSet m = right_mcms(b, parse_positive_word(p, word1),
                            parse_positive_word(p, word2), bd);
      json j{{"mcms", words_json(p, m.elements)},
             {"searchBound", m.search_bound}};
      std::string text;
      for (const Word& w : m.elements)
        text += (text.empty() ? "" : ", ") + word_str(p, w);
      return emit(g, j, "{" + text + "}  (bound " +
                            std::to_string(m.search_bound) + ")");
    }
    if (*atoms_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      auto at = atoms(b);
      std::string text;
      for (const Word& w : at) text += (text.empty() ? "" : ", ") + word_str(p, w);
      return emit(g, json{{"atoms", words_json(p, at)}}, "{" + text + "}");
    }
    if (*nf_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      Family S = family_from_spec(b, family_spec);
      NormalPath np = normal_decomposition(b, S, parse_positive_word(p, word1));
      return emit(g, path_json(p, np), path_text(p, np));
    }
    if (*symnf_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      Family S = family_from_spec(b, family_spec);
      auto sym = symmetric_normal(b, S, parse_positive_word(p, word1),
                                  parse_positive_word(p, word2));
      json j{{"negative", path_json(p, sym.negative)},
             {"positive", path_json(p, sym.positive)}};
      return emit(g, j,
                  "neg: " + path_text(p, sym.negative) +
                      " pos: " + path_text(p, sym.positive));
    }
    if (*canlen_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      Word delta;
      if (!word2.empty()) {
        delta = parse_positive_word(p, word2);
      } else {
        auto at = atoms(b);
        if (at.empty()) throw error("no atoms; pass --delta");
        delta = at[0];
        for (const Word& a : at) {
          LcmResult r = right_lcm(b, delta, a);
          if (r.status != LcmStatus::Exists)
            throw error("atoms admit no right-lcm; pass --delta");
          delta = r.value;
        }
      }
      DeltaStructure d = delta_structure(b, delta);
      long n = canonical_length(b, d, parse_signed_letters(p, word1));
      return emit(g,
                  json{{"canonicalLength", n}, {"delta", word_str(p, delta)}},
                  std::to_string(n));
    }
    if (*fam_smallest) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      ClosureOptions opts;
      opts.element_cap = g.max_length;
      ClosureReport rep = smallest_garside_family(b, opts);
      json j{{"size", rep.closed.size()},
             {"family", words_json(p, rep.closed)},
             {"boundHit", rep.bound_hit},
             {"rounds", rep.rounds}};
      if (count_only) return emit(g, j, std::to_string(rep.closed.size()));
      std::string text;
      for (const Word& w : rep.closed)
        text += (text.empty() ? "" : ", ") + word_str(p, w);
      return emit(g, j, "{" + text + "}");
    }
    if (*fam_check) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      Family S = family_from_spec(b, family_spec);
      GarsideFamilyVerdict v;
      if (!sub_gens.empty()) {
        std::vector<Word> gens;
        for (auto part : garside::detail::split(sub_gens, ';'))
          gens.push_back(parse_positive_word(p, part));
        SubmonoidView view(b, gens, g.max_length / 2);
        v = is_garside_family_in(view, S, g.max_length / 2);
      } else {
        v = is_garside_family(b, S);
      }
      json j{{"isGarside", v.is_garside},
             {"criterion", v.criterion},
             {"reason", v.reason}};
      return emit(g, j,
                  std::string(v.is_garside ? "true" : "false") +
                      (v.reason.empty() ? "" : "  (" + v.reason + ")"));
    }
    if (*fam_close) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      std::vector<Word> in;
      for (auto part : garside::detail::split(subset, ';'))
        in.push_back(parse_positive_word(p, part));
      ClosureReport rep = op_name == "divisors"
                              ? close_under_right_divisors(b, in)
                              : close_under_right_mcm(b, in);
      json j{{"size", rep.closed.size()},
             {"closed", words_json(p, rep.closed)},
             {"boundHit", rep.bound_hit}};
      std::string text;
      for (const Word& w : rep.closed)
        text += (text.empty() ? "" : ", ") + word_str(p, w);
      return emit(g, j, "{" + text + "}");
    }
    if (*solid_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      SolidityVerdict v = is_solid(b, family_from_spec(b, family_spec));
      return emit(g, json{{"solid", v.solid}, {"reason", v.reason}},
                  std::string(v.solid ? "true" : "false") +
                      (v.reason.empty() ? "" : "  (" + v.reason + ")"));
    }
    if (*compat_cmd) {
      Presentation p = load_presentation(file);
      Backend b = make_backend(p, g);
      std::vector<Word> gens;
      for (auto part : garside::detail::split(sub_gens, ';'))
        gens.push_back(parse_positive_word(p, part));
      Family S = family_from_spec(b, family_spec);
      CompatibilityReport rep = check_compatibility(b, gens, S);
      json j{{"compatible", rep.compatible},
             {"reason", rep.reason},
             {"sharpInSubSize", rep.sharp_size},
             {"familyInSubSize", rep.family_in_sub_size},
             {"subRightQuotientClosed", rep.sub_right_quotient_closed}};
      return emit(g, j,
                  std::string(rep.compatible ? "compatible" : "incompatible") +
                      (rep.reason.empty() ? "" : "  (" + rep.reason + ")"));
    }
    if (*germ_check) {
      GermTable t = parse_germ_csv(read_input(file));
      GermFlags f = validate_germ(t);
      json j{{"isGerm", f.is_germ},
             {"leftAssociative", f.left_associative},
             {"leftCancellative", f.left_cancellative},
             {"noetherian", f.noetherian}};
      std::ostringstream out;
      out << "isGerm: " << (f.is_germ ? "true" : "false")
          << "\nleftAssociative: " << (f.left_associative ? "true" : "false")
          << "\nleftCancellative: " << (f.left_cancellative ? "true" : "false")
          << "\nnoetherian: " << (f.noetherian ? "true" : "false");
      return emit(g, j, out.str());
    }
    if (*germ_mon) {
      GermTable t = parse_germ_csv(read_input(file));
      Presentation mon = mon_from_germ(t);
      return emit(g, json{{"presentation", serialize(mon)}}, serialize(mon));
    }
    if (*germ_embed) {
      GermTable t = parse_germ_csv(read_input(file));
      EmbeddingVerdict v = embedding_test(t, bound > 0 ? bound : 12);
      json j{{"bound", v.bound}, {"exact", v.exact}};
      std::string text;
      if (v.status == EmbeddingStatus::Fails) {
        text = "fails(" + t.labels[v.witness->first] + ", " +
               t.labels[v.witness->second] + ")";
        j["status"] = "fails";
        j["witness"] = json::array(
            {t.labels[v.witness->first], t.labels[v.witness->second]});
      } else if (v.status == EmbeddingStatus::Embeds) {
        text = "embeds";
        j["status"] = "embeds";
      } else {
        text = "inconclusive";
        j["status"] = "inconclusive";
      }
      return emit(g, j, text, v.status == EmbeddingStatus::Inconclusive ? 1 : 0);
    }
    if (*germ_sub) {
      GermTable t = parse_germ_csv(read_input(file));
      std::vector<int> sel;
      for (auto part : garside::detail::split(subset, ';')) {
        int i = t.label_index(garside::detail::trim(part));
        if (i < 0) throw error("unknown label in subset");
        sel.push_back(i);
      }
      GermTable sub = subgerm_closure(t, sel);
      json j{{"carrier", sub.labels}, {"table", germ_csv(sub)}};
      std::string text;
      for (const auto& l : sub.labels) text += (text.empty() ? "" : ", ") + l;
      return emit(g, j, "{" + text + "}");
    }
    if (*rc_check) {
      RCSystem x = parse_rc_csv(read_input(file));
      RCReport rep = validate_rc(x);
      SquaringReport sq = double_bijectivity(x);
      json j{{"rcLaw", rep.rc_law},
             {"leftTranslationsBijective", rep.left_translations_bijective},
             {"quasigroup", rep.quasigroup},
             {"doubleBijective", sq.double_bijective},
             {"pairBijective", sq.pair_bijective}};
      std::ostringstream out;
      out << "rcLaw: " << (rep.rc_law ? "true" : "false")
          << "\nleftTranslationsBijective: "
          << (rep.left_translations_bijective ? "true" : "false")
          << "\nquasigroup: " << (rep.quasigroup ? "true" : "false");
      return emit(g, j, out.str());
    }
    if (*rc_mon) {
      RCSystem x = parse_rc_csv(read_input(file));
      Presentation mon = structure_monoid(x);
      return emit(g, json{{"presentation", serialize(mon)}}, serialize(mon));
    }
    if (*rc_delta) {
      RCSystem x = parse_rc_csv(read_input(file));
      std::vector<int> I;
      for (auto part : garside::detail::split(subset, ';')) {
        int i = x.label_index(garside::detail::trim(part));
        if (i < 0) throw error("unknown label in subset");
        I.push_back(i);
      }
      Word d = delta_i(x, I);
      Presentation mon = structure_monoid(x);
      return emit(g,
                  json{{"delta", word_str(mon, d)}, {"length", d.size()}},
                  word_str(mon, d));
    }
    if (*rc_nu) {
      RCSystem x = parse_rc_csv(read_input(file));
      std::vector<int> ms;
      for (auto part : garside::detail::split(subset, ';')) {
        int i = x.label_index(garside::detail::trim(part));
        if (i < 0) throw error("unknown label in multiset");
        ms.push_back(i);
      }
      Word nu = nu_map(x, ms);
      Presentation mon = structure_monoid(x);
      return emit(g, json{{"nu", word_str(mon, nu)}}, word_str(mon, nu));
    }
    if (*fx_list) {
      json j = json::array();
      std::string text;
      for (const auto& fx : fixtures::corpus()) {
        j.push_back(json{{"name", fx.name},
                         {"kind", fx.kind},
                         {"expectations", fx.expectations.size()}});
        text += fx.name + " (" + fx.kind + ", " +
                std::to_string(fx.expectations.size()) + " expectations)\n";
      }
      if (!text.empty()) text.pop_back();
      return emit(g, j, text);
    }
    if (*fx_verify) {
      fixtures::VerifyReport rep = fixtures::verify(filter);
      for (const auto& line : rep.lines) std::cout << line.text << "\n";
      std::cout << rep.passed << "/" << rep.total << " expectations passed\n";
      return rep.ok() ? 0 : 1;
    }
    if (*fx_dump) {
      std::filesystem::create_directories(dump_dir);
      for (const auto& f : fixture_data::raw) {
        std::ofstream out(std::filesystem::path(dump_dir) /
                          (std::string(f.name) + "." + std::string(f.kind)));
        out << f.text;
      }
      std::cout << "wrote " << fixture_data::raw.size() << " fixtures to "
                << dump_dir << "\n";
      return 0;
    }
    if (*fx_show) {
      std::cout << fixtures::raw_payload(filter);
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const inconclusive_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 1;
  } catch (const cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
