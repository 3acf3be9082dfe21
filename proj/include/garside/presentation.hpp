#pragma once

// Objects, generators, words, and finitely presented left-cancellative
// monoids/categories, together with the line-oriented text format and the
// structural classification of a presentation.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace garside {

/// A positive word: a sequence of generator indices.
using Word = std::vector<int>;

struct SignedLetter {
  int gen = 0;
  bool inv = false;
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  friend bool operator<(const SignedLetter& a, const SignedLetter& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.inv < b.inv;
  }
};

using SignedLetters = std::vector<SignedLetter>;

inline SignedLetters to_signed(const Word& w, bool inv = false) {
  SignedLetters out;
  out.reserve(w.size());
  for (int g : w) out.push_back({g, inv});
  return out;
}

/// w^-1 as a signed word: reversed order, flipped signs.
inline SignedLetters inverse_of(const Word& w) {
  SignedLetters out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({*it, true});
  return out;
}

inline bool all_positive(const SignedLetters& w) {
  return std::all_of(w.begin(), w.end(),
                     [](const SignedLetter& l) { return !l.inv; });
}

inline Word positive_part_of(const SignedLetters& w) {
  Word out;
  for (const auto& l : w)
    if (!l.inv) out.push_back(l.gen);
  return out;
}

inline SignedLetters concat(SignedLetters a, const SignedLetters& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& msg, int line, int column)
      : error("line " + std::to_string(line) + ", col " +
              std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct Generator {
  std::string name;
  int source = 0;
  int target = 0;
  bool declared_invertible = false;
};

struct Relation {
  Word lhs;
  Word rhs;
};

struct Classification {
  bool complemented = false;
  bool homogeneous = false;
  bool triangular = false;
  bool length_reducing_confluent = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

constexpr const char* kDefaultObject = "\xe2\x80\xa2";  // "•"

class Presentation {
 public:
  std::vector<std::string> objects{kDefaultObject};
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  Classification classification;

  int generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int object_index(std::string_view name) const {
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool single_object() const { return objects.size() == 1; }

  bool has_declared_invertible() const {
    return std::any_of(generators.begin(), generators.end(),
                       [](const Generator& g) { return g.declared_invertible; });
  }

  /// Source object of a nonempty positive word.
  int source_of(const Word& w) const { return generators[w.front()].source; }
  int target_of(const Word& w) const { return generators[w.back()].target; }

  /// Checks that consecutive letters compose; returns the endpoints.
  /// Empty words need an explicit object and are handled by callers.
  std::pair<int, int> endpoints_of(const SignedLetters& w) const {
    int src = -1, cur = -1;
    for (const auto& l : w) {
      const Generator& g = generators[l.gen];
      int from = l.inv ? g.target : g.source;
      int to = l.inv ? g.source : g.target;
      if (cur == -1)
        src = from;
      else if (cur != from)
        throw error("non-composable word: letters do not chain");
      cur = to;
    }
    return {src, cur};
  }
};

/// A signed word together with its endpoints; the endpoints matter mostly
/// for the empty word, which still names an object.
struct SignedWord {
  SignedLetters letters;
  int source = 0;
  int target = 0;
};

inline SignedWord make_signed_word(const Presentation& p, SignedLetters letters,
                                   int source_hint = 0) {
  if (letters.empty()) return {std::move(letters), source_hint, source_hint};
  auto [s, t] = p.endpoints_of(letters);
  return {std::move(letters), s, t};
}

/// Removes adjacent s s^-1 / s^-1 s pairs, iterated to a fixpoint.
inline SignedLetters free_reduce(const SignedLetters& w) {
  SignedLetters out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inv != l.inv)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline SignedWord free_reduce(const Presentation& p, const SignedWord& w) {
  SignedWord out = make_signed_word(p, free_reduce(w.letters), w.source);
  out.source = w.source;
  out.target = w.target;
  return out;
}

// ---------------------------------------------------------------------------
// Shortlex order and rewriting, used by the classification and by the
// confluent-rewriting equality backend.  Generator order is declaration order.
// ---------------------------------------------------------------------------

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct RewriteRule {
  Word lhs;
  Word rhs;  // shortlex smaller than lhs
};

inline std::vector<RewriteRule> shortlex_rules(const Presentation& p) {
  std::vector<RewriteRule> rules;
  for (const Relation& r : p.relations) {
    if (r.lhs == r.rhs) continue;
    if (shortlex_less(r.rhs, r.lhs))
      rules.push_back({r.lhs, r.rhs});
    else
      rules.push_back({r.rhs, r.lhs});
  }
  return rules;
}

inline bool find_redex(const Word& w, const std::vector<RewriteRule>& rules,
                       std::size_t& pos, std::size_t& rule) {
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Word& l = rules[r].lhs;
      if (l.empty() || i + l.size() > w.size()) continue;
      if (std::equal(l.begin(), l.end(), w.begin() + i)) {
        pos = i;
        rule = r;
        return true;
      }
    }
  return false;
}

/// Normal form under a shortlex-reducing rule set (always terminates).
inline Word rewrite_nf(Word w, const std::vector<RewriteRule>& rules) {
  std::size_t pos = 0, rule = 0;
  while (find_redex(w, rules, pos, rule)) {
    Word next(w.begin(), w.begin() + pos);
    next.insert(next.end(), rules[rule].rhs.begin(), rules[rule].rhs.end());
    next.insert(next.end(), w.begin() + pos + rules[rule].lhs.size(), w.end());
    w = std::move(next);
  }
  return w;
}

/// True when all critical pairs of the shortlex-oriented system resolve.
inline bool rules_confluent(const std::vector<RewriteRule>& rules) {
  auto joinable = [&](const Word& a, const Word& b) {
    return rewrite_nf(a, rules) == rewrite_nf(b, rules);
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& l1 = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l2 = rules[j].lhs;
      // proper overlap: a suffix of l1 equals a prefix of l2
      for (std::size_t k = 1; k < l1.size() && k < l2.size(); ++k) {
        if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
        Word w = l1;
        w.insert(w.end(), l2.begin() + k, l2.end());
        Word a = rules[i].rhs;
        a.insert(a.end(), l2.begin() + k, l2.end());
        Word b(l1.begin(), l1.end() - k);
        b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
        if (!joinable(a, b)) return false;
      }
      // containment: l2 occurs inside l1
      if (l2.size() < l1.size() || (i != j && l2.size() == l1.size())) {
        for (std::size_t at = 0; at + l2.size() <= l1.size(); ++at) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + at)) continue;
          Word b(l1.begin(), l1.begin() + at);
          b.insert(b.end(), rules[j].rhs.begin(), rules[j].rhs.end());
          b.insert(b.end(), l1.begin() + at + l2.size(), l1.end());
          if (!joinable(rules[i].rhs, b)) return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

inline Classification classify(const Presentation& p) {
  Classification c;
  c.homogeneous = std::all_of(
      p.relations.begin(), p.relations.end(),
      [](const Relation& r) { return r.lhs.size() == r.rhs.size(); });
  c.triangular =
      !p.relations.empty() &&
      std::all_of(p.relations.begin(), p.relations.end(), [](const Relation& r) {
        return (r.lhs.size() == 1 && !r.rhs.empty()) ||
               (r.rhs.size() == 1 && !r.lhs.empty());
      });

  // complemented: at most one relation per unordered generator pair, every
  // relation head-split with distinct heads and no empty side
  c.complemented = true;
  std::set<std::pair<int, int>> seen;
  for (const Relation& r : p.relations) {
    if (r.lhs.empty() || r.rhs.empty() || r.lhs[0] == r.rhs[0]) {
      c.complemented = false;
      break;
    }
    auto key = std::minmax(r.lhs[0], r.rhs[0]);
    if (!seen.insert({key.first, key.second}).second) {
      c.complemented = false;
      break;
    }
  }

  auto rules = shortlex_rules(p);
  c.length_reducing_confluent = rules_confluent(rules);
  return c;
}

/// Positive generator weights certifying strong Noetherianity: declared
/// invertibles weigh 0, every other generator at least 1, and all relations
/// balance.  Returns nothing when no such weighting exists (or the search is
/// too large to attempt).
inline std::optional<std::vector<int>> noetherian_weights(const Presentation& p,
                                                          int max_weight = 8) {
  const std::size_t n = p.generators.size();
  if (n > 10) return std::nullopt;
  std::vector<int> w(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (p.generators[i].declared_invertible) w[i] = 0;

  auto balanced = [&](const Relation& r, bool partial) {
    long lhs = 0, rhs = 0;
    for (int g : r.lhs) {
      if (w[g] < 0) return partial;
      lhs += w[g];
    }
    for (int g : r.rhs) {
      if (w[g] < 0) return partial;
      rhs += w[g];
    }
    return lhs == rhs;
  };

  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] < 0) free.push_back(i);

  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == free.size())
      return std::all_of(p.relations.begin(), p.relations.end(),
                         [&](const Relation& r) { return balanced(r, false); });
    for (int v = 1; v <= max_weight; ++v) {
      w[free[k]] = v;
      bool ok = std::all_of(p.relations.begin(), p.relations.end(),
                            [&](const Relation& r) { return balanced(r, true); });
      if (ok && assign(k + 1)) return true;
    }
    w[free[k]] = -1;
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return w;
}

inline bool noetherian_certified(const Presentation& p) {
  return noetherian_weights(p).has_value();
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '\'' &&
        ch != '_')
      return false;
  return s != "1";
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses a positive word ("a b a", or "1" for the empty word).
inline Word parse_positive_word(const Presentation& p, std::string_view text,
                                int line = 0) {
  Word w;
  auto toks = detail::tokens(text);
  if (toks.size() == 1 && toks[0] == "1") return w;
  for (auto t : toks) {
    if (t == "1") throw parse_error("'1' cannot appear inside a word", line, 0);
    int g = p.generator_index(t);
    if (g < 0)
      throw parse_error("undeclared generator '" + std::string(t) + "'", line,
                        0);
    w.push_back(g);
  }
  return w;
}

/// Parses a signed word; inverse letters use the `^-1` suffix ("a b^-1").
inline SignedLetters parse_signed_letters(const Presentation& p,
                                          std::string_view text) {
  SignedLetters w;
  auto toks = detail::tokens(text);
  if (toks.size() == 1 && toks[0] == "1") return w;
  for (auto t : toks) {
    bool inv = false;
    if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      inv = true;
      t.remove_suffix(3);
    }
    int g = p.generator_index(t);
    if (g < 0)
      throw parse_error("undeclared generator '" + std::string(t) + "'", 0, 0);
    w.push_back({g, inv});
  }
  return w;
}

inline Presentation parse_presentation(std::string_view text) {
  Presentation p;
  p.objects.clear();
  bool saw_objects = false;
  bool in_rels = false;
  std::vector<std::pair<std::string, int>> pending_relations;  // text, line

  auto lines = detail::split(text, '\n');
  for (std::size_t li = 0; li < lines.size(); ++li) {
    int lineno = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto directive = [&](std::string_view key) -> std::optional<std::string_view> {
      if (line.size() >= key.size() && line.substr(0, key.size()) == key)
        return detail::trim(line.substr(key.size()));
      return std::nullopt;
    };

    if (auto rest = directive("objects:")) {
      in_rels = false;
      saw_objects = true;
      for (auto name : detail::split(*rest, ',')) {
        if (!detail::valid_name(name))
          throw parse_error("bad object name '" + std::string(name) + "'",
                            lineno, 0);
        if (p.object_index(name) >= 0)
          throw parse_error("duplicate object '" + std::string(name) + "'",
                            lineno, 0);
        p.objects.emplace_back(name);
      }
      continue;
    }
    if (auto rest = directive("gens:")) {
      in_rels = false;
      for (auto decl : detail::split(*rest, ',')) {
        if (decl.empty())
          throw parse_error("empty generator declaration", lineno, 0);
        std::string_view name = decl;
        std::string_view typing;
        if (auto colon = decl.find(':'); colon != std::string_view::npos) {
          name = detail::trim(decl.substr(0, colon));
          typing = detail::trim(decl.substr(colon + 1));
        }
        if (!detail::valid_name(name))
          throw parse_error("bad generator name '" + std::string(name) + "'",
                            lineno, 0);
        if (p.generator_index(name) >= 0)
          throw parse_error("duplicate generator '" + std::string(name) + "'",
                            lineno, 0);
        Generator g;
        g.name = std::string(name);
        if (!typing.empty()) {
          auto arrow = typing.find("->");
          if (arrow == std::string_view::npos)
            throw parse_error("expected 'src -> tgt' after ':'", lineno, 0);
          auto src = detail::trim(typing.substr(0, arrow));
          auto tgt = detail::trim(typing.substr(arrow + 2));
          g.source = p.object_index(src);
          g.target = p.object_index(tgt);
          if (g.source < 0 || g.target < 0)
            throw parse_error("undeclared object in generator typing", lineno,
                              0);
        }
        p.generators.push_back(std::move(g));
      }
      continue;
    }
    if (auto rest = directive("invertible:")) {
      in_rels = false;
      for (auto name : detail::split(*rest, ',')) {
        int g = p.generator_index(name);
        if (g < 0)
          throw parse_error("undeclared generator '" + std::string(name) +
                                "' in invertible list",
                            lineno, 0);
        p.generators[g].declared_invertible = true;
      }
      continue;
    }
    if (auto rest = directive("rels:")) {
      in_rels = true;
      if (!rest->empty())
        for (auto rel : detail::split(*rest, ';'))
          if (!rel.empty()) pending_relations.push_back({std::string(rel), lineno});
      continue;
    }
    if (in_rels) {
      for (auto rel : detail::split(line, ';'))
        if (!rel.empty()) pending_relations.push_back({std::string(rel), lineno});
      continue;
    }
    throw parse_error("unrecognized line '" + std::string(line) + "'", lineno,
                      0);
  }

  if (!saw_objects) p.objects = {kDefaultObject};
  if (p.objects.empty())
    throw parse_error("objects line declares no objects", 1, 0);

  for (auto& [rtext, lineno] : pending_relations) {
    auto eq = rtext.find('=');
    if (eq == std::string::npos || rtext.find('=', eq + 1) != std::string::npos)
      throw parse_error("relation must contain exactly one '='", lineno,
                        static_cast<int>(eq == std::string::npos ? 0 : eq));
    Relation r;
    r.lhs = parse_positive_word(p, std::string_view(rtext).substr(0, eq), lineno);
    r.rhs = parse_positive_word(p, std::string_view(rtext).substr(eq + 1), lineno);
    // typing checks; an empty side forces the other side to be a loop
    auto side_endpoints = [&](const Word& w) -> std::pair<int, int> {
      auto [s, t] = p.endpoints_of(to_signed(w));
      return {s, t};
    };
    if (r.lhs.empty() && r.rhs.empty())
      throw parse_error("empty relation", lineno, 0);
    if (r.lhs.empty() || r.rhs.empty()) {
      const Word& w = r.lhs.empty() ? r.rhs : r.lhs;
      auto [s, t] = side_endpoints(w);
      if (s != t)
        throw parse_error("relation 'w = 1' requires w to start and end at "
                          "the same object",
                          lineno, 0);
    } else {
      auto [ls, lt] = side_endpoints(r.lhs);
      auto [rs, rt] = side_endpoints(r.rhs);
      if (ls != rs || lt != rt)
        throw parse_error("relation sides have mismatched source/target",
                          lineno, 0);
    }
    p.relations.push_back(std::move(r));
  }

  p.classification = classify(p);
  return p;
}

inline std::string word_str(const Presentation& p, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.generators[w[i]].name;
  }
  return out;
}

inline std::string signed_word_str(const Presentation& p,
                                   const SignedLetters& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += p.generators[w[i].gen].name;
    if (w[i].inv) out += "^-1";
  }
  return out;
}

inline std::string serialize(const Presentation& p) {
  std::string out;
  bool default_objects = p.objects.size() == 1 && p.objects[0] == kDefaultObject;
  if (!default_objects) {
    out += "objects:";
    for (std::size_t i = 0; i < p.objects.size(); ++i)
      out += (i ? ", " : " ") + p.objects[i];
    out += '\n';
  }
  out += "gens:";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const Generator& g = p.generators[i];
    out += (i ? ", " : " ") + g.name;
    if (!default_objects)
      out += ": " + p.objects[g.source] + " -> " + p.objects[g.target];
  }
  out += '\n';
  if (p.has_declared_invertible()) {
    out += "invertible:";
    bool first = true;
    for (const Generator& g : p.generators)
      if (g.declared_invertible) {
        out += (first ? " " : ", ") + g.name;
        first = false;
      }
    out += '\n';
  }
  out += "rels:\n";
  for (const Relation& r : p.relations)
    out += word_str(p, r.lhs) + " = " + word_str(p, r.rhs) + '\n';
  return out;
}

/// Structural equality used by the round-trip tests.
inline bool structurally_equal(const Presentation& a, const Presentation& b) {
  if (a.objects != b.objects) return false;
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const Generator &x = a.generators[i], &y = b.generators[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target ||
        x.declared_invertible != y.declared_invertible)
      return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i)
    if (a.relations[i].lhs != b.relations[i].lhs ||
        a.relations[i].rhs != b.relations[i].rhs)
      return false;
  return a.classification == b.classification;
}

}  // namespace garside
