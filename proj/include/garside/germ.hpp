#pragma once

// Finite germs: partial product tables with an identity, validation of the
// germ axioms, synthesis of the presented monoid, embedding tests, the
// J-family greediness criterion, subgerms and divisor germs.

#include <sstream>

#include "garside/divisibility.hpp"

namespace garside {

class malformed_germ_error : public error {
 public:
  using error::error;
};

struct GermTable {
  std::vector<std::string> labels;
  int identity = -1;
  std::vector<std::vector<int>> product;  // -1 = undefined

  int size() const { return static_cast<int>(labels.size()); }

  std::optional<int> prod(int a, int b) const {
    int r = product[a][b];
    if (r < 0) return std::nullopt;
    return r;
  }

  int label_index(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<int>(i);
    return -1;
  }

  /// x invertible in the germ: some y with x o y = identity.
  bool invertible(int x) const {
    for (int y = 0; y < size(); ++y)
      if (product[x][y] == identity) return true;
    return false;
  }

  /// Local left divisibility: x divides z inside the germ.
  bool divides(int x, int z) const {
    for (int h = 0; h < size(); ++h)
      if (product[x][h] == z) return true;
    return false;
  }
};

/// CSV: first row and first column carry the carrier labels, empty cells are
/// undefined products, "1" names the identity.
inline GermTable parse_germ_csv(std::string_view text) {
  GermTable t;
  std::vector<std::vector<std::string>> rows;
  for (auto line : detail::split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    std::vector<std::string> cells;
    for (auto c : detail::split(line, ',')) cells.emplace_back(c);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw malformed_germ_error("empty germ table");
  const auto& header = rows[0];
  for (std::size_t j = 1; j < header.size(); ++j) t.labels.push_back(header[j]);
  const int n = t.size();
  t.identity = t.label_index("1");
  if (t.identity < 0)
    throw malformed_germ_error("germ table has no identity element '1'");
  t.product.assign(n, std::vector<int>(n, -1));
  if (static_cast<int>(rows.size()) != n + 1)
    throw malformed_germ_error("germ table row count does not match carrier");
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.empty() || t.label_index(row[0]) != i)
      throw malformed_germ_error("germ row label mismatch at row " +
                                 std::to_string(i + 1));
    for (int j = 0; j < n && j + 1 < static_cast<int>(row.size()); ++j) {
      const std::string& cell = row[j + 1];
      if (cell.empty()) continue;
      int v = t.label_index(cell);
      if (v < 0)
        throw malformed_germ_error("unknown value '" + cell + "' in germ table");
      t.product[i][j] = v;
    }
  }
  return t;
}

inline std::string germ_csv(const GermTable& t) {
  std::ostringstream out;
  for (const auto& l : t.labels) out << ',' << l;
  out << '\n';
  for (int i = 0; i < t.size(); ++i) {
    out << t.labels[i];
    for (int j = 0; j < t.size(); ++j) {
      out << ',';
      if (t.product[i][j] >= 0) out << t.labels[t.product[i][j]];
    }
    out << '\n';
  }
  return out.str();
}

struct GermFlags {
  bool is_germ = false;
  bool left_associative = false;
  bool right_associative = false;
  bool left_cancellative = false;
  bool noetherian = false;
  std::optional<std::array<int, 3>> witness;
};

inline GermFlags validate_germ(const GermTable& t) {
  GermFlags f;
  const int n = t.size();
  if (t.identity < 0) throw malformed_germ_error("identity missing");
  // identity laws
  for (int x = 0; x < n; ++x)
    if (t.product[t.identity][x] != x || t.product[x][t.identity] != x)
      return f;
  // germ axiom on eligible triples: s o t and t o r defined
  f.is_germ = true;
  for (int s = 0; s < n && f.is_germ; ++s)
    for (int u = 0; u < n && f.is_germ; ++u) {
      if (t.product[s][u] < 0) continue;
      for (int r = 0; r < n; ++r) {
        if (t.product[u][r] < 0) continue;
        int left = t.product[t.product[s][u]][r];
        int right = t.product[s][t.product[u][r]];
        if (left != right) {  // covers defined/undefined mismatch
          f.is_germ = false;
          f.witness = {{s, u, r}};
          break;
        }
      }
    }
  if (!f.is_germ) return f;
  // left associativity: s o u and (s o u) o r defined forces u o r defined
  f.left_associative = true;
  for (int s = 0; s < n && f.left_associative; ++s)
    for (int u = 0; u < n && f.left_associative; ++u) {
      if (t.product[s][u] < 0) continue;
      for (int r = 0; r < n; ++r) {
        if (t.product[t.product[s][u]][r] < 0) continue;
        if (t.product[u][r] < 0) {
          f.left_associative = false;
          f.witness = {{s, u, r}};
          break;
        }
      }
    }
  // right associativity: u o r and s o (u o r) defined forces s o u defined
  f.right_associative = true;
  for (int u = 0; u < n && f.right_associative; ++u)
    for (int r = 0; r < n && f.right_associative; ++r) {
      if (t.product[u][r] < 0) continue;
      for (int s = 0; s < n; ++s) {
        if (t.product[s][t.product[u][r]] < 0) continue;
        if (t.product[s][u] < 0) {
          f.right_associative = false;
          break;
        }
      }
    }
  f.left_cancellative = true;
  for (int s = 0; s < n && f.left_cancellative; ++s)
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (t.product[s][u] >= 0 && t.product[s][u] == t.product[s][v]) {
          f.left_cancellative = false;
          break;
        }
  // local Noetherianity: the proper right-divisibility digraph is acyclic
  std::vector<std::vector<int>> succ(n);
  for (int s = 0; s < n; ++s) {
    if (t.invertible(s)) continue;
    for (int y = 0; y < n; ++y)
      if (t.product[s][y] >= 0) succ[t.product[s][y]].push_back(y);
  }
  std::vector<int> state(n, 0);
  std::function<bool(int)> cyclic = [&](int x) -> bool {
    state[x] = 1;
    for (int y : succ[x]) {
      if (state[y] == 1) return true;
      if (state[y] == 0 && cyclic(y)) return true;
    }
    state[x] = 2;
    return false;
  };
  f.noetherian = true;
  for (int x = 0; x < n; ++x)
    if (state[x] == 0 && cyclic(x)) {
      f.noetherian = false;
      break;
    }
  return f;
}

namespace detail {

inline std::string sanitized_label(std::string label) {
  for (char& c : label)
    if (c == ' ') c = '_';
  return label;
}

}  // namespace detail

/// The monoid presented by the germ: one generator per non-identity element,
/// one relation s t = (s o t) per defined product.
inline Presentation mon_from_germ(const GermTable& t) {
  Presentation p;
  std::vector<int> genof(t.size(), -1);
  for (int i = 0; i < t.size(); ++i) {
    if (i == t.identity) continue;
    Generator g;
    g.name = detail::sanitized_label(t.labels[i]);
    g.declared_invertible = t.invertible(i);
    genof[i] = static_cast<int>(p.generators.size());
    p.generators.push_back(std::move(g));
  }
  for (int i = 0; i < t.size(); ++i) {
    if (i == t.identity) continue;
    for (int j = 0; j < t.size(); ++j) {
      if (j == t.identity || t.product[i][j] < 0) continue;
      Relation r;
      r.lhs = {genof[i], genof[j]};
      if (t.product[i][j] != t.identity) r.rhs = {genof[t.product[i][j]]};
      p.relations.push_back(std::move(r));
    }
  }
  p.classification = classify(p);
  return p;
}

/// Bounded congruence search for presentations whose relations change word
/// length (the germ monoids): breadth-first closure with a length cap.
inline std::optional<bool> bounded_word_equal(const Presentation& p,
                                              const Word& u, const Word& v,
                                              long length_cap,
                                              long class_cap = 200000) {
  if (u == v) return true;
  std::deque<Word> frontier{u};
  std::set<Word> seen{u};
  bool capped = false;
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (const Relation& r : p.relations)
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir ? r.rhs : r.lhs;
        const Word& to = dir ? r.lhs : r.rhs;
        for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), cur.begin() + i)) continue;
          Word next(cur.begin(), cur.begin() + i);
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), cur.begin() + i + from.size(), cur.end());
          if (next == v) return true;
          if (static_cast<long>(next.size()) > length_cap) {
            capped = true;
            continue;
          }
          if (seen.insert(next).second) {
            if (static_cast<long>(seen.size()) > class_cap) return std::nullopt;
            frontier.push_back(next);
          }
        }
      }
  }
  if (capped) return std::nullopt;  // class truncated: inequality uncertified
  return false;
}

/// Word equality in Mon(germ): exact through a confluent rewriting system
/// when one exists, bounded congruence search otherwise.
inline std::optional<bool> germ_mon_equal(const Presentation& mon,
                                          const Word& u, const Word& v,
                                          long length_cap) {
  if (mon.classification.length_reducing_confluent) {
    auto rules = shortlex_rules(mon);
    return rewrite_nf(u, rules) == rewrite_nf(v, rules);
  }
  return bounded_word_equal(mon, u, v, length_cap);
}

enum class EmbeddingStatus { Embeds, Fails, Inconclusive };

struct EmbeddingVerdict {
  EmbeddingStatus status = EmbeddingStatus::Inconclusive;
  long bound = 0;
  std::optional<std::pair<int, int>> witness;  // germ elements identified
  bool exact = false;  // equality was decided by a confluent system
};

/// Injectivity of the canonical map of the germ into Mon(germ), decided by
/// comparing the images of all carrier pairs up to the length bound.
inline EmbeddingVerdict embedding_test(const GermTable& t, long length_bound = 12) {
  Presentation mon = mon_from_germ(t);
  EmbeddingVerdict out;
  out.bound = length_bound;
  out.exact = mon.classification.length_reducing_confluent;
  auto image = [&](int x) -> Word {
    if (x == t.identity) return {};
    return {mon.generator_index(detail::sanitized_label(t.labels[x]))};
  };
  bool inconclusive = false;
  for (int x = 0; x < t.size(); ++x)
    for (int y = x + 1; y < t.size(); ++y) {
      auto eq = germ_mon_equal(mon, image(x), image(y), length_bound);
      if (!eq) {
        inconclusive = true;
        continue;
      }
      if (*eq) {
        out.status = EmbeddingStatus::Fails;
        out.witness = {x, y};
        return out;
      }
    }
  out.status = inconclusive ? EmbeddingStatus::Inconclusive
                            : EmbeddingStatus::Embeds;
  return out;
}

struct JFamilyVerdict {
  bool normal = false;
  std::vector<int> j_family;
  std::vector<int> i_family;
};

/// Greediness of a pair inside the germ.  The family J(s1, s2) collects the
/// h in the carrier with s1 o h defined and h locally dividing s2; the pair
/// is normal exactly when all of them are invertible.  I(s1, s2) is the
/// image family s1 o h.  Validated against pairs of divisor germs where
/// greediness is known independently.
inline JFamilyVerdict normality_via_j(const GermTable& t, int s1, int s2) {
  JFamilyVerdict out;
  for (int h = 0; h < t.size(); ++h) {
    if (t.product[s1][h] < 0) continue;
    if (!t.divides(h, s2)) continue;
    out.j_family.push_back(h);
    out.i_family.push_back(t.product[s1][h]);
  }
  out.normal = std::all_of(out.j_family.begin(), out.j_family.end(),
                           [&](int h) { return t.invertible(h); });
  return out;
}

/// Whether the germ-local family X admits a common right-multiple inside the
/// germ (used to cross-check the I/J correspondence).
inline bool admits_common_right_multiple(const GermTable& t,
                                         const std::vector<int>& X) {
  if (X.empty()) return true;
  for (int z = 0; z < t.size(); ++z) {
    bool all = std::all_of(X.begin(), X.end(),
                           [&](int x) { return t.divides(x, z); });
    if (all) return true;
  }
  return false;
}

/// Smallest subfamily containing the subset, the identity, and closed under
/// defined products; returned as an induced germ table.
inline GermTable subgerm_closure(const GermTable& t,
                                 const std::vector<int>& subset) {
  std::set<int> closed{t.identity};
  closed.insert(subset.begin(), subset.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cur(closed.begin(), closed.end());
    for (int x : cur)
      for (int y : cur)
        if (t.product[x][y] >= 0 && closed.insert(t.product[x][y]).second)
          changed = true;
  }
  GermTable sub;
  std::vector<int> order(closed.begin(), closed.end());
  std::map<int, int> rank;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    sub.labels.push_back(t.labels[order[i]]);
  }
  sub.identity = rank[t.identity];
  const int n = static_cast<int>(order.size());
  sub.product.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = t.product[order[i]][order[j]];
      if (v >= 0 && rank.count(v)) sub.product[i][j] = rank[v];
    }
  return sub;
}

/// Is the subfamily closed under right-quotient inside the germ: f o h in
/// the subfamily with f in the subfamily forces h in.
inline std::optional<std::array<int, 3>> subgerm_right_quotient_failure(
    const GermTable& t, const std::vector<int>& subset) {
  std::set<int> sub(subset.begin(), subset.end());
  sub.insert(t.identity);
  for (int f : sub)
    for (int h = 0; h < t.size(); ++h) {
      int g = t.product[f][h];
      if (g < 0 || !sub.count(g)) continue;
      if (!sub.count(h)) return std::array<int, 3>{f, h, g};
    }
  return std::nullopt;
}

/// The germ of the divisors of delta: s o t defined exactly when the product
/// stays a divisor.
inline GermTable divisor_germ(const Backend& b, const Word& delta) {
  std::vector<Word> div = b.left_divisors(delta);
  GermTable t;
  std::map<Word, int> rank;
  for (std::size_t i = 0; i < div.size(); ++i) {
    rank[div[i]] = static_cast<int>(i);
    t.labels.push_back(div[i].empty() ? "1" : word_str(b.pres(), div[i]));
  }
  t.identity = rank.at(Word{});
  const int n = static_cast<int>(div.size());
  t.product.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Word prod = div[i];
      prod.insert(prod.end(), div[j].begin(), div[j].end());
      Word c = b.canon(prod);
      auto it = rank.find(c);
      if (it != rank.end()) t.product[i][j] = it->second;
    }
  return t;
}

}  // namespace garside
