#pragma once

// RC-systems and RC-quasigroups for involutive set-theoretic Yang-Baxter
// solutions: law validation, bijectivity of the squaring maps, structure
// monoids, iterated complements and the lcm elements Delta_I, the nu map,
// parabolic subsets.

#include <sstream>

#include "garside/divisibility.hpp"

namespace garside {

class malformed_rc_error : public error {
 public:
  using error::error;
};

class not_bijective_error : public error {
 public:
  using error::error;
};

/// Finite carrier with a total binary operation; cell (r, s) of the table is
/// r op s (row acts on column).
struct RCSystem {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> op;

  int size() const { return static_cast<int>(labels.size()); }
  int apply(int a, int b) const { return op[a][b]; }

  int label_index(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<int>(i);
    return -1;
  }
};

inline RCSystem parse_rc_csv(std::string_view text) {
  RCSystem x;
  std::vector<std::vector<std::string>> rows;
  for (auto line : detail::split(text, '\n')) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    std::vector<std::string> cells;
    for (auto c : detail::split(line, ',')) cells.emplace_back(c);
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw malformed_rc_error("empty table");
  for (std::size_t j = 1; j < rows[0].size(); ++j) x.labels.push_back(rows[0][j]);
  const int n = x.size();
  if (static_cast<int>(rows.size()) != n + 1)
    throw malformed_rc_error("row count does not match carrier");
  x.op.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.empty() || x.label_index(row[0]) != i)
      throw malformed_rc_error("row label mismatch");
    if (static_cast<int>(row.size()) != n + 1)
      throw malformed_rc_error("table is not total");
    for (int j = 0; j < n; ++j) {
      int v = x.label_index(row[j + 1]);
      if (v < 0) throw malformed_rc_error("unknown value '" + row[j + 1] + "'");
      x.op[i][j] = v;
    }
  }
  return x;
}

inline std::string rc_csv(const RCSystem& x) {
  std::ostringstream out;
  for (const auto& l : x.labels) out << ',' << l;
  out << '\n';
  for (int i = 0; i < x.size(); ++i) {
    out << x.labels[i];
    for (int j = 0; j < x.size(); ++j) out << ',' << x.labels[x.op[i][j]];
    out << '\n';
  }
  return out.str();
}

struct RCReport {
  bool rc_law = false;
  bool left_translations_bijective = false;
  bool quasigroup = false;
  std::optional<std::array<int, 3>> witness;
};

/// Exhaustive check of (a op b) op (a op c) == (b op a) op (b op c) and of
/// the bijectivity of every left translation.
inline RCReport validate_rc(const RCSystem& x) {
  RCReport rep;
  const int n = x.size();
  rep.rc_law = true;
  for (int a = 0; a < n && rep.rc_law; ++a)
    for (int b = 0; b < n && rep.rc_law; ++b)
      for (int c = 0; c < n; ++c)
        if (x.op[x.op[a][b]][x.op[a][c]] != x.op[x.op[b][a]][x.op[b][c]]) {
          rep.rc_law = false;
          rep.witness = {{a, b, c}};
          break;
        }
  rep.left_translations_bijective = true;
  for (int a = 0; a < n; ++a) {
    std::vector<bool> hit(n, false);
    for (int b = 0; b < n; ++b) hit[x.op[a][b]] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
      rep.left_translations_bijective = false;
  }
  rep.quasigroup = rep.rc_law && rep.left_translations_bijective;
  return rep;
}

struct SquaringReport {
  bool double_bijective = false;   // a -> a op a
  bool pair_bijective = false;     // (a, b) -> (a op b, b op a)
  bool consistent = false;         // the two agree, as the theory predicts
};

inline SquaringReport double_bijectivity(const RCSystem& x) {
  SquaringReport rep;
  const int n = x.size();
  std::vector<bool> hit(n, false);
  for (int a = 0; a < n; ++a) hit[x.op[a][a]] = true;
  rep.double_bijective =
      std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  std::set<std::pair<int, int>> image;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) image.insert({x.op[a][b], x.op[b][a]});
  rep.pair_bijective = static_cast<int>(image.size()) == n * n;
  rep.consistent = rep.double_bijective == rep.pair_bijective;
  return rep;
}

/// The structure monoid: generators X, relations r (r op s) = s (s op r) for
/// all r != s.  The presentation is homogeneous and right-complemented with
/// theta(r, s) = r op s.
inline Presentation structure_monoid(const RCSystem& x) {
  Presentation p;
  for (const auto& l : x.labels) {
    Generator g;
    g.name = l;
    p.generators.push_back(std::move(g));
  }
  for (int r = 0; r < x.size(); ++r)
    for (int s = r + 1; s < x.size(); ++s) {
      Relation rel;
      rel.lhs = {r, x.op[r][s]};
      rel.rhs = {s, x.op[s][r]};
      p.relations.push_back(std::move(rel));
    }
  p.classification = classify(p);
  return p;
}

/// Iterated right complement f \ t for f a word over the carrier: with
/// f = g s the value is s \ (g \ t), where s \ s = 1 (coded as -1) and
/// s \ t = s op t otherwise.
inline int complement_of_element(const RCSystem& x, const Word& f, int t) {
  int cur = t;
  for (int s : f) {
    if (cur < 0) return -1;
    cur = (s == cur) ? -1 : x.op[s][cur];
  }
  return cur;
}

/// Right-lcm Delta_I of a subset, built by the iterated-lcm scheme
/// Delta_{J + t} = Delta_J (Delta_J \ t); for a quasigroup its length is |I|.
inline Word delta_i(const RCSystem& x, const std::vector<int>& I) {
  Word delta;
  for (int t : I) {
    int c = complement_of_element(x, delta, t);
    if (c >= 0) delta.push_back(c);
  }
  return delta;
}

/// Action of a word on a carrier element: (u v) act t = v act (u act t),
/// letters acting by op.
inline int star_action(const RCSystem& x, const Word& w, int t) {
  int cur = t;
  for (int s : w) cur = x.op[s][cur];
  return cur;
}

/// nu(w s) = nu(w) . (nu(w) act s); well defined on multisets for bijective
/// quasigroups.
inline Word nu_map(const RCSystem& x, const Word& multiset) {
  RCReport rep = validate_rc(x);
  SquaringReport sq = double_bijectivity(x);
  if (!rep.quasigroup || !sq.double_bijective)
    throw not_bijective_error("nu needs a bijective RC-quasigroup");
  Word out;
  for (int s : multiset) {
    int next = star_action(x, out, s);
    out.push_back(next);
  }
  return out;
}

/// I parabolic: closed under the operation; the induced system is then an
/// RC-system on I (bijectivity is rechecked, not inherited).
inline bool parabolic_check(const RCSystem& x, const std::vector<int>& I) {
  std::set<int> set(I.begin(), I.end());
  for (int a : I)
    for (int b : I)
      if (!set.count(x.op[a][b])) return false;
  return true;
}

/// The induced RC-system on a parabolic subset.
inline RCSystem induced_system(const RCSystem& x, const std::vector<int>& I) {
  RCSystem sub;
  std::map<int, int> rank;
  for (std::size_t i = 0; i < I.size(); ++i) {
    rank[I[i]] = static_cast<int>(i);
    sub.labels.push_back(x.labels[I[i]]);
  }
  const int n = static_cast<int>(I.size());
  sub.op.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = rank.find(x.op[I[i]][I[j]]);
      if (it == rank.end())
        throw malformed_rc_error("subset is not closed under the operation");
      sub.op[i][j] = it->second;
    }
  return sub;
}

}  // namespace garside
