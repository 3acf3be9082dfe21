#pragma once

// Right and left subword reversing driven by the syntactic right-complement,
// reversing grids, the extension theta* to words, cube-condition checking and
// completeness of reversing, with budgeted divergence detection.

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "garside/presentation.hpp"

namespace garside {

/// Partial map (s,t) -> theta(s,t) with s.theta(s,t) = t.theta(t,s) a
/// relation; theta(s,s) is the empty word.
class ThetaTable {
 public:
  std::map<std::pair<int, int>, Word> table;

  std::optional<Word> operator()(int s, int t) const {
    if (s == t) return Word{};
    auto it = table.find({s, t});
    if (it == table.end()) return std::nullopt;
    return it->second;
  }
  bool defined(int s, int t) const {
    return s == t || table.count({s, t}) > 0;
  }
};

class not_complemented_error : public error {
 public:
  not_complemented_error(const std::string& what, int s, int t)
      : error(what), pair{s, t} {}
  std::pair<int, int> pair;
};

inline ThetaTable build_theta(const Presentation& p) {
  ThetaTable th;
  for (const Relation& r : p.relations) {
    if (r.lhs.empty() || r.rhs.empty())
      throw not_complemented_error("relation with an empty side", -1, -1);
    int s = r.lhs[0], t = r.rhs[0];
    if (s == t)
      throw not_complemented_error(
          "relation with equal heads on generator '" + p.generators[s].name +
              "'",
          s, t);
    if (th.table.count({s, t}) || th.table.count({t, s}))
      throw not_complemented_error(
          "two relations share the head pair (" + p.generators[s].name + ", " +
              p.generators[t].name + ")",
          s, t);
    th.table[{s, t}] = Word(r.lhs.begin() + 1, r.lhs.end());
    th.table[{t, s}] = Word(r.rhs.begin() + 1, r.rhs.end());
  }
  return th;
}

enum class ReversalStatus { Terminated, Diverged, Stuck };

enum class ReversalStrategy { Leftmost, Rightmost };

struct ReversalStep {
  int position = 0;
  std::pair<int, int> pair_reversed{0, 0};
  SignedLetters replacement;
};

struct ReversalOutcome {
  ReversalStatus status = ReversalStatus::Diverged;
  SignedLetters result;  // terminal shape when Terminated
  long steps_used = 0;
  bool loop_detected = false;
  std::optional<std::pair<int, int>> stuck_pair;
  std::vector<ReversalStep> trace;
};

namespace detail {

/// Run-length compressed shape of a signed word; powers >= 2 collapse, so a
/// configuration that repeats modulo a growing power maps to the same shape.
inline std::vector<int> word_shape(const SignedLetters& w) {
  std::vector<int> shape;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    shape.push_back(w[i].gen * 4 + (w[i].inv ? 1 : 0) +
                    (j - i >= 2 ? 2 : 0));
    i = j;
  }
  return shape;
}

inline std::optional<std::size_t> find_pattern(const SignedLetters& w,
                                               ReversalStrategy strat) {
  if (strat == ReversalStrategy::Leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i].inv && !w[i + 1].inv) return i;
  } else {
    for (std::size_t i = w.size(); i >= 2; --i)
      if (w[i - 2].inv && !w[i - 1].inv) return i - 2;
  }
  return std::nullopt;
}

}  // namespace detail

struct ReversalOptions {
  long budget = 10000;
  ReversalStrategy strategy = ReversalStrategy::Leftmost;
  bool keep_trace = false;
  long state_cap = 10000;      // breadth-first exploration, non-complemented case
  long max_word_length = 0;    // 0 = unlimited; exceeded counts as divergence
};

/// Deterministic right reversing for a complemented presentation: rewrites
/// s^-1 t into theta(s,t) theta(t,s)^-1 until the word is positive-negative.
inline ReversalOutcome right_reverse(const ThetaTable& th, SignedLetters w,
                                     const ReversalOptions& opts = {}) {
  if (opts.budget <= 0) throw error("reversing budget must be positive");
  ReversalOutcome out;
  std::map<std::vector<int>, std::size_t> seen_shapes;
  seen_shapes[detail::word_shape(w)] = w.size();
  while (true) {
    auto pos = detail::find_pattern(w, opts.strategy);
    if (!pos) {
      out.status = ReversalStatus::Terminated;
      out.result = free_reduce(w);
      return out;
    }
    int s = w[*pos].gen, t = w[*pos + 1].gen;
    auto left = th(s, t), right = th(t, s);
    if (!left || !right) {
      out.status = ReversalStatus::Stuck;
      out.stuck_pair = {s, t};
      out.result = w;
      return out;
    }
    SignedLetters repl = to_signed(*left);
    SignedLetters neg = inverse_of(*right);
    repl.insert(repl.end(), neg.begin(), neg.end());
    if (opts.keep_trace)
      out.trace.push_back({static_cast<int>(*pos), {s, t}, repl});
    SignedLetters next(w.begin(), w.begin() + *pos);
    next.insert(next.end(), repl.begin(), repl.end());
    next.insert(next.end(), w.begin() + *pos + 2, w.end());
    w = std::move(next);
    ++out.steps_used;
    auto shape = detail::word_shape(w);
    auto it = seen_shapes.find(shape);
    if (it == seen_shapes.end()) {
      seen_shapes[shape] = w.size();
    } else if (w.size() > it->second) {
      out.status = ReversalStatus::Diverged;
      out.loop_detected = true;
      out.result = w;
      return out;
    }
    if (out.steps_used >= opts.budget ||
        (opts.max_word_length > 0 &&
         w.size() > static_cast<std::size_t>(opts.max_word_length))) {
      out.status = ReversalStatus::Diverged;
      out.result = w;
      return out;
    }
  }
}

/// Breadth-first right reversing over rule choices, for presentations that
/// are not right-complemented.  Returns the first terminal configuration.
inline ReversalOutcome right_reverse_bfs(const Presentation& p,
                                         const SignedLetters& start,
                                         const ReversalOptions& opts = {}) {
  if (opts.budget <= 0) throw error("reversing budget must be positive");
  std::deque<std::pair<SignedLetters, long>> frontier{{start, 0}};
  std::set<SignedLetters> visited{start};
  bool any_open = false;
  long states = 0;
  while (!frontier.empty()) {
    auto [w, depth] = frontier.front();
    frontier.pop_front();
    if (++states > opts.state_cap) {
      ReversalOutcome out;
      out.status = ReversalStatus::Diverged;
      out.steps_used = states;
      return out;
    }
    auto pos = detail::find_pattern(w, opts.strategy);
    if (!pos) {
      ReversalOutcome out;
      out.status = ReversalStatus::Terminated;
      out.result = free_reduce(w);
      out.steps_used = depth;
      return out;
    }
    int s = w[*pos].gen, t = w[*pos + 1].gen;
    std::vector<std::pair<Word, Word>> options;  // (theta(s,t), theta(t,s))
    if (s == t) options.push_back({{}, {}});
    for (const Relation& r : p.relations) {
      if (r.lhs.empty() || r.rhs.empty()) continue;
      if (r.lhs[0] == s && r.rhs[0] == t)
        options.push_back({Word(r.lhs.begin() + 1, r.lhs.end()),
                           Word(r.rhs.begin() + 1, r.rhs.end())});
      else if (r.rhs[0] == s && r.lhs[0] == t)
        options.push_back({Word(r.rhs.begin() + 1, r.rhs.end()),
                           Word(r.lhs.begin() + 1, r.lhs.end())});
    }
    if (options.empty()) {
      any_open = true;  // this branch is stuck
      continue;
    }
    for (auto& [lw, rw] : options) {
      SignedLetters repl = to_signed(lw);
      SignedLetters neg = inverse_of(rw);
      repl.insert(repl.end(), neg.begin(), neg.end());
      SignedLetters next(w.begin(), w.begin() + *pos);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + *pos + 2, w.end());
      if (next.size() <= static_cast<std::size_t>(opts.budget) &&
          visited.insert(next).second)
        frontier.push_back({next, depth + 1});
    }
  }
  ReversalOutcome out;
  out.status = any_open ? ReversalStatus::Stuck : ReversalStatus::Diverged;
  out.steps_used = states;
  return out;
}

/// All terminal configurations reachable by breadth-first reversing.
inline std::vector<SignedLetters> right_reverse_all(
    const Presentation& p, const SignedLetters& start,
    const ReversalOptions& opts = {}) {
  std::deque<SignedLetters> frontier{start};
  std::set<SignedLetters> visited{start};
  std::vector<SignedLetters> terminal;
  long states = 0;
  while (!frontier.empty()) {
    SignedLetters w = frontier.front();
    frontier.pop_front();
    if (++states > opts.state_cap) break;
    auto pos = detail::find_pattern(w, opts.strategy);
    if (!pos) {
      terminal.push_back(free_reduce(w));
      continue;
    }
    int s = w[*pos].gen, t = w[*pos + 1].gen;
    std::vector<std::pair<Word, Word>> options;
    if (s == t) options.push_back({{}, {}});
    for (const Relation& r : p.relations) {
      if (r.lhs.empty() || r.rhs.empty()) continue;
      if (r.lhs[0] == s && r.rhs[0] == t)
        options.push_back({Word(r.lhs.begin() + 1, r.lhs.end()),
                           Word(r.rhs.begin() + 1, r.rhs.end())});
      else if (r.rhs[0] == s && r.lhs[0] == t)
        options.push_back({Word(r.rhs.begin() + 1, r.rhs.end()),
                           Word(r.lhs.begin() + 1, r.lhs.end())});
    }
    for (auto& [lw, rw] : options) {
      SignedLetters repl = to_signed(lw);
      SignedLetters neg = inverse_of(rw);
      repl.insert(repl.end(), neg.begin(), neg.end());
      SignedLetters next(w.begin(), w.begin() + *pos);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), w.begin() + *pos + 2, w.end());
      if (next.size() <= static_cast<std::size_t>(opts.budget) &&
          visited.insert(next).second)
        frontier.push_back(next);
    }
  }
  std::sort(terminal.begin(), terminal.end());
  terminal.erase(std::unique(terminal.begin(), terminal.end()),
                 terminal.end());
  return terminal;
}

inline ReversalOutcome right_reverse(const Presentation& p, SignedLetters w,
                                     const ReversalOptions& opts = {}) {
  if (p.classification.complemented)
    return right_reverse(build_theta(p), std::move(w), opts);
  return right_reverse_bfs(p, w, opts);
}

/// Mirror presentation: every relation word reversed, generator endpoints
/// swapped.  Left reversing over p is right reversing over mirror(p).
inline Presentation mirror(const Presentation& p) {
  Presentation m = p;
  for (Generator& g : m.generators) std::swap(g.source, g.target);
  for (Relation& r : m.relations) {
    std::reverse(r.lhs.begin(), r.lhs.end());
    std::reverse(r.rhs.begin(), r.rhs.end());
  }
  m.classification = classify(m);
  return m;
}

inline SignedLetters reversed(SignedLetters w) {
  std::reverse(w.begin(), w.end());
  return w;
}

/// Left reversing: rewrites t s^-1 patterns, terminal shape
/// negative-positive.  Implemented through the mirror presentation.
inline ReversalOutcome left_reverse(const Presentation& p,
                                    const SignedLetters& w,
                                    const ReversalOptions& opts = {}) {
  ReversalOutcome out = right_reverse(mirror(p), reversed(w), opts);
  out.result = reversed(out.result);
  return out;
}

/// theta*(u, v) and theta*(v, u), from one full reversing of u^-1 v.
struct ThetaStarResult {
  ReversalStatus status = ReversalStatus::Diverged;
  Word uv;  // theta*(u, v): positive part of the terminal word
  Word vu;  // theta*(v, u)
  bool loop_detected = false;
};

inline ThetaStarResult theta_star(const Presentation& p, const Word& u,
                                  const Word& v,
                                  const ReversalOptions& opts = {}) {
  SignedLetters w = inverse_of(u);
  SignedLetters pos = to_signed(v);
  w.insert(w.end(), pos.begin(), pos.end());
  ReversalOutcome rev = right_reverse(p, std::move(w), opts);
  ThetaStarResult res;
  res.status = rev.status;
  res.loop_detected = rev.loop_detected;
  if (rev.status != ReversalStatus::Terminated) return res;
  for (const auto& l : rev.result)
    if (!l.inv) res.uv.push_back(l.gen);
  for (auto it = rev.result.rbegin(); it != rev.result.rend(); ++it)
    if (it->inv) res.vu.push_back(it->gen);
  return res;
}

// ---------------------------------------------------------------------------
// Reversing grids
// ---------------------------------------------------------------------------

struct GridCell {
  Word left, top, bottom, right;
};

struct ReversingGrid {
  std::vector<std::vector<GridCell>> cells;  // rows indexed by letters of u
  bool complete = false;
};

/// Tile-by-tile grid for reversing u^-1 v; each cell is a full reversing of
/// its left and top edge words.
inline ReversingGrid right_reversing_grid(const Presentation& p, const Word& u,
                                          const Word& v,
                                          const ReversalOptions& opts = {}) {
  ReversingGrid grid;
  grid.cells.assign(u.size(), std::vector<GridCell>(v.size()));
  grid.complete = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      GridCell& c = grid.cells[i][j];
      c.left = j == 0 ? Word{u[i]} : grid.cells[i][j - 1].right;
      c.top = i == 0 ? Word{v[j]} : grid.cells[i - 1][j].bottom;
      ThetaStarResult r = theta_star(p, c.left, c.top, opts);
      if (r.status != ReversalStatus::Terminated) {
        grid.complete = false;
        return grid;
      }
      c.bottom = r.uv;
      c.right = r.vu;
    }
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Cube condition and completeness
// ---------------------------------------------------------------------------

/// Equality and quotient callbacks supplied by an equality backend; eq may
/// return nullopt when inconclusive.
struct CubeOracle {
  std::function<std::optional<bool>(const Word&, const Word&)> eq;
  /// some w with u.w == v, when u left-divides v
  std::function<std::optional<Word>(const Word&, const Word&)> left_quotient;
};

struct CubeVerdict {
  std::array<Word, 3> triple;
  bool holds = false;
  bool unknown = false;
  std::optional<std::pair<Word, Word>> witness;
  std::string method;  // "theta" or "factorability"
};

namespace detail {

inline Word append(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Sharp cube condition via theta*, for complemented presentations.
inline CubeVerdict cube_check_theta(const Presentation& p, const Word& u,
                                    const Word& v, const Word& w,
                                    const CubeOracle& oracle,
                                    const ReversalOptions& opts) {
  CubeVerdict verdict;
  verdict.triple = {u, v, w};
  verdict.method = "theta";
  ThetaStarResult uv = theta_star(p, u, v, opts);
  if (uv.status == ReversalStatus::Diverged) {
    verdict.unknown = true;
    return verdict;
  }
  if (uv.status == ReversalStatus::Stuck) {
    // theta*(u,v) undefined: both hat-values undefined, condition holds
    verdict.holds = true;
    return verdict;
  }
  Word a = append(u, uv.uv);  // u theta*(u,v)
  Word b = append(v, uv.vu);  // v theta*(v,u)
  ThetaStarResult aw = theta_star(p, a, w, opts);
  ThetaStarResult bw = theta_star(p, b, w, opts);
  if (aw.status == ReversalStatus::Diverged ||
      bw.status == ReversalStatus::Diverged) {
    verdict.unknown = true;
    return verdict;
  }
  if ((aw.status == ReversalStatus::Stuck) !=
      (bw.status == ReversalStatus::Stuck)) {
    verdict.holds = false;
    verdict.witness = {a, b};
    return verdict;
  }
  if (aw.status == ReversalStatus::Stuck) {
    verdict.holds = true;
    return verdict;
  }
  auto e1 = oracle.eq(aw.uv, bw.uv);
  auto e2 = oracle.eq(aw.vu, bw.vu);
  if (!e1 || !e2) {
    verdict.unknown = true;
    return verdict;
  }
  verdict.holds = *e1 && *e2;
  if (!verdict.holds) verdict.witness = {aw.uv, bw.uv};
  return verdict;
}

/// General cube condition via rev-factorability, for presentations without a
/// syntactic right-complement.
inline CubeVerdict cube_check_factorability(const Presentation& p,
                                            const Word& u, const Word& v,
                                            const Word& w,
                                            const CubeOracle& oracle,
                                            const ReversalOptions& opts) {
  CubeVerdict verdict;
  verdict.triple = {u, v, w};
  verdict.method = "factorability";
  // reverse u^-1 w w^-1 v in all possible ways
  SignedLetters start = inverse_of(u);
  SignedLetters mid = to_signed(w);
  start.insert(start.end(), mid.begin(), mid.end());
  SignedLetters mid2 = inverse_of(w);
  start.insert(start.end(), mid2.begin(), mid2.end());
  SignedLetters tail = to_signed(v);
  start.insert(start.end(), tail.begin(), tail.end());
  auto outcomes = right_reverse_all(p, start, opts);

  SignedLetters direct = inverse_of(u);
  SignedLetters vpos = to_signed(v);
  direct.insert(direct.end(), vpos.begin(), vpos.end());
  auto direct_outcomes = right_reverse_all(p, direct, opts);

  auto split = [](const SignedLetters& t) {
    Word pos, neg;
    for (const auto& l : t)
      if (!l.inv) pos.push_back(l.gen);
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      if (it->inv) neg.push_back(it->gen);
    return std::pair<Word, Word>(pos, neg);  // (v-tilde, u-tilde)
  };

  for (const auto& outcome : outcomes) {
    auto [vt, ut] = split(outcome);
    bool factorable = false;
    for (const auto& d : direct_outcomes) {
      auto [v2, u2] = split(d);
      auto w1 = oracle.left_quotient(u2, ut);
      if (!w1) continue;
      Word other = append(v2, *w1);
      auto e = oracle.eq(other, vt);
      if (e && *e) {
        factorable = true;
        break;
      }
    }
    if (!factorable) {
      verdict.holds = false;
      verdict.witness = {vt, ut};
      return verdict;
    }
  }
  verdict.holds = true;
  return verdict;
}

}  // namespace detail

inline CubeVerdict cube_check(const Presentation& p, const Word& u,
                              const Word& v, const Word& w,
                              const CubeOracle& oracle,
                              const ReversalOptions& opts = {}) {
  if (p.classification.complemented)
    return detail::cube_check_theta(p, u, v, w, oracle, opts);
  return detail::cube_check_factorability(p, u, v, w, oracle, opts);
}

enum class CompletenessStatus { Complete, Incomplete, Unknown };

struct CompletenessVerdict {
  CompletenessStatus status = CompletenessStatus::Unknown;
  std::optional<std::array<Word, 3>> witness;
  std::string method;
};

/// Sharp cube condition on all generator triples; sound for presentations
/// with a Noetherianity certificate.
inline CompletenessVerdict completeness_check(const Presentation& p,
                                              const CubeOracle& oracle,
                                              const ReversalOptions& opts = {}) {
  CompletenessVerdict verdict;
  if (!noetherian_certified(p)) {
    verdict.status = CompletenessStatus::Unknown;
    return verdict;
  }
  const int n = static_cast<int>(p.generators.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        // triples must share a source
        if (p.generators[a].source != p.generators[b].source ||
            p.generators[a].source != p.generators[c].source)
          continue;
        CubeVerdict cv = cube_check(p, {a}, {b}, {c}, oracle, opts);
        verdict.method = cv.method;
        if (cv.unknown) {
          verdict.status = CompletenessStatus::Unknown;
          verdict.witness = {{Word{a}, Word{b}, Word{c}}};
          return verdict;
        }
        if (!cv.holds) {
          verdict.status = CompletenessStatus::Incomplete;
          verdict.witness = {{Word{a}, Word{b}, Word{c}}};
          return verdict;
        }
      }
  verdict.status = CompletenessStatus::Complete;
  return verdict;
}

}  // namespace garside
