#pragma once

// Equality backends (double reversing, breadth-first congruence search,
// confluent rewriting) and the divisibility lattice: divisors, right-lcms,
// minimal common right-multiples, gcds, atoms and height.

#include <cassert>
#include <deque>
#include <memory>
#include <numeric>

#include "garside/presentation.hpp"
#include "garside/reversing.hpp"

namespace garside {

class inconclusive_error : public error {
 public:
  using error::error;
};

class cap_exceeded : public error {
 public:
  using error::error;
};

class backend_inapplicable : public error {
 public:
  using error::error;
};

enum class BackendKind { DoubleReversing, HomogeneousBFS, ConfluentRewriting };

inline const char* to_string(BackendKind k) {
  switch (k) {
    case BackendKind::DoubleReversing: return "double-reversing";
    case BackendKind::HomogeneousBFS: return "homogeneous-bfs";
    case BackendKind::ConfluentRewriting: return "confluent-rewriting";
  }
  return "?";
}

/// Decides word equality for one presentation and provides the bounded
/// element enumeration the lattice operations are built on.  All words
/// handed in and out are positive.
class Backend {
 public:
  long length_cap = 24;     // bound for ball enumeration and quotient search
  long class_cap = 500000;  // max words explored per congruence class
  long budget = 10000;      // reversing step budget

  static Backend make(const Presentation& p,
                      std::optional<BackendKind> kind = std::nullopt) {
    Backend b;
    b.pres_ = &p;
    if (kind) {
      b.kind_ = *kind;
    } else if (p.classification.length_reducing_confluent) {
      b.kind_ = BackendKind::ConfluentRewriting;
    } else if (p.classification.homogeneous ||
               (!p.has_declared_invertible() && noetherian_certified(p))) {
      b.kind_ = BackendKind::HomogeneousBFS;
    } else if (p.classification.complemented && !p.has_declared_invertible()) {
      b.kind_ = BackendKind::DoubleReversing;
    } else {
      throw backend_inapplicable(
          "no equality backend applies to this presentation");
    }
    switch (b.kind_) {
      case BackendKind::ConfluentRewriting:
        if (!p.classification.length_reducing_confluent)
          throw backend_inapplicable(
              "rewriting backend needs a confluent shortlex-reducing system");
        b.rules_ = shortlex_rules(p);
        break;
      case BackendKind::HomogeneousBFS: {
        auto w = noetherian_weights(p);
        if (!w || p.has_declared_invertible())
          throw backend_inapplicable(
              "bfs backend needs balanced positive generator weights");
        b.weights_ = *w;
        break;
      }
      case BackendKind::DoubleReversing:
        if (!p.classification.complemented || p.has_declared_invertible())
          throw backend_inapplicable(
              "double reversing needs a complemented presentation without "
              "declared invertible generators");
        b.theta_ = build_theta(p);
        break;
    }
    return b;
  }

  const Presentation& pres() const { return *pres_; }
  BackendKind kind() const { return kind_; }
  bool enumerable() const { return kind_ != BackendKind::DoubleReversing; }

  long word_weight(const Word& w) const {
    if (weights_.empty()) return static_cast<long>(w.size());
    long s = 0;
    for (int g : w) s += weights_[g];
    return s;
  }

  /// The full congruence class of w (BFS backend only).
  std::vector<Word> word_class(const Word& w) const {
    std::size_t max_len = std::max<std::size_t>(w.size(), word_weight(w));
    std::deque<Word> frontier{w};
    std::set<Word> seen{w};
    while (!frontier.empty()) {
      Word cur = frontier.front();
      frontier.pop_front();
      for (const Relation& r : pres_->relations) {
        for (int dir = 0; dir < 2; ++dir) {
          const Word& from = dir ? r.rhs : r.lhs;
          const Word& to = dir ? r.lhs : r.rhs;
          if (from.empty() || from.size() > cur.size()) continue;
          for (std::size_t i = 0; i + from.size() <= cur.size(); ++i) {
            if (!std::equal(from.begin(), from.end(), cur.begin() + i))
              continue;
            Word next(cur.begin(), cur.begin() + i);
            next.insert(next.end(), to.begin(), to.end());
            next.insert(next.end(), cur.begin() + i + from.size(), cur.end());
            if (next.size() <= max_len && seen.insert(next).second) {
              if (seen.size() > static_cast<std::size_t>(class_cap))
                throw cap_exceeded("congruence class exceeds class cap");
              frontier.push_back(next);
            }
          }
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

  /// Canonical representative: shortest, then lexicographically least in
  /// declaration order.  Unavailable for the pure reversing backend.
  Word canon(const Word& w) const {
    switch (kind_) {
      case BackendKind::ConfluentRewriting:
        return rewrite_nf(w, rules_);
      case BackendKind::HomogeneousBFS: {
        auto it = canon_cache_.find(w);
        if (it != canon_cache_.end()) return it->second;
        auto cls = word_class(w);
        Word best = *std::min_element(cls.begin(), cls.end(), shortlex_less);
        for (const Word& x : cls) canon_cache_.emplace(x, best);
        return best;
      }
      case BackendKind::DoubleReversing:
        throw backend_inapplicable(
            "double reversing has no canonical representatives");
    }
    return w;
  }

  std::optional<bool> try_equal(const Word& u, const Word& v) const {
    switch (kind_) {
      case BackendKind::ConfluentRewriting:
        return rewrite_nf(u, rules_) == rewrite_nf(v, rules_);
      case BackendKind::HomogeneousBFS:
        if (word_weight(u) != word_weight(v)) return false;
        return canon(u) == canon(v);
      case BackendKind::DoubleReversing: {
        SignedLetters w = inverse_of(u);
        SignedLetters pos = to_signed(v);
        w.insert(w.end(), pos.begin(), pos.end());
        ReversalOptions opts;
        opts.budget = budget;
        ReversalOutcome rev = right_reverse(theta_, std::move(w), opts);
        if (rev.status == ReversalStatus::Diverged) return std::nullopt;
        if (rev.status == ReversalStatus::Stuck) return false;
        return rev.result.empty();
      }
    }
    return std::nullopt;
  }

  bool equal(const Word& u, const Word& v) const {
    auto r = try_equal(u, v);
    if (!r) throw inconclusive_error("equality test diverged");
    return *r;
  }

  // -- divisibility primitives ----------------------------------------------

  /// If u left-divides v, some w with u.w == v; nullopt otherwise.  The
  /// rewriting backend searches within a bounded ball, the reversing backend
  /// throws inconclusive_error when reversing diverges.
  std::optional<Word> left_quotient(const Word& u, const Word& v) const {
    switch (kind_) {
      case BackendKind::HomogeneousBFS: {
        Word cu = canon(u);
        for (const Word& x : word_class(v))
          for (std::size_t k = 0; k <= x.size(); ++k) {
            if (kind_ == BackendKind::HomogeneousBFS &&
                weights_are_unit_() && k != u.size())
              continue;
            Word prefix(x.begin(), x.begin() + k);
            if (word_weight(prefix) != word_weight(u)) continue;
            if (canon(prefix) == cu) return Word(x.begin() + k, x.end());
          }
        return std::nullopt;
      }
      case BackendKind::ConfluentRewriting: {
        Word target = canon(v);
        Word start = canon(u);
        long slack = 1;
        for (const auto& r : rules_) slack = std::max<long>(slack, r.lhs.size());
        long prune = static_cast<long>(target.size()) + 2 * slack;
        std::deque<std::pair<Word, Word>> frontier{{start, {}}};
        std::set<Word> seen{start};
        while (!frontier.empty()) {
          auto [cur, path] = frontier.front();
          frontier.pop_front();
          if (cur == target) return path;
          for (int g = 0; g < static_cast<int>(pres_->generators.size());
               ++g) {
            Word next = cur;
            next.push_back(g);
            next = canon(next);
            if (static_cast<long>(next.size()) > prune) continue;
            if (seen.insert(next).second) {
              Word np = path;
              np.push_back(g);
              if (static_cast<long>(np.size()) <= length_cap)
                frontier.push_back({next, np});
            }
          }
        }
        return std::nullopt;
      }
      case BackendKind::DoubleReversing: {
        ThetaStarResult r = theta_star_(u, v);
        if (r.status == ReversalStatus::Diverged)
          throw inconclusive_error("divisibility reversing diverged");
        if (r.status == ReversalStatus::Stuck) return std::nullopt;
        if (!r.vu.empty()) return std::nullopt;
        return r.uv;
      }
    }
    return std::nullopt;
  }

  bool left_divides(const Word& u, const Word& v) const {
    return left_quotient(u, v).has_value();
  }

  /// If u right-divides v, some w with w.u == v.
  std::optional<Word> right_quotient(const Word& u, const Word& v) const {
    const Backend& m = mirror_backend();
    Word ru(u.rbegin(), u.rend());
    Word rv(v.rbegin(), v.rend());
    auto q = m.left_quotient(ru, rv);
    if (!q) return std::nullopt;
    return Word(q->rbegin(), q->rend());
  }

  bool right_divides(const Word& u, const Word& v) const {
    return right_quotient(u, v).has_value();
  }

  /// All left-divisor classes of v, canonical representatives, shortlex
  /// sorted.
  std::vector<Word> left_divisors(const Word& v) const {
    std::set<Word> out;
    switch (kind_) {
      case BackendKind::HomogeneousBFS:
        for (const Word& x : word_class(v))
          for (std::size_t k = 0; k <= x.size(); ++k)
            out.insert(canon(Word(x.begin(), x.begin() + k)));
        break;
      case BackendKind::ConfluentRewriting: {
        long slack = 1;
        for (const auto& r : rules_) slack = std::max<long>(slack, r.lhs.size());
        for (const Word& g :
             ball(static_cast<long>(canon(v).size()) + 2 * slack))
          if (left_divides(g, v)) out.insert(g);
        break;
      }
      case BackendKind::DoubleReversing:
        throw backend_inapplicable(
            "divisor enumeration needs an enumerable backend");
    }
    std::vector<Word> res(out.begin(), out.end());
    std::sort(res.begin(), res.end(), shortlex_less);
    return res;
  }

  std::vector<Word> right_divisors(const Word& v) const {
    const Backend& m = mirror_backend();
    Word rv(v.rbegin(), v.rend());
    std::vector<Word> res;
    for (const Word& d : m.left_divisors(rv)) {
      Word w(d.rbegin(), d.rend());
      res.push_back(canon(w));
    }
    std::sort(res.begin(), res.end(), shortlex_less);
    res.erase(std::unique(res.begin(), res.end()), res.end());
    return res;
  }

  /// Canonical representatives of all elements of length (of canonical
  /// representative) at most max_len.  Single-object presentations only.
  const std::vector<Word>& ball(long max_len) const {
    if (!pres_->single_object())
      throw backend_inapplicable("ball enumeration needs a single object");
    if (!enumerable())
      throw backend_inapplicable("ball enumeration needs an enumerable backend");
    max_len = std::min(max_len, length_cap);
    auto it = ball_cache_.find(max_len);
    if (it != ball_cache_.end()) return it->second;
    std::set<Word> seen;
    std::deque<Word> frontier;
    Word empty;
    seen.insert(canon(empty));
    frontier.push_back(canon(empty));
    while (!frontier.empty()) {
      Word cur = frontier.front();
      frontier.pop_front();
      for (int g = 0; g < static_cast<int>(pres_->generators.size()); ++g) {
        Word next = cur;
        next.push_back(g);
        if (static_cast<long>(next.size()) > max_len) continue;
        next = canon(next);
        if (static_cast<long>(next.size()) > max_len) continue;
        if (seen.insert(next).second) frontier.push_back(next);
      }
    }
    std::vector<Word> res(seen.begin(), seen.end());
    std::sort(res.begin(), res.end(), shortlex_less);
    return ball_cache_.emplace(max_len, std::move(res)).first->second;
  }

  bool is_invertible(const Word& w) const {
    if (kind_ == BackendKind::HomogeneousBFS) return word_weight(w) == 0;
    if (kind_ == BackendKind::DoubleReversing) return w.empty();
    return left_quotient(w, Word{}).has_value();
  }

  /// Invertible elements within the default ball.
  const std::vector<Word>& invertible_elements() const {
    if (!invertibles_.empty() || invertibles_computed_) return invertibles_;
    invertibles_computed_ = true;
    if (kind_ == BackendKind::HomogeneousBFS ||
        kind_ == BackendKind::DoubleReversing) {
      invertibles_ = {Word{}};
      return invertibles_;
    }
    long cap = 1;
    for (const Relation& r : pres_->relations)
      cap = std::max<long>(cap, std::max(r.lhs.size(), r.rhs.size()));
    for (const Word& g : ball(cap + 1))
      if (is_invertible(g)) invertibles_.push_back(g);
    return invertibles_;
  }

  /// Equality up to right-multiplication by an invertible element.
  bool eqir(const Word& u, const Word& v) const {
    for (const Word& e : invertible_elements()) {
      Word ue = u;
      ue.insert(ue.end(), e.begin(), e.end());
      if (equal(ue, v)) return true;
    }
    return false;
  }

  const ThetaTable* theta() const {
    return kind_ == BackendKind::DoubleReversing ? &theta_ : nullptr;
  }

  const Backend& mirror_backend() const {
    if (!mirror_) {
      mirror_pres_ = std::make_shared<Presentation>(mirror(*pres_));
      auto mb = std::make_shared<Backend>(Backend::make(*mirror_pres_, kind_));
      mb->length_cap = length_cap;
      mb->class_cap = class_cap;
      mb->budget = budget;
      mirror_ = mb;
    }
    return *mirror_;
  }

  CubeOracle cube_oracle() const {
    CubeOracle o;
    o.eq = [this](const Word& u, const Word& v) { return try_equal(u, v); };
    o.left_quotient = [this](const Word& u,
                             const Word& v) -> std::optional<Word> {
      return left_quotient(u, v);
    };
    return o;
  }

 private:
  bool weights_are_unit_() const {
    return std::all_of(weights_.begin(), weights_.end(),
                       [](int w) { return w == 1; });
  }

  ThetaStarResult theta_star_(const Word& u, const Word& v) const {
    SignedLetters w = inverse_of(u);
    SignedLetters pos = to_signed(v);
    w.insert(w.end(), pos.begin(), pos.end());
    ReversalOptions opts;
    opts.budget = budget;
    ReversalOutcome rev = right_reverse(theta_, std::move(w), opts);
    ThetaStarResult res;
    res.status = rev.status;
    if (rev.status != ReversalStatus::Terminated) return res;
    for (const auto& l : rev.result)
      if (!l.inv) res.uv.push_back(l.gen);
    for (auto it = rev.result.rbegin(); it != rev.result.rend(); ++it)
      if (it->inv) res.vu.push_back(it->gen);
    return res;
  }

  const Presentation* pres_ = nullptr;
  BackendKind kind_ = BackendKind::HomogeneousBFS;
  std::vector<RewriteRule> rules_;
  std::vector<int> weights_;
  ThetaTable theta_;
  mutable std::unordered_map<Word, Word, WordHash> canon_cache_;
  mutable std::map<long, std::vector<Word>> ball_cache_;
  mutable std::vector<Word> invertibles_;
  mutable bool invertibles_computed_ = false;
  mutable std::shared_ptr<Presentation> mirror_pres_;
  mutable std::shared_ptr<Backend> mirror_;
};

// ---------------------------------------------------------------------------
// Lattice operations
// ---------------------------------------------------------------------------

struct MCMSet {
  std::vector<Word> elements;
  long search_bound = 0;
  bool cap_hit = false;
};

/// All minimal common right-multiples of u and v found within the length
/// bound; minimal means no other common multiple found properly left-divides
/// it.
inline MCMSet right_mcms(const Backend& b, const Word& u, const Word& v,
                         std::optional<long> bound = std::nullopt) {
  if (!b.enumerable())
    throw backend_inapplicable("right_mcms needs an enumerable backend");
  MCMSet out;
  out.search_bound =
      bound.value_or(static_cast<long>(u.size() + v.size()));
  Word cu = b.canon(u), cv = b.canon(v);
  // breadth-first over right-multiples of u
  std::deque<Word> frontier{cu};
  std::set<Word> seen{cu};
  std::vector<Word> common;
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    if (b.left_divides(cv, cur)) {
      common.push_back(cur);
      continue;  // anything above a common multiple is not minimal
    }
    for (int g = 0; g < static_cast<int>(b.pres().generators.size()); ++g) {
      Word next = cur;
      next.push_back(g);
      next = b.canon(next);
      if (static_cast<long>(next.size()) > out.search_bound) {
        out.cap_hit = true;
        continue;
      }
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::sort(common.begin(), common.end(), shortlex_less);
  common.erase(std::unique(common.begin(), common.end()), common.end());
  for (const Word& h : common) {
    bool minimal = true;
    for (const Word& h2 : common)
      if (h2 != h && b.left_divides(h2, h)) {
        minimal = false;
        break;
      }
    if (minimal) out.elements.push_back(h);
  }
  return out;
}

enum class LcmStatus { Exists, None, NotUnique, Inconclusive };

struct LcmResult {
  LcmStatus status = LcmStatus::Inconclusive;
  Word value;
};

inline LcmResult right_lcm(const Backend& b, const Word& u, const Word& v,
                           std::optional<long> bound = std::nullopt) {
  LcmResult res;
  if (const ThetaTable* th = b.theta(); th || b.pres().classification.complemented) {
    // complemented route: u . theta*(u, v)
    ThetaStarResult r = theta_star(b.pres(), u, v, {b.budget});
    if (r.status == ReversalStatus::Terminated) {
      res.status = LcmStatus::Exists;
      res.value = u;
      res.value.insert(res.value.end(), r.uv.begin(), r.uv.end());
      if (b.enumerable()) res.value = b.canon(res.value);
      return res;
    }
    if (r.status == ReversalStatus::Stuck) {
      res.status = LcmStatus::None;
      return res;
    }
    if (!b.enumerable()) {
      res.status = LcmStatus::Inconclusive;
      return res;
    }
    // fall through to enumeration when reversing diverges
  }
  if (!b.enumerable()) {
    res.status = LcmStatus::Inconclusive;
    return res;
  }
  MCMSet m = right_mcms(b, u, v, bound);
  if (m.elements.empty())
    res.status = LcmStatus::None;
  else if (m.elements.size() == 1) {
    res.status = LcmStatus::Exists;
    res.value = m.elements[0];
  } else
    res.status = LcmStatus::NotUnique;
  return res;
}

enum class GcdStatus { Exists, NotUnique, None };

struct GcdResult {
  GcdStatus status = GcdStatus::None;
  Word value;
  std::vector<Word> maxima;
};

inline GcdResult left_gcd(const Backend& b, const Word& u, const Word& v) {
  auto du = b.left_divisors(u);
  auto dv = b.left_divisors(v);
  std::vector<Word> common;
  std::set_intersection(du.begin(), du.end(), dv.begin(), dv.end(),
                        std::back_inserter(common));
  GcdResult res;
  for (const Word& c : common) {
    bool maximal = true;
    for (const Word& c2 : common)
      if (c2 != c && b.left_divides(c, c2)) {
        maximal = false;
        break;
      }
    if (maximal) res.maxima.push_back(c);
  }
  if (res.maxima.empty()) return res;  // cannot happen: 1 always divides
  bool unique = true;
  for (std::size_t i = 1; i < res.maxima.size(); ++i)
    if (!b.eqir(res.maxima[0], res.maxima[i])) unique = false;
  res.status = unique ? GcdStatus::Exists : GcdStatus::NotUnique;
  res.value = res.maxima[0];
  return res;
}

inline GcdResult right_gcd(const Backend& b, const Word& u, const Word& v) {
  auto du = b.right_divisors(u);
  auto dv = b.right_divisors(v);
  std::vector<Word> common;
  std::set_intersection(du.begin(), du.end(), dv.begin(), dv.end(),
                        std::back_inserter(common));
  GcdResult res;
  for (const Word& c : common) {
    bool maximal = true;
    for (const Word& c2 : common)
      if (c2 != c && b.right_divides(c, c2)) {
        maximal = false;
        break;
      }
    if (maximal) res.maxima.push_back(c);
  }
  if (res.maxima.empty()) return res;
  bool unique = res.maxima.size() == 1;
  res.status = unique ? GcdStatus::Exists : GcdStatus::NotUnique;
  res.value = res.maxima[0];
  return res;
}

/// Right-gcd of f and g from a common left-multiple f1.g = g1.f, by taking
/// the right-lcm of the left coefficients (dual-route oracle for tests).
inline std::optional<Word> right_gcd_via_left_multiple(const Backend& b,
                                                       const Word& g,
                                                       const Word& f1,
                                                       const Word& g1) {
  LcmResult l = right_lcm(b, f1, g1);
  if (l.status != LcmStatus::Exists) return std::nullopt;
  Word whole = f1;
  whole.insert(whole.end(), g.begin(), g.end());
  return b.left_quotient(l.value, whole);
}

class not_noetherian_error : public error {
 public:
  using error::error;
};

/// Atoms within the enumeration cap: non-invertible elements all of whose
/// factorizations have an invertible factor.
inline std::vector<Word> atoms(const Backend& b,
                               std::optional<long> cap = std::nullopt) {
  if (!noetherian_certified(b.pres()))
    throw not_noetherian_error("atom enumeration needs a Noetherian certificate");
  long c = cap.value_or(0);
  if (c <= 0) {
    c = 2;
    for (const Relation& r : b.pres().relations)
      c = std::max<long>(c, std::max(r.lhs.size(), r.rhs.size()));
    ++c;
  }
  std::vector<Word> out;
  for (const Word& g : b.ball(c)) {
    if (b.is_invertible(g)) continue;
    bool atom = true;
    for (const Word& f : b.left_divisors(g)) {
      if (b.is_invertible(f)) continue;
      auto h = b.left_quotient(f, g);
      if (h && !b.is_invertible(*h)) {
        atom = false;
        break;
      }
    }
    if (atom) out.push_back(g);
  }
  return out;
}

/// Maximal length of a decomposition into non-invertible factors.
inline long height(const Backend& b, const Word& w) {
  if (!noetherian_certified(b.pres()))
    throw not_noetherian_error("height needs a Noetherian certificate");
  std::unordered_map<Word, long, WordHash> memo;
  std::function<long(const Word&)> h = [&](const Word& g) -> long {
    if (b.is_invertible(g)) return 0;
    Word cg = b.canon(g);
    auto it = memo.find(cg);
    if (it != memo.end()) return it->second;
    long best = 1;
    for (const Word& f : b.left_divisors(cg)) {
      if (b.is_invertible(f)) continue;
      auto q = b.left_quotient(f, cg);
      if (!q || b.is_invertible(*q)) continue;
      best = std::max(best, 1 + h(*q));
    }
    memo[cg] = best;
    return best;
  };
  return h(w);
}

}  // namespace garside
