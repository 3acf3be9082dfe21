#pragma once

// Closure computations, Garside-family recognition, smallest Garside family,
// solidity, bounded families with a Garside map, duality, submonoids and
// compatibility, canonical length.

#include "garside/normal_form.hpp"

namespace garside {

struct ClosureReport {
  std::vector<Word> input;
  std::vector<Word> closed;
  int rounds = 0;
  bool bound_hit = false;
};

struct ClosureOptions {
  long element_cap = 24;   // max canonical length of closure members
  long pair_slack = 0;     // extra mcm search length beyond |u|+|v|
  long reversing_budget = 2000;
  long reversing_word_cap = 512;
};

inline ClosureReport close_under_right_divisors(const Backend& b,
                                                const std::vector<Word>& X) {
  ClosureReport rep;
  std::set<Word> set;
  for (const Word& w : X) {
    rep.input.push_back(b.canon(w));
    set.insert(b.canon(w));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.rounds;
    std::vector<Word> cur(set.begin(), set.end());
    for (const Word& g : cur)
      for (const Word& d : b.right_divisors(g))
        if (set.insert(d).second) changed = true;
  }
  rep.closed.assign(set.begin(), set.end());
  std::sort(rep.closed.begin(), rep.closed.end(), shortlex_less);
  return rep;
}

namespace detail {

inline long max_relation_side(const Presentation& p) {
  long m = 1;
  for (const Relation& r : p.relations)
    m = std::max<long>(m, std::max(r.lhs.size(), r.rhs.size()));
  return m;
}

/// Minimal common right-multiples of a pair during closure computations.
/// Complemented presentations go through reversing (unique lcm); otherwise a
/// bounded enumeration runs.  `certain` is false when a reversing budget or
/// bound was hit.
struct PairMcms {
  std::vector<Word> mcms;
  bool certain = true;
};

inline PairMcms closure_pair_mcms(const Backend& b, const Word& u,
                                  const Word& v, const ClosureOptions& opts) {
  PairMcms out;
  const Presentation& p = b.pres();
  if (p.classification.complemented) {
    ReversalOptions ro;
    ro.budget = opts.reversing_budget;
    ro.max_word_length = opts.reversing_word_cap;
    ThetaStarResult r = theta_star(p, u, v, ro);
    if (r.status == ReversalStatus::Terminated) {
      Word lcm = u;
      lcm.insert(lcm.end(), r.uv.begin(), r.uv.end());
      out.mcms.push_back(b.enumerable() ? b.canon(lcm) : lcm);
    } else if (r.status == ReversalStatus::Diverged) {
      out.certain = false;  // treated as: no common multiple found
    }
    return out;
  }
  long bound = static_cast<long>(u.size() + v.size()) +
               max_relation_side(p) + opts.pair_slack;
  MCMSet m = right_mcms(b, u, v, std::min<long>(bound, opts.element_cap));
  out.mcms = m.elements;
  return out;
}

}  // namespace detail

inline ClosureReport close_under_right_mcm(const Backend& b,
                                           const std::vector<Word>& X,
                                           const ClosureOptions& opts = {}) {
  ClosureReport rep;
  std::set<Word> set;
  for (const Word& w : X) {
    rep.input.push_back(b.canon(w));
    set.insert(b.canon(w));
  }
  std::set<std::pair<Word, Word>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.rounds;
    std::vector<Word> cur(set.begin(), set.end());
    for (const Word& u : cur)
      for (const Word& v : cur) {
        if (!done.insert({u, v}).second) continue;
        detail::PairMcms pm = detail::closure_pair_mcms(b, u, v, opts);
        if (!pm.certain) rep.bound_hit = true;
        for (const Word& m : pm.mcms) {
          if (static_cast<long>(m.size()) > opts.element_cap) {
            rep.bound_hit = true;
            continue;
          }
          if (set.insert(m).second) changed = true;
        }
      }
  }
  rep.closed.assign(set.begin(), set.end());
  std::sort(rep.closed.begin(), rep.closed.end(), shortlex_less);
  return rep;
}

/// Closure of the atoms and the identity under right-mcm and right-divisor:
/// the smallest Garside family containing 1, for Noetherian presentations
/// admitting right-mcms.
inline ClosureReport smallest_garside_family(const Backend& b,
                                             const ClosureOptions& opts = {}) {
  ClosureReport rep;
  std::set<Word> set{Word{}};
  for (const Word& a : atoms(b)) set.insert(a);
  rep.input.assign(set.begin(), set.end());
  std::set<std::pair<Word, Word>> done;
  bool changed = true;
  while (changed) {
    changed = false;
    ++rep.rounds;
    std::vector<Word> cur(set.begin(), set.end());
    for (const Word& u : cur)
      for (const Word& v : cur) {
        if (u.empty() || v.empty()) continue;
        if (!done.insert({u, v}).second) continue;
        detail::PairMcms pm = detail::closure_pair_mcms(b, u, v, opts);
        if (!pm.certain) rep.bound_hit = true;
        for (const Word& m : pm.mcms) {
          if (static_cast<long>(m.size()) > opts.element_cap) {
            rep.bound_hit = true;
            continue;
          }
          if (set.insert(m).second) changed = true;
        }
      }
    std::vector<Word> cur2(set.begin(), set.end());
    for (const Word& g : cur2)
      for (const Word& d : b.right_divisors(g))
        if (set.insert(d).second) changed = true;
  }
  rep.closed.assign(set.begin(), set.end());
  std::sort(rep.closed.begin(), rep.closed.end(), shortlex_less);
  return rep;
}

// ---------------------------------------------------------------------------
// Closure-property checks (bounded, up to invertibles)
// ---------------------------------------------------------------------------

inline bool member_up_to_inv(const Backend& b, const Word& w,
                             const std::vector<Word>& S) {
  if (b.is_invertible(w)) return true;
  return std::any_of(S.begin(), S.end(),
                     [&](const Word& s) { return b.eqir(w, s); });
}

inline std::optional<std::pair<Word, Word>> right_divisor_closure_failure(
    const Backend& b, const Family& S) {
  for (const Word& s : S.elements)
    for (const Word& d : b.right_divisors(s))
      if (!member_up_to_inv(b, d, S.elements)) return std::make_pair(s, d);
  return std::nullopt;
}

inline std::optional<std::pair<Word, Word>> right_mcm_closure_failure(
    const Backend& b, const Family& S, const ClosureOptions& opts = {}) {
  for (const Word& u : S.elements)
    for (const Word& v : S.elements) {
      detail::PairMcms pm = detail::closure_pair_mcms(b, u, v, opts);
      for (const Word& m : pm.mcms)
        if (!member_up_to_inv(b, m, S.elements)) return std::make_pair(u, m);
    }
  return std::nullopt;
}

/// Closed under right-comultiple within the bound: every common
/// right-multiple h of s,t in S is a right-multiple of one lying in S.
inline std::optional<std::array<Word, 3>> right_comultiple_closure_failure(
    const Backend& b, const Family& S, long bound) {
  if (!b.enumerable())
    throw backend_inapplicable("comultiple check needs enumeration");
  for (const Word& s : S.elements)
    for (const Word& t : S.elements) {
      MCMSet m = right_mcms(b, s, t, bound);
      for (const Word& h : m.elements)
        if (!member_up_to_inv(b, h, S.elements))
          return std::array<Word, 3>{s, t, h};
    }
  return std::nullopt;
}

inline Family sharp_family(const Backend& b, const Family& S) {
  std::set<Word> set;
  for (const Word& e : b.invertible_elements()) {
    set.insert(b.canon(e));
    for (const Word& s : S.elements) {
      Word se = s;
      se.insert(se.end(), e.begin(), e.end());
      set.insert(b.canon(se));
    }
  }
  Family out;
  out.elements.assign(set.begin(), set.end());
  std::sort(out.elements.begin(), out.elements.end(), shortlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Solidity and recognition
// ---------------------------------------------------------------------------

struct SolidityVerdict {
  bool solid = false;
  std::string reason;
};

/// Solid: includes the identities and closed under right-quotient.
inline SolidityVerdict is_solid(const Backend& b, const Family& S) {
  SolidityVerdict v;
  bool has_identity = std::any_of(S.elements.begin(), S.elements.end(),
                                  [&](const Word& s) { return s.empty(); });
  if (!has_identity) {
    v.reason = "family does not contain the identity";
    return v;
  }
  for (const Word& s : S.elements)
    for (const Word& t : S.elements) {
      auto q = b.left_quotient(s, t);
      if (!q) continue;
      Word cq = b.canon(*q);
      if (!S.contains(cq)) {
        v.reason = "right-quotient " + word_str(b.pres(), cq) + " of " +
                   word_str(b.pres(), t) + " by " + word_str(b.pres(), s) +
                   " is missing";
        return v;
      }
    }
  v.solid = true;
  return v;
}

struct GarsideFamilyVerdict {
  bool is_garside = false;
  std::string criterion;
  std::string reason;
};

/// Recognition over the ambient category: generation plus either the
/// solid/right-lcm route or the right-divisor + right-mcm route.
inline GarsideFamilyVerdict is_garside_family(const Backend& b,
                                              const Family& S,
                                              const ClosureOptions& opts = {}) {
  GarsideFamilyVerdict v;
  for (const Word& a : atoms(b)) {
    bool generated = member_up_to_inv(b, a, S.elements);
    if (!generated) {
      v.criterion = "generation";
      v.reason = "atom " + word_str(b.pres(), a) + " is not in the family";
      return v;
    }
  }
  if (auto fail = right_divisor_closure_failure(b, S)) {
    v.criterion = "right-divisor closure";
    v.reason = "right-divisor " + word_str(b.pres(), fail->second) + " of " +
               word_str(b.pres(), fail->first) + " is missing";
    return v;
  }
  if (auto fail = right_mcm_closure_failure(b, S, opts)) {
    v.criterion = "right-mcm closure";
    v.reason = "right-mcm " + word_str(b.pres(), fail->second) +
               " of a pair containing " + word_str(b.pres(), fail->first) +
               " is missing";
    return v;
  }
  v.is_garside = true;
  v.criterion = "closed under right-divisor and right-mcm, generating";
  return v;
}

// ---------------------------------------------------------------------------
// Bounded families: Garside map, duality, functor phi
// ---------------------------------------------------------------------------

class not_bounded_error : public error {
 public:
  using error::error;
};

struct DeltaStructure {
  Word delta;
  std::vector<Word> divisors;             // Div(delta), canonical, sorted
  std::map<Word, Word> dual;              // s -> s \ delta
  std::map<Word, Word> phi;               // dual of dual
  std::map<int, int> phi_letter;          // action on atoms, when defined
};

/// Builds and verifies a Delta-structure: each divisor has a complement, the
/// dual is a bijection of Div(delta) onto the right-divisors, phi permutes
/// Div(delta), and the duality reverses divisibility order.
inline DeltaStructure delta_structure(const Backend& b, const Word& delta) {
  DeltaStructure d;
  d.delta = b.canon(delta);
  d.divisors = b.left_divisors(d.delta);
  std::vector<Word> rdiv = b.right_divisors(d.delta);
  for (const Word& s : d.divisors) {
    auto q = b.left_quotient(s, d.delta);
    if (!q) throw not_bounded_error("divisor without complement");
    Word dq = b.canon(*q);
    if (std::find(rdiv.begin(), rdiv.end(), dq) == rdiv.end())
      throw not_bounded_error("complement is not a right-divisor");
    d.dual[s] = dq;
  }
  // injectivity of the dual
  std::set<Word> image;
  for (auto& [s, t] : d.dual)
    if (!image.insert(t).second)
      throw not_bounded_error("duality map is not injective");
  for (const Word& s : d.divisors) {
    auto it = d.dual.find(d.dual[s]);
    if (it == d.dual.end())
      throw not_bounded_error("dual of a divisor leaves Div(delta)");
    d.phi[s] = it->second;
  }
  std::set<Word> phi_image;
  for (auto& [s, t] : d.phi) phi_image.insert(t);
  if (phi_image.size() != d.divisors.size())
    throw not_bounded_error("phi does not permute Div(delta)");
  // order reversal: s divides t iff dual(t) right-divides dual(s)
  for (const Word& s : d.divisors)
    for (const Word& t : d.divisors) {
      bool lhs = b.left_divides(s, t);
      bool rhs = b.right_divides(d.dual.at(t), d.dual.at(s));
      if (lhs != rhs)
        throw not_bounded_error("duality does not reverse the order");
    }
  for (int g = 0; g < static_cast<int>(b.pres().generators.size()); ++g) {
    auto it = d.phi.find(b.canon(Word{g}));
    if (it != d.phi.end() && it->second.size() == 1)
      d.phi_letter[g] = it->second[0];
  }
  return d;
}

/// Injectivity of phi on pair products of divisors (right-cancellativity
/// criterion for bounded families).
inline bool phi_injective_on_divisor_pairs(const Backend& b,
                                           const DeltaStructure& d) {
  auto apply_phi = [&](const Word& w) {
    Word out;
    for (int g : w) {
      auto it = d.phi_letter.find(g);
      if (it == d.phi_letter.end())
        throw not_bounded_error("phi is not letterwise");
      out.push_back(it->second);
    }
    return out;
  };
  std::vector<Word> pairs;
  for (const Word& s : d.divisors)
    for (const Word& t : d.divisors) {
      Word st = s;
      st.insert(st.end(), t.begin(), t.end());
      pairs.push_back(b.canon(st));
    }
  std::sort(pairs.begin(), pairs.end(), shortlex_less);
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (b.equal(apply_phi(pairs[i]), apply_phi(pairs[j]))) return false;
  return true;
}

class not_expressible_error : public error {
 public:
  using error::error;
};

/// Canonical length of a signed word over a bounded fixture: write the
/// element as delta^-k . w with w positive, take the Div(delta)-normal form
/// of w and count its non-delta entries (sup minus inf); delta powers have
/// canonical length 0.
inline long canonical_length(const Backend& b, const DeltaStructure& d,
                             const SignedLetters& g) {
  // phi^-1 on letters, for pushing delta^-1 to the left
  std::map<int, int> phi_inv;
  for (auto& [x, y] : d.phi_letter) phi_inv[y] = x;
  long k = 0;
  Word w;
  for (const SignedLetter& l : g) {
    if (!l.inv) {
      w.push_back(l.gen);
      continue;
    }
    auto it = d.dual.find(b.canon(Word{l.gen}));
    if (it == d.dual.end())
      throw not_expressible_error("letter does not divide delta");
    w.insert(w.end(), it->second.begin(), it->second.end());
    Word shifted;
    for (int x : w) {
      auto pit = phi_inv.find(x);
      if (pit == phi_inv.end())
        throw not_expressible_error("phi^-1 is not letterwise");
      shifted.push_back(pit->second);
    }
    w = std::move(shifted);
    ++k;
  }
  Family div;
  div.elements = d.divisors;
  NormalPath nf = normal_decomposition(b, div, w);
  long sup = static_cast<long>(nf.entries.size());
  long inf = 0;
  for (const Word& e : nf.entries) {
    if (b.eqir(e, d.delta))
      ++inf;
    else
      break;
  }
  return sup - inf;
}

inline long quasi_distance(const Backend& b, const DeltaStructure& d,
                           const SignedLetters& g1, const SignedLetters& g2) {
  SignedLetters w;
  for (auto it = g1.rbegin(); it != g1.rend(); ++it)
    w.push_back({it->gen, !it->inv});
  w.insert(w.end(), g2.begin(), g2.end());
  return canonical_length(b, d, free_reduce(w));
}

/// Family from a textual spec: "auto" (smallest Garside family),
/// "div:<word>" (divisors of an element), or a ';'-separated word list; a
/// "sharp:" prefix closes under right multiplication by invertibles.
inline Family family_from_spec(const Backend& b, const std::string& spec) {
  const Presentation& p = b.pres();
  bool sharp = false;
  std::string body = spec;
  if (body.rfind("sharp:", 0) == 0) {
    sharp = true;
    body = body.substr(6);
  }
  Family fam;
  if (body == "auto") {
    fam.elements = smallest_garside_family(b).closed;
  } else if (body.rfind("div:", 0) == 0) {
    fam.elements = b.left_divisors(parse_positive_word(p, body.substr(4)));
  } else {
    std::vector<Word> words;
    for (auto part : detail::split(body, ';'))
      words.push_back(parse_positive_word(p, part));
    fam = make_family(b, words);
  }
  if (sharp) fam = sharp_family(b, fam);
  return fam;
}

// ---------------------------------------------------------------------------
// Submonoid view: divisibility relative to a finitely generated submonoid
// ---------------------------------------------------------------------------

class SubmonoidView {
 public:
  SubmonoidView(const Backend& b, std::vector<Word> gens, long cap)
      : b_(&b), cap_(cap) {
    for (Word& g : gens) gens_.push_back(b.canon(g));
    std::deque<Word> frontier;
    Word e = b.canon(Word{});
    index_[e] = 0;
    elements_.push_back(e);
    frontier.push_back(e);
    while (!frontier.empty()) {
      Word cur = frontier.front();
      frontier.pop_front();
      for (const Word& g : gens_) {
        Word next = cur;
        next.insert(next.end(), g.begin(), g.end());
        next = b.canon(next);
        if (static_cast<long>(next.size()) > cap_) continue;
        if (index_.emplace(next, elements_.size()).second) {
          elements_.push_back(next);
          frontier.push_back(next);
        }
      }
    }
    std::sort(elements_.begin(), elements_.end(), shortlex_less);
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_[elements_[i]] = i;
  }

  const Backend& backend() const { return *b_; }
  const std::vector<Word>& elements() const { return elements_; }
  const std::vector<Word>& generators() const { return gens_; }
  long cap() const { return cap_; }

  bool contains(const Word& w) const { return index_.count(b_->canon(w)) > 0; }

  /// Quotient within the submonoid: some w made of subgenerators with
  /// u.w == v, found by graph search over the element ball.
  std::optional<Word> left_quotient_in(const Word& u, const Word& v) const {
    Word cu = b_->canon(u), cv = b_->canon(v);
    if (!index_.count(cu) || !index_.count(cv)) return std::nullopt;
    std::deque<std::pair<Word, Word>> frontier{{cu, {}}};
    std::set<Word> seen{cu};
    while (!frontier.empty()) {
      auto [cur, path] = frontier.front();
      frontier.pop_front();
      if (cur == cv) return path;
      for (const Word& g : gens_) {
        Word next = cur;
        next.insert(next.end(), g.begin(), g.end());
        next = b_->canon(next);
        if (!index_.count(next)) continue;
        if (seen.insert(next).second) {
          Word np = path;
          np.insert(np.end(), g.begin(), g.end());
          frontier.push_back({next, np});
        }
      }
    }
    return std::nullopt;
  }

  bool left_divides_in(const Word& u, const Word& v) const {
    return left_quotient_in(u, v).has_value();
  }

  std::vector<Word> left_divisors_in(const Word& v) const {
    std::vector<Word> out;
    for (const Word& f : elements_)
      if (f.size() <= v.size() + 2 && left_divides_in(f, v)) out.push_back(f);
    return out;
  }

  /// Elements invertible inside the submonoid (inverse also inside).
  std::vector<Word> invertibles_in() const {
    std::vector<Word> out;
    Word e = b_->canon(Word{});
    for (const Word& g : elements_)
      if (left_divides_in(g, e)) out.push_back(g);
    return out;
  }

  bool is_invertible_in(const Word& g) const {
    return left_divides_in(g, b_->canon(Word{}));
  }

  std::vector<Word> mcms_in(const Word& u, const Word& v, long bound) const {
    std::vector<Word> common;
    for (const Word& h : elements_) {
      if (static_cast<long>(h.size()) > bound) continue;
      if (left_divides_in(u, h) && left_divides_in(v, h)) common.push_back(h);
    }
    std::vector<Word> mcms;
    for (const Word& h : common) {
      bool minimal = true;
      for (const Word& h2 : common)
        if (h2 != h && left_divides_in(h2, h)) {
          minimal = false;
          break;
        }
      if (minimal) mcms.push_back(h);
    }
    return mcms;
  }

 private:
  const Backend* b_ = nullptr;
  long cap_ = 0;
  std::vector<Word> gens_;
  std::vector<Word> elements_;
  std::map<Word, std::size_t> index_;
};

/// Garside-family test relative to a submonoid (divisibility computed inside
/// the submonoid).
inline GarsideFamilyVerdict is_garside_family_in(const SubmonoidView& view,
                                                 const Family& S, long bound) {
  const Backend& b = view.backend();
  GarsideFamilyVerdict v;
  auto member = [&](const Word& w) {
    if (view.is_invertible_in(w)) return true;
    return S.contains(b.canon(w));
  };
  // right-divisor closure inside the submonoid
  for (const Word& s : S.elements)
    for (const Word& f : view.elements()) {
      if (f.size() > s.size()) continue;
      auto q = view.left_quotient_in(f, s);
      if (!q) continue;
      // f . q == s with q in the submonoid: q is a right-divisor
      Word cq = b.canon(*q);
      if (!member(cq)) {
        v.criterion = "right-divisor closure (in submonoid)";
        v.reason = "right-divisor " + word_str(b.pres(), cq) + " of " +
                   word_str(b.pres(), s) + " is missing";
        return v;
      }
    }
  for (const Word& s : S.elements)
    for (const Word& t : S.elements)
      for (const Word& m : view.mcms_in(s, t, bound))
        if (!member(m)) {
          v.criterion = "right-mcm closure (in submonoid)";
          v.reason = "right-mcm " + word_str(b.pres(), m) + " of " +
                     word_str(b.pres(), s) + " and " + word_str(b.pres(), t) +
                     " is missing";
          return v;
        }
  v.is_garside = true;
  v.criterion = "closed under right-divisor and right-mcm in the submonoid";
  return v;
}

// ---------------------------------------------------------------------------
// Compatibility of a submonoid with a Garside family
// ---------------------------------------------------------------------------

struct CompatibilityReport {
  bool compatible = false;
  std::string reason;
  std::size_t sharp_size = 0;         // |S1#|
  std::size_t family_in_sub_size = 0; // |S /\ N|
  bool sub_right_quotient_closed = true;
  std::optional<Word> right_quotient_witness;
};

/// Checks whether the submonoid generated by sub_gens is compatible with the
/// Garside family S: S1# must generate the submonoid, products of two S1#
/// elements must admit S-normal decompositions with entries in S1#, and
/// invertible left multiples of S1 members must stay in S1#.
inline CompatibilityReport check_compatibility(const Backend& b,
                                               const std::vector<Word>& sub_gens,
                                               const Family& S, long cap = 10) {
  CompatibilityReport rep;
  SubmonoidView view(b, sub_gens, cap);

  // S1 = S /\ N and S1# = S1 Isom(N) \/ Isom(N)
  std::vector<Word> s1;
  for (const Word& s : S.elements)
    if (view.contains(s)) s1.push_back(s);
  rep.family_in_sub_size = s1.size();
  std::vector<Word> isom_n = view.invertibles_in();
  std::set<Word> s1_sharp(isom_n.begin(), isom_n.end());
  for (const Word& s : s1)
    for (const Word& e : isom_n) {
      Word se = s;
      se.insert(se.end(), e.begin(), e.end());
      s1_sharp.insert(b.canon(se));
    }
  rep.sharp_size = s1_sharp.size();

  // informational: right-quotient closure of the submonoid in the ambient
  for (const Word& u : view.elements()) {
    for (const Word& x : view.elements()) {
      if (u.size() > x.size()) continue;
      auto q = b.left_quotient(u, x);
      if (q && !view.contains(*q)) {
        rep.sub_right_quotient_closed = false;
        rep.right_quotient_witness = b.canon(*q);
        break;
      }
    }
    if (!rep.sub_right_quotient_closed) break;
  }

  // invertible left multiples: Isom(N) . S1 inside S1#
  for (const Word& e : isom_n)
    for (const Word& s : s1) {
      Word es = e;
      es.insert(es.end(), s.begin(), s.end());
      Word c = b.canon(es);
      if (!s1_sharp.count(c)) {
        rep.reason = "element " + word_str(b.pres(), c) + " = " +
                     word_str(b.pres(), e) + " . " + word_str(b.pres(), s) +
                     " leaves S1#";
        return rep;
      }
    }

  // generation: products of S1# reach the whole element ball (away from the
  // boundary, where the ball is truncated)
  {
    std::size_t max_gen_len = 0;
    for (const Word& s : s1_sharp) max_gen_len = std::max(max_gen_len, s.size());
    std::set<Word> reach{b.canon(Word{})};
    bool grown = true;
    while (grown) {
      grown = false;
      std::vector<Word> cur(reach.begin(), reach.end());
      for (const Word& r : cur)
        for (const Word& s : s1_sharp) {
          Word rs = r;
          rs.insert(rs.end(), s.begin(), s.end());
          rs = b.canon(rs);
          if (static_cast<long>(rs.size()) > view.cap()) continue;
          if (view.contains(rs) && reach.insert(rs).second) grown = true;
        }
    }
    for (const Word& g : view.elements()) {
      if (g.size() + max_gen_len > static_cast<std::size_t>(view.cap()))
        continue;
      if (!reach.count(g)) {
        rep.reason =
            "submonoid element " + word_str(b.pres(), g) + " is not generated";
        return rep;
      }
    }
  }

  // every product of two S1# elements has an S-normal decomposition with
  // entries in S1#
  for (const Word& s : s1_sharp)
    for (const Word& t : s1_sharp) {
      Word x = s;
      x.insert(x.end(), t.begin(), t.end());
      x = b.canon(x);
      if (b.is_invertible(x)) continue;
      bool found = s1_sharp.count(x) > 0;  // single-entry decomposition
      if (!found)
        for (const Word& e1 : s1_sharp) {
          auto q = b.left_quotient(e1, x);
          if (!q) continue;
          Word e2 = b.canon(*q);
          if (!s1_sharp.count(e2)) continue;
          if (is_greedy_pair(b, S, e1, e2)) {
            found = true;
            break;
          }
        }
      if (!found) {
        rep.reason = "product " + word_str(b.pres(), x) +
                     " admits no normal decomposition inside S1#";
        return rep;
      }
    }

  rep.compatible = true;
  return rep;
}

}  // namespace garside
