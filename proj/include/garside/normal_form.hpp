#pragma once

// Greedy normal decompositions with respect to a finite family: head
// computation, left multiplication by the domino scheme, power regrouping,
// symmetric normal decompositions of fractions, deformations.

#include "garside/divisibility.hpp"

namespace garside {

class no_head_error : public error {
 public:
  using error::error;
};

class not_left_disjoint_error : public error {
 public:
  using error::error;
};

/// A finite family of elements given by canonical representatives, with
/// closure flags that are either verified or unknown (never asserted blind).
struct Family {
  std::vector<Word> elements;
  std::optional<bool> right_divisor_closed;
  std::optional<bool> right_mcm_closed;
  std::optional<bool> right_comultiple_closed;

  bool contains(const Word& canon_word) const {
    return std::find(elements.begin(), elements.end(), canon_word) !=
           elements.end();
  }
};

inline Family make_family(const Backend& b, const std::vector<Word>& words) {
  Family f;
  std::set<Word> seen;
  for (const Word& w : words) seen.insert(b.canon(w));
  f.elements.assign(seen.begin(), seen.end());
  std::sort(f.elements.begin(), f.elements.end(), shortlex_less);
  return f;
}

struct NormalPath {
  std::vector<Word> entries;
  bool strict = false;
};

inline Word flatten(const NormalPath& p) {
  Word w;
  for (const Word& e : p.entries) w.insert(w.end(), e.begin(), e.end());
  return w;
}

/// (s1, s2) is S-greedy: every t in S left-dividing s1 s2 already divides s1.
inline bool is_greedy_pair(const Backend& b, const Family& S, const Word& s1,
                           const Word& s2) {
  Word prod = s1;
  prod.insert(prod.end(), s2.begin(), s2.end());
  for (const Word& t : S.elements)
    if (b.left_divides(t, prod) && !b.left_divides(t, s1)) return false;
  return true;
}

/// The S-head of g: the greatest element of Div(g) /\ S under left
/// divisibility, when it exists.
inline std::optional<Word> head(const Backend& b, const Family& S,
                                const Word& g) {
  std::vector<Word> divs;
  for (const Word& t : S.elements)
    if (b.left_divides(t, g)) divs.push_back(t);
  for (const Word& h : divs) {
    bool dominates = true;
    for (const Word& t : divs)
      if (!b.left_divides(t, h)) {
        dominates = false;
        break;
      }
    if (dominates) return h;
  }
  return std::nullopt;
}

/// Strict S-normal decomposition of g by head iteration; trailing invertible
/// factors are folded into the last entry, and a purely invertible g yields
/// the empty path.
inline NormalPath normal_decomposition(const Backend& b, const Family& S,
                                       const Word& g) {
  NormalPath path;
  Word cur = b.canon(g);
  while (!b.is_invertible(cur)) {
    auto h = head(b, S, cur);
    if (!h || b.is_invertible(*h))
      throw no_head_error("no S-head for '" +
                          word_str(b.pres(), cur) + "'");
    auto q = b.left_quotient(*h, cur);
    if (!q) throw no_head_error("head does not divide its argument");
    path.entries.push_back(*h);
    cur = b.canon(*q);
  }
  if (!cur.empty()) {
    if (path.entries.empty()) {
      path.entries.push_back(cur);  // invertible element: decorated path
    } else {
      Word last = path.entries.back();
      last.insert(last.end(), cur.begin(), cur.end());
      path.entries.back() = b.canon(last);
    }
  }
  path.strict = true;
  for (std::size_t i = 0; i < path.entries.size(); ++i) {
    if (b.is_invertible(path.entries[i])) path.strict = false;
    if (i + 1 < path.entries.size() && !S.contains(path.entries[i]))
      path.strict = false;
  }
  return path;
}

/// Renormalizes the length-two product x y into (head, remainder).
inline std::pair<Word, Word> renormalize_pair(const Backend& b,
                                              const Family& S, const Word& x,
                                              const Word& y) {
  Word prod = x;
  prod.insert(prod.end(), y.begin(), y.end());
  prod = b.canon(prod);
  if (b.is_invertible(prod)) return {prod, {}};
  auto h = head(b, S, prod);
  if (!h) throw no_head_error("no head in pair renormalization");
  auto q = b.left_quotient(*h, prod);
  return {*h, b.canon(*q)};
}

/// Normal decomposition of s.g from a normal decomposition of g, by the
/// sliding-window domino scheme.
inline NormalPath left_multiply_normal(const Backend& b, const Family& S,
                                       const Word& s, const NormalPath& np) {
  Word carry = b.canon(s);
  std::vector<Word> entries;
  for (const Word& e : np.entries) {
    if (carry.empty()) {
      entries.push_back(e);
      continue;
    }
    auto [h, r] = renormalize_pair(b, S, carry, e);
    if (b.is_invertible(h)) {
      carry = h;  // everything collapsed into an invertible
      carry.insert(carry.end(), r.begin(), r.end());
      carry = b.canon(carry);
      continue;
    }
    entries.push_back(h);
    carry = r;
  }
  NormalPath out;
  out.entries = std::move(entries);
  if (!carry.empty() || out.entries.empty()) {
    if (!b.is_invertible(carry)) {
      NormalPath tail = normal_decomposition(b, S, carry);
      for (const Word& e : tail.entries) out.entries.push_back(e);
    } else if (!carry.empty()) {
      if (out.entries.empty())
        out.entries.push_back(carry);
      else {
        Word last = out.entries.back();
        last.insert(last.end(), carry.begin(), carry.end());
        out.entries.back() = b.canon(last);
      }
    }
  }
  out.strict = true;
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    if (b.is_invertible(out.entries[i])) out.strict = false;
    if (i + 1 < out.entries.size() && !S.contains(out.entries[i]))
      out.strict = false;
  }
  return out;
}

/// Concatenation of the per-entry S-normal decompositions of an S^m-normal
/// path; junction greediness is asserted, a failure indicates a bug.
inline NormalPath power_normal(const Backend& b, const Family& S,
                               const std::vector<NormalPath>& per_entry) {
  NormalPath out;
  out.strict = true;
  for (const NormalPath& np : per_entry)
    for (const Word& e : np.entries) out.entries.push_back(e);
  for (std::size_t i = 0; i + 1 < out.entries.size(); ++i)
    if (!is_greedy_pair(b, S, out.entries[i], out.entries[i + 1]))
      throw error("power_normal: concatenation is not greedy at entry " +
                  std::to_string(i));
  for (std::size_t i = 0; i < out.entries.size(); ++i) {
    if (b.is_invertible(out.entries[i])) out.strict = false;
    if (i + 1 < out.entries.size() && !S.contains(out.entries[i]))
      out.strict = false;
  }
  return out;
}

/// Left-disjoint: all common left-divisors are invertible.
inline bool left_disjoint(const Backend& b, const Word& f, const Word& g) {
  auto df = b.left_divisors(f);
  auto dg = b.left_divisors(g);
  std::vector<Word> common;
  std::set_intersection(df.begin(), df.end(), dg.begin(), dg.end(),
                        std::back_inserter(common));
  return std::all_of(common.begin(), common.end(),
                     [&](const Word& c) { return b.is_invertible(c); });
}

struct SymmetricNormalPath {
  NormalPath negative;  // u'' read positively; the fraction is u''^-1 v''
  NormalPath positive;  // v''
};

/// Symmetric S-normal decomposition of the right fraction v u^-1, written as
/// a left fraction u''^-1 v'' with u'' v == v'' u and left-disjoint heads.
/// Grid construction over the normal decompositions of u and v; each tile is
/// a left-lcm completion.
inline SymmetricNormalPath symmetric_normal(const Backend& b, const Family& S,
                                            const Word& u, const Word& v) {
  NormalPath nu = normal_decomposition(b, S, u);
  NormalPath nv = normal_decomposition(b, S, v);
  const Backend& m = b.mirror_backend();

  auto tile = [&](const Word& t, const Word& s) -> std::pair<Word, Word> {
    // left edge s', top edge t' with s'.t == t'.s == left-lcm(t, s)
    Word rt(t.rbegin(), t.rend()), rs(s.rbegin(), s.rend());
    LcmResult lcm = right_lcm(m, rt, rs);
    if (lcm.status == LcmStatus::None)
      throw error("symmetric_normal: no common left-multiple in a tile");
    if (lcm.status != LcmStatus::Exists)
      throw inconclusive_error("symmetric_normal: tile lcm not available");
    auto alpha = m.left_quotient(rt, lcm.value);
    auto beta = m.left_quotient(rs, lcm.value);
    if (!alpha || !beta) throw error("symmetric_normal: tile quotient failed");
    Word left(alpha->rbegin(), alpha->rend());
    Word top(beta->rbegin(), beta->rend());
    return {b.canon(left), b.canon(top)};
  };

  std::vector<Word> trow = nv.entries;
  std::vector<Word> left_col;  // rows p..1 in processing order
  for (auto it = nu.entries.rbegin(); it != nu.entries.rend(); ++it) {
    Word carry = *it;
    for (auto jt = trow.rbegin(); jt != trow.rend(); ++jt) {
      auto [left, top] = tile(*jt, carry);
      *jt = top;
      carry = left;
    }
    left_col.push_back(carry);
  }
  std::reverse(left_col.begin(), left_col.end());

  auto strip = [&](std::vector<Word> entries) {
    std::vector<Word> out;
    for (Word& e : entries)
      if (!b.is_invertible(e)) out.push_back(std::move(e));
    return out;
  };
  SymmetricNormalPath out;
  out.negative.entries = strip(left_col);
  out.positive.entries = strip(trow);
  out.negative.strict = out.positive.strict = true;

  for (std::size_t i = 0; i + 1 < out.negative.entries.size(); ++i)
    if (!is_greedy_pair(b, S, out.negative.entries[i],
                        out.negative.entries[i + 1]))
      throw error("symmetric_normal: negative part is not greedy");
  for (std::size_t i = 0; i + 1 < out.positive.entries.size(); ++i)
    if (!is_greedy_pair(b, S, out.positive.entries[i],
                        out.positive.entries[i + 1]))
      throw error("symmetric_normal: positive part is not greedy");
  if (!out.negative.entries.empty() && !out.positive.entries.empty() &&
      !left_disjoint(b, out.negative.entries.front(),
                     out.positive.entries.front()))
    throw not_left_disjoint_error(
        "symmetric_normal: first entries are not left-disjoint");
  return out;
}

/// Paths are deformations of each other: all partial products agree up to
/// right multiplication by an invertible element (shorter path padded).
inline bool is_deformation(const Backend& b, const NormalPath& p1,
                           const NormalPath& p2) {
  std::size_t n = std::max(p1.entries.size(), p2.entries.size());
  Word a, c;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < p1.entries.size())
      a.insert(a.end(), p1.entries[i].begin(), p1.entries[i].end());
    if (i < p2.entries.size())
      c.insert(c.end(), p2.entries[i].begin(), p2.entries[i].end());
    if (!b.eqir(a, c)) return false;
  }
  return true;
}

}  // namespace garside
