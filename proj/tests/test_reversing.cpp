#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "garside/divisibility.hpp"
#include "garside/fixtures.hpp"
#include "garside/reversing.hpp"

using namespace garside;

namespace {

Presentation fixture(const char* name) {
  return parse_presentation(fixtures::raw_payload(name));
}

Word random_word(std::mt19937& rng, int gens, int max_len) {
  Word w;
  int len = 1 + static_cast<int>(rng() % max_len);
  for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % gens));
  return w;
}

}  // namespace

TEST_CASE("theta table extraction") {
  Presentation p = fixture("braid3");
  ThetaTable th = build_theta(p);
  CHECK(word_str(p, *th(0, 1)) == "b a");
  CHECK(word_str(p, *th(1, 0)) == "a b");
  CHECK(th(0, 0)->empty());

  Presentation tri = fixture("ex116-divergence");
  ThetaTable th2 = build_theta(tri);
  CHECK(th2(0, 1)->empty());
  CHECK(word_str(tri, *th2(1, 0)) == "b a b");

  Presentation ex45 = fixture("ex45");
  try {
    build_theta(ex45);
    FAIL("expected not_complemented_error");
  } catch (const not_complemented_error& e) {
    // the offending pair (a, b) is reported
    CHECK(e.pair == std::pair<int, int>(0, 1));
  }
}

TEST_CASE("theta extraction succeeds on every complemented fixture") {
  for (const auto& fx : fixtures::corpus()) {
    if (fx.kind != "pres") continue;
    Presentation p = parse_presentation(fx.payload);
    if (!p.classification.complemented) continue;
    INFO(fx.name);
    CHECK_NOTHROW(build_theta(p));
  }
}

TEST_CASE("right reversing of a single tile") {
  Presentation p = fixture("braid3");
  auto out = right_reverse(p, parse_signed_letters(p, "a^-1 b"));
  REQUIRE(out.status == ReversalStatus::Terminated);
  CHECK(signed_word_str(p, out.result) == "b a b^-1 a^-1");
  // soundness: u v' == v u' with u = a, v = b, v' = ba, u' = ab
  Backend b = Backend::make(p);
  CHECK(b.equal(parse_positive_word(p, "a b a"),
                parse_positive_word(p, "b a b")));
}

TEST_CASE("trivial reversals") {
  Presentation p = fixture("braid3");
  auto out = right_reverse(p, parse_signed_letters(p, "a^-1 a"));
  REQUIRE(out.status == ReversalStatus::Terminated);
  CHECK(out.result.empty());
  auto left = left_reverse(p, parse_signed_letters(p, "a a^-1"));
  REQUIRE(left.status == ReversalStatus::Terminated);
  CHECK(left.result.empty());
}

TEST_CASE("reversing soundness on random homogeneous inputs") {
  std::mt19937 rng(11);
  for (const char* name : {"braid3", "ex10", "ex102-free3"}) {
    Presentation p = fixture(name);
    Backend b = Backend::make(p);
    int gens = static_cast<int>(p.generators.size());
    for (int trial = 0; trial < 60; ++trial) {
      Word u = random_word(rng, gens, 4), v = random_word(rng, gens, 4);
      ThetaStarResult r = theta_star(p, u, v);
      if (r.status != ReversalStatus::Terminated) continue;
      Word lhs = u;
      lhs.insert(lhs.end(), r.uv.begin(), r.uv.end());
      Word rhs = v;
      rhs.insert(rhs.end(), r.vu.begin(), r.vu.end());
      INFO(name);
      CHECK(b.equal(lhs, rhs));
    }
  }
}

TEST_CASE("left reversing satisfies the mirror law") {
  Presentation p = fixture("braid3");
  Backend b = Backend::make(p);
  // v u^-1 with u = a, v = b left-reverses to u''^-1 v'' with u'' v == v'' u
  auto out = left_reverse(p, parse_signed_letters(p, "b a^-1"));
  REQUIRE(out.status == ReversalStatus::Terminated);
  CHECK(signed_word_str(p, out.result) == "a^-1 b^-1 a b");
  Word upp = {1, 0};  // ba
  Word vpp = {0, 1};  // ab
  Word l = upp;
  l.push_back(1);
  Word r = vpp;
  r.push_back(0);
  CHECK(b.equal(l, r));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Word u = random_word(rng, 2, 4), v = random_word(rng, 2, 4);
    SignedLetters w = to_signed(v);
    SignedLetters neg = inverse_of(u);
    w.insert(w.end(), neg.begin(), neg.end());
    auto res = left_reverse(p, w);
    REQUIRE(res.status == ReversalStatus::Terminated);
    Word u2, v2;
    for (auto it = res.result.begin(); it != res.result.end(); ++it)
      if (it->inv)
        u2.insert(u2.begin(), it->gen);
      else
        v2.push_back(it->gen);
    Word lhs = u2;
    lhs.insert(lhs.end(), v.begin(), v.end());
    Word rhs = v2;
    rhs.insert(rhs.end(), u.begin(), u.end());
    CHECK(b.equal(lhs, rhs));
  }
}

TEST_CASE("left reversing gets stuck on missing commutation") {
  Presentation p = fixture("ex102-ra");
  auto out = left_reverse(p, parse_signed_letters(p, "a b c^-1"));
  CHECK(out.status == ReversalStatus::Stuck);
}

TEST_CASE("divergence detection on the triangular fixture") {
  Presentation p = fixture("ex116-divergence");
  for (long budget : {10L, 100L, 1000L, 10000L}) {
    ReversalOptions opts;
    opts.budget = budget;
    auto out = right_reverse(p, parse_signed_letters(p, "a^-1 b a"), opts);
    INFO("budget " << budget);
    CHECK(out.status == ReversalStatus::Diverged);
  }
  auto out = right_reverse(p, parse_signed_letters(p, "a^-1 b a"));
  CHECK(out.loop_detected);
  CHECK(out.steps_used < 100);
}

TEST_CASE("strategy independence on complemented fixtures") {
  std::mt19937 rng(17);
  for (const char* name : {"braid3", "ex10"}) {
    Presentation p = fixture(name);
    int gens = static_cast<int>(p.generators.size());
    for (int trial = 0; trial < 50; ++trial) {
      SignedLetters w;
      int len = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i)
        w.push_back({static_cast<int>(rng() % gens), rng() % 2 == 0});
      ReversalOptions a, b;
      a.strategy = ReversalStrategy::Leftmost;
      b.strategy = ReversalStrategy::Rightmost;
      auto ra = right_reverse(p, w, a);
      auto rb = right_reverse(p, w, b);
      REQUIRE(ra.status == rb.status);
      if (ra.status == ReversalStatus::Terminated)
        CHECK(ra.result == rb.result);
    }
  }
}

TEST_CASE("theta star basics") {
  Presentation p = fixture("braid3");
  auto r1 = theta_star(p, {0}, {1});
  REQUIRE(r1.status == ReversalStatus::Terminated);
  CHECK(word_str(p, r1.uv) == "b a");  // equals theta(a, b)
  auto r2 = theta_star(p, {0, 1}, {0, 1});
  REQUIRE(r2.status == ReversalStatus::Terminated);
  CHECK(r2.uv.empty());
  CHECK(r2.vu.empty());
}

TEST_CASE("theta star of (aa, b) against an enumeration oracle") {
  Presentation p = fixture("braid3");
  Backend b = Backend::make(p);
  // oracle: the least common right-multiple of aa and b by bounded search
  MCMSet m = right_mcms(b, {0, 0}, {1}, 5);
  REQUIRE(m.elements.size() == 1);
  Word lcm = m.elements[0];
  auto r = theta_star(p, {0, 0}, {1});
  REQUIRE(r.status == ReversalStatus::Terminated);
  Word via_theta = {0, 0};
  via_theta.insert(via_theta.end(), r.uv.begin(), r.uv.end());
  CHECK(b.equal(via_theta, lcm));
  CHECK(word_str(p, r.uv) == "b a");
  // the defining identity u theta*(u,v) == v theta*(v,u)
  Word rhs = {1};
  rhs.insert(rhs.end(), r.vu.begin(), r.vu.end());
  CHECK(b.equal(via_theta, rhs));
}

TEST_CASE("grid splitting identities") {
  // theta*(u1 u2, v) and theta*(u, v1 v2) split into composed reversings
  std::mt19937 rng(23);
  for (const char* name : {"braid3", "ex10"}) {
    Presentation p = fixture(name);
    int gens = static_cast<int>(p.generators.size());
    for (int trial = 0; trial < 60; ++trial) {
      Word u1 = random_word(rng, gens, 3), u2 = random_word(rng, gens, 3);
      Word v = random_word(rng, gens, 3);
      Word u = u1;
      u.insert(u.end(), u2.begin(), u2.end());
      auto whole = theta_star(p, u, v);
      auto first = theta_star(p, u1, v);
      REQUIRE(whole.status == ReversalStatus::Terminated);
      REQUIRE(first.status == ReversalStatus::Terminated);
      auto second = theta_star(p, u2, first.uv);
      REQUIRE(second.status == ReversalStatus::Terminated);
      CHECK(whole.uv == second.uv);
      // vertical split: theta*(v, u) = theta*(v, u1) . theta*(..., u2)
      Word vu_expect = first.vu;
      vu_expect.insert(vu_expect.end(), second.vu.begin(), second.vu.end());
      CHECK(whole.vu == vu_expect);
    }
  }
}

TEST_CASE("reversing grids compose") {
  Presentation p = fixture("braid3");
  Word u = parse_positive_word(p, "a b");
  Word v = parse_positive_word(p, "b a");
  ReversingGrid grid = right_reversing_grid(p, u, v);
  REQUIRE(grid.complete);
  REQUIRE(grid.cells.size() == 2);
  REQUIRE(grid.cells[0].size() == 2);
  // edge words compose: bottom-right corner agrees with direct reversing
  auto direct = theta_star(p, u, v);
  Word bottom;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Word& w = grid.cells[u.size() - 1][j].bottom;
    bottom.insert(bottom.end(), w.begin(), w.end());
  }
  CHECK(bottom == direct.uv);
}

TEST_CASE("cube condition") {
  Presentation p = fixture("braid3");
  Backend b = Backend::make(p);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        auto v = cube_check(p, {x}, {y}, {z}, b.cube_oracle());
        CHECK(v.holds);
      }
  // degenerate triple on any fixture
  Presentation ex45 = fixture("ex45");
  Backend b45 = Backend::make(ex45);
  auto deg = cube_check(ex45, {0}, {0}, {0}, b45.cube_oracle());
  CHECK(deg.holds);
  auto aab = cube_check(ex45, {0}, {0}, {1}, b45.cube_oracle());
  CHECK(aab.holds);
  CHECK(aab.method == "factorability");
}

TEST_CASE("completeness verdicts") {
  Backend b1 = Backend::make(fixture("braid3"));
  CHECK(completeness_check(b1.pres(), b1.cube_oracle()).status ==
        CompletenessStatus::Complete);

  Backend b2 = Backend::make(fixture("ex45"));
  CHECK(completeness_check(b2.pres(), b2.cube_oracle()).status ==
        CompletenessStatus::Complete);

  Presentation nn = parse_presentation("gens: a, b\nrels: a = a b\n");
  CubeOracle dummy;  // never consulted: the certificate gate fires first
  dummy.eq = [](const Word&, const Word&) { return std::nullopt; };
  dummy.left_quotient = [](const Word&, const Word&) { return std::nullopt; };
  CHECK(completeness_check(nn, dummy).status == CompletenessStatus::Unknown);

  Presentation tri = fixture("ex116-divergence");
  CHECK(completeness_check(tri, dummy).status == CompletenessStatus::Unknown);
}

TEST_CASE("structure monoid reversing is complete") {
  RCSystem x = parse_rc_csv(fixtures::raw_payload("rc-cyclic-3"));
  Presentation mon = structure_monoid(x);
  Backend b = Backend::make(mon);
  CHECK(mon.classification.complemented);
  CHECK(completeness_check(mon, b.cube_oracle()).status ==
        CompletenessStatus::Complete);
}
