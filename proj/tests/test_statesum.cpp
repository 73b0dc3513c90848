#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "contexts.hpp"
#include "doctest.h"
#include "geometry.hpp"
#include "oracles.hpp"
#include "statesum.hpp"

using namespace gtpa;
using namespace gtpa::testctx;

namespace {

// Cyclic sequences compare equal up to rotation; normalize to the smallest.
std::vector<OpeningRef> normalize(std::vector<OpeningRef> w) {
  std::vector<OpeningRef> best = w;
  for (size_t r = 1; r < w.size(); ++r) {
    std::rotate(w.begin(), w.begin() + 1, w.end());
    best = std::min(best, w);
  }
  return best;
}

std::vector<std::vector<OpeningRef>> normalized_walks(const Geometry& g) {
  std::vector<std::vector<OpeningRef>> out;
  for (const FaceWalk& w : g.walks) out.push_back(normalize(w.steps));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("identity tangle geometry") {
  for (int n = 0; n <= 3; ++n) {
    Geometry g = analyze(identity_tangle(n));
    CHECK(g.num_faces == n + 1);
    CHECK(g.num_strings == n);
    CHECK(g.networks_unshaded + g.networks_shaded == 0);
    CHECK(g.criticals[0][0] + g.criticals[0][1] + g.criticals[1][0] + g.criticals[1][1] == 0);
    CHECK(g.walks.size() == static_cast<size_t>(n == 0 ? 0 : n + 1));
  }
  // At color 2 the middle face pairs top opening 1 with bottom opening 3.
  Geometry g = analyze(identity_tangle(2));
  auto walks = normalized_walks(g);
  std::vector<std::vector<OpeningRef>> expect = {
      {{-1, 1}, {-1, 3}}, {{-1, 2}}, {{-1, 4}}};
  std::sort(expect.begin(), expect.end());
  CHECK(walks == expect);
}

TEST_CASE("jones tangle geometry") {
  Geometry g = analyze(jones_tangle(2));
  CHECK(g.num_faces == 3);
  CHECK(g.num_strings == 2);
  CHECK(g.networks_unshaded + g.networks_shaded == 0);
  // One shaded minimum and one shaded maximum: prefactor r^-2.
  CHECK(g.criticals[0][1] == 1);
  CHECK(g.criticals[1][1] == 1);
  CHECK(g.criticals[0][0] + g.criticals[1][0] == 0);
  auto walks = normalized_walks(g);
  std::vector<std::vector<OpeningRef>> expect = {
      {{-1, 1}}, {{-1, 2}, {-1, 4}}, {{-1, 3}}};
  std::sort(expect.begin(), expect.end());
  CHECK(walks == expect);
  // The two-opening walk borders the unshaded outer face.
  for (const FaceWalk& w : g.walks)
    if (w.steps.size() == 2) CHECK_FALSE(w.shaded);
}

TEST_CASE("closure tangle geometry") {
  Geometry g = analyze(closure_tangle(1));
  CHECK(g.networks_shaded == 1);  // the box cluster floats in the shaded outside
  CHECK(g.networks_unshaded == 0);
  CHECK(g.criticals[0][0] == 1);  // cup and cap both enclose the unshaded pocket
  CHECK(g.criticals[1][0] == 1);
  auto walks = normalized_walks(g);
  std::vector<std::vector<OpeningRef>> expect = {{{0, 1}}, {{0, 2}}};
  std::sort(expect.begin(), expect.end());
  CHECK(walks == expect);
}

TEST_CASE("bare loop geometry") {
  Tangle bubble;
  bubble.external_color = 0;
  bubble.rows = {Row{Row::Cup, 1, 0, -1}, Row{Row::Cap, 1, 0, -1}};
  Geometry g = analyze(bubble);
  CHECK(g.num_strings == 1);
  CHECK(g.num_faces == 2);
  CHECK(g.walks.empty());
  CHECK(g.networks_unshaded == 1);  // loop floats in the unshaded outer face
  CHECK(g.networks_shaded == 0);
  CHECK(g.criticals[0][1] == 1);
  CHECK(g.criticals[1][1] == 1);

  // Same loop inside a shaded-outside diagram flips the counts.
  bubble.external_shaded = true;
  Geometry h = analyze(bubble);
  CHECK(h.networks_shaded == 1);
  CHECK(h.criticals[0][0] == 1);
  CHECK(h.criticals[1][0] == 1);
}

TEST_CASE("worked example: walks, networks, criticals") {
  // Four boxes (C, F, D, B bottom to top), external color 3. Every face
  // relation below was read off the drawn picture by hand; this pins the
  // traversal order and signs of the walk tracer exactly.
  Tangle t = parse_tangle(
      "tangle 3\n"
      "cap 1\n"
      "cup 2\n"
      "cup 4\n"
      "box C 2 3\n"
      "cap 4\n"
      "box F 1 3\n"
      "cap 2\n"
      "cup 1\n"
      "cup 4\n"
      "box D 4 1\n"
      "cap 3\n"
      "cap 2\n"
      "cup 2\n"
      "box B 2 1\n");
  const int C = 0, F = 1, D = 2, B = 3;
  Geometry g = analyze(t);

  std::vector<std::vector<OpeningRef>> expect = {
      {{-1, 1}, {B, 1}},
      {{-1, 2}, {B, 2}},
      {{-1, 3}, {D, 5}, {D, 1}, {B, 3}},
      {{C, 4}, {F, 2}},
      {{C, 2}},
      {{D, 2}, {D, 4}},
      {{D, 3}},
      {{-1, 4}, {-1, 6}, {B, 4}, {D, 8}, {D, 6}},
      {{D, 7}},
      {{-1, 5}},
      {{C, 1}, {C, 3}, {F, 1}},  // inner boundary of the face holding C and F
  };
  for (auto& w : expect) w = normalize(w);
  std::sort(expect.begin(), expect.end());
  CHECK(normalized_walks(g) == expect);

  // The C/F cluster is the unique network and floats in a shaded face.
  CHECK(g.networks_shaded == 1);
  CHECK(g.networks_unshaded == 0);
  // Ten critical points, net exponent 4.
  CHECK(g.criticals[0][0] == 4);
  CHECK(g.criticals[0][1] == 1);
  CHECK(g.criticals[1][0] == 3);
  CHECK(g.criticals[1][1] == 2);
}

TEST_CASE("bare loop evaluates to delta") {
  Tangle bubble;
  bubble.external_color = 0;
  bubble.rows = {Row{Row::Cup, 1, 0, -1}, Row{Row::Cap, 1, 0, -1}};
  for (auto ctx : {ctx_a(), ctx_b(), ctx_d()}) {
    for (bool shaded : {false, true}) {
      bubble.external_shaded = shaded;
      Element got = evaluate(ctx, bubble, {});
      Element want{0, {{Word{}, ctx.delta}}};
      CHECK(got == want);
    }
  }
}

TEST_CASE("identity tangles produce the identity element") {
  // No input discs: the value is the sum of (s, e, ~s, e) over level n-1
  // words, each with coefficient one.
  for (auto ctx : {ctx_a(), ctx_b()}) {
    for (int n = 0; n <= 2; ++n) {
      Element got = evaluate(ctx, identity_tangle(n), {});
      Element want{n, {}};
      for (const Word& s : ctx.enumerate_words(n - 1 < 0 ? 0 : n - 1)) {
        Word w = s;
        w.push_back(ctx.L(n - 1).identity);
        Word back = ctx.tilde(s);
        w.insert(w.end(), back.begin(), back.end());
        w.push_back(ctx.H.identity);
        if (n == 0) w.clear();
        add_term(want, w, Scalar(1));
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("a bare box is the identity map") {
  for (auto ctx : {ctx_a(), ctx_b()}) {
    for (int n = 1; n <= 2; ++n) {
      Tangle t;
      t.external_color = n;
      t.rows = {Row{Row::Box, 1, n, 0}};
      t.disc_names = {"D1"};
      Geometry geo = analyze(t);
      for (const Word& w : ctx.enumerate_basis(n)) {
        Element got = evaluate_words(ctx, t, geo, {w});
        Element want{n, {{w, Scalar(1)}}};
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("closure of a level-one box traces it") {
  // The closed-up box forms a shaded network; the two face relations kill
  // every basis word except the identity, which picks up exactly delta.
  for (auto ctx : {ctx_a(), ctx_b(), ctx_c()}) {
    Tangle t = closure_tangle(1);
    Geometry geo = analyze(t);
    for (const Word& w : ctx.enumerate_basis(1)) {
      Element got = evaluate_words(ctx, t, geo, {w});
      bool trivial = w[0] == ctx.K.identity && w[1] == ctx.H.identity;
      Element want{0, {}};
      if (trivial) want.terms.emplace(Word{}, ctx.delta);
      CHECK(got == want);
    }
  }
}

TEST_CASE("solver agrees with blind state enumeration") {
  GroupContext ctx = ctx_a();
  auto check_tangle = [&](const Tangle& t) {
    Geometry geo = analyze(t);
    std::vector<std::vector<Word>> pools;
    for (int d = 0; d < t.num_discs(); ++d)
      pools.push_back(ctx.enumerate_basis(t.disc_row(d).color));
    std::vector<size_t> pick(pools.size(), 0);
    while (true) {
      std::vector<Word> inputs;
      for (size_t d = 0; d < pools.size(); ++d) inputs.push_back(pools[d][pick[d]]);
      Element fast = evaluate_words(ctx, t, geo, inputs);
      Element slow = oracle::eval_bruteforce(ctx, t, inputs);
      CHECK(fast == slow);
      size_t j = 0;
      for (; j < pick.size(); ++j) {
        if (++pick[j] < pools[j].size()) break;
        pick[j] = 0;
      }
      if (j == pick.size()) break;
    }
  };
  check_tangle(multiplication_tangle(1));
  check_tangle(multiplication_tangle(2));
  check_tangle(inclusion_tangle(1));
  check_tangle(jones_tangle(2));
  check_tangle(cond_exp_right_tangle(1));
  check_tangle(cond_exp_left_tangle(1));
  check_tangle(closure_tangle(2));
  for (int i = 1; i <= 3; ++i) check_tangle(capping_tangle(2, i));
  for (int i = 1; i <= 3; ++i) check_tangle(cap_inclusion_tangle(1, i));
  check_tangle(left_inclusion_tangle(1));
  check_tangle(disc_inclusion_tangle(2, 0, 1, false));
  check_tangle(disc_inclusion_tangle(2, 2, 0, true));
}

TEST_CASE("state sum is multilinear") {
  GroupContext ctx = ctx_b();
  Tangle t = multiplication_tangle(1);
  Geometry geo = analyze(t);
  Word ee{0, 0}, gg{1, 1};
  Element x{1, {{ee, Scalar(2)}, {gg, Scalar(3)}}};
  Element y{1, {{ee, Scalar(1)}, {gg, Scalar(-1)}}};
  Element got = evaluate(ctx, t, {x, y});
  Element want{1, {}};
  for (const auto& [wx, cx] : x.terms)
    for (const auto& [wy, cy] : y.terms) {
      Element part = evaluate_words(ctx, t, geo, {wx, wy});
      for (const auto& [w, c] : part.terms) add_term(want, w, cx * cy * c);
    }
  CHECK(got == want);
  CHECK_FALSE(got.is_zero());
}

TEST_CASE("worked example evaluates like the blind oracle") {
  // Beyond the walk shapes, run actual labels through the big four-box
  // diagram: network constraints on C and F, a long mixed walk, and a
  // color-4 input all at once.
  GroupContext ctx = ctx_a();
  Tangle t = parse_tangle(
      "tangle 3\n"
      "cap 1\n"
      "cup 2\n"
      "cup 4\n"
      "box C 2 3\n"
      "cap 4\n"
      "box F 1 3\n"
      "cap 2\n"
      "cup 1\n"
      "cup 4\n"
      "box D 4 1\n"
      "cap 3\n"
      "cap 2\n"
      "cup 2\n"
      "box B 2 1\n");
  Geometry geo = analyze(t);
  auto p2 = ctx.enumerate_basis(2);
  auto p1 = ctx.enumerate_basis(1);
  auto p4 = ctx.enumerate_basis(4);
  REQUIRE(p4.size() > 6);
  std::vector<Word> d_samples(p4.begin(), p4.begin() + 6);
  d_samples.push_back(p4.back());
  int nonzero = 0;
  for (const Word& c : p2)
    for (const Word& f : p1)
      for (const Word& d : d_samples)
        for (const Word& b : p2) {
          Element fast = evaluate_words(ctx, t, geo, {c, f, d, b});
          Element slow = oracle::eval_bruteforce(ctx, t, {c, f, d, b});
          CHECK(fast == slow);
          if (!fast.is_zero()) ++nonzero;
        }
  CHECK(nonzero > 0);
}
