#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/algebra.hpp"
#include "../src/commutants.hpp"
#include "../src/error.hpp"
#include "contexts.hpp"

using namespace gtpa;
using namespace gtpa::testctx;

namespace {

std::vector<CommElement> basis_elements(const GroupContext& ctx, int n) {
  std::vector<CommElement> out;
  for (const CommTriple& t : ncomm_basis(ctx, n))
    out.push_back(comm_element(ctx, n, CommFlavor::ncomm, t));
  return out;
}

Rational word_count(const GroupContext& ctx, int n) {
  Rational sz = 1;
  for (int i = 0; i < n; ++i) sz *= ctx.L(i).order;
  return sz;
}

}  // namespace

TEST_CASE("commutant basis counts match the word model") {
  CHECK(ncomm_basis(ctx_a(), 0).size() == 1);
  CHECK(ncomm_basis(ctx_b(), 1).size() == 8);
  for (const auto& ctx : {ctx_a(), ctx_b(), ctx_c()})
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(n);
      CHECK(ncomm_basis(ctx, n).size() == ctx.enumerate_basis(n + 1).size());
    }
}

TEST_CASE("matrix units multiply by matching middle words") {
  const GroupContext& ctx = ctx_a();
  int n = 2;
  auto words = ctx.enumerate_words(n);
  const FiniteGroup& L = ctx.L(n);

  // Same-word diagonal units compose, mismatched middles annihilate.
  CommTriple d0{words[0], words[0], L.identity};
  CommTriple d1{words[1], words[1], L.identity};
  auto e0 = comm_element(ctx, n, CommFlavor::ncomm, d0);
  auto e1 = comm_element(ctx, n, CommFlavor::ncomm, d1);
  CHECK(comm_mult(ctx, e0, e0) == e0);
  CHECK(comm_mult(ctx, e0, e1).is_zero());

  // The identity really is a two-sided unit.
  CommElement one = comm_identity(ctx, n);
  for (const CommElement& x : basis_elements(ctx, n)) {
    CHECK(comm_mult(ctx, one, x) == x);
    CHECK(comm_mult(ctx, x, one) == x);
  }
}

TEST_CASE("commutant multiplication is associative") {
  const GroupContext& ctx = ctx_a();
  for (int n = 0; n <= 2; ++n) {
    auto basis = basis_elements(ctx, n);
    for (const auto& x : basis)
      for (const auto& y : basis)
        for (const auto& z : basis) {
          CHECK(comm_mult(ctx, comm_mult(ctx, x, y), z) ==
                comm_mult(ctx, x, comm_mult(ctx, y, z)));
        }
  }
}

TEST_CASE("commutant star is an involutive anti-automorphism") {
  const GroupContext& ctx = ctx_a();
  for (int n = 1; n <= 2; ++n) {
    auto basis = basis_elements(ctx, n);
    for (const auto& x : basis) {
      CHECK(comm_star(ctx, comm_star(ctx, x)) == x);
      for (const auto& y : basis)
        CHECK(comm_star(ctx, comm_mult(ctx, x, y)) ==
              comm_mult(ctx, comm_star(ctx, y), comm_star(ctx, x)));
    }
  }
}

TEST_CASE("commutant jones projections are trace delta^-2 idempotents") {
  for (const auto& ctx : {ctx_a(), ctx_b()}) {
    Scalar want = (ctx.delta * ctx.delta).inverse();
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(n);
      CommElement en = jones_en(ctx, n);
      CHECK(comm_mult(ctx, en, en) == en);
      CHECK(comm_star(ctx, en) == en);
      CHECK(trace_mn(ctx, en) == want);
    }
  }
}

TEST_CASE("commutant trace is normalized and tracial") {
  for (const auto& ctx : {ctx_a(), ctx_b()}) {
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(n);
      CHECK(trace_mn(ctx, comm_identity(ctx, n)) == Scalar(1));
      Word s = ctx.enumerate_words(n).front();
      auto unit = comm_element(ctx, n, CommFlavor::ncomm,
                               CommTriple{s, s, ctx.L(n).identity});
      CHECK(trace_mn(ctx, unit) == Scalar(Rational(1) / word_count(ctx, n)));
    }
    auto basis = basis_elements(ctx, 1);
    for (const auto& x : basis)
      for (const auto& y : basis)
        CHECK(trace_mn(ctx, comm_mult(ctx, x, y)) ==
              trace_mn(ctx, comm_mult(ctx, y, x)));
  }
}

TEST_CASE("stepping down one level preserves the trace") {
  for (const auto& ctx : {ctx_a(), ctx_b()})
    for (int n = 1; n <= 2; ++n)
      for (const auto& x : basis_elements(ctx, n)) {
        CHECK(trace_mn(ctx, cond_exp_mn(ctx, x)) == trace_mn(ctx, x));
      }
}

TEST_CASE("expectation onto the middle commutant") {
  for (const auto& ctx : {ctx_a(), ctx_b()})
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(n);
      // Right-inverse of the inclusion on every middle basis unit.
      for (const CommTriple& t : mcomm_basis(ctx, n)) {
        auto y = comm_element(ctx, n, CommFlavor::mcomm, t);
        CHECK(cond_exp_onto_mcomm(ctx, mcomm_to_ncomm(ctx, y)) == y);
      }
      // Trace-preserving on the big commutant.
      for (const auto& x : basis_elements(ctx, n))
        CHECK(trace_mn(ctx, mcomm_to_ncomm(ctx, cond_exp_onto_mcomm(ctx, x))) ==
              trace_mn(ctx, x));
    }
}

TEST_CASE("the middle commutant embeds as a star subalgebra") {
  const GroupContext& ctx = ctx_a();
  for (int n = 1; n <= 2; ++n) {
    std::vector<CommElement> basis;
    for (const CommTriple& t : mcomm_basis(ctx, n))
      basis.push_back(comm_element(ctx, n, CommFlavor::mcomm, t));
    for (const auto& x : basis) {
      CHECK(mcomm_to_ncomm(ctx, comm_star(ctx, x)) ==
            comm_star(ctx, mcomm_to_ncomm(ctx, x)));
      for (const auto& y : basis)
        CHECK(mcomm_to_ncomm(ctx, comm_mult(ctx, x, y)) ==
              comm_mult(ctx, mcomm_to_ncomm(ctx, x), mcomm_to_ncomm(ctx, y)));
    }
  }
}

TEST_CASE("word model isomorphism checks pass across contexts") {
  for (const auto& ctx : {ctx_a(), ctx_b(), ctx_c()})
    for (int n = 0; n <= 2; ++n)
      for (const auto& [name, ok] : verify_iso(ctx, n)) {
        CAPTURE(n);
        CAPTURE(name);
        CHECK(ok);
      }
}

TEST_CASE("commutant triples are validated") {
  const GroupContext& ctx = ctx_a();
  // (13)*(12) is a 3-cycle, in neither factor: membership must fail.
  CHECK_THROWS_AS(comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{1}, {0}, 1}),
                  error);
  CHECK_THROWS_AS(comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{1}, {1}, 1}),
                  error);
  CHECK_THROWS_AS(comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{0, 0}, {0}, 0}),
                  error);
  CHECK_THROWS_AS(comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{5}, {5}, 0}),
                  error);
  CHECK_NOTHROW(comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{1}, {1}, 0}));
  // Conjugating the H generator by the K generator stays in H only when the
  // group part compensates; in the free product it never does.
  CHECK_THROWS_AS(comm_element(ctx_c(), 1, CommFlavor::ncomm, CommTriple{{1}, {1}, 1}),
                  error);
}

TEST_CASE("commutant rendering is exact") {
  const GroupContext& ctx = ctx_b();
  CHECK(render_comm(ctx, CommElement{1, CommFlavor::ncomm, {}}) == "0");
  auto unit = comm_element(ctx, 1, CommFlavor::ncomm, CommTriple{{1}, {1}, 0});
  CHECK(render_comm(ctx, unit) == "1 * E[g|g]⊗e");
  CommElement two = unit;
  two.terms[CommTriple{{0}, {0}, 1}] = Scalar(-2);
  CHECK(render_comm(ctx, two) == "-2 * E[e|e]⊗g + 1 * E[g|g]⊗e");
}
