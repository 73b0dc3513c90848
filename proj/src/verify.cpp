#include "verify.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "algebra.hpp"
#include "commutants.hpp"
#include "error.hpp"
#include "tangle.hpp"

namespace gtpa {

namespace {

// Sweeps larger than this are subsampled with the run seed.
constexpr size_t kSweepBudget = 4096;

struct SuiteBuilder {
  const GroupContext& ctx;
  SuiteReport report;

  void check(const std::string& name, bool ok, const std::string& counterexample) {
    CheckResult r{name, ok, ok ? std::string() : counterexample};
    if (!ok) report.pass = false;
    report.checks.push_back(std::move(r));
  }
};

std::vector<Element> level_basis(const GroupContext& ctx, int n) {
  std::vector<Element> out;
  for (const Word& w : ctx.enumerate_basis(n)) out.push_back(Element{n, {{w, Scalar(1)}}});
  return out;
}

// Deterministic index tuples covering an exhaustive sweep of `total`
// combinations when small, a seeded sample of kSweepBudget otherwise.
std::vector<std::vector<size_t>> sweep_tuples(const std::vector<size_t>& sizes,
                                              unsigned seed) {
  size_t total = 1;
  for (size_t s : sizes) {
    if (s == 0) return {};
    total *= s;
  }
  std::vector<std::vector<size_t>> out;
  if (total <= kSweepBudget) {
    std::vector<size_t> pick(sizes.size(), 0);
    while (true) {
      out.push_back(pick);
      size_t j = 0;
      for (; j < pick.size(); ++j) {
        if (++pick[j] < sizes[j]) break;
        pick[j] = 0;
      }
      if (j == pick.size()) break;
    }
    return out;
  }
  std::mt19937 rng(seed);
  for (size_t k = 0; k < kSweepBudget; ++k) {
    std::vector<size_t> pick(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i)
      pick[i] = std::uniform_int_distribution<size_t>(0, sizes[i] - 1)(rng);
    out.push_back(std::move(pick));
  }
  return out;
}

std::string word_text(const GroupContext& ctx, const Element& x) {
  return "(" + ctx.render_word(x.terms.begin()->first) + ")";
}

// ---- Suite: temperley-lieb tower relations ----

SuiteReport suite_tl(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"tl", max_n, seed, true, {}}};
  int top = std::max(1, max_n);
  Scalar inv_delta = ctx.delta.inverse();
  Scalar d2 = (ctx.delta * ctx.delta).inverse();

  std::vector<Element> e;  // e[i] at its native level i+1
  for (int i = 1; i <= top; ++i) e.push_back(inv_delta * jones_element(ctx, i));

  {
    bool ok = true;
    std::string cx;
    for (int i = 1; i <= top && ok; ++i) {
      const Element& ei = e[static_cast<size_t>(i - 1)];
      if (!(mul(ctx, ei, ei) == ei) || !(star(ctx, ei) == ei)) {
        ok = false;
        cx = "i=" + std::to_string(i);
      }
    }
    b.check("projections", ok, cx);
  }

  // Lift everything to the common level top+1 for the mixed relations.
  std::vector<Element> lifted = e;
  for (auto& x : lifted)
    while (x.level < top + 1) x = include(ctx, x);
  {
    bool ok = true;
    std::string cx;
    for (int i = 1; i <= top && ok; ++i)
      for (int j = 1; j <= top && ok; ++j) {
        const Element& ei = lifted[static_cast<size_t>(i - 1)];
        const Element& ej = lifted[static_cast<size_t>(j - 1)];
        if (std::abs(i - j) == 1) {
          if (!(mul(ctx, mul(ctx, ei, ej), ei) == d2 * ei)) {
            ok = false;
            cx = "i=" + std::to_string(i) + " j=" + std::to_string(j);
          }
        } else if (std::abs(i - j) >= 2) {
          if (!(mul(ctx, ei, ej) == mul(ctx, ej, ei))) {
            ok = false;
            cx = "i=" + std::to_string(i) + " j=" + std::to_string(j);
          }
        }
      }
    b.check("braid-and-commutation", ok, cx);
  }

  {
    bool ok = true;
    std::string cx;
    for (int n = 1; n <= top && ok; ++n) {
      const Element& en = e[static_cast<size_t>(n - 1)];
      if (!(cond_exp_right(ctx, en) == ctx.delta.inverse() * identity_element(ctx, n))) {
        ok = false;
        cx = "n=" + std::to_string(n);
        continue;
      }
      for (const Element& x : level_basis(ctx, n)) {
        if (!(trace(ctx, mul(ctx, include(ctx, x), en)) == d2 * trace(ctx, x))) {
          ok = false;
          cx = "n=" + std::to_string(n) + " x=" + word_text(ctx, x);
          break;
        }
      }
    }
    b.check("markov", ok, cx);
  }
  return b.report;
}

// ---- Suite: ring axioms on the word model ----

SuiteReport suite_assoc(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"assoc", max_n, seed, true, {}}};
  for (int n = 0; n <= max_n; ++n) {
    auto basis = level_basis(ctx, n);
    Element one = identity_element(ctx, n);
    std::string tag = "n=" + std::to_string(n);

    bool unit_ok = true;
    std::string unit_cx;
    for (const Element& x : basis)
      if (!(mul(ctx, one, x) == x) || !(mul(ctx, x, one) == x)) {
        unit_ok = false;
        unit_cx = tag + " x=" + word_text(ctx, x);
        break;
      }
    b.check("unit-" + std::to_string(n), unit_ok, unit_cx);

    size_t sz = basis.size();
    bool assoc_ok = true, star_ok = true;
    std::string assoc_cx, star_cx;
    for (const auto& pick : sweep_tuples({sz, sz, sz}, seed + static_cast<unsigned>(n))) {
      const Element& x = basis[pick[0]];
      const Element& y = basis[pick[1]];
      const Element& z = basis[pick[2]];
      if (assoc_ok && !(mul(ctx, mul(ctx, x, y), z) == mul(ctx, x, mul(ctx, y, z)))) {
        assoc_ok = false;
        assoc_cx = tag + " x=" + word_text(ctx, x) + " y=" + word_text(ctx, y) +
                   " z=" + word_text(ctx, z);
      }
      if (star_ok && (!(star(ctx, star(ctx, x)) == x) ||
                      !(star(ctx, mul(ctx, x, y)) == mul(ctx, star(ctx, y), star(ctx, x))))) {
        star_ok = false;
        star_cx = tag + " x=" + word_text(ctx, x) + " y=" + word_text(ctx, y);
      }
      if (!assoc_ok && !star_ok) break;
    }
    b.check("associative-" + std::to_string(n), assoc_ok, assoc_cx);
    b.check("star-" + std::to_string(n), star_ok, star_cx);
  }
  return b.report;
}

// ---- Suite: structural tangles against their word formulas ----

SuiteReport suite_statesum(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"statesum", max_n, seed, true, {}}};
  int cap = std::min(max_n, 2);  // keeps every sweep exact and fast

  {
    bool ok = true;
    std::string cx;
    for (int n = 0; n <= cap && ok; ++n)
      if (!(evaluate(ctx, identity_tangle(n), {}) == identity_element(ctx, n))) {
        ok = false;
        cx = "n=" + std::to_string(n);
      }
    b.check("identity", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int n = 2; n <= std::max(2, std::min(max_n, 3)) && ok; ++n)
      if (!(evaluate(ctx, jones_tangle(n), {}) == jones_element(ctx, n - 1))) {
        ok = false;
        cx = "n=" + std::to_string(n);
      }
    b.check("jones", ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int n = 0; n <= cap && ok; ++n) {
      Tangle t = multiplication_tangle(n);
      for (const Element& x : level_basis(ctx, n)) {
        for (const Element& y : level_basis(ctx, n))
          if (!(evaluate(ctx, t, {x, y}) == mul(ctx, x, y))) {
            ok = false;
            cx = "n=" + std::to_string(n) + " x=" + word_text(ctx, x) + " y=" +
                 word_text(ctx, y);
            break;
          }
        if (!ok) break;
      }
    }
    b.check("multiplication", ok, cx);
  }

  // The one-input structural maps against their formulas.
  struct UnaryCase {
    std::string name;
    int lo;
    Tangle (*make)(int);
    Element (*formula)(const GroupContext&, const Element&);
  };
  auto closure_formula = [](const GroupContext& c, const Element& x) {
    Scalar v = trace(c, x);
    for (int i = 0; i < x.level; ++i) v = v * c.delta;
    Element out{0, {}};
    add_term(out, Word{}, v);
    return out;
  };
  std::vector<UnaryCase> cases = {
      {"inclusion", 0, &inclusion_tangle,
       [](const GroupContext& c, const Element& x) { return include(c, x); }},
      {"expect-right", 0, &cond_exp_right_tangle,
       [](const GroupContext& c, const Element& x) { return cond_exp_right(c, x); }},
      {"expect-left", 1, &cond_exp_left_tangle,
       [](const GroupContext& c, const Element& x) { return cond_exp_left(c, x); }},
  };
  for (const auto& uc : cases) {
    bool ok = true;
    std::string cx;
    for (int n = uc.lo; n <= cap && ok; ++n) {
      Tangle t = uc.make(n);
      int in_level = t.disc_row(0).color;
      if (in_level > cap + 1) continue;
      for (const Element& x : level_basis(ctx, in_level))
        if (!(evaluate(ctx, t, {x}) == uc.formula(ctx, x))) {
          ok = false;
          cx = "n=" + std::to_string(n) + " x=" + word_text(ctx, x);
          break;
        }
    }
    b.check(uc.name, ok, cx);
  }
  {
    bool ok = true;
    std::string cx;
    for (int n = 0; n <= cap && ok; ++n) {
      Tangle t = closure_tangle(n);
      for (const Element& x : level_basis(ctx, n))
        if (!(evaluate(ctx, t, {x}) == closure_formula(ctx, x))) {
          ok = false;
          cx = "n=" + std::to_string(n) + " x=" + word_text(ctx, x);
          break;
        }
    }
    b.check("closure", ok, cx);
  }
  return b.report;
}

// ---- Suite: evaluation respects tangle composition ----

struct NamedTangle {
  std::string name;
  Tangle tangle;
};

std::vector<NamedTangle> structural_with_color(int c) {
  std::vector<NamedTangle> out;
  out.push_back({"identity(" + std::to_string(c) + ")", identity_tangle(c)});
  out.push_back({"multiplication(" + std::to_string(c) + ")", multiplication_tangle(c)});
  if (c >= 1)
    out.push_back({"inclusion(" + std::to_string(c - 1) + ")", inclusion_tangle(c - 1)});
  if (c >= 2) out.push_back({"jones(" + std::to_string(c) + ")", jones_tangle(c)});
  out.push_back({"expect-right(" + std::to_string(c) + ")", cond_exp_right_tangle(c)});
  if (c >= 1)
    out.push_back({"expect-left(" + std::to_string(c) + ")", cond_exp_left_tangle(c)});
  // Only even closures share the unshaded external region the slots expose.
  if (c == 0) out.push_back({"closure(2)", closure_tangle(2)});
  return out;
}

std::vector<NamedTangle> annular_with_cap(int cap) {
  std::vector<NamedTangle> out;
  for (int n = 1; n <= cap; ++n)
    for (int i = 1; i <= 2 * n - 1; ++i)
      out.push_back({"capping(" + std::to_string(n) + "," + std::to_string(i) + ")",
                     capping_tangle(n, i)});
  for (int n = 0; n <= cap; ++n)
    for (int i = 1; i <= 2 * n + 1; ++i)
      out.push_back({"cap-inclusion(" + std::to_string(n) + "," + std::to_string(i) + ")",
                     cap_inclusion_tangle(n, i)});
  for (int n = 0; n <= cap; ++n)
    out.push_back({"left-inclusion(" + std::to_string(n) + ")", left_inclusion_tangle(n)});
  for (int n = 0; n <= cap; ++n)
    for (int p = 0; p <= n; p += 2)
      for (int q = 0; p + q <= n; ++q)
        for (bool above : {false, true})
          out.push_back({"disc-inclusion(" + std::to_string(n) + "," + std::to_string(p) +
                             "," + std::to_string(q) + "," + (above ? "1" : "0") + ")",
                         disc_inclusion_tangle(n, p, q, above)});
  return out;
}

SuiteReport suite_compose(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"compose", max_n, seed, true, {}}};
  int cap = std::min(max_n, 2);
  bool ok = true;
  std::string cx;

  for (const NamedTangle& outer : annular_with_cap(cap)) {
    for (int d = 0; d < outer.tangle.num_discs() && ok; ++d) {
      int slot_color = outer.tangle.disc_row(d).color;
      for (const NamedTangle& inner : structural_with_color(slot_color)) {
        Tangle comp = compose(outer.tangle, d, inner.tangle);

        // Basis sweep over every remaining disc: outer's other slots keep
        // their position around the spliced inner slots.
        std::vector<std::vector<Element>> pools;
        for (int j = 0; j < d; ++j)
          pools.push_back(level_basis(ctx, outer.tangle.disc_row(j).color));
        for (int j = 0; j < inner.tangle.num_discs(); ++j)
          pools.push_back(level_basis(ctx, inner.tangle.disc_row(j).color));
        for (int j = d + 1; j < outer.tangle.num_discs(); ++j)
          pools.push_back(level_basis(ctx, outer.tangle.disc_row(j).color));

        std::vector<size_t> sizes;
        for (const auto& p : pools) sizes.push_back(p.size());
        for (const auto& pick : sweep_tuples(sizes, seed)) {
          std::vector<Element> all;
          for (size_t i = 0; i < pick.size(); ++i) all.push_back(pools[i][pick[i]]);

          std::vector<Element> inner_in(all.begin() + d,
                                        all.begin() + d + inner.tangle.num_discs());
          std::vector<Element> outer_in(all.begin(), all.begin() + d);
          outer_in.push_back(evaluate(ctx, inner.tangle, inner_in));
          outer_in.insert(outer_in.end(), all.begin() + d + inner.tangle.num_discs(),
                          all.end());

          if (!(evaluate(ctx, comp, all) == evaluate(ctx, outer.tangle, outer_in))) {
            ok = false;
            cx = outer.name + " disc " + std::to_string(d + 1) + " <- " + inner.name;
            break;
          }
        }
        if (!ok) break;
      }
    }
    if (!ok) break;
  }
  b.check("composition", ok, cx);
  return b.report;
}

// ---- Suite: commutant model isomorphism ----

SuiteReport suite_iso(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"iso", max_n, seed, true, {}}};
  for (int n = 0; n <= std::min(max_n, 2); ++n)
    for (const auto& [name, ok] : verify_iso(ctx, n))
      b.check("n" + std::to_string(n) + "-" + name, ok, "n=" + std::to_string(n));
  return b.report;
}

// ---- Suite: the intermediate-subfactor projection ----

SuiteReport suite_biproj(const GroupContext& ctx, int max_n, unsigned seed) {
  SuiteBuilder b{ctx, {"biproj", max_n, seed, true, {}}};
  Word flat(4, 0);
  flat[0] = ctx.K.identity;
  flat[1] = ctx.H.identity;
  flat[2] = ctx.K.identity;
  flat[3] = ctx.H.identity;
  Element q = word_element(ctx, 2, flat);
  Element e1 = ctx.delta.inverse() * jones_element(ctx, 1);

  b.check("projection", mul(ctx, q, q) == q && star(ctx, q) == q, "q=(e,e,e,e)");
  b.check("dominates-e1", mul(ctx, q, e1) == e1 && mul(ctx, e1, q) == e1, "q e1 != e1");
  Element want = Scalar(Rational(1, ctx.K.order)) * identity_element(ctx, 1);
  b.check("expectation", ctx.delta.inverse() * cond_exp_right(ctx, q) == want,
          "E(q) != 1/|K|");
  size_t dim = included_centralizer_dim(ctx, q);
  b.check("centralizer", dim == 1, "dim=" + std::to_string(dim));
  return b.report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tl",      "assoc", "statesum",
                                                 "compose", "iso",   "biproj"};
  return names;
}

SuiteReport run_suite(const GroupContext& ctx, const std::string& suite, int max_n,
                      unsigned seed) {
  if (suite == "tl") return suite_tl(ctx, max_n, seed);
  if (suite == "assoc") return suite_assoc(ctx, max_n, seed);
  if (suite == "statesum") return suite_statesum(ctx, max_n, seed);
  if (suite == "compose") return suite_compose(ctx, max_n, seed);
  if (suite == "iso") return suite_iso(ctx, max_n, seed);
  if (suite == "biproj") return suite_biproj(ctx, max_n, seed);
  fail(errc::argument, "unknown verify suite: " + suite);
}

std::vector<CriticalWeights> calibration_search(const GroupContext& ctx) {
  // The two zigzags on a single strand: each inserts one minimum and one
  // maximum that enclose cells of opposite shading.
  Tangle wiggles[2];
  for (int v = 0; v < 2; ++v) {
    Tangle& t = wiggles[v];
    t.external_color = 1;
    t.disc_names = {"D1"};
    t.rows = {Row{Row::Box, 1, 1, 0}};
    if (v == 0) {
      t.rows.push_back(Row{Row::Cup, 2, 0, -1});
      t.rows.push_back(Row{Row::Cap, 1, 0, -1});
    } else {
      t.rows.push_back(Row{Row::Cup, 1, 0, -1});
      t.rows.push_back(Row{Row::Cap, 2, 0, -1});
    }
  }
  Tangle bubble;
  bubble.external_color = 0;
  bubble.rows = {Row{Row::Cup, 1, 0, -1}, Row{Row::Cap, 1, 0, -1}};

  auto basis1 = level_basis(ctx, 1);
  auto basis2 = level_basis(ctx, 2);

  std::vector<CriticalWeights> out;
  for (int mask = 0; mask < 16; ++mask) {
    CriticalWeights w;
    w.eps[0][0] = (mask & 1) ? 1 : -1;
    w.eps[0][1] = (mask & 2) ? 1 : -1;
    w.eps[1][0] = (mask & 4) ? 1 : -1;
    w.eps[1][1] = (mask & 8) ? 1 : -1;

    bool ok = true;
    for (const Tangle& t : wiggles)
      for (const Element& x : basis1)
        if (!(evaluate(ctx, t, {x}, w) == x)) ok = false;

    for (bool shaded : {false, true}) {
      Tangle loop = bubble;
      loop.external_shaded = shaded;
      Element want{0, {}};
      add_term(want, Word{}, ctx.delta);
      if (!(evaluate(ctx, loop, {}, w) == want)) ok = false;
    }

    if (ok) {
      if (!(evaluate(ctx, identity_tangle(1), {}, w) == identity_element(ctx, 1)))
        ok = false;
      if (!(evaluate(ctx, jones_tangle(2), {}, w) == jones_element(ctx, 1))) ok = false;
      for (const Element& x : basis1) {
        if (!(evaluate(ctx, inclusion_tangle(1), {x}, w) == include(ctx, x))) ok = false;
        if (!(evaluate(ctx, cond_exp_left_tangle(1), {x}, w) == cond_exp_left(ctx, x)))
          ok = false;
        for (const Element& y : basis1)
          if (!(evaluate(ctx, multiplication_tangle(1), {x, y}, w) == mul(ctx, x, y)))
            ok = false;
      }
      for (const Element& x : basis2)
        if (!(evaluate(ctx, cond_exp_right_tangle(1), {x}, w) == cond_exp_right(ctx, x)))
          ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

}  // namespace gtpa
