#include "commutants.hpp"

#include <cstddef>
#include <set>

#include "algebra.hpp"
#include "error.hpp"

namespace gtpa {

namespace {

int word_start(CommFlavor f) { return f == CommFlavor::ncomm ? 0 : 1; }
int word_len(CommFlavor f, int n) { return f == CommFlavor::ncomm ? n : n - 1; }

// mu(s1) l mu(s2)^-1 as an ambient element; l always lives in L(n).
AmbientElem triple_product(const GroupContext& ctx, int n, CommFlavor f, const CommTriple& t) {
  const AmbientGroup& amb = ctx.ambient;
  int start = word_start(f);
  AmbientElem g = ctx.mu(t.s1, start);
  g = amb.mul(g, amb.embed_letter(GroupContext::factor_of(n), t.l));
  g = amb.mul(g, amb.inv(ctx.mu(t.s2, start)));
  return g;
}

// Id of the H (ncomm) or K (mcomm) letter the product reduces to, or -1.
int membership(const GroupContext& ctx, int n, CommFlavor f, const CommTriple& t) {
  int factor = f == CommFlavor::ncomm ? FH : FK;
  return ctx.ambient.in_factor(factor, triple_product(ctx, n, f, t));
}

void check_triple(const GroupContext& ctx, int n, CommFlavor f, const CommTriple& t) {
  int len = word_len(f, n);
  int start = word_start(f);
  if (static_cast<int>(t.s1.size()) != len || static_cast<int>(t.s2.size()) != len)
    fail(errc::argument, "commutant triple: words must have " + std::to_string(len) + " letters");
  for (const Word* w : {&t.s1, &t.s2})
    for (size_t i = 0; i < w->size(); ++i)
      if ((*w)[i] < 0 || (*w)[i] >= ctx.L(static_cast<long>(i) + start).order)
        fail(errc::argument, "commutant triple: letter out of range");
  if (t.l < 0 || t.l >= ctx.L(n).order)
    fail(errc::argument, "commutant triple: group part out of range");
  if (membership(ctx, n, f, t) < 0)
    fail(errc::argument, "commutant triple: membership condition fails");
}

void check_compatible(const CommElement& x, const CommElement& y, const char* what) {
  if (x.level != y.level || x.flavor != y.flavor)
    fail(errc::argument, std::string(what) + ": level or flavor mismatch");
}

void add_comm(CommElement& e, const CommTriple& t, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = e.terms.emplace(t, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) e.terms.erase(it);
  }
}

Rational s_count(const GroupContext& ctx, int n) {
  Rational sz = 1;
  for (int i = 0; i < n; ++i) sz *= ctx.L(i).order;
  return sz;
}

}  // namespace

std::vector<CommTriple> ncomm_basis(const GroupContext& ctx, int n) {
  if (n < 0) fail(errc::argument, "ncomm basis: level must be nonnegative");
  std::vector<CommTriple> out;
  auto words = ctx.enumerate_words(n);
  for (const Word& s1 : words)
    for (const Word& s2 : words)
      for (int l = 0; l < ctx.L(n).order; ++l) {
        CommTriple t{s1, s2, l};
        if (membership(ctx, n, CommFlavor::ncomm, t) >= 0) out.push_back(std::move(t));
      }
  return out;
}

std::vector<CommTriple> mcomm_basis(const GroupContext& ctx, int n) {
  if (n < 1) fail(errc::argument, "mcomm basis: level must be positive");
  std::vector<CommTriple> out;
  auto words = ctx.enumerate_words(n - 1, 1);
  for (const Word& t1 : words)
    for (const Word& t2 : words)
      for (int l = 0; l < ctx.L(n).order; ++l) {
        CommTriple t{t1, t2, l};
        if (membership(ctx, n, CommFlavor::mcomm, t) >= 0) out.push_back(std::move(t));
      }
  return out;
}

CommElement comm_element(const GroupContext& ctx, int n, CommFlavor flavor,
                         const CommTriple& t) {
  check_triple(ctx, n, flavor, t);
  CommElement out{n, flavor, {}};
  out.terms.emplace(t, Scalar(1));
  return out;
}

CommElement comm_identity(const GroupContext& ctx, int n) {
  CommElement out{n, CommFlavor::ncomm, {}};
  for (const Word& s : ctx.enumerate_words(n))
    out.terms.emplace(CommTriple{s, s, ctx.L(n).identity}, Scalar(1));
  return out;
}

CommElement comm_mult(const GroupContext& ctx, const CommElement& x, const CommElement& y) {
  check_compatible(x, y, "comm_mult");
  const FiniteGroup& L = ctx.L(x.level);
  CommElement out{x.level, x.flavor, {}};
  for (const auto& [tx, cx] : x.terms)
    for (const auto& [ty, cy] : y.terms) {
      if (tx.s2 != ty.s1) continue;
      CommTriple t{tx.s1, ty.s2, L.mul(tx.l, ty.l)};
      if (membership(ctx, x.level, x.flavor, t) < 0)
        fail(errc::internal, "comm_mult: product left the span");
      add_comm(out, t, cx * cy);
    }
  return out;
}

CommElement comm_star(const GroupContext& ctx, const CommElement& x) {
  const FiniteGroup& L = ctx.L(x.level);
  CommElement out{x.level, x.flavor, {}};
  for (const auto& [t, c] : x.terms)
    add_comm(out, CommTriple{t.s2, t.s1, L.inv(t.l)}, c);
  return out;
}

CommElement jones_en(const GroupContext& ctx, int n) {
  if (n < 1) fail(errc::argument, "jones_en: level must be positive");
  CommElement out{n, CommFlavor::ncomm, {}};
  if (n == 1) {
    Scalar c(Rational(1, ctx.H.order));
    for (int h = 0; h < ctx.H.order; ++h)
      out.terms.emplace(CommTriple{{ctx.K.identity}, {ctx.K.identity}, h}, c);
    return out;
  }
  const FiniteGroup& L = ctx.L(n);  // same group as L(n-2)
  Scalar c(Rational(1, L.order));
  for (const Word& u : ctx.enumerate_words(n - 2))
    for (int m = 0; m < L.order; ++m)
      for (int l = 0; l < L.order; ++l) {
        Word s1 = u;
        s1.push_back(m);
        s1.push_back(ctx.L(n - 1).identity);
        Word s2 = u;
        s2.push_back(L.mul(m, l));
        s2.push_back(ctx.L(n - 1).identity);
        add_comm(out, CommTriple{std::move(s1), std::move(s2), l}, c);
      }
  return out;
}

Scalar trace_mn(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::ncomm) fail(errc::argument, "trace_mn: ncomm flavor only");
  Scalar sum(0);
  Scalar norm(Rational(1) / s_count(ctx, x.level));
  for (const auto& [t, c] : x.terms)
    if (t.l == ctx.L(x.level).identity && t.s1 == t.s2) sum += c * norm;
  return sum;
}

CommElement cond_exp_mn(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::ncomm) fail(errc::argument, "cond_exp_mn: ncomm flavor only");
  if (x.level < 1) fail(errc::argument, "cond_exp_mn: level must be positive");
  int n = x.level;
  const FiniteGroup& M = ctx.L(n - 1);
  Scalar pref(Rational(1, M.order));
  CommElement out{n - 1, CommFlavor::ncomm, {}};
  for (const auto& [t, c] : x.terms) {
    if (t.l != ctx.L(n).identity) continue;
    Word s1(t.s1.begin(), t.s1.end() - 1);
    Word s2(t.s2.begin(), t.s2.end() - 1);
    int m1 = t.s1.back(), m2 = t.s2.back();
    add_comm(out, CommTriple{std::move(s1), std::move(s2), M.mul(m1, M.inv(m2))}, c * pref);
  }
  return out;
}

CommElement cond_exp_onto_mcomm(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::ncomm) fail(errc::argument, "cond_exp_onto_mcomm: ncomm only");
  if (x.level < 1) fail(errc::argument, "cond_exp_onto_mcomm: level must be positive");
  int n = x.level;
  const AmbientGroup& amb = ctx.ambient;
  Scalar pref(Rational(1, ctx.K.order));
  CommElement out{n, CommFlavor::mcomm, {}};
  for (const auto& [t, c] : x.terms) {
    Word t1(t.s1.begin() + 1, t.s1.end());
    Word t2(t.s2.begin() + 1, t.s2.end());
    // Survives only when k1 mu(t1) l = k2 mu(t2) as ambient elements.
    AmbientElem lhs = amb.mul(amb.embed_letter(FK, t.s1[0]),
                              amb.mul(ctx.mu(t1, 1), amb.embed_letter(GroupContext::factor_of(n), t.l)));
    AmbientElem rhs = amb.mul(amb.embed_letter(FK, t.s2[0]), ctx.mu(t2, 1));
    if (!(lhs == rhs)) continue;
    add_comm(out, CommTriple{std::move(t1), std::move(t2), t.l}, c * pref);
  }
  return out;
}

CommElement mcomm_to_ncomm(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::mcomm) fail(errc::argument, "mcomm_to_ncomm: mcomm flavor only");
  int n = x.level;
  CommElement out{n, CommFlavor::ncomm, {}};
  for (const auto& [t, c] : x.terms) {
    int k0 = membership(ctx, n, CommFlavor::mcomm, t);
    if (k0 < 0) fail(errc::internal, "mcomm term violates its membership condition");
    for (int k = 0; k < ctx.K.order; ++k) {
      Word s1{k};
      s1.insert(s1.end(), t.s1.begin(), t.s1.end());
      Word s2{ctx.K.mul(k, k0)};
      s2.insert(s2.end(), t.s2.begin(), t.s2.end());
      add_comm(out, CommTriple{std::move(s1), std::move(s2), t.l}, c);
    }
  }
  return out;
}

CommElement comm_include(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::ncomm) fail(errc::argument, "comm_include: ncomm flavor only");
  int n = x.level;
  const FiniteGroup& L = ctx.L(n);
  CommElement out{n + 1, CommFlavor::ncomm, {}};
  for (const auto& [t, c] : x.terms)
    for (int m = 0; m < L.order; ++m) {
      Word s1 = t.s1;
      s1.push_back(L.mul(t.l, m));
      Word s2 = t.s2;
      s2.push_back(m);
      add_comm(out, CommTriple{std::move(s1), std::move(s2), ctx.L(n + 1).identity}, c);
    }
  return out;
}

Element psi(const GroupContext& ctx, const CommElement& x) {
  if (x.flavor != CommFlavor::ncomm) fail(errc::argument, "psi: ncomm flavor only");
  int n = x.level;
  Element out{n + 1, {}};
  for (const auto& [t, c] : x.terms) {
    int h = ctx.ambient.in_factor(FH, ctx.ambient.inv(triple_product(ctx, n, CommFlavor::ncomm, t)));
    if (h < 0) fail(errc::internal, "psi: triple violates its membership condition");
    Word w = t.s1;
    w.push_back(t.l);
    Word back = ctx.tilde(t.s2);
    w.insert(w.end(), back.begin(), back.end());
    w.push_back(h);
    add_term(out, w, c);
  }
  return out;
}

CommElement psi_inverse(const GroupContext& ctx, const Element& x) {
  if (x.level < 1) fail(errc::argument, "psi_inverse: level must be positive");
  int n = x.level - 1;
  CommElement out{n, CommFlavor::ncomm, {}};
  for (const auto& [w, c] : x.terms) {
    Word s1(w.begin(), w.begin() + n);
    int l = w[static_cast<size_t>(n)];
    Word back(w.begin() + n + 1, w.begin() + 2 * n + 1);
    Word s2 = ctx.tilde(back, n + 1);
    CommTriple t{std::move(s1), std::move(s2), l};
    check_triple(ctx, n, CommFlavor::ncomm, t);
    add_comm(out, t, c);
  }
  return out;
}

std::string render_comm(const GroupContext& ctx, const CommElement& x) {
  if (x.terms.empty()) return "0";
  int start = word_start(x.flavor);
  std::string out;
  for (const auto& [t, c] : x.terms) {
    if (!out.empty()) out += " + ";
    std::string ct = c.text();
    if (ct.find(' ') != std::string::npos) ct = "(" + ct + ")";
    out += ct + " * E[" + ctx.render_word(t.s1, start) + "|" + ctx.render_word(t.s2, start) +
           "]⊗" + ctx.L(x.level).name(t.l);
  }
  return out;
}

std::vector<std::pair<std::string, bool>> verify_iso(const GroupContext& ctx, int n) {
  std::vector<std::pair<std::string, bool>> report;
  auto push = [&](const std::string& name, bool ok) { report.emplace_back(name, ok); };

  auto triples = ncomm_basis(ctx, n);
  auto basis_words = ctx.enumerate_basis(n + 1);
  std::set<Word> words(basis_words.begin(), basis_words.end());
  push("basis-count", triples.size() == words.size());

  std::vector<CommElement> basis;
  basis.reserve(triples.size());
  for (const CommTriple& t : triples)
    basis.push_back(comm_element(ctx, n, CommFlavor::ncomm, t));

  bool bijective = true;
  std::map<Word, int> seen;
  for (size_t i = 0; i < basis.size(); ++i) {
    Element im = psi(ctx, basis[i]);
    if (im.terms.size() != 1 || !(im.terms.begin()->second == Scalar(1))) {
      bijective = false;
      break;
    }
    const Word& w = im.terms.begin()->first;
    if (seen.count(w) || !words.count(w)) {
      bijective = false;
      break;
    }
    seen[w] = static_cast<int>(i);
    if (!(psi_inverse(ctx, im) == basis[i])) {
      bijective = false;
      break;
    }
  }
  push("bijective", bijective && seen.size() == words.size());

  bool multiplicative = true, star_ok = true, trace_ok = true;
  for (const CommElement& x : basis) {
    Element px = psi(ctx, x);
    if (!(psi(ctx, comm_star(ctx, x)) == star(ctx, px))) star_ok = false;
    if (!(trace_mn(ctx, x) == trace(ctx, px))) trace_ok = false;
    for (const CommElement& y : basis)
      if (!(psi(ctx, comm_mult(ctx, x, y)) == mul(ctx, px, psi(ctx, y))))
        multiplicative = false;
  }
  push("multiplicative", multiplicative);
  push("star", star_ok);
  push("trace", trace_ok);

  push("unit", psi(ctx, comm_identity(ctx, n)) == identity_element(ctx, n + 1));

  if (n >= 1) {
    push("jones", psi(ctx, jones_en(ctx, n)) ==
                      ctx.delta.inverse() * jones_element(ctx, n));
    bool down_ok = true, mcomm_ok = true;
    Scalar inv_delta = ctx.delta.inverse();
    for (const CommElement& x : basis) {
      Element px = psi(ctx, x);
      if (!(psi(ctx, cond_exp_mn(ctx, x)) == inv_delta * cond_exp_right(ctx, px)))
        down_ok = false;
      Element lhs = psi(ctx, mcomm_to_ncomm(ctx, cond_exp_onto_mcomm(ctx, x)));
      if (!(lhs == inv_delta * cond_exp_left(ctx, px))) mcomm_ok = false;
    }
    push("cond-exp-down", down_ok);
    push("cond-exp-mcomm", mcomm_ok);

    CommElement en = jones_en(ctx, n);
    bool tl = comm_mult(ctx, en, en) == en && comm_star(ctx, en) == en;
    if (n >= 2) {
      Scalar d2 = (ctx.delta * ctx.delta).inverse();
      CommElement lo = comm_include(ctx, jones_en(ctx, n - 1));
      tl = tl && comm_mult(ctx, comm_mult(ctx, lo, en), lo) == d2 * lo;
      tl = tl && comm_mult(ctx, comm_mult(ctx, en, lo), en) == d2 * en;
    }
    push("temperley-lieb", tl);
  }
  return report;
}

}  // namespace gtpa
