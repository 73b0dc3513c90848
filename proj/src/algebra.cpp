#include "algebra.hpp"

#include <cstddef>
#include <utility>

#include "error.hpp"

namespace gtpa {

namespace {

// Split positions of a 2n-letter word: a = [0, n-1), l = n-1, b = [n, 2n-1),
// h = 2n-1. Slicing helpers keep the index arithmetic in one place.
Word slice(const Word& w, int from, int count) {
  return Word(w.begin() + from, w.begin() + from + count);
}

void check_level(const Element& x, int n, const char* what) {
  if (x.level != n) fail(errc::argument, std::string(what) + ": wrong element level");
}

}  // namespace

Element word_element(const GroupContext& ctx, int n, const Word& w) {
  if (n < 0) fail(errc::argument, "level must be nonnegative");
  if (static_cast<int>(w.size()) != 2 * n)
    fail(errc::argument, "basis word must have " + std::to_string(2 * n) + " letters");
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] < 0 || w[i] >= ctx.L(static_cast<long>(i)).order)
      fail(errc::argument, "letter out of range");
  if (!ctx.ambient.is_identity(ctx.mu(w)))
    fail(errc::argument, "word is not a basis element: its product is nontrivial");
  return Element{n, {{w, Scalar(1)}}};
}

Element identity_element(const GroupContext& ctx, int n) {
  if (n < 0) fail(errc::argument, "level must be nonnegative");
  Element out{n, {}};
  if (n == 0) {
    out.terms.emplace(Word{}, Scalar(1));
    return out;
  }
  for (const Word& s : ctx.enumerate_words(n - 1)) {
    Word w = s;
    w.push_back(ctx.L(n - 1).identity);
    Word back = ctx.tilde(s);
    w.insert(w.end(), back.begin(), back.end());
    w.push_back(ctx.H.identity);
    out.terms.emplace(std::move(w), Scalar(1));
  }
  return out;
}

Element mul(const GroupContext& ctx, const Element& x, const Element& y) {
  if (x.level != y.level) fail(errc::argument, "mul: element levels differ");
  int n = x.level;
  Element out{n, {}};
  if (n == 0) {
    for (const auto& [wx, cx] : x.terms)
      for (const auto& [wy, cy] : y.terms) add_term(out, Word{}, cx * cy);
    return out;
  }
  const FiniteGroup& M = ctx.L(n - 1);
  for (const auto& [wx, cx] : x.terms) {
    Word a1 = slice(wx, 0, n - 1);
    int l1 = wx[static_cast<size_t>(n - 1)];
    Word b1 = slice(wx, n, n - 1);
    int h1 = wx[static_cast<size_t>(2 * n - 1)];
    for (const auto& [wy, cy] : y.terms) {
      Word a2 = slice(wy, 0, n - 1);
      if (b1 != ctx.tilde(a2)) continue;
      int l2 = wy[static_cast<size_t>(n - 1)];
      int h2 = wy[static_cast<size_t>(2 * n - 1)];
      Word w = a1;
      w.push_back(M.mul(l1, l2));
      Word b2 = slice(wy, n, n - 1);
      w.insert(w.end(), b2.begin(), b2.end());
      w.push_back(ctx.H.mul(h2, h1));
      add_term(out, w, cx * cy);
    }
  }
  return out;
}

Element star(const GroupContext& ctx, const Element& x) {
  int n = x.level;
  Element out{n, {}};
  for (const auto& [w, c] : x.terms) {
    Word t(w.size());
    for (int i = 0; i + 1 < 2 * n; ++i)
      t[static_cast<size_t>(i)] = ctx.L(i).inv(w[static_cast<size_t>(2 * n - 2 - i)]);
    if (n > 0) t[static_cast<size_t>(2 * n - 1)] = ctx.H.inv(w[static_cast<size_t>(2 * n - 1)]);
    add_term(out, t, c);
  }
  return out;
}

Element include(const GroupContext& ctx, const Element& x) {
  int n = x.level;
  Element out{n + 1, {}};
  if (n == 0) {
    for (const auto& [w, c] : x.terms)
      add_term(out, Word{ctx.K.identity, ctx.H.identity}, c);
    return out;
  }
  const FiniteGroup& M = ctx.L(n - 1);
  for (const auto& [w, c] : x.terms) {
    int l = w[static_cast<size_t>(n - 1)];
    for (int l1 = 0; l1 < M.order; ++l1) {
      Word t = slice(w, 0, n - 1);
      t.push_back(l1);
      t.push_back(ctx.L(n).identity);
      t.push_back(M.mul(M.inv(l1), l));
      Word rest = slice(w, n, n);
      t.insert(t.end(), rest.begin(), rest.end());
      add_term(out, t, c);
    }
  }
  return out;
}

Element jones_element(const GroupContext& ctx, int m) {
  if (m < 1) fail(errc::argument, "jones element needs level >= 1");
  Scalar pref = Scalar::r_pow(ctx.field, m % 2 == 0 ? 2 : -2);
  Element out{m + 1, {}};
  if (m == 1) {
    for (int h = 0; h < ctx.H.order; ++h) {
      Word w{ctx.K.identity, h, ctx.K.identity, ctx.H.inv(h)};
      out.terms.emplace(std::move(w), pref);
    }
    return out;
  }
  const FiniteGroup& M = ctx.L(m);
  for (const Word& s : ctx.enumerate_words(m - 2)) {
    Word back = ctx.tilde(s);
    for (int l1 = 0; l1 < M.order; ++l1)
      for (int l2 = 0; l2 < M.order; ++l2) {
        int l3 = M.inv(M.mul(l1, l2));
        Word w = s;
        w.push_back(l1);
        w.push_back(ctx.L(m - 1).identity);
        w.push_back(l2);
        w.push_back(ctx.L(m - 1).identity);
        w.push_back(l3);
        w.insert(w.end(), back.begin(), back.end());
        w.push_back(ctx.H.identity);
        out.terms.emplace(std::move(w), pref);
      }
  }
  return out;
}

Element cond_exp_right(const GroupContext& ctx, const Element& x) {
  if (x.level < 1) fail(errc::argument, "cond_exp_right: need level >= 1");
  int n = x.level - 1;
  Element out{n, {}};
  if (n == 0) {
    // Bending the single strand closes the box into a loop: only the
    // identity word survives, and the loop contributes delta.
    for (const auto& [w, c] : x.terms)
      if (w[0] == ctx.K.identity && w[1] == ctx.H.identity)
        add_term(out, Word{}, c * ctx.delta);
    return out;
  }
  Scalar pref = Scalar::r_pow(ctx.field, n % 2 == 0 ? -2 : 2);
  const FiniteGroup& M = ctx.L(n - 1);
  for (const auto& [w, c] : x.terms) {
    if (w[static_cast<size_t>(n)] != ctx.L(n).identity) continue;
    Word t = slice(w, 0, n - 1);
    t.push_back(M.mul(w[static_cast<size_t>(n - 1)], w[static_cast<size_t>(n + 1)]));
    Word rest = slice(w, n + 2, n);
    t.insert(t.end(), rest.begin(), rest.end());
    add_term(out, t, c * pref);
  }
  return out;
}

Element cond_exp_left(const GroupContext& ctx, const Element& x) {
  if (x.level < 1) fail(errc::argument, "cond_exp_left: need level >= 1");
  int n = x.level;
  Element out{n, {}};
  if (n == 1) {
    // The lone strand bends around the left side of the box: a loop again.
    for (const auto& [w, c] : x.terms)
      if (w[0] == ctx.K.identity && w[1] == ctx.H.identity)
        add_term(out, Word{ctx.K.identity, ctx.H.identity}, c * ctx.delta);
    return out;
  }
  Scalar pref = Scalar::r_pow(ctx.field, 2);
  for (const auto& [w, c] : x.terms) {
    if (w[static_cast<size_t>(2 * n - 1)] != ctx.H.identity) continue;
    int k1 = w[0];
    int k2 = w[static_cast<size_t>(2 * n - 2)];
    Word mid = slice(w, 1, 2 * n - 3);
    for (int kp = 0; kp < ctx.K.order; ++kp) {
      Word t{kp};
      t.insert(t.end(), mid.begin(), mid.end());
      t.push_back(ctx.K.mul(ctx.K.mul(k2, k1), ctx.K.inv(kp)));
      t.push_back(ctx.H.identity);
      add_term(out, t, c * pref);
    }
  }
  return out;
}

Scalar trace(const GroupContext& ctx, const Element& x) {
  Element y = x;
  Scalar inv_delta = ctx.delta.inverse();
  while (y.level > 0) y = inv_delta * cond_exp_right(ctx, y);
  auto it = y.terms.find(Word{});
  return it == y.terms.end() ? Scalar(0) : it->second;
}

Scalar inner(const GroupContext& ctx, const Element& x, const Element& y) {
  check_level(y, x.level, "inner");
  return trace(ctx, mul(ctx, star(ctx, y), x));
}

std::vector<std::vector<Scalar>> gram_matrix(const GroupContext& ctx, int n) {
  auto basis = ctx.enumerate_basis(n);
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (const Word& w : basis) elems.push_back(word_element(ctx, n, w));
  std::vector<std::vector<Scalar>> g(basis.size(), std::vector<Scalar>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) g[i][j] = inner(ctx, elems[i], elems[j]);
  return g;
}

size_t kernel_dimension(std::vector<std::vector<Scalar>> rows, size_t ncols) {
  size_t rank = 0;
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    Scalar scale = rows[rank][col].inverse();
    for (size_t j = col; j < ncols; ++j) rows[rank][j] *= scale;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Scalar f = rows[i][col];
      for (size_t j = col; j < ncols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return ncols - rank;
}

size_t included_centralizer_dim(const GroupContext& ctx, const Element& q) {
  if (q.level < 1) fail(errc::argument, "centralizer needs level >= 1");
  auto sub = ctx.enumerate_basis(q.level - 1);
  std::map<Word, std::vector<Scalar>> eq;
  for (size_t i = 0; i < sub.size(); ++i) {
    Element ix = include(ctx, word_element(ctx, q.level - 1, sub[i]));
    Element d = mul(ctx, ix, q) - mul(ctx, q, ix);
    for (const auto& [w, c] : d.terms) {
      auto& row = eq[w];
      row.resize(sub.size());
      row[i] = c;
    }
  }
  if (eq.empty()) return sub.size();
  std::vector<std::vector<Scalar>> rows;
  for (auto& [w, row] : eq) {
    row.resize(sub.size());
    rows.push_back(std::move(row));
  }
  return kernel_dimension(std::move(rows), sub.size());
}

std::string render_element(const GroupContext& ctx, const Element& x) {
  if (x.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : x.terms) {
    if (!out.empty()) out += " + ";
    std::string ct = c.text();
    if (ct.find(' ') != std::string::npos) ct = "(" + ct + ")";
    out += ct + " * (" + ctx.render_word(w) + ")";
  }
  return out;
}

}  // namespace gtpa
