#include "group.hpp"

#include <algorithm>
#include <set>

namespace gtpa {

namespace {

void check_name(const std::string& n) {
  if (n.empty()) fail(errc::parse, "empty element name");
  if (n.find_first_of(", \t\r\n") != std::string::npos)
    fail(errc::parse, "element name '" + n + "' contains a separator character");
}

using Perm = std::vector<int>;

void check_perm(const Perm& p, int points, const std::string& who) {
  if (static_cast<int>(p.size()) != points)
    fail(errc::parse, who + ": permutation has " + std::to_string(p.size()) +
                          " entries, expected " + std::to_string(points));
  std::vector<bool> seen(static_cast<size_t>(points), false);
  for (int v : p) {
    if (v < 0 || v >= points || seen[static_cast<size_t>(v)])
      fail(errc::parse, who + ": not a permutation");
    seen[static_cast<size_t>(v)] = true;
  }
}

Perm perm_mul(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
  Perm out(b.size());
  for (size_t i = 0; i < b.size(); ++i) out[i] = a[static_cast<size_t>(b[i])];
  return out;
}

}  // namespace

int FiniteGroup::id_of(const std::string& n) const {
  auto it = index.find(n);
  if (it == index.end()) fail(errc::argument, "unknown group element '" + n + "'");
  return it->second;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<int>> table) {
  FiniteGroup g;
  g.order = static_cast<int>(names.size());
  if (g.order == 0) fail(errc::parse, "group must have at least one element");
  for (int i = 0; i < g.order; ++i) {
    check_name(names[static_cast<size_t>(i)]);
    if (!g.index.emplace(names[static_cast<size_t>(i)], i).second)
      fail(errc::parse, "duplicate element name '" + names[static_cast<size_t>(i)] + "'");
  }
  g.names = std::move(names);
  size_t n = static_cast<size_t>(g.order);
  if (table.size() != n) fail(errc::parse, "multiplication table is not square");
  for (const auto& row : table) {
    if (row.size() != n) fail(errc::parse, "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= g.order) fail(errc::parse, "table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  for (size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (size_t j = 0; j < n; ++j) {
      if (row[static_cast<size_t>(table[i][j])])
        fail(errc::parse, "row " + g.names[i] + " repeats a product");
      row[static_cast<size_t>(table[i][j])] = true;
      if (col[static_cast<size_t>(table[j][i])])
        fail(errc::parse, "column " + g.names[i] + " repeats a product");
      col[static_cast<size_t>(table[j][i])] = true;
    }
  }
  int e = -1;
  for (size_t i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (size_t j = 0; j < n; ++j)
      ok = ok && table[i][j] == static_cast<int>(j) && table[j][i] == static_cast<int>(j);
    if (ok) e = static_cast<int>(i);
  }
  if (e < 0) fail(errc::parse, "table has no identity element");
  g.identity = e;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (table[static_cast<size_t>(table[a][b])][c] !=
            table[a][static_cast<size_t>(table[b][c])])
          fail(errc::parse, "table is not associative at (" + g.names[a] + "," + g.names[b] +
                                "," + g.names[c] + ")");
  g.inverse.assign(n, -1);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      if (table[a][b] == e) g.inverse[a] = static_cast<int>(b);
  g.table = std::move(table);
  return g;
}

FiniteGroup FiniteGroup::from_named_permutations(
    int points, const std::vector<std::pair<std::string, std::vector<int>>>& elements) {
  std::map<Perm, int> ids;
  std::vector<std::string> names;
  std::vector<Perm> perms;
  for (const auto& [name, p] : elements) {
    check_perm(p, points, "element " + name);
    if (!ids.emplace(p, static_cast<int>(perms.size())).second)
      fail(errc::parse, "duplicate permutation for element '" + name + "'");
    names.push_back(name);
    perms.push_back(p);
  }
  size_t n = perms.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      auto it = ids.find(perm_mul(perms[a], perms[b]));
      if (it == ids.end())
        fail(errc::parse, "permutation list is not closed under products (" + names[a] + "*" +
                              names[b] + ")");
      table[a][b] = it->second;
    }
  return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::from_permutations(
    int points, const std::vector<std::pair<std::string, std::vector<int>>>& generators) {
  for (const auto& [name, p] : generators) {
    check_name(name);
    check_perm(p, points, "generator " + name);
  }
  Perm id(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) id[static_cast<size_t>(i)] = i;

  std::vector<std::pair<std::string, Perm>> elements{{"e", id}};
  std::map<Perm, int> ids{{id, 0}};
  std::set<std::string> used{"e"};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& [gname, gperm] : generators) {
      Perm next = perm_mul(elements[head].second, gperm);
      if (ids.count(next)) continue;
      std::string base = head == 0 ? gname : elements[head].first + gname;
      while (!used.insert(base).second) base += "'";
      ids.emplace(next, static_cast<int>(elements.size()));
      elements.emplace_back(base, std::move(next));
    }
  }
  return from_named_permutations(points, elements);
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) fail(errc::argument, "cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
  }
  return from_table(std::move(names), std::move(table));
}

AmbientGroup AmbientGroup::make_concrete(FiniteGroup G, FiniteGroup K, FiniteGroup H,
                                         const std::vector<int>& embedK,
                                         const std::vector<int>& embedH) {
  AmbientGroup a;
  a.mode = Mode::concrete;
  a.G = std::move(G);
  a.factors[FK] = std::move(K);
  a.factors[FH] = std::move(H);
  a.embed[FK] = embedK;
  a.embed[FH] = embedH;
  for (int f : {FK, FH}) {
    const FiniteGroup& fac = a.factors[static_cast<size_t>(f)];
    const auto& em = a.embed[static_cast<size_t>(f)];
    if (static_cast<int>(em.size()) != fac.order)
      fail(errc::parse, "embedding size does not match subgroup order");
    for (int v : em)
      if (v < 0 || v >= a.G.order) fail(errc::parse, "embedding image out of range");
    for (int x = 0; x < fac.order; ++x) {
      if (!a.preimage[static_cast<size_t>(f)].emplace(em[static_cast<size_t>(x)], x).second)
        fail(errc::parse, "embedding is not injective");
      for (int y = 0; y < fac.order; ++y)
        if (em[static_cast<size_t>(fac.mul(x, y))] !=
            a.G.mul(em[static_cast<size_t>(x)], em[static_cast<size_t>(y)]))
          fail(errc::parse, "embedding is not a homomorphism");
    }
    if (em[static_cast<size_t>(fac.identity)] != a.G.identity)
      fail(errc::parse, "embedding does not preserve the identity");
  }
  return a;
}

AmbientGroup AmbientGroup::make_free(FiniteGroup K, FiniteGroup H, size_t max_word_len) {
  AmbientGroup a;
  a.mode = Mode::free_product;
  a.factors[FK] = std::move(K);
  a.factors[FH] = std::move(H);
  a.max_word_len = max_word_len;
  return a;
}

AmbientElem AmbientGroup::identity() const {
  AmbientElem e;
  e.cid = mode == Mode::concrete ? G.identity : 0;
  return e;
}

AmbientElem AmbientGroup::embed_letter(int factor, int elem) const {
  AmbientElem out = identity();
  if (mode == Mode::concrete) {
    out.cid = embed[static_cast<size_t>(factor)][static_cast<size_t>(elem)];
  } else if (elem != factors[static_cast<size_t>(factor)].identity) {
    out.word.push_back({factor, elem});
  }
  return out;
}

AmbientElem AmbientGroup::mul(const AmbientElem& a, const AmbientElem& b) const {
  if (mode == Mode::concrete) {
    AmbientElem out;
    out.cid = G.mul(a.cid, b.cid);
    return out;
  }
  AmbientElem out = a;
  for (auto [f, x] : b.word) {
    if (!out.word.empty() && out.word.back().first == f) {
      const FiniteGroup& fac = factors[static_cast<size_t>(f)];
      int prod = fac.mul(out.word.back().second, x);
      out.word.pop_back();
      if (prod != fac.identity) out.word.push_back({f, prod});
    } else {
      out.word.push_back({f, x});
    }
    if (out.word.size() > max_word_len)
      fail(errc::domain, "free product word exceeds the configured length bound");
  }
  return out;
}

AmbientElem AmbientGroup::inv(const AmbientElem& a) const {
  AmbientElem out;
  if (mode == Mode::concrete) {
    out.cid = G.inv(a.cid);
    return out;
  }
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
    out.word.push_back({it->first, factors[static_cast<size_t>(it->first)].inv(it->second)});
  return out;
}

bool AmbientGroup::is_identity(const AmbientElem& a) const {
  return mode == Mode::concrete ? a.cid == G.identity : a.word.empty();
}

int AmbientGroup::in_factor(int factor, const AmbientElem& a) const {
  if (mode == Mode::concrete) {
    auto it = preimage[static_cast<size_t>(factor)].find(a.cid);
    return it == preimage[static_cast<size_t>(factor)].end() ? -1 : it->second;
  }
  if (a.word.empty()) return factors[static_cast<size_t>(factor)].identity;
  if (a.word.size() == 1 && a.word[0].first == factor) return a.word[0].second;
  return -1;
}

GroupContext GroupContext::make(FiniteGroup H, FiniteGroup K, AmbientGroup ambient) {
  if (ambient.factors[FH].order != H.order || ambient.factors[FK].order != K.order ||
      ambient.factors[FH].names != H.names || ambient.factors[FK].names != K.names)
    fail(errc::internal, "ambient factors do not match the given groups");
  GroupContext c;
  c.H = std::move(H);
  c.K = std::move(K);
  c.ambient = std::move(ambient);
  c.field = ScalarField::make(Rational(c.H.order, c.K.order));
  c.delta = Scalar(c.field, 0, 0, c.K.order, 0);
  return c;
}

AmbientElem GroupContext::mu(const Word& s, int start) const {
  AmbientElem acc = ambient.identity();
  for (size_t i = 0; i < s.size(); ++i)
    acc = ambient.mul(acc, ambient.embed_letter(factor_of(static_cast<long>(i) + start), s[i]));
  return acc;
}

Word GroupContext::tilde(const Word& s, int start) const {
  long m = static_cast<long>(s.size());
  Word t(s.size());
  for (long i = 0; i < m; ++i)
    t[static_cast<size_t>(i)] = L(start + m - 1 - i).inv(s[static_cast<size_t>(m - 1 - i)]);
  return t;
}

std::vector<Word> GroupContext::enumerate_words(int n, int start) const {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    const FiniteGroup& g = L(pos + start);
    for (int x = 0; x < g.order; ++x) {
      cur.push_back(x);
      self(self, pos + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Word> GroupContext::enumerate_basis(int n) const {
  std::vector<Word> out;
  for (auto& w : enumerate_words(2 * n))
    if (ambient.is_identity(mu(w))) out.push_back(std::move(w));
  return out;
}

Int GroupContext::dim(int n) const {
  if (n < 0) fail(errc::argument, "level must be nonnegative");
  std::map<AmbientElem, Int> walk{{ambient.identity(), 1}};
  for (int i = 0; i < 2 * n; ++i) {
    std::map<AmbientElem, Int> next;
    const FiniteGroup& g = L(i);
    for (const auto& [pos, cnt] : walk)
      for (int x = 0; x < g.order; ++x)
        next[ambient.mul(pos, ambient.embed_letter(factor_of(i), x))] += cnt;
    walk = std::move(next);
  }
  auto it = walk.find(ambient.identity());
  return it == walk.end() ? Int(0) : it->second;
}

std::string GroupContext::render_word(const Word& s, int start) const {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += L(static_cast<long>(i) + start).name(s[i]);
  }
  return out;
}

Word GroupContext::parse_word(const std::string& text, int length, int start) const {
  std::vector<std::string> parts;
  std::string cur;
  auto flush = [&] {
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  if (static_cast<int>(parts.size()) != length)
    fail(errc::argument, "word has " + std::to_string(parts.size()) + " letters, expected " +
                             std::to_string(length));
  Word out;
  for (size_t i = 0; i < parts.size(); ++i) {
    const FiniteGroup& g = L(static_cast<long>(i) + start);
    auto it = g.index.find(parts[i]);
    if (it == g.index.end())
      fail(errc::argument, "letter " + std::to_string(i + 1) + " ('" + parts[i] +
                               "') is not an element of the expected group");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace gtpa
