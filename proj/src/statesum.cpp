#include "statesum.hpp"

#include <cstddef>
#include <utility>

#include "error.hpp"

namespace gtpa {

namespace {

[[noreturn]] void bug(const std::string& what) { fail(errc::internal, "state sum: " + what); }

}  // namespace

Scalar tangle_prefactor(const GroupContext& ctx, const Geometry& geo,
                        CriticalWeights weights) {
  long rexp = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) rexp += weights.eps[a][b] * geo.criticals[a][b];
  Scalar p = Scalar::r_pow(ctx.field, rexp);
  Rational nets = rat_pow(Rational(ctx.H.order), geo.networks_unshaded) *
                  rat_pow(Rational(ctx.K.order), geo.networks_shaded);
  return p * Scalar(nets);
}

Element evaluate_words(const GroupContext& ctx, const Tangle& t, const Geometry& geo,
                       const std::vector<Word>& inputs, CriticalWeights weights) {
  if (static_cast<int>(inputs.size()) != t.num_discs())
    fail(errc::argument, "state sum: expected one input word per disc");
  for (int d = 0; d < t.num_discs(); ++d) {
    const Word& w = inputs[static_cast<size_t>(d)];
    int k = t.disc_row(d).color;
    if (static_cast<int>(w.size()) != 2 * k)
      fail(errc::argument, "state sum: word for disc " + t.disc_names[static_cast<size_t>(d)] +
                               " must have " + std::to_string(2 * k) + " letters");
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] < 0 || w[i] >= ctx.L(static_cast<long>(i)).order)
        fail(errc::argument, "state sum: letter out of range");
    if (!ctx.ambient.is_identity(ctx.mu(w)))
      fail(errc::argument, "state sum: input word has nontrivial product");
  }

  const int n0 = geo.external_color;
  Element out{n0, {}};
  Scalar base = tangle_prefactor(ctx, geo, weights);

  // Each walk relates the labels of its openings: externals enter directly,
  // internals inverted, product trivial in the face group. Externals are the
  // unknowns; each appears in exactly one walk, so walks solve independently
  // and the states are the product of the per-walk solution sets.
  std::vector<std::vector<std::vector<std::pair<int, int>>>> walk_solutions;
  for (const FaceWalk& w : geo.walks) {
    const FiniteGroup& L = w.shaded ? ctx.K : ctx.H;
    std::vector<int> segs;       // known products between unknowns
    std::vector<int> ext_letters;  // 0-based positions in the output word
    int acc = L.identity;
    for (const OpeningRef& op : w.steps) {
      bool odd = op.idx % 2 == 1;  // odd openings sit in shaded cells
      if (odd != w.shaded) bug("opening parity contradicts face shading");
      if (op.disc < 0) {
        segs.push_back(acc);
        acc = L.identity;
        ext_letters.push_back(op.idx - 1);
      } else {
        int letter = inputs[static_cast<size_t>(op.disc)][static_cast<size_t>(op.idx - 1)];
        acc = L.mul(acc, L.inv(letter));
      }
    }
    segs.push_back(acc);

    size_t u = ext_letters.size();
    std::vector<std::vector<std::pair<int, int>>> sols;
    if (u == 0) {
      if (segs[0] != L.identity) return out;  // inputs violate a closed face
      sols.emplace_back();
    } else {
      // A_0 x_1 A_1 ... x_u A_u = e: enumerate x_1..x_{u-1}, solve x_u.
      std::vector<int> x(u - 1, 0);
      while (true) {
        int prefix = segs[0];
        for (size_t i = 0; i + 1 < u; ++i)
          prefix = L.mul(L.mul(prefix, x[i]), segs[i + 1]);
        int last = L.inv(L.mul(segs[u], prefix));
        std::vector<std::pair<int, int>> assign;
        for (size_t i = 0; i + 1 < u; ++i) assign.emplace_back(ext_letters[i], x[i]);
        assign.emplace_back(ext_letters[u - 1], last);
        sols.push_back(std::move(assign));
        size_t j = 0;
        for (; j < x.size(); ++j) {
          if (++x[j] < L.order) break;
          x[j] = 0;
        }
        if (j == x.size()) break;
      }
    }
    walk_solutions.push_back(std::move(sols));
  }

  std::vector<size_t> pick(walk_solutions.size(), 0);
  while (true) {
    Word s0(static_cast<size_t>(2 * n0), -1);
    for (size_t i = 0; i < pick.size(); ++i)
      for (const auto& [pos, id] : walk_solutions[i][pick[i]])
        s0[static_cast<size_t>(pos)] = id;
    for (int id : s0)
      if (id < 0) bug("external opening missing from every walk");
    if (!ctx.ambient.is_identity(ctx.mu(s0))) bug("output word has nontrivial product");
    add_term(out, s0, base);
    size_t j = 0;
    for (; j < pick.size(); ++j) {
      if (++pick[j] < walk_solutions[j].size()) break;
      pick[j] = 0;
    }
    if (j == pick.size()) break;
  }
  return out;
}

Element evaluate(const GroupContext& ctx, const Tangle& t, const std::vector<Element>& inputs,
                 CriticalWeights weights) {
  validate_tangle(t);
  Geometry geo = analyze(t);
  if (static_cast<int>(inputs.size()) != t.num_discs())
    fail(errc::argument, "state sum: expected one input element per disc");
  for (int d = 0; d < t.num_discs(); ++d)
    if (inputs[static_cast<size_t>(d)].level != t.disc_row(d).color)
      fail(errc::argument, "state sum: element level does not match color of disc " +
                               t.disc_names[static_cast<size_t>(d)]);

  Element out{geo.external_color, {}};
  size_t b = inputs.size();
  std::vector<std::map<Word, Scalar>::const_iterator> term(b);
  for (size_t d = 0; d < b; ++d) {
    if (inputs[d].is_zero()) return out;
    term[d] = inputs[d].terms.begin();
  }
  while (true) {
    std::vector<Word> words(b);
    Scalar coeff(1);
    for (size_t d = 0; d < b; ++d) {
      words[d] = term[d]->first;
      coeff *= term[d]->second;
    }
    Element part = evaluate_words(ctx, t, geo, words, weights);
    for (const auto& [w, c] : part.terms) add_term(out, w, coeff * c);
    size_t j = 0;
    for (; j < b; ++j) {
      if (++term[j] != inputs[j].terms.end()) break;
      term[j] = inputs[j].terms.begin();
    }
    if (j == b) break;
  }
  return out;
}

}  // namespace gtpa
