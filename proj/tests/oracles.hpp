#pragma once

// Independent recomputations used by tests. These are deliberately written
// as direct transcriptions of the definitions (flat enumeration, no shared
// solver logic) so they can catch errors in the production code paths.

#include <cmath>
#include <cstddef>
#include <vector>

#include "element.hpp"
#include "geometry.hpp"
#include "group.hpp"

namespace oracle {

using namespace gtpa;

// Count alternating words of 2n letters with trivial ambient product by
// plain odometer enumeration.
inline long dim_bruteforce(const GroupContext& ctx, int n) {
  if (n == 0) return 1;
  std::vector<int> w(static_cast<size_t>(2 * n), 0);
  long count = 0;
  while (true) {
    AmbientElem prod = ctx.ambient.identity();
    for (int i = 0; i < 2 * n; ++i)
      prod = ctx.ambient.mul(
          prod, ctx.ambient.embed_letter(GroupContext::factor_of(i), w[static_cast<size_t>(i)]));
    if (ctx.ambient.is_identity(prod)) ++count;
    int j = 0;
    for (; j < 2 * n; ++j) {
      if (++w[static_cast<size_t>(j)] < ctx.L(j).order) break;
      w[static_cast<size_t>(j)] = 0;
    }
    if (j == 2 * n) break;
  }
  return count;
}

// Evaluate a tangle on fixed input words by blind enumeration: try every
// external word and check every face relation directly.
inline Element eval_bruteforce(const GroupContext& ctx, const Tangle& t,
                               const std::vector<Word>& inputs) {
  Geometry geo = analyze(t);
  long unsh = geo.criticals[0][0] + geo.criticals[1][0];
  long shd = geo.criticals[0][1] + geo.criticals[1][1];
  Scalar base = Scalar::r_pow(ctx.field, unsh - shd) *
                Scalar(rat_pow(Rational(ctx.H.order), geo.networks_unshaded) *
                       rat_pow(Rational(ctx.K.order), geo.networks_shaded));
  Element out{geo.external_color, {}};
  for (const Word& s0 : ctx.enumerate_words(2 * geo.external_color)) {
    bool ok = true;
    for (const FaceWalk& w : geo.walks) {
      const FiniteGroup& L = w.shaded ? ctx.K : ctx.H;
      int prod = L.identity;
      for (const OpeningRef& op : w.steps) {
        int label = op.disc < 0 ? s0[static_cast<size_t>(op.idx - 1)]
                                : inputs[static_cast<size_t>(op.disc)][static_cast<size_t>(op.idx - 1)];
        prod = L.mul(prod, op.disc < 0 ? label : L.inv(label));
      }
      if (prod != L.identity) {
        ok = false;
        break;
      }
    }
    if (ok) add_term(out, s0, base);
  }
  return out;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> sym_eigenvalues(std::vector<std::vector<double>> a) {
  size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double tt = (theta >= 0 ? 1.0 : -1.0) /
                    (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(tt * tt + 1), s = tt * c;
        for (size_t i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (size_t i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  std::vector<double> ev(n);
  for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

}  // namespace oracle
