#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"
#include "group.hpp"

namespace gtpa {

// One matrix-unit term E_{s1,s2} tensor l of a commutant model.
struct CommTriple {
  Word s1, s2;
  int l = 0;
  auto operator<=>(const CommTriple&) const = default;
};

// Two models live side by side at each level n:
//   ncomm: words of n letters starting in K, mu(s1) l mu(s2)^-1 must lie in H
//   mcomm: words of n-1 letters starting in H, the same product must lie in K
// with l always drawn from L(n).
enum class CommFlavor { ncomm, mcomm };

struct CommElement {
  int level = 0;
  CommFlavor flavor = CommFlavor::ncomm;
  std::map<CommTriple, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const CommElement& a, const CommElement& b) {
    return a.level == b.level && a.flavor == b.flavor && a.terms == b.terms;
  }
};

inline CommElement operator*(const Scalar& c, const CommElement& x) {
  CommElement out{x.level, x.flavor, {}};
  if (c.is_zero()) return out;
  for (const auto& [t, v] : x.terms) out.terms.emplace(t, c * v);
  return out;
}

std::vector<CommTriple> ncomm_basis(const GroupContext& ctx, int n);
std::vector<CommTriple> mcomm_basis(const GroupContext& ctx, int n);  // n >= 1

// Validated single basis term with coefficient one.
CommElement comm_element(const GroupContext& ctx, int n, CommFlavor flavor,
                         const CommTriple& t);

CommElement comm_identity(const GroupContext& ctx, int n);

// Matrix-unit multiplication with group part: delta_{s2,s3} E_{s1,s4} (x) ll'.
CommElement comm_mult(const GroupContext& ctx, const CommElement& x, const CommElement& y);
CommElement comm_star(const GroupContext& ctx, const CommElement& x);

// Jones projection of the commutant tower, already normalized: idempotent.
CommElement jones_en(const GroupContext& ctx, int n);  // n >= 1

Scalar trace_mn(const GroupContext& ctx, const CommElement& x);

// Trace-preserving expectation one level down (both words drop a letter).
CommElement cond_exp_mn(const GroupContext& ctx, const CommElement& x);

// Expectation onto the smaller commutant and its inclusion back.
CommElement cond_exp_onto_mcomm(const GroupContext& ctx, const CommElement& x);
CommElement mcomm_to_ncomm(const GroupContext& ctx, const CommElement& x);

// Unital inclusion one level up.
CommElement comm_include(const GroupContext& ctx, const CommElement& x);

// The word-model isomorphism: E_{s1,s2} (x) l -> (s1, l, ~s2, h) one level up,
// h being the unique H letter making the product trivial.
Element psi(const GroupContext& ctx, const CommElement& x);
CommElement psi_inverse(const GroupContext& ctx, const Element& x);

std::string render_comm(const GroupContext& ctx, const CommElement& x);

// Named exact checks that psi carries the whole structure onto the word
// model at one level; used by the verify suite and the CLI.
std::vector<std::pair<std::string, bool>> verify_iso(const GroupContext& ctx, int n);

}  // namespace gtpa
