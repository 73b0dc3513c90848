#pragma once

// Shared group setups used across the test binaries.
//   ctx_a: G = S3, H = <(12)>, K = <(13)>; index ratio 1, quadratic field.
//   ctx_b: H = K = G = Z2; the degenerate equal-subgroup case.
//   ctx_c: Z2 * Z2 free product ambient; infinite ambient group.
//   ctx_d: G = S3, H = <(12)>, K = <(123)>; ratio 2/3, quartic field.

#include "group.hpp"

namespace gtpa {
namespace testctx {

inline FiniteGroup s3() {
  return FiniteGroup::from_named_permutations(3, {
                                                     {"e", {0, 1, 2}},
                                                     {"t12", {1, 0, 2}},
                                                     {"t13", {2, 1, 0}},
                                                     {"t23", {0, 2, 1}},
                                                     {"c123", {1, 2, 0}},
                                                     {"c132", {2, 0, 1}},
                                                 });
}

inline FiniteGroup z2(const std::string& gen) {
  return FiniteGroup::from_table({"e", gen}, {{0, 1}, {1, 0}});
}

inline FiniteGroup z3(const std::string& gen) {
  return FiniteGroup::from_table({"e", gen, gen + "2"},
                                 {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

inline GroupContext ctx_a() {
  FiniteGroup g = s3();
  FiniteGroup h = z2("h"), k = z2("k");
  std::vector<int> eh{g.id_of("e"), g.id_of("t12")};
  std::vector<int> ek{g.id_of("e"), g.id_of("t13")};
  auto amb = AmbientGroup::make_concrete(g, k, h, ek, eh);
  return GroupContext::make(h, k, amb);
}

inline GroupContext ctx_b() {
  FiniteGroup g = z2("g");
  auto amb = AmbientGroup::make_concrete(g, g, g, {0, 1}, {0, 1});
  return GroupContext::make(g, g, amb);
}

inline GroupContext ctx_c() {
  FiniteGroup h = z2("h"), k = z2("k");
  return GroupContext::make(h, k, AmbientGroup::make_free(k, h));
}

inline GroupContext ctx_d() {
  FiniteGroup g = s3();
  FiniteGroup h = z2("h"), k = z3("k");
  std::vector<int> eh{g.id_of("e"), g.id_of("t12")};
  std::vector<int> ek{g.id_of("e"), g.id_of("c123"), g.id_of("c132")};
  auto amb = AmbientGroup::make_concrete(g, k, h, ek, eh);
  return GroupContext::make(h, k, amb);
}

}  // namespace testctx
}  // namespace gtpa
