#pragma once

#include <vector>

#include "element.hpp"
#include "geometry.hpp"
#include "tangle.hpp"

namespace gtpa {

// Exponent of r attached to each critical point class, indexed by
// [is_max][enclosed cell shaded]. The shipped table gives r over unshaded
// cells and 1/r over shaded ones, maxima and minima alike; the verify layer
// re-derives it by searching all sixteen sign tables.
struct CriticalWeights {
  int eps[2][2] = {{1, -1}, {1, -1}};
};

// The scalar every state of the tangle is weighted by: r to the signed
// critical-point count, and one face-group order per network.
Scalar tangle_prefactor(const GroupContext& ctx, const Geometry& geo,
                        CriticalWeights weights = {});

// Apply the tangle map to one basis word per input disc (in disc order).
// The result sums the prefactor over every boundary word that satisfies all
// face relations together with the given inputs.
Element evaluate_words(const GroupContext& ctx, const Tangle& t, const Geometry& geo,
                       const std::vector<Word>& inputs, CriticalWeights weights = {});

// Multilinear extension of evaluate_words to whole elements.
Element evaluate(const GroupContext& ctx, const Tangle& t, const std::vector<Element>& inputs,
                 CriticalWeights weights = {});

}  // namespace gtpa
