#pragma once

#include <string>
#include <vector>

#include "element.hpp"
#include "group.hpp"

namespace gtpa {

// Operations on the level spaces, written directly on basis words. Words of
// length 2n split as (a, l, b, h): a the first n-1 letters, l the middle
// letter, b the next n-1, h the last. Every map below matches the value of
// the corresponding tangle under the state sum; the tests enforce that.

// Validated basis element: the word must have 2n letters and trivial product.
Element word_element(const GroupContext& ctx, int n, const Word& w);

// Multiplicative unit of level n.
Element identity_element(const GroupContext& ctx, int n);

// x stacked on top of y: nonzero only when the bottom half of x matches the
// reflected top half of y.
Element mul(const GroupContext& ctx, const Element& x, const Element& y);

// Adjoint: reflect the word and invert every letter (coefficients are real).
Element star(const GroupContext& ctx, const Element& x);

// Inclusion into level n+1: the middle letter splits across the new strand.
Element include(const GroupContext& ctx, const Element& x);

// The Jones projection generator in level m+1 (m >= 1), normalized so that
// jones_element(m) / delta is an idempotent.
Element jones_element(const GroupContext& ctx, int m);

// Conditional expectation bending the rightmost strand: level n+1 down to n.
Element cond_exp_right(const GroupContext& ctx, const Element& x);

// Conditional expectation bending the leftmost strand: level n to level n.
Element cond_exp_left(const GroupContext& ctx, const Element& x);

// Normalized Markov trace: iterate cond_exp_right / delta down to level 0.
Scalar trace(const GroupContext& ctx, const Element& x);

// <x, y> = trace(y* x); the Gram matrix is taken over enumerate_basis(n).
Scalar inner(const GroupContext& ctx, const Element& x, const Element& y);
std::vector<std::vector<Scalar>> gram_matrix(const GroupContext& ctx, int n);

// Kernel dimension of the linear system rows * v = 0 over the scalar field.
size_t kernel_dimension(std::vector<std::vector<Scalar>> rows, size_t ncols);

// Dimension of {x at level n-1 : include(x) commutes with q}, q at level n.
size_t included_centralizer_dim(const GroupContext& ctx, const Element& q);

// Human form, e.g. "2 * ()" or "r^2 * (e,h) + 1 * (k,h)".
std::string render_element(const GroupContext& ctx, const Element& x);

}  // namespace gtpa
