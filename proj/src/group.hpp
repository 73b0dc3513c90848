#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace gtpa {

// A finite group given by its multiplication table. Construction validates
// the full axioms, so downstream code can rely on table lookups blindly.
struct FiniteGroup {
  int order = 0;
  int identity = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  std::map<std::string, int> index;

  int mul(int a, int b) const { return table[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inverse[static_cast<size_t>(a)]; }
  const std::string& name(int a) const { return names[static_cast<size_t>(a)]; }
  int id_of(const std::string& n) const;

  static FiniteGroup from_table(std::vector<std::string> names,
                                std::vector<std::vector<int>> table);
  // Generators act on {0..points-1}; the closure is built breadth-first with
  // deterministic names: identity "e", then discovery-order concatenations.
  static FiniteGroup from_permutations(
      int points, const std::vector<std::pair<std::string, std::vector<int>>>& generators);
  // A complete list of named permutations; must already be closed.
  static FiniteGroup from_named_permutations(
      int points, const std::vector<std::pair<std::string, std::vector<int>>>& elements);
  static FiniteGroup cyclic(int n);
};

// Factor tags: words alternate K, H, K, H, ... so the factor of a letter is
// the parity of its 0-based position.
inline constexpr int FK = 0;
inline constexpr int FH = 1;

// An element of the ambient group containing both H and K. In concrete mode
// this is an element id of an explicit group G; in free product mode it is a
// reduced alternating word of nontrivial factor letters.
struct AmbientElem {
  int cid = 0;
  std::vector<std::pair<int, int>> word;  // (factor, element id) letters
  auto operator<=>(const AmbientElem&) const = default;
};

struct AmbientGroup {
  enum class Mode { concrete, free_product };
  Mode mode = Mode::concrete;
  FiniteGroup G;                              // concrete mode only
  std::array<std::vector<int>, 2> embed;      // factor id -> G id
  std::array<std::map<int, int>, 2> preimage; // G id -> factor id
  std::array<FiniteGroup, 2> factors;         // [FK]=K, [FH]=H
  size_t max_word_len = 64;

  static AmbientGroup make_concrete(FiniteGroup G, FiniteGroup K, FiniteGroup H,
                                    const std::vector<int>& embedK,
                                    const std::vector<int>& embedH);
  static AmbientGroup make_free(FiniteGroup K, FiniteGroup H, size_t max_word_len = 64);

  AmbientElem identity() const;
  AmbientElem embed_letter(int factor, int elem) const;
  AmbientElem mul(const AmbientElem& a, const AmbientElem& b) const;
  AmbientElem inv(const AmbientElem& a) const;
  bool is_identity(const AmbientElem& a) const;
  // The preimage in the given factor, or -1 when the element lies outside it.
  int in_factor(int factor, const AmbientElem& a) const;
};

// A word of group letters. Ids alone do not determine the groups: the letter
// at index i belongs to K when (i + start parity) is even and to H when odd.
using Word = std::vector<int>;

// Everything the planar algebra needs about one pair of groups: the groups,
// their common ambient group, and the coefficient field with r^4 = |H|/|K|.
struct GroupContext {
  FiniteGroup H, K;
  AmbientGroup ambient;
  FieldPtr field;
  Scalar delta;  // sqrt(|H| |K|) = |K| r^2

  static GroupContext make(FiniteGroup H, FiniteGroup K, AmbientGroup ambient);

  // L(0)=K, L(1)=H, alternating; the group of the letter at position i.
  const FiniteGroup& L(long i) const { return i % 2 == 0 ? K : H; }
  static int factor_of(long i) { return i % 2 == 0 ? FK : FH; }

  AmbientElem mu(const Word& s, int start = 0) const;
  // Reverse the word and invert each letter. If the input letters start at
  // parity `start`, the output letters start at parity start + len - 1.
  Word tilde(const Word& s, int start = 0) const;

  // All alternating words of n letters whose letter i lies in L(i + start),
  // in lexicographic id order.
  std::vector<Word> enumerate_words(int n, int start = 0) const;
  // Basis of the level-n space: words of 2n letters with trivial product.
  std::vector<Word> enumerate_basis(int n) const;
  // Level-n dimension by a walk count; agrees with enumerate_basis().size().
  Int dim(int n) const;

  std::string render_word(const Word& s, int start = 0) const;
  Word parse_word(const std::string& text, int length, int start = 0) const;
};

}  // namespace gtpa
