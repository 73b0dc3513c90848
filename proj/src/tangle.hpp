#pragma once

#include <string>
#include <vector>

#include "error.hpp"

namespace gtpa {

// One horizontal slice event, read bottom to top.
//   Id            nothing happens (kept so files can be laid out explicitly)
//   Cup(p)        a minimum: two new strands appear at positions p, p+1
//   Cap(p)        a maximum: strands p and p+1 join
//   Box(d, k, p)  input disc d of color k consumes strands p..p+k-1 and
//                 emits the same positions; k = 0 sits in the gap left of p
struct Row {
  enum Kind { Id, Cup, Cap, Box };
  Kind kind = Id;
  int pos = 1;
  int color = 0;  // Box only
  int disc = -1;  // Box only: index into Tangle::disc_names
};

// A planar tangle in slice form. The strand count starts and ends at
// external_color: the bottom row of strands meets the lower half of the
// external boundary, the top row the upper half. Columns (gaps between
// strands, 0 = far left) are shaded exactly at odd index, flipped by
// external_shaded, which may only be set for color-0 tangles.
struct Tangle {
  int external_color = 0;
  bool external_shaded = false;
  std::vector<Row> rows;  // bottom to top
  std::vector<std::string> disc_names;

  int num_discs() const { return static_cast<int>(disc_names.size()); }
  int disc_index(const std::string& name) const;
  // Color and position of the unique box row carrying disc d.
  const Row& disc_row(int d) const;
  // Whether the cell a color-0 box at column `col` sits in is shaded.
  bool col_shaded(int col) const { return (col % 2 == 1) != external_shaded; }
};

// Structural and positional validation: widths, ranges, disc usage, box
// shading. Throws with the offending row number (1-based from the bottom).
void validate_tangle(const Tangle& t);

// Text form: a "tangle <color> [shaded]" header then one row per line.
Tangle parse_tangle(const std::string& text);
std::string render_tangle(const Tangle& t);

// Plug `inner` into disc slot `d` of `outer`. Outer keeps its other discs and
// names; inner discs are spliced in at the slot position, renamed as needed.
Tangle compose(const Tangle& outer, int d, const Tangle& inner);

// The generating tangles of the algebra structure.
Tangle identity_tangle(int n);
Tangle multiplication_tangle(int n);       // discs: D1 = top factor, D2 = bottom
Tangle inclusion_tangle(int n);            // one color-n disc inside color n+1
Tangle jones_tangle(int n);                // cap then cup at n-1; needs n >= 2
Tangle cond_exp_right_tangle(int n);       // color n+1 disc, right strand bent
Tangle cond_exp_left_tangle(int n);        // color n disc, leftmost strand bent; n >= 1
Tangle closure_tangle(int n);              // trace diagram: all strands bent around

// The annular generators every tangle decomposes into.
Tangle capping_tangle(int n, int i);         // n >= 1, 1 <= i <= 2n-1
Tangle cap_inclusion_tangle(int n, int i);   // n >= 0, 1 <= i <= 2n+1
Tangle left_inclusion_tangle(int n);         // n >= 0
Tangle disc_inclusion_tangle(int n, int p, int q, bool second_above);  // p even

}  // namespace gtpa
