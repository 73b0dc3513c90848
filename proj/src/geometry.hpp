#pragma once

#include <compare>
#include <vector>

#include "tangle.hpp"

namespace gtpa {

// A boundary arc of a disc, between marked points idx and idx+1 (cyclically).
// disc == -1 refers to the external boundary.
struct OpeningRef {
  int disc = -1;
  int idx = 0;  // 1..2k for a color-k disc
  auto operator<=>(const OpeningRef&) const = default;
};

// One boundary component of a face, with its openings in traversal order.
// The label product along the walk is trivial: external openings enter
// directly, internal ones inverted.
struct FaceWalk {
  std::vector<OpeningRef> steps;
  int face = -1;
  bool shaded = false;
};

// Everything the state sum needs to know about a tangle's geometry.
struct Geometry {
  int external_color = 0;
  bool external_shaded = false;
  std::vector<FaceWalk> walks;
  // Closed string/box clusters not touching the external boundary, counted by
  // the shading of the face that contains them.
  int networks_unshaded = 0;
  int networks_shaded = 0;
  // Critical point counts indexed [is_max][enclosed cell is shaded]. The
  // standard weights r / 1/r give the prefactor; the calibration search in
  // the verify suite re-derives them from these counts.
  int criticals[2][2] = {{0, 0}, {0, 0}};
  int num_faces = 0;
  int num_strings = 0;  // includes bare loops
};

Geometry analyze(const Tangle& t);

}  // namespace gtpa
