#pragma once

#include <optional>
#include <vector>

#include "gaussmap/vec3.hpp"

namespace gaussmap {

struct HemispherePole {
  UnitVec pole;
  double margin = 0.0;  // min_i <pole, p_i>, maximized over poles
};

// Max-margin open hemisphere containing all points: argmax_t min_i <t, p_i>.
// Returns nullopt when no open hemisphere contains the points (margin <=
// kEpsGen). The optimum has at most three active constraints, so it is found
// exactly by scanning singletons, pairs, and triples; ties are broken
// lexicographically on the pole coordinates. Intended for small inputs
// (vertex stars, n <= 64).
std::optional<HemispherePole> open_hemisphere(
    const std::vector<UnitVec>& points);

}  // namespace gaussmap
