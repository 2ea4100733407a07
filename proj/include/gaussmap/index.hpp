#pragma once

#include <cstdint>
#include <optional>

#include "gaussmap/spherical.hpp"
#include "gaussmap/star.hpp"

namespace gaussmap {

struct IndexReport {
  int above_index = 0;
  int middle_count = 0;  // M, even and >= 0
  bool agrees = false;   // above_index == 1 - M/2
};

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
  std::uint64_t seed = 0;
};

// A direction is general for a star when every fan direction has a height
// strictly away from the center's (margin > kEpsGen); for a polygon, when no
// vertex lies on the equator S(xi).
bool is_general(const UnitVec& xi, const VertexStar& s,
                double* margin = nullptr);
bool is_general(const UnitVec& xi, const SphericalPolygon& w,
                double* margin = nullptr);

// Critical point index 1 - sum_e A(e) + sum_f A(f), computed on the
// subdivided fan (reflex faces are split at their corner, which produces the
// double count of reflex faces).
int above_index(const VertexStar& s, const UnitVec& xi);
int polygon_index(const SphericalPolygon& w, const UnitVec& xi);

// Middle vertex formulation: M counts fan wedges whose boundary directions
// straddle the center's height. Reports agreement with the above index.
IndexReport middle_vertex_index(const VertexStar& s, const UnitVec& xi);

// xi is admissible for w when no vertex on S(xi) fails to cross: a vertex on
// the equator must have neighbors strictly on opposite sides.
bool is_admissible(const UnitVec& xi, const SphericalPolygon& w);

// Monte Carlo estimate of (1/2) * integral of i(v, xi) over S^2, an unbiased
// estimator of the angle deficit. Non-general draws are rejected and
// redrawn.
McEstimate curvature_by_index_integration(const VertexStar& s, long n_samples,
                                          std::uint64_t seed);

}  // namespace gaussmap
