#pragma once

#include <optional>
#include <vector>

#include "gaussmap/vec3.hpp"

namespace gaussmap {

// Minor great-circle arc between two distinct, non-antipodal endpoints.
struct Arc {
  UnitVec a;
  UnitVec b;

  Arc(const UnitVec& a_, const UnitVec& b_);

  // Unit normal of the supporting great circle, oriented so that the left
  // side of the directed arc a->b is the hemisphere of +normal.
  UnitVec great_circle_normal() const;

  double length() const { return angle_between(a, b); }

  // Whether a point already known to lie on the supporting great circle
  // lies on the minor arc.
  bool contains_on_circle(const UnitVec& p, double tol = kEpsGen) const;
};

// Closed spherical polygon: cyclic vertex list, consecutive vertices joined
// by minor arcs. Orientation is implicit in the vertex order.
struct SphericalPolygon {
  std::vector<UnitVec> vertices;

  SphericalPolygon() = default;
  explicit SphericalPolygon(std::vector<UnitVec> verts);

  int size() const { return static_cast<int>(vertices.size()); }
  const UnitVec& vertex(int i) const {
    int n = size();
    return vertices[((i % n) + n) % n];
  }
  Arc edge(int i) const { return Arc(vertex(i), vertex(i + 1)); }

  double length() const;

  SphericalPolygon reversed() const;
  SphericalPolygon antipodal() const;

  // No three vertices on a common great circle (within kEpsGen).
  bool is_general_position() const;
};

// Oriented wedge angle at b, in (0, 2*pi): the interior angle at b of the
// path c -> b -> a traversed with the wedge on its left. Reflex values > pi
// are allowed. spherical_angle(next, v, prev) is the interior angle of an
// oriented polygon at v.
double spherical_angle(const UnitVec& a, const UnitVec& b, const UnitVec& c);

// Interior angle of the polygon at vertex i, measured on the left of the
// oriented boundary.
double interior_angle(const SphericalPolygon& p, int i);

// Spherical excess: sum of interior angles minus (n-2)*pi. Equals the area
// of the region to the left of the boundary for simple polygons.
// Throws NotSimple if the polygon self-intersects.
double polygon_area_excess(const SphericalPolygon& p);

// Polar polygon w'_i = (w_i x w_{i+1}) / |w_i x w_{i+1}|.
SphericalPolygon polar_polygon(const SphericalPolygon& w);

// Number of transversal self-crossings (unordered pairs of non-adjacent
// edges whose minor arcs intersect).
int crossing_count(const SphericalPolygon& w);

// Points lying on both minor arcs. Two points are only possible for arcs on
// a shared great circle, which is rejected (SharedGreatCircle).
std::vector<UnitVec> arc_intersection(const Arc& a1, const Arc& a2);

}  // namespace gaussmap
