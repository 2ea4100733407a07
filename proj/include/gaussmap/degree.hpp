#pragma once

#include <vector>

#include "gaussmap/spherical.hpp"

namespace gaussmap {

struct DegreeReport {
  int degree = 0;
  double gamma_longitude = 0.0;  // meridian actually used
  int index = 0;
  int w_plus = 0;   // winding of the polar polygon around xi
  int w_minus = 0;  // winding around -xi
  int crossings = 0;
  int c_parity = 0;
};

// Signed crossing count of the polar polygon W' through a meridian from xi
// to -xi: each crossing edge contributes sign <w'_i x w'_{i+1}, xi>. The
// meridian starts at the requested longitude (in a deterministic frame with
// pole xi) and advances by the golden angle until it clears all vertices of
// W'.
int normal_degree(const SphericalPolygon& w, const UnitVec& xi,
                  double gamma_longitude = 0.0);

// True iff every longitude yields the same degree.
bool degree_independence_check(const SphericalPolygon& w, const UnitVec& xi,
                               const std::vector<double>& longitudes);

// Computes degree, index, windings and crossing parity, and verifies
//   d = w(xi) - w(-xi),   c + i = w(xi) + w(-xi),   d - i even,
// plus |d| <= |i| for simple polygons. A violation signals a geometry bug
// and raises IdentityViolation.
DegreeReport degree_identities(const SphericalPolygon& w, const UnitVec& xi);

}  // namespace gaussmap
