#include "gaussmap/degree.hpp"

#include <cmath>

#include "gaussmap/arrangement.hpp"
#include "gaussmap/index.hpp"

namespace gaussmap {

namespace {

constexpr double kGoldenAngle = 2.3999632297286533;

// Reference azimuth direction in the frame with pole xi, from the global
// x-axis (or y-axis when degenerate).
UnitVec reference_direction(const UnitVec& xi) {
  Vec3 seed{1, 0, 0};
  if (std::abs(dot(xi.vec(), seed)) > 0.9) seed = Vec3{0, 1, 0};
  return UnitVec(seed - dot(xi.vec(), seed) * xi.vec());
}

}  // namespace

int normal_degree(const SphericalPolygon& w, const UnitVec& xi,
                  double gamma_longitude) {
  require(is_general(xi, w), ErrorCode::NotGeneral,
          "direction not general for the polygon");
  SphericalPolygon polar = polar_polygon(w);

  UnitVec r1 = reference_direction(xi);
  UnitVec r2(cross(xi.vec(), r1.vec()));

  double longitude = gamma_longitude;
  for (int attempt = 0; attempt < 1000; ++attempt, longitude += kGoldenAngle) {
    Vec3 m = r1.vec() * std::cos(longitude) + r2.vec() * std::sin(longitude);
    UnitVec g(cross(xi.vec(), m));  // great circle through the meridian

    // The meridian must clear every vertex of W'.
    bool clear = true;
    for (const UnitVec& v : polar.vertices) {
      if (std::abs(dot(g, v)) <= 1e-8 && dot(v.vec(), m) > 0.0) {
        clear = false;
        break;
      }
    }
    if (!clear) continue;

    int degree = 0;
    for (int i = 0; i < polar.size(); ++i) {
      const UnitVec& a = polar.vertex(i);
      const UnitVec& b = polar.vertex(i + 1);
      double sa = dot(g, a);
      double sb = dot(g, b);
      if (sa * sb >= 0.0) continue;
      // Crossing point of the edge with the meridian's great circle.
      Vec3 dir = cross(cross(a, b), g.vec());
      if (dot(dir, a.vec() + b.vec()) < 0.0) dir = -dir;
      if (dot(dir, m) <= 0.0) continue;  // crosses the opposite half-circle
      double oriented = dot(cross(a, b), xi.vec());
      require(std::abs(oriented) > kEpsGen, ErrorCode::NotGeneral,
              "xi lies on an edge great circle of the polar polygon");
      degree += oriented > 0.0 ? 1 : -1;
    }
    return degree;
  }
  fail(ErrorCode::NotGeneral, "no vertex-free meridian found");
}

bool degree_independence_check(const SphericalPolygon& w, const UnitVec& xi,
                               const std::vector<double>& longitudes) {
  if (longitudes.empty()) return true;
  int first = normal_degree(w, xi, longitudes.front());
  for (double lon : longitudes)
    if (normal_degree(w, xi, lon) != first) return false;
  return true;
}

DegreeReport degree_identities(const SphericalPolygon& w, const UnitVec& xi) {
  require(is_general(xi, w), ErrorCode::NotGeneral,
          "direction not general for the polygon");
  DegreeReport report;
  report.index = polygon_index(w, xi);
  report.degree = normal_degree(w, xi);
  report.crossings = crossing_count(w);
  report.c_parity = report.crossings % 2;

  SphericalPolygon polar = polar_polygon(w);
  Arrangement arr(polar);
  LayerProfile profile = normalize_winding(
      arr, relative_winding(arr), right_turn_count(polar), report.c_parity);
  report.w_plus = winding_at(arr, profile, xi);
  report.w_minus = winding_at(arr, profile, -xi);

  require(report.degree == report.w_plus - report.w_minus,
          ErrorCode::IdentityViolation, "d != w(xi) - w(-xi)");
  require(report.c_parity + report.index == report.w_plus + report.w_minus,
          ErrorCode::IdentityViolation, "c + i != w(xi) + w(-xi)");
  require((report.degree - report.index) % 2 == 0,
          ErrorCode::IdentityViolation, "d - i is odd");
  if (report.crossings == 0)
    require(std::abs(report.degree) <= std::abs(report.index),
            ErrorCode::IdentityViolation, "|d| > |i| for a simple polygon");
  return report;
}

}  // namespace gaussmap
