#pragma once

#include <optional>
#include <vector>

#include "gaussmap/spherical.hpp"
#include "gaussmap/vec3.hpp"

namespace gaussmap {

// Planar face of a vertex star. corners[0] is the star's central vertex;
// the chain is ordered counterclockwise with respect to the face normal.
struct Face {
  std::vector<Vec3> corners;

  // Derived at star construction:
  UnitVec normal;
  double corner_angle = 0.0;  // interior angle at corners[0], in (0, 2*pi)
  bool reflex = false;        // corner_angle > pi
};

// Polyhedral vertex star: central vertex plus a cyclic counterclockwise fan
// of planar faces. Adjacent faces share exactly one edge through the center
// and are not coplanar.
class VertexStar {
 public:
  // General constructor from corner chains (each beginning at the center).
  VertexStar(const Vec3& center, std::vector<std::vector<Vec3>> face_chains);

  // Triangular fan: face i = (center, ring[i], ring[i+1]).
  static VertexStar fan(const Vec3& center, const std::vector<Vec3>& ring);

  const Vec3& center() const { return center_; }
  const std::vector<Face>& faces() const { return faces_; }
  int valence() const { return static_cast<int>(faces_.size()); }
  const Face& face(int i) const {
    int m = valence();
    return faces_[((i % m) + m) % m];
  }
  double scale() const { return scale_; }

  // Unit directions from the center along the fan, one per center-incident
  // edge plus two inserted interior directions for each reflex face (so all
  // consecutive gaps stay below pi). fan_face_of()[k] is the face spanned by
  // directions k and k+1 (cyclically).
  const std::vector<UnitVec>& fan_directions() const { return fan_dirs_; }
  const std::vector<int>& fan_face_of() const { return fan_face_of_; }

  bool has_reflex_face() const;

 private:
  VertexStar() = default;
  void finalize();

  Vec3 center_;
  std::vector<Face> faces_;
  std::vector<UnitVec> fan_dirs_;
  std::vector<int> fan_face_of_;
  double scale_ = 1.0;
};

struct CurvatureParts {
  double k_total = 0.0;
  double k_plus = 0.0;   // >= 0
  double k_minus = 0.0;  // <= 0
};

struct InflectionReport {
  std::vector<int> inflection_faces;  // face indices
  int weighted_count = 0;  // I: reflex non-inflection faces count twice
};

// Discrete Gaussian curvature: 2*pi minus the sum of face angles at the
// center.
double angle_deficit(const VertexStar& s);

// Spherical polygon of face normals, in face order.
SphericalPolygon gauss_image(const VertexStar& s);

// Central projection of the star boundary to the unit sphere around the
// center. Edges of reflex faces project to major arcs and are subdivided by
// the two inserted fan directions, so every edge of the result is a minor
// arc.
SphericalPolygon project_to_sphere(const VertexStar& s);

// A face is an inflection face iff its two neighbor faces lie strictly on
// opposite sides of its plane.
InflectionReport inflection_faces(const VertexStar& s);

// Boundary fan of the convex hull of the star's rays, or nullopt when that
// hull is all of space (no pointed cone). The returned star's ring is a
// subset of the fan directions in convex position, ordered counterclockwise
// around the cone axis.
std::optional<VertexStar> convex_hull_cone(const VertexStar& s);

// K+ = angle deficit of the convex hull cone (0 if none), K- = K - K+.
CurvatureParts curvature_parts(const VertexStar& s);

// Unit normal of a plane through the center onto which the star projects
// injectively; exists iff the Gauss image lies in an open hemisphere.
std::optional<UnitVec> transverse_plane(const VertexStar& s);

}  // namespace gaussmap
