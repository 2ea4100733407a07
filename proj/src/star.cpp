#include "gaussmap/star.hpp"

#include <algorithm>
#include <cmath>

#include "gaussmap/hemisphere.hpp"

namespace gaussmap {

namespace {

// Newell's method; robust orientation-consistent normal for planar chains.
Vec3 newell_normal(const std::vector<Vec3>& corners) {
  Vec3 n{0, 0, 0};
  int k = static_cast<int>(corners.size());
  for (int i = 0; i < k; ++i) {
    const Vec3& p = corners[i];
    const Vec3& q = corners[(i + 1) % k];
    n.x += (p.y - q.y) * (p.z + q.z);
    n.y += (p.z - q.z) * (p.x + q.x);
    n.z += (p.x - q.x) * (p.y + q.y);
  }
  return n;
}

double chain_scale(const Vec3& center, const std::vector<Vec3>& corners) {
  double s = 0.0;
  for (const Vec3& p : corners) s = std::max(s, dist(p, center));
  return s;
}

}  // namespace

VertexStar::VertexStar(const Vec3& center,
                       std::vector<std::vector<Vec3>> face_chains) {
  center_ = center;
  require(face_chains.size() >= 3, ErrorCode::InvalidInput,
          "vertex star needs at least 3 faces");
  for (auto& chain : face_chains) {
    require(chain.size() >= 3, ErrorCode::InvalidInput,
            "face needs at least 3 corners");
    require(dist(chain.front(), center) <= kEpsGen, ErrorCode::InvalidInput,
            "face chain must start at the star center");
    Face f;
    f.corners = std::move(chain);
    faces_.push_back(std::move(f));
  }
  finalize();
}

VertexStar VertexStar::fan(const Vec3& center, const std::vector<Vec3>& ring) {
  std::vector<std::vector<Vec3>> chains;
  int n = static_cast<int>(ring.size());
  require(n >= 3, ErrorCode::InvalidInput, "fan needs at least 3 ring points");
  for (int i = 0; i < n; ++i)
    chains.push_back({center, ring[i], ring[(i + 1) % n]});
  return VertexStar(center, std::move(chains));
}

void VertexStar::finalize() {
  scale_ = 0.0;
  for (const Face& f : faces_) scale_ = std::max(scale_, chain_scale(center_, f.corners));
  require(scale_ > 0.0, ErrorCode::ZeroLengthEdge, "star has zero extent");

  for (Face& f : faces_) {
    Vec3 n = newell_normal(f.corners);
    require(norm(n) > kEpsGen * scale_ * scale_, ErrorCode::InvalidInput,
            "face is degenerate");
    f.normal = UnitVec(n);

    // Planarity within 1e-9 of the local scale.
    double span = chain_scale(center_, f.corners);
    for (const Vec3& p : f.corners) {
      require(std::abs(dot(f.normal, p - center_)) <= 1e-9 * span,
              ErrorCode::InvalidInput, "face corners are not coplanar");
    }

    Vec3 u = f.corners[1] - center_;
    Vec3 v = f.corners.back() - center_;
    require(norm(u) > kEpsGen * scale_ && norm(v) > kEpsGen * scale_,
            ErrorCode::ZeroLengthEdge, "face edge at center has zero length");
    double ang = std::atan2(triple(f.normal.vec(), u, v), dot(u, v));
    if (ang <= 0.0) ang += kTwoPi;
    require(std::abs(ang - kPi) > kEpsAngle, ErrorCode::InvalidInput,
            "face corner angle equals pi");
    f.corner_angle = ang;
    f.reflex = ang > kPi;
  }

  int m = valence();
  for (int i = 0; i < m; ++i) {
    const Face& f = faces_[i];
    const Face& g = faces_[(i + 1) % m];
    require(dist(f.corners.back(), g.corners[1]) <= kEpsGen * scale_,
            ErrorCode::InvalidInput,
            "adjacent faces do not share an edge through the center");
    require(norm(cross(f.normal, g.normal)) > kEpsGen,
            ErrorCode::InvalidInput, "adjacent faces are coplanar");
  }

  // Fan directions: one per center-incident edge, and two interior
  // subdivision directions per reflex face so every gap stays below pi.
  for (int i = 0; i < m; ++i) {
    const Face& f = faces_[i];
    fan_dirs_.push_back(UnitVec(f.corners[1] - center_));
    fan_face_of_.push_back(i);
    if (f.reflex) {
      UnitVec in_dir(f.corners[1] - center_);
      UnitVec axis = f.normal;
      for (int k = 1; k <= 2; ++k) {
        fan_dirs_.push_back(
            rotate_about(in_dir, axis, f.corner_angle * k / 3.0));
        fan_face_of_.push_back(i);
      }
    }
  }
}

bool VertexStar::has_reflex_face() const {
  return std::any_of(faces_.begin(), faces_.end(),
                     [](const Face& f) { return f.reflex; });
}

double angle_deficit(const VertexStar& s) {
  double sum = 0.0;
  for (const Face& f : s.faces()) sum += f.corner_angle;
  return kTwoPi - sum;
}

SphericalPolygon gauss_image(const VertexStar& s) {
  std::vector<UnitVec> normals;
  normals.reserve(s.faces().size());
  for (const Face& f : s.faces()) normals.push_back(f.normal);
  int m = static_cast<int>(normals.size());
  for (int i = 0; i < m; ++i) {
    require(norm(cross(normals[i], normals[(i + 1) % m])) > kEpsGen,
            ErrorCode::AntipodalNormals,
            "consecutive face normals equal or antipodal");
  }
  return SphericalPolygon(std::move(normals));
}

SphericalPolygon project_to_sphere(const VertexStar& s) {
  return SphericalPolygon(s.fan_directions());
}

InflectionReport inflection_faces(const VertexStar& s) {
  InflectionReport report;
  int m = s.valence();
  // Side of a neighbor taken next to the shared edge (a reflex neighbor can
  // straddle the face plane, so a farthest-corner test would be ambiguous).
  // Both planes contain the shared edge line, so n_f x n_g is parallel to
  // it and <r, n_f x n_g> = +-|n_f x n_g| is bounded away from zero for
  // non-coplanar faces.
  auto side_of = [&](const Face& f, const Face& g, const Vec3& shared_corner,
                     double wedge_sign) {
    UnitVec r(shared_corner - s.center());
    double h = wedge_sign * triple(r.vec(), f.normal.vec(), g.normal.vec());
    require(std::abs(h) > kEpsGen, ErrorCode::NeighborOnPlane,
            "neighbor face lies on the face plane");
    return h > 0.0 ? 1 : -1;
  };
  for (int i = 0; i < m; ++i) {
    const Face& f = s.face(i);
    // The next face's wedge opens from the shared edge; the previous one
    // closes onto it.
    int next_side = side_of(f, s.face(i + 1), f.corners.back(), +1.0);
    int prev_side = side_of(f, s.face(i - 1), f.corners[1], -1.0);
    bool inflection = prev_side != next_side;
    if (inflection) report.inflection_faces.push_back(i);
    if (f.reflex)
      report.weighted_count += inflection ? 1 : 2;
    else if (inflection)
      report.weighted_count += 1;
  }
  return report;
}

std::optional<VertexStar> convex_hull_cone(const VertexStar& s) {
  const std::vector<UnitVec>& dirs = s.fan_directions();
  auto hemi = open_hemisphere(dirs);
  if (!hemi) return std::nullopt;
  const UnitVec& axis = hemi->pole;

  // Gnomonic projection onto the plane <x, axis> = 1; the extreme rays of
  // the cone are the 2D hull vertices there.
  Vec3 e1, e2;
  orthonormal_frame(axis, e1, e2);
  struct Planar {
    double u, v;
    int idx;
  };
  std::vector<Planar> pts;
  for (int i = 0; i < static_cast<int>(dirs.size()); ++i) {
    Vec3 q = dirs[i].vec() / dot(dirs[i], axis);
    pts.push_back({dot(q, e1), dot(q, e2), i});
  }
  std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto cross2 = [](const Planar& o, const Planar& a, const Planar& b) {
    return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
  };
  // Andrew monotone chain, counterclockwise.
  std::vector<Planar> hull;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = hull.size();
    for (const Planar& p : pts) {
      while (hull.size() >= base + 2 &&
             cross2(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0.0)
        hull.pop_back();
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  if (hull.size() < 3) return std::nullopt;

  std::vector<Vec3> ring;
  for (const Planar& p : hull)
    ring.push_back(s.center() + dirs[p.idx].vec() * s.scale());
  return VertexStar::fan(s.center(), ring);
}

CurvatureParts curvature_parts(const VertexStar& s) {
  CurvatureParts parts;
  parts.k_total = angle_deficit(s);
  auto cone = convex_hull_cone(s);
  parts.k_plus = cone ? angle_deficit(*cone) : 0.0;
  parts.k_minus = parts.k_total - parts.k_plus;
  return parts;
}

std::optional<UnitVec> transverse_plane(const VertexStar& s) {
  std::vector<UnitVec> normals;
  for (const Face& f : s.faces()) normals.push_back(f.normal);
  auto hemi = open_hemisphere(normals);
  if (!hemi) return std::nullopt;
  return hemi->pole;
}

}  // namespace gaussmap
