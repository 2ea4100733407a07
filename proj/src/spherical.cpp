#include "gaussmap/spherical.hpp"

#include <algorithm>
#include <cmath>

namespace gaussmap {

UnitVec tangent_toward(const UnitVec& p, const UnitVec& q) {
  Vec3 t = q.vec() - dot(q, p) * p.vec();
  require(norm(t) > kEpsGen, ErrorCode::DegenerateWedge,
          "tangent direction undefined: points coincide or are antipodal");
  return UnitVec(t);
}

void orthonormal_frame(const UnitVec& p, Vec3& e1, Vec3& e2) {
  // Pick the global axis least aligned with p.
  Vec3 seed = std::abs(p.x()) <= std::abs(p.y())
                  ? (std::abs(p.x()) <= std::abs(p.z()) ? Vec3{1, 0, 0}
                                                        : Vec3{0, 0, 1})
                  : (std::abs(p.y()) <= std::abs(p.z()) ? Vec3{0, 1, 0}
                                                        : Vec3{0, 0, 1});
  Vec3 u = cross(p.vec(), seed);
  e1 = u / norm(u);
  e2 = cross(p.vec(), e1);
}

Vec3 rotate_about(const Vec3& v, const UnitVec& axis, double angle) {
  const Vec3& k = axis.vec();
  double c = std::cos(angle), s = std::sin(angle);
  return v * c + cross(k, v) * s + k * (dot(k, v) * (1.0 - c));
}

Arc::Arc(const UnitVec& a_, const UnitVec& b_) : a(a_), b(b_) {
  require(norm(cross(a, b)) > kEpsGen, ErrorCode::DegenerateEdge,
          "arc endpoints equal or antipodal");
}

UnitVec Arc::great_circle_normal() const { return UnitVec(cross(a, b)); }

bool Arc::contains_on_circle(const UnitVec& p, double tol) const {
  UnitVec n = great_circle_normal();
  // p is between a and b along the minor arc iff it is on the positive side
  // of both half-plane boundaries through a and b.
  return triple(n.vec(), a.vec(), p.vec()) >= -tol &&
         triple(n.vec(), p.vec(), b.vec()) >= -tol;
}

SphericalPolygon::SphericalPolygon(std::vector<UnitVec> verts)
    : vertices(std::move(verts)) {
  require(vertices.size() >= 3, ErrorCode::InvalidInput,
          "spherical polygon needs at least 3 vertices");
  for (int i = 0; i < size(); ++i) {
    require(norm(cross(vertex(i), vertex(i + 1))) > kEpsGen,
            ErrorCode::DegenerateEdge,
            "consecutive polygon vertices equal or antipodal");
  }
}

double SphericalPolygon::length() const {
  double total = 0.0;
  for (int i = 0; i < size(); ++i) total += edge(i).length();
  return total;
}

SphericalPolygon SphericalPolygon::reversed() const {
  std::vector<UnitVec> v(vertices.rbegin(), vertices.rend());
  return SphericalPolygon(std::move(v));
}

SphericalPolygon SphericalPolygon::antipodal() const {
  std::vector<UnitVec> v;
  v.reserve(vertices.size());
  for (const auto& w : vertices) v.push_back(-w);
  return SphericalPolygon(std::move(v));
}

bool SphericalPolygon::is_general_position() const {
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec3 c = cross(vertex(i), vertex(j));
      if (norm(c) <= kEpsGen) return false;  // equal or antipodal pair
      UnitVec gc(c);
      for (int k = j + 1; k < n; ++k)
        if (std::abs(dot(gc, vertex(k))) <= kEpsGen) return false;
    }
  return true;
}

double spherical_angle(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
  require(norm(cross(a, b)) > kEpsGen && norm(cross(c, b)) > kEpsGen,
          ErrorCode::DegenerateWedge, "wedge arm coincides with +-b");
  UnitVec ta = tangent_toward(b, a);
  UnitVec tc = tangent_toward(b, c);
  double ang = std::atan2(triple(b.vec(), ta.vec(), tc.vec()), dot(ta, tc));
  if (ang <= 0.0) ang += kTwoPi;
  return ang;
}

double interior_angle(const SphericalPolygon& p, int i) {
  return spherical_angle(p.vertex(i + 1), p.vertex(i), p.vertex(i - 1));
}

double polygon_area_excess(const SphericalPolygon& p) {
  require(crossing_count(p) == 0, ErrorCode::NotSimple,
          "polygon self-intersects");
  double sum = 0.0;
  for (int i = 0; i < p.size(); ++i) sum += interior_angle(p, i);
  return sum - (p.size() - 2) * kPi;
}

SphericalPolygon polar_polygon(const SphericalPolygon& w) {
  std::vector<UnitVec> polar;
  polar.reserve(w.vertices.size());
  for (int i = 0; i < w.size(); ++i) {
    Vec3 c = cross(w.vertex(i), w.vertex(i + 1));
    require(norm(c) > kEpsGen, ErrorCode::DegenerateEdge,
            "polar vertex undefined: consecutive vertices parallel");
    polar.push_back(UnitVec(c));
  }
  return SphericalPolygon(std::move(polar));
}

std::vector<UnitVec> arc_intersection(const Arc& a1, const Arc& a2) {
  Vec3 n1 = cross(a1.a, a1.b);
  Vec3 n2 = cross(a2.a, a2.b);
  Vec3 line = cross(n1, n2);
  require(norm(line) > kEpsGen * norm(n1) * norm(n2),
          ErrorCode::SharedGreatCircle,
          "arcs lie on a common great circle");
  UnitVec p(line);
  std::vector<UnitVec> out;
  for (const UnitVec& cand : {p, -p}) {
    if (a1.contains_on_circle(cand) && a2.contains_on_circle(cand))
      out.push_back(cand);
  }
  return out;
}

namespace {

// Strictly interior point of an arc, for coaxial overlap tests.
bool strictly_inside(const Arc& arc, const UnitVec& p) {
  return arc.contains_on_circle(p) && dist(p.vec(), arc.a.vec()) > kEpsGen &&
         dist(p.vec(), arc.b.vec()) > kEpsGen;
}

// Strictly interior transversal crossing of two arcs; crossings within
// kEpsGen of an endpoint raise NonTransversal. Arcs on a common great
// circle do not cross transversally: disjoint ones count zero, overlapping
// ones are rejected.
std::optional<UnitVec> transversal_crossing(const Arc& e1, const Arc& e2) {
  std::vector<UnitVec> pts;
  try {
    pts = arc_intersection(e1, e2);
  } catch (const GeometryError& err) {
    if (err.code() != ErrorCode::SharedGreatCircle) throw;
    bool overlap = strictly_inside(e1, e2.a) || strictly_inside(e1, e2.b) ||
                   strictly_inside(e2, e1.a) || strictly_inside(e2, e1.b);
    require(!overlap, ErrorCode::NonTransversal,
            "arcs overlap along a common great circle");
    return std::nullopt;
  }
  for (const UnitVec& p : pts) {
    double end_gap = std::min(
        std::min(dist(p.vec(), e1.a.vec()), dist(p.vec(), e1.b.vec())),
        std::min(dist(p.vec(), e2.a.vec()), dist(p.vec(), e2.b.vec())));
    require(end_gap > kEpsGen, ErrorCode::NonTransversal,
            "arc intersection at or near an endpoint");
  }
  if (pts.empty()) return std::nullopt;
  return pts.front();
}

}  // namespace

int crossing_count(const SphericalPolygon& w) {
  int n = w.size();
  int count = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (transversal_crossing(w.edge(i), w.edge(j))) ++count;
    }
  }
  return count;
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateWedge: return "DegenerateWedge";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::NonTransversal: return "NonTransversal";
    case ErrorCode::SharedGreatCircle: return "SharedGreatCircle";
    case ErrorCode::AntipodalNormals: return "AntipodalNormals";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::NeighborOnPlane: return "NeighborOnPlane";
    case ErrorCode::NotGeneral: return "NotGeneral";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::InconsistentCycle: return "InconsistentCycle";
    case ErrorCode::NoConsistentShift: return "NoConsistentShift";
    case ErrorCode::StraightVertex: return "StraightVertex";
    case ErrorCode::SelfIntersectingGaussImage:
      return "SelfIntersectingGaussImage";
    case ErrorCode::ZeroCurvature: return "ZeroCurvature";
    case ErrorCode::AnchorNotFree: return "AnchorNotFree";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::InadmissiblePair: return "InadmissiblePair";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::DegenerateVertexOnEdge: return "DegenerateVertexOnEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::NotThreeCritical: return "NotThreeCritical";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace gaussmap
