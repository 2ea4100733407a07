#pragma once

#include <vector>

#include "gaussmap/spherical.hpp"
#include "gaussmap/star.hpp"

namespace gaussmap {

struct ArrangementNode {
  UnitVec point;
  bool is_crossing = false;
  int poly_vertex = -1;  // source vertex index when not a crossing
};

struct ArrangementSegment {
  int from = -1, to = -1;      // node ids, ordered by polygon traversal
  UnitVec circle_normal;       // left of the directed segment = +normal side
  int source_edge = -1;        // polygon edge the segment belongs to
  int left_face = -1, right_face = -1;
  double length = 0.0;
  UnitVec midpoint;
};

struct ArrangementFace {
  std::vector<int> boundary;  // halfedge ids (2*seg | direction bit)
  double area = 0.0;
};

// Planar graph on the sphere induced by a closed polygon in general
// position with transversal self-intersections.
class Arrangement {
 public:
  explicit Arrangement(const SphericalPolygon& wp);

  const SphericalPolygon& polygon() const { return polygon_; }
  const std::vector<ArrangementNode>& nodes() const { return nodes_; }
  const std::vector<ArrangementSegment>& segments() const { return segments_; }
  const std::vector<ArrangementFace>& faces() const { return faces_; }
  int crossing_nodes() const { return crossing_nodes_; }

  // Face containing a point that does not lie on the polygon.
  int locate(const UnitVec& p) const;

  // A point in the interior of the face.
  UnitVec face_sample(int face) const;

 private:
  void build();
  int wedge_face_at(int node, const UnitVec& toward) const;

  SphericalPolygon polygon_;
  std::vector<ArrangementNode> nodes_;
  std::vector<ArrangementSegment> segments_;
  std::vector<ArrangementFace> faces_;
  // Per node: outgoing halfedges sorted counterclockwise, with tangent
  // angles in a fixed local frame.
  std::vector<std::vector<std::pair<double, int>>> rotations_;
  int crossing_nodes_ = 0;
};

struct LayerCounts {
  std::vector<int> plus_k;   // components of {w >= k}, k = 1, 2, ...
  std::vector<int> minus_k;  // components of {w <= -k}
  int plus_total = 0;
  int minus_total = 0;
};

struct LayerProfile {
  std::vector<int> winding;  // absolute winding per face
  LayerCounts layer_counts;
  int i_turns = 0;   // weighted inflection count used for normalization
  int c_parity = 0;  // crossing parity of the source polygon
  double algebraic_area = 0.0;
};

// Winding numbers up to one global constant: anchored at 0 on the face
// containing the antipode of the polygon's length-weighted centroid, and
// decreasing by 1 across every left-to-right crossing.
std::vector<int> relative_winding(const Arrangement& arr);

// Per-vertex corner bookkeeping carried from the vertex star to its Gauss
// image; empty means every source corner is convex.
struct CornerFlags {
  std::vector<bool> reflex;
};

// Weighted right-turn count of the polygon: right turns at convex-corner
// vertices count once; at reflex-corner vertices right turns count twice and
// left turns once. Equals the weighted inflection count of the source star.
int right_turn_count(const SphericalPolygon& wp,
                     const CornerFlags& flags = {});

// Shifts the relative winding by the unique integer making
// I + 2*C+ - 2*C- = 2 + 2*c hold, and assembles the layer profile.
LayerProfile normalize_winding(const Arrangement& arr,
                               const std::vector<int>& relative, int i_turns,
                               int c_parity);

// Connected components of the super/sub level sets of the winding function;
// faces are connected only across segments of positive length, never through
// a node alone.
LayerCounts layers(const Arrangement& arr, const std::vector<int>& winding);

// Integral of the normalized winding function: sum of winding * area.
double algebraic_area(const SphericalPolygon& wp, int i_turns, int c_parity);

// Area pipelines with the bookkeeping derived from the source:
// for a vertex star, I is the weighted inflection count and c the crossing
// parity of the projected star; for a polygon W, the polar polygon is
// arranged with I = right turns of W' and c = crossing parity of W.
double algebraic_area_of_gauss_image(const VertexStar& s);
LayerProfile layer_profile_of_polar(const SphericalPolygon& w);
LayerProfile layer_profile_of_gauss_image(const VertexStar& s);

// Normalized winding number of the polygon around a query point.
int winding_at(const Arrangement& arr, const LayerProfile& profile,
               const UnitVec& p);

enum class ShapeClass {
  ConvexPolygon,
  PseudoQuadrilateral,
  PseudoTriangle,
  PseudoDigon,
};

struct ShapeClassification {
  ShapeClass shape = ShapeClass::ConvexPolygon;
  std::vector<int> corner_faces;          // faces whose normals are corners
  bool reflex_is_inflection = false;      // pseudo-triangle variant
};

// Shape of a crossing-free Gauss image of an embedded star with K != 0.
ShapeClassification classify_shape(const VertexStar& s);

}  // namespace gaussmap
