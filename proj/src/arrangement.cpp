#include "gaussmap/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace gaussmap {

namespace {

constexpr int halfedge(int segment, bool forward) {
  return 2 * segment + (forward ? 0 : 1);
}
constexpr int seg_of(int h) { return h / 2; }
constexpr bool is_forward(int h) { return (h & 1) == 0; }
constexpr int twin(int h) { return h ^ 1; }

}  // namespace

Arrangement::Arrangement(const SphericalPolygon& wp) : polygon_(wp) {
  build();
}

void Arrangement::build() {
  const int n = polygon_.size();

  // Vertices must stay clear of non-incident edges.
  for (int v = 0; v < n; ++v) {
    for (int e = 0; e < n; ++e) {
      if (e == v || (e + 1) % n == v) continue;
      Arc arc = polygon_.edge(e);
      UnitVec gc = arc.great_circle_normal();
      if (std::abs(dot(gc, polygon_.vertex(v))) <= kEpsGen &&
          arc.contains_on_circle(polygon_.vertex(v), 1e-7))
        fail(ErrorCode::DegenerateVertexOnEdge,
             "polygon vertex lies on a non-incident edge");
    }
  }

  nodes_.reserve(n);
  for (int v = 0; v < n; ++v)
    nodes_.push_back({polygon_.vertex(v), false, v});

  // Transversal crossings, recorded per edge with the angle from the edge
  // start as the ordering parameter.
  std::vector<std::vector<std::pair<double, int>>> cuts(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      std::vector<UnitVec> pts =
          arc_intersection(polygon_.edge(i), polygon_.edge(j));
      for (const UnitVec& p : pts) {
        double gi = std::min(angle_between(p, polygon_.vertex(i)),
                             angle_between(p, polygon_.vertex(i + 1)));
        double gj = std::min(angle_between(p, polygon_.vertex(j)),
                             angle_between(p, polygon_.vertex(j + 1)));
        require(std::min(gi, gj) > kEpsGen, ErrorCode::NonTransversal,
                "self-intersection at or near a vertex");
        int node = static_cast<int>(nodes_.size());
        nodes_.push_back({p, true, -1});
        ++crossing_nodes_;
        cuts[i].push_back({angle_between(p, polygon_.vertex(i)), node});
        cuts[j].push_back({angle_between(p, polygon_.vertex(j)), node});
      }
    }
  }

  // Split the polygon edges into segments.
  for (int i = 0; i < n; ++i) {
    std::sort(cuts[i].begin(), cuts[i].end());
    std::vector<int> chain;
    chain.push_back(i);
    for (auto& [param, node] : cuts[i]) chain.push_back(node);
    chain.push_back((i + 1) % n);
    UnitVec normal = polygon_.edge(i).great_circle_normal();
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      ArrangementSegment s;
      s.from = chain[k];
      s.to = chain[k + 1];
      s.circle_normal = normal;
      s.source_edge = i;
      s.length = angle_between(nodes_[s.from].point, nodes_[s.to].point);
      Vec3 mid = nodes_[s.from].point.vec() + nodes_[s.to].point.vec();
      s.midpoint = UnitVec(mid);
      segments_.push_back(s);
    }
  }

  // Rotation system: outgoing halfedges per node, sorted counterclockwise.
  rotations_.assign(nodes_.size(), {});
  std::vector<Vec3> frame_e1(nodes_.size()), frame_e2(nodes_.size());
  for (std::size_t u = 0; u < nodes_.size(); ++u)
    orthonormal_frame(nodes_[u].point, frame_e1[u], frame_e2[u]);

  auto outgoing_tangent = [&](int h) {
    const ArrangementSegment& s = segments_[seg_of(h)];
    Vec3 t = cross(s.circle_normal.vec(),
                   nodes_[is_forward(h) ? s.from : s.to].point.vec());
    return is_forward(h) ? t : -t;
  };
  auto tangent_angle = [&](int u, const Vec3& t) {
    return std::atan2(dot(t, frame_e2[u]), dot(t, frame_e1[u]));
  };

  for (int s = 0; s < static_cast<int>(segments_.size()); ++s) {
    for (bool fwd : {true, false}) {
      int h = halfedge(s, fwd);
      int u = fwd ? segments_[s].from : segments_[s].to;
      rotations_[u].push_back({tangent_angle(u, outgoing_tangent(h)), h});
    }
  }
  for (auto& rot : rotations_) std::sort(rot.begin(), rot.end());

  // Face orbits, interior on the left: the successor of a halfedge is the
  // clockwise predecessor of its twin in the rotation at its head.
  auto head = [&](int h) {
    const ArrangementSegment& s = segments_[seg_of(h)];
    return is_forward(h) ? s.to : s.from;
  };
  auto next_in_face = [&](int h) {
    int u = head(h);
    const auto& rot = rotations_[u];
    int t = twin(h);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      if (rot[k].second == t)
        return rot[(k + rot.size() - 1) % rot.size()].second;
    }
    fail(ErrorCode::InconsistentCycle, "halfedge missing from rotation");
  };

  std::vector<int> face_of_halfedge(2 * segments_.size(), -1);
  for (int h0 = 0; h0 < static_cast<int>(2 * segments_.size()); ++h0) {
    if (face_of_halfedge[h0] != -1) continue;
    int f = static_cast<int>(faces_.size());
    faces_.push_back({});
    int h = h0;
    do {
      face_of_halfedge[h] = f;
      faces_[f].boundary.push_back(h);
      h = next_in_face(h);
    } while (h != h0);
  }
  for (int s = 0; s < static_cast<int>(segments_.size()); ++s) {
    segments_[s].left_face = face_of_halfedge[halfedge(s, true)];
    segments_[s].right_face = face_of_halfedge[halfedge(s, false)];
  }

  // Angle-excess area per face; their sum must close up to 4*pi.
  auto arrival_tangent = [&](int h) {
    const ArrangementSegment& s = segments_[seg_of(h)];
    Vec3 t = cross(s.circle_normal.vec(), nodes_[head(h)].point.vec());
    return is_forward(h) ? t : -t;
  };
  for (ArrangementFace& f : faces_) {
    double sum = 0.0;
    int k = static_cast<int>(f.boundary.size());
    for (int idx = 0; idx < k; ++idx) {
      int h_in = f.boundary[idx];
      int h_out = f.boundary[(idx + 1) % k];
      int u = head(h_in);
      double a_back = tangent_angle(u, -arrival_tangent(h_in));
      double a_out = tangent_angle(u, outgoing_tangent(h_out));
      double interior = a_back - a_out;
      while (interior <= 0.0) interior += kTwoPi;
      while (interior > kTwoPi) interior -= kTwoPi;
      sum += interior;
    }
    f.area = sum - (k - 2) * kPi;
  }

  double total = 0.0;
  for (const ArrangementFace& f : faces_) total += f.area;
  require(std::abs(total - 2.0 * kTwoPi) <= 1e-8, ErrorCode::InvalidInput,
          "arrangement face areas do not close up to 4*pi");
  int euler = static_cast<int>(nodes_.size()) -
              static_cast<int>(segments_.size()) +
              static_cast<int>(faces_.size());
  require(euler == 2, ErrorCode::InvalidInput,
          "arrangement violates the Euler formula");
}

int Arrangement::wedge_face_at(int node, const UnitVec& toward) const {
  Vec3 e1, e2;
  orthonormal_frame(nodes_[node].point, e1, e2);
  double ang = std::atan2(dot(toward.vec(), e2), dot(toward.vec(), e1));
  const auto& rot = rotations_[node];
  // Wedge between rot[k] and rot[k+1] is the left face of rot[k].
  int pick = static_cast<int>(rot.size()) - 1;
  for (std::size_t k = 0; k < rot.size(); ++k) {
    if (rot[k].first <= ang)
      pick = static_cast<int>(k);
    else
      break;
  }
  int h = rot[pick].second;
  const ArrangementSegment& s = segments_[seg_of(h)];
  return is_forward(h) ? s.left_face : s.right_face;
}

int Arrangement::locate(const UnitVec& p) const {
  double best = 1e100;
  int best_seg = -1;
  bool best_interior = false;
  int best_node = -1;
  for (int si = 0; si < static_cast<int>(segments_.size()); ++si) {
    const ArrangementSegment& s = segments_[si];
    const UnitVec& a = nodes_[s.from].point;
    const UnitVec& b = nodes_[s.to].point;
    double h = dot(s.circle_normal, p);
    bool interior = false;
    double d;
    Vec3 foot_v = p.vec() - h * s.circle_normal.vec();
    if (norm(foot_v) > kEpsGen) {
      UnitVec foot(foot_v);
      if (Arc(a, b).contains_on_circle(foot, 0.0)) {
        d = std::asin(std::min(1.0, std::abs(h)));
        interior = true;
      } else {
        d = std::min(angle_between(p, a), angle_between(p, b));
      }
    } else {
      d = std::min(angle_between(p, a), angle_between(p, b));
    }
    if (d < best) {
      best = d;
      best_seg = si;
      best_interior = interior;
      if (!interior) {
        best_node = angle_between(p, a) <= angle_between(p, b) ? s.from : s.to;
      }
    }
  }
  require(best_seg >= 0, ErrorCode::InvalidInput, "empty arrangement");
  const ArrangementSegment& s = segments_[best_seg];
  if (best_interior) {
    return dot(s.circle_normal, p) > 0.0 ? s.left_face : s.right_face;
  }
  return wedge_face_at(best_node, tangent_toward(nodes_[best_node].point, p));
}

UnitVec Arrangement::face_sample(int face) const {
  // Step inward from the midpoint of the longest boundary segment.
  const ArrangementFace& f = faces_[face];
  int best_h = f.boundary.front();
  double best_len = -1.0;
  for (int h : f.boundary) {
    if (segments_[seg_of(h)].length > best_len) {
      best_len = segments_[seg_of(h)].length;
      best_h = h;
    }
  }
  const ArrangementSegment& s = segments_[seg_of(best_h)];
  Vec3 m = s.midpoint.vec();
  // The face is on the left of the halfedge: the +normal side for the
  // forward direction.
  double side = is_forward(best_h) ? 1.0 : -1.0;
  for (double delta : {1e-3, 1e-5, 1e-7, 1e-9}) {
    UnitVec cand(m + side * delta * s.circle_normal.vec());
    if (locate(cand) == face) return cand;
  }
  fail(ErrorCode::InvalidInput, "could not sample a face interior point");
}

std::vector<int> relative_winding(const Arrangement& arr) {
  // Seed: the face containing the antipode of the length-weighted centroid
  // direction (deterministic; the normalization step makes the choice
  // irrelevant).
  Vec3 centroid{0, 0, 0};
  const SphericalPolygon& wp = arr.polygon();
  for (int i = 0; i < wp.size(); ++i) {
    Arc e = wp.edge(i);
    centroid += (e.a.vec() + e.b.vec()) * (0.5 * e.length());
  }
  UnitVec seed_point = norm(centroid) > kEpsGen ? -UnitVec(centroid)
                                                : UnitVec(0.0, 0.0, 1.0);
  int seed_face = arr.locate(seed_point);

  std::vector<int> w(arr.faces().size(), 0);
  std::vector<bool> visited(arr.faces().size(), false);
  std::queue<int> queue;
  w[seed_face] = 0;
  visited[seed_face] = true;
  queue.push(seed_face);
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (const ArrangementSegment& s : arr.segments()) {
      int g = -1;
      int wg = 0;
      if (s.left_face == f) {
        g = s.right_face;
        wg = w[f] - 1;
      } else if (s.right_face == f) {
        g = s.left_face;
        wg = w[f] + 1;
      } else {
        continue;
      }
      if (!visited[g]) {
        visited[g] = true;
        w[g] = wg;
        queue.push(g);
      } else {
        require(w[g] == wg, ErrorCode::InconsistentCycle,
                "winding propagation is inconsistent");
      }
    }
  }
  for (bool v : visited)
    require(v, ErrorCode::InconsistentCycle, "arrangement is disconnected");
  return w;
}

int right_turn_count(const SphericalPolygon& wp, const CornerFlags& flags) {
  int n = wp.size();
  require(flags.reflex.empty() || static_cast<int>(flags.reflex.size()) == n,
          ErrorCode::InvalidInput, "corner flags do not match the polygon");
  int count = 0;
  for (int i = 0; i < n; ++i) {
    UnitVec n_in = wp.edge(i - 1).great_circle_normal();
    UnitVec n_out = wp.edge(i).great_circle_normal();
    Vec3 t_in = cross(n_in.vec(), wp.vertex(i).vec());
    Vec3 t_out = cross(n_out.vec(), wp.vertex(i).vec());
    double turn = std::atan2(triple(wp.vertex(i).vec(), t_in, t_out),
                             dot(t_in, t_out));
    require(std::abs(turn) > kEpsAngle, ErrorCode::StraightVertex,
            "three consecutive vertices lie on a great circle");
    bool right = turn < 0.0;
    bool reflex = !flags.reflex.empty() && flags.reflex[i];
    if (reflex)
      count += right ? 2 : 1;
    else if (right)
      count += 1;
  }
  return count;
}

LayerCounts layers(const Arrangement& arr, const std::vector<int>& winding) {
  LayerCounts out;
  int w_min = *std::min_element(winding.begin(), winding.end());
  int w_max = *std::max_element(winding.begin(), winding.end());

  // Face adjacency across segments of positive length only.
  int nf = static_cast<int>(arr.faces().size());
  std::vector<std::vector<int>> adj(nf);
  for (const ArrangementSegment& s : arr.segments()) {
    if (s.length <= kEpsGen) continue;
    adj[s.left_face].push_back(s.right_face);
    adj[s.right_face].push_back(s.left_face);
  }

  auto components = [&](auto&& in_set) {
    int comps = 0;
    std::vector<bool> seen(nf, false);
    for (int f = 0; f < nf; ++f) {
      if (seen[f] || !in_set(f)) continue;
      ++comps;
      std::queue<int> queue;
      queue.push(f);
      seen[f] = true;
      while (!queue.empty()) {
        int g = queue.front();
        queue.pop();
        for (int h : adj[g])
          if (!seen[h] && in_set(h)) {
            seen[h] = true;
            queue.push(h);
          }
      }
    }
    return comps;
  };

  for (int k = 1; k <= w_max; ++k) {
    out.plus_k.push_back(
        components([&](int f) { return winding[f] >= k; }));
    out.plus_total += out.plus_k.back();
  }
  for (int k = 1; k <= -w_min; ++k) {
    out.minus_k.push_back(
        components([&](int f) { return winding[f] <= -k; }));
    out.minus_total += out.minus_k.back();
  }
  return out;
}

LayerProfile normalize_winding(const Arrangement& arr,
                               const std::vector<int>& relative, int i_turns,
                               int c_parity) {
  int lo = *std::min_element(relative.begin(), relative.end());
  int hi = *std::max_element(relative.begin(), relative.end());
  // C+ - C- is strictly increasing in the shift, so at most one shift works.
  // Any consistent assignment has min winding <= 0 and max winding bounded
  // below by -(n-2)/4 (from the area identity), hence this window.
  int n = arr.polygon().size();
  for (int shift = -hi - n - 2; shift <= -lo + 2; ++shift) {
    std::vector<int> w(relative);
    for (int& x : w) x += shift;
    LayerCounts counts = layers(arr, w);
    if (i_turns + 2 * counts.plus_total - 2 * counts.minus_total ==
        2 + 2 * c_parity) {
      LayerProfile profile;
      profile.winding = std::move(w);
      profile.layer_counts = std::move(counts);
      profile.i_turns = i_turns;
      profile.c_parity = c_parity;
      double area = 0.0;
      for (std::size_t f = 0; f < arr.faces().size(); ++f)
        area += profile.winding[f] * arr.faces()[f].area;
      profile.algebraic_area = area;
      return profile;
    }
  }
  fail(ErrorCode::NoConsistentShift,
       "no winding normalization satisfies the shape formula");
}

double algebraic_area(const SphericalPolygon& wp, int i_turns, int c_parity) {
  Arrangement arr(wp);
  LayerProfile profile =
      normalize_winding(arr, relative_winding(arr), i_turns, c_parity);
  return profile.algebraic_area;
}

LayerProfile layer_profile_of_gauss_image(const VertexStar& s) {
  SphericalPolygon g = gauss_image(s);
  int i_turns = inflection_faces(s).weighted_count;
  int c_parity = crossing_count(project_to_sphere(s)) % 2;
  Arrangement arr(g);
  return normalize_winding(arr, relative_winding(arr), i_turns, c_parity);
}

double algebraic_area_of_gauss_image(const VertexStar& s) {
  return layer_profile_of_gauss_image(s).algebraic_area;
}

LayerProfile layer_profile_of_polar(const SphericalPolygon& w) {
  SphericalPolygon polar = polar_polygon(w);
  int i_turns = right_turn_count(polar);
  int c_parity = crossing_count(w) % 2;
  Arrangement arr(polar);
  return normalize_winding(arr, relative_winding(arr), i_turns, c_parity);
}

int winding_at(const Arrangement& arr, const LayerProfile& profile,
               const UnitVec& p) {
  return profile.winding[arr.locate(p)];
}

ShapeClassification classify_shape(const VertexStar& s) {
  SphericalPolygon g = gauss_image(s);
  require(crossing_count(g) == 0, ErrorCode::SelfIntersectingGaussImage,
          "Gauss image self-intersects");
  require(crossing_count(project_to_sphere(s)) == 0, ErrorCode::NotSimple,
          "star is not embedded");
  double k = angle_deficit(s);
  require(std::abs(k) > kEpsAngle, ErrorCode::ZeroCurvature,
          "star is flat within tolerance");

  ShapeClassification result;
  if (k > 0.0) {
    result.shape = ShapeClass::ConvexPolygon;
    return result;
  }

  InflectionReport inf = inflection_faces(s);
  std::vector<int> reflex_faces;
  for (int i = 0; i < s.valence(); ++i)
    if (s.face(i).reflex) reflex_faces.push_back(i);
  auto is_reflex = [&](int f) {
    return std::find(reflex_faces.begin(), reflex_faces.end(), f) !=
           reflex_faces.end();
  };

  switch (reflex_faces.size()) {
    case 0: {
      result.shape = ShapeClass::PseudoQuadrilateral;
      result.corner_faces = inf.inflection_faces;
      require(result.corner_faces.size() == 4, ErrorCode::IdentityViolation,
              "negative curvature with simple Gauss image must have 4 "
              "inflection faces");
      return result;
    }
    case 1: {
      result.shape = ShapeClass::PseudoTriangle;
      int rf = reflex_faces[0];
      bool rf_inflection =
          std::find(inf.inflection_faces.begin(), inf.inflection_faces.end(),
                    rf) != inf.inflection_faces.end();
      result.reflex_is_inflection = rf_inflection;
      if (rf_inflection) {
        for (int f : inf.inflection_faces)
          if (f != rf) result.corner_faces.push_back(f);
      } else {
        result.corner_faces.push_back(rf);
        for (int f : inf.inflection_faces) result.corner_faces.push_back(f);
        std::sort(result.corner_faces.begin(), result.corner_faces.end());
      }
      require(result.corner_faces.size() == 3, ErrorCode::IdentityViolation,
              "pseudo-triangle corner bookkeeping failed");
      return result;
    }
    case 2: {
      result.shape = ShapeClass::PseudoDigon;
      for (int rf : reflex_faces)
        require(std::find(inf.inflection_faces.begin(),
                          inf.inflection_faces.end(),
                          rf) != inf.inflection_faces.end(),
                ErrorCode::IdentityViolation,
                "reflex faces of a pseudo-digon must be inflection faces");
      for (int f : inf.inflection_faces)
        if (!is_reflex(f)) result.corner_faces.push_back(f);
      require(result.corner_faces.size() == 2, ErrorCode::IdentityViolation,
              "pseudo-digon corner bookkeeping failed");
      return result;
    }
    default:
      fail(ErrorCode::IdentityViolation,
           "more than two reflex faces with a simple Gauss image");
  }
}

}  // namespace gaussmap
