#include "gaussmap/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "gaussmap/degree.hpp"
#include "gaussmap/index.hpp"
#include "gaussmap/sampling.hpp"

namespace gaussmap {

ClosedMesh::ClosedMesh(std::vector<Vec3> vertices,
                       std::vector<std::array<int, 3>> triangles)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)) {
  int nv = vertex_count();
  require(nv >= 4 && face_count() >= 4, ErrorCode::ParseError,
          "mesh too small");
  for (const auto& t : triangles_) {
    for (int k = 0; k < 3; ++k) {
      require(t[k] >= 0 && t[k] < nv, ErrorCode::ParseError,
              "triangle index out of range");
      require(t[k] != t[(k + 1) % 3], ErrorCode::ParseError,
              "degenerate triangle");
    }
  }

  // Rescale to a unit bounding box.
  Vec3 lo = vertices_[0], hi = vertices_[0];
  for (const Vec3& p : vertices_) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  double extent = std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z});
  require(extent > 0.0, ErrorCode::ParseError, "mesh has zero extent");
  for (Vec3& p : vertices_) p = (p - lo) / extent;

  // Each undirected edge must appear in exactly two triangles, once per
  // direction.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& t : triangles_) {
    for (int k = 0; k < 3; ++k) {
      int a = t[k], b = t[(k + 1) % 3];
      auto [it, inserted] = directed.insert({{a, b}, 1});
      if (!inserted)
        fail(ErrorCode::InconsistentOrientation,
             "directed edge appears twice; orientation is inconsistent");
    }
  }
  std::map<std::pair<int, int>, int> undirected;
  for (const auto& [e, cnt] : directed) {
    auto key = std::minmax(e.first, e.second);
    undirected[{key.first, key.second}] += cnt;
  }
  for (const auto& [e, cnt] : undirected) {
    if (cnt == 1) fail(ErrorCode::NotClosed, "boundary edge found");
    if (cnt > 2) fail(ErrorCode::NonManifold, "edge shared by > 2 faces");
    edges_.push_back(e);
  }
  edge_count_ = static_cast<int>(edges_.size());
  require(2 * edge_count_ == 3 * face_count(), ErrorCode::NonManifold,
          "2E = 3F violated");

  // Link cycles: triangle (v, a, b) contributes the directed link edge
  // a -> b around v; the link must close into a single cycle.
  std::vector<std::map<int, int>> link(nv);
  for (const auto& t : triangles_) {
    for (int k = 0; k < 3; ++k) {
      int v = t[k], a = t[(k + 1) % 3], b = t[(k + 2) % 3];
      auto [it, inserted] = link[v].insert({a, b});
      if (!inserted)
        fail(ErrorCode::NonManifold, "vertex link is not a simple cycle");
    }
  }
  rings_.resize(nv);
  for (int v = 0; v < nv; ++v) {
    require(!link[v].empty(), ErrorCode::NonManifold, "isolated vertex");
    int start = link[v].begin()->first;
    int at = start;
    do {
      rings_[v].push_back(at);
      auto it = link[v].find(at);
      require(it != link[v].end(), ErrorCode::NonManifold,
              "vertex link does not close");
      at = it->second;
      require(rings_[v].size() <= link[v].size(), ErrorCode::NonManifold,
              "vertex link is not a single cycle");
    } while (at != start);
    require(rings_[v].size() == link[v].size(), ErrorCode::NonManifold,
            "vertex link has several components");
  }

  // Local star validity (planarity is trivial for triangles; this checks
  // the no-coplanar-neighbors and nondegeneracy invariants).
  for (int v = 0; v < nv; ++v) star(v);
}

VertexStar ClosedMesh::star(int v) const {
  std::vector<Vec3> ring_points;
  ring_points.reserve(rings_[v].size());
  for (int u : rings_[v]) ring_points.push_back(vertices_[u]);
  return VertexStar::fan(vertices_[v], ring_points);
}

bool ClosedMesh::is_general(const UnitVec& xi, double* margin) const {
  double m = 2.0;
  for (const auto& [a, b] : edges_) {
    Vec3 e = vertices_[a] - vertices_[b];
    m = std::min(m, std::abs(dot(xi.vec(), e)) / norm(e));
  }
  if (margin) *margin = m;
  return m > kEpsGen;
}

ClosedMesh load_off(std::istream& in) {
  std::string token;
  require(static_cast<bool>(in >> token), ErrorCode::ParseError,
          "empty OFF stream");
  require(token == "OFF", ErrorCode::ParseError, "missing OFF header");
  long nv = 0, nf = 0, ne = 0;
  require(static_cast<bool>(in >> nv >> nf >> ne), ErrorCode::ParseError,
          "malformed OFF counts");
  require(nv >= 0 && nf >= 0, ErrorCode::ParseError, "negative OFF counts");
  std::vector<Vec3> vertices(nv);
  for (long i = 0; i < nv; ++i) {
    require(static_cast<bool>(in >> vertices[i].x >> vertices[i].y >>
                              vertices[i].z),
            ErrorCode::ParseError, "malformed OFF vertex line");
  }
  std::vector<std::array<int, 3>> triangles(nf);
  for (long i = 0; i < nf; ++i) {
    int arity = 0;
    require(static_cast<bool>(in >> arity), ErrorCode::ParseError,
            "malformed OFF face line");
    require(arity == 3, ErrorCode::ParseError, "only triangles supported");
    require(static_cast<bool>(in >> triangles[i][0] >> triangles[i][1] >>
                              triangles[i][2]),
            ErrorCode::ParseError, "malformed OFF face line");
  }
  return ClosedMesh(std::move(vertices), std::move(triangles));
}

ClosedMesh load_off_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open " + path);
  return load_off(in);
}

double gauss_bonnet_residual(const ClosedMesh& m) {
  double total = 0.0;
  for (int v = 0; v < m.vertex_count(); ++v)
    total += angle_deficit(m.star(v));
  return total - kTwoPi * m.euler_characteristic();
}

std::pair<int, int> index_sum_check(const ClosedMesh& m, const UnitVec& xi) {
  require(m.is_general(xi), ErrorCode::NotGeneral,
          "direction not general for the mesh");
  int sum = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    sum += above_index(m.star(v), xi);
  return {sum, m.euler_characteristic()};
}

int degree_sum_check(const ClosedMesh& m, const UnitVec& xi) {
  require(m.is_general(xi), ErrorCode::NotGeneral,
          "direction not general for the mesh");
  int sum = 0;
  for (int v = 0; v < m.vertex_count(); ++v)
    sum += normal_degree(project_to_sphere(m.star(v)), xi);
  return sum;
}

std::vector<CriticalPoint> critical_point_census(const ClosedMesh& m,
                                                 const UnitVec& xi) {
  require(m.is_general(xi), ErrorCode::NotGeneral,
          "direction not general for the mesh");
  std::vector<CriticalPoint> census;
  for (int v = 0; v < m.vertex_count(); ++v) {
    VertexStar star = m.star(v);
    int idx = above_index(star, xi);
    if (idx == 0) continue;
    CriticalPoint cp;
    cp.vertex = v;
    cp.index = idx;
    cp.degree = normal_degree(project_to_sphere(star), xi);
    if (idx == 1) {
      double h0 = dot(xi.vec(), m.vertices()[v]);
      double h1 = dot(xi.vec(), m.vertices()[m.ring(v).front()]);
      cp.kind = h1 < h0 ? CriticalPoint::Kind::Maximum
                        : CriticalPoint::Kind::Minimum;
    } else {
      cp.kind = CriticalPoint::Kind::Saddle;
    }
    census.push_back(cp);
  }
  return census;
}

ThreeCriticalVerdict three_cp_analysis(const ClosedMesh& m,
                                       const UnitVec& xi) {
  std::vector<CriticalPoint> census = critical_point_census(m, xi);
  require(census.size() == 3, ErrorCode::NotThreeCritical,
          "height function does not have exactly three critical points");
  require(m.euler_characteristic() != 2, ErrorCode::IdentityViolation,
          "a polyhedral sphere cannot have a three-critical-point height");

  ThreeCriticalVerdict verdict;
  verdict.chi = m.euler_characteristic();
  const CriticalPoint* maxi = nullptr;
  const CriticalPoint* mini = nullptr;
  for (const CriticalPoint& cp : census) {
    if (cp.kind == CriticalPoint::Kind::Maximum && !maxi) maxi = &cp;
    else if (cp.kind == CriticalPoint::Kind::Minimum && !mini) mini = &cp;
  }
  require(maxi && mini, ErrorCode::NotThreeCritical,
          "three critical points need a maximum and a minimum");
  for (const CriticalPoint& cp : census) {
    if (&cp == maxi || &cp == mini) continue;
    verdict.v_middle = cp.vertex;
    verdict.middle_index = cp.index;
    verdict.middle_degree = cp.degree;
  }
  verdict.v_plus = maxi->vertex;
  verdict.v_minus = mini->vertex;

  require(maxi->degree == 1 && mini->degree == -1,
          ErrorCode::IdentityViolation, "extrema must have degree +-1");
  require(verdict.middle_degree == 0, ErrorCode::IdentityViolation,
          "middle critical point must have degree 0");
  require(verdict.middle_index == verdict.chi - 2,
          ErrorCode::IdentityViolation,
          "middle critical point index must equal chi - 2");
  return verdict;
}

UnitVec general_direction_for_mesh(const ClosedMesh& m, std::uint64_t seed,
                                   int max_retries) {
  Rng rng(seed);
  for (int k = 0; k < max_retries; ++k) {
    UnitVec xi = rng.unit_vec();
    double margin = 0.0;
    if (m.is_general(xi, &margin) && margin > 1e-8) return xi;
  }
  fail(ErrorCode::NotGeneral, "no general direction found for the mesh");
}

}  // namespace gaussmap
