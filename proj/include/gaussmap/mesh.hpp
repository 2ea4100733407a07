#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "gaussmap/star.hpp"

namespace gaussmap {

// Closed oriented simplicial surface. Coordinates are rescaled to a unit
// bounding box at construction; every quantity computed here is
// scale-invariant.
class ClosedMesh {
 public:
  ClosedMesh(std::vector<Vec3> vertices,
             std::vector<std::array<int, 3>> triangles);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int face_count() const { return static_cast<int>(triangles_.size()); }
  int edge_count() const { return edge_count_; }
  int euler_characteristic() const {
    return vertex_count() - edge_count_ + face_count();
  }
  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const {
    return triangles_;
  }

  // Counterclockwise link cycle around a vertex.
  const std::vector<int>& ring(int v) const { return rings_[v]; }
  VertexStar star(int v) const;

  // Every adjacent vertex pair has distinct heights, with margin relative
  // to the bounding box.
  bool is_general(const UnitVec& xi, double* margin = nullptr) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<std::vector<int>> rings_;
  std::vector<std::pair<int, int>> edges_;
  int edge_count_ = 0;
};

ClosedMesh load_off(std::istream& in);
ClosedMesh load_off_file(const std::string& path);

struct CriticalPoint {
  int vertex = -1;
  int index = 0;
  int degree = 0;
  enum class Kind { Maximum, Minimum, Saddle } kind = Kind::Saddle;
};

struct ThreeCriticalVerdict {
  int v_plus = -1;
  int v_minus = -1;
  int v_middle = -1;
  int middle_index = 0;
  int middle_degree = 0;
  int chi = 0;
};

// Sum of angle deficits minus 2*pi*chi.
double gauss_bonnet_residual(const ClosedMesh& m);

// Sum over vertices of i(v, xi); equals chi for general xi.
std::pair<int, int> index_sum_check(const ClosedMesh& m, const UnitVec& xi);

// Sum over vertices of d(v, xi); equals 0 for general xi.
int degree_sum_check(const ClosedMesh& m, const UnitVec& xi);

// All vertices with nonzero index, tagged as max/min/saddle.
std::vector<CriticalPoint> critical_point_census(const ClosedMesh& m,
                                                 const UnitVec& xi);

// For a height function with exactly three critical points: the middle one
// has degree 0 and index chi - 2. Raises NotThreeCritical when the census
// does not have exactly three entries, and IdentityViolation when a sphere
// reports three critical points.
ThreeCriticalVerdict three_cp_analysis(const ClosedMesh& m, const UnitVec& xi);

// Redraws directions until one is general for the whole mesh.
UnitVec general_direction_for_mesh(const ClosedMesh& m, std::uint64_t seed,
                                   int max_retries = 64);

}  // namespace gaussmap
