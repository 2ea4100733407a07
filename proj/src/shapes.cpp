#include "gaussmap/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "gaussmap/sampling.hpp"

namespace gaussmap {

std::vector<std::array<int, 3>> orient_triangles(
    std::vector<std::array<int, 3>> triangles) {
  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (int f = 0; f < static_cast<int>(triangles.size()); ++f) {
    for (int k = 0; k < 3; ++k) {
      int a = triangles[f][k], b = triangles[f][(k + 1) % 3];
      edge_faces[std::minmax(a, b)].push_back(f);
    }
  }
  std::vector<bool> placed(triangles.size(), false);
  std::queue<int> queue;
  placed[0] = true;
  queue.push(0);
  auto has_directed = [&](int f, int a, int b) {
    for (int k = 0; k < 3; ++k)
      if (triangles[f][k] == a && triangles[f][(k + 1) % 3] == b) return true;
    return false;
  };
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop();
    for (int k = 0; k < 3; ++k) {
      int a = triangles[f][k], b = triangles[f][(k + 1) % 3];
      for (int g : edge_faces[std::minmax(a, b)]) {
        if (g == f || placed[g]) continue;
        // The neighbor must traverse the shared edge in reverse.
        if (has_directed(g, a, b)) std::swap(triangles[g][1], triangles[g][2]);
        placed[g] = true;
        queue.push(g);
      }
    }
  }
  require(std::all_of(placed.begin(), placed.end(), [](bool p) { return p; }),
          ErrorCode::NonManifold, "triangle set is not edge-connected");
  return triangles;
}

ClosedMesh tetrahedron_mesh() {
  std::vector<Vec3> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::array<int, 3>> t = {
      {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return ClosedMesh(std::move(v), std::move(t));
}

ClosedMesh grid_torus_mesh(int nu, int nv, double major, double minor) {
  std::vector<Vec3> verts;
  for (int i = 0; i < nu; ++i) {
    double u = kTwoPi * i / nu;
    for (int j = 0; j < nv; ++j) {
      double v = kTwoPi * j / nv;
      double w = major + minor * std::cos(v);
      verts.push_back(
          {w * std::cos(u), w * std::sin(u), minor * std::sin(v)});
    }
  }
  auto id = [&](int i, int j) {
    return ((i % nu + nu) % nu) * nv + ((j % nv + nv) % nv);
  };
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return ClosedMesh(std::move(verts), std::move(tris));
}

namespace {

ClosedMesh sphere_like(int slices, int stacks, double radius,
                       double amplitude, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec3> verts;
  verts.push_back({0, 0, radius});  // north pole
  for (int s = 1; s < stacks; ++s) {
    double colat = kPi * s / stacks;
    for (int k = 0; k < slices; ++k) {
      // Stagger the slices so neighboring rings are not aligned.
      double az = kTwoPi * (k + 0.5 * (s % 2)) / slices;
      double r = radius;
      if (amplitude > 0.0) r += amplitude * (2.0 * rng.uniform01() - 1.0);
      verts.push_back({r * std::sin(colat) * std::cos(az),
                       r * std::sin(colat) * std::sin(az),
                       r * std::cos(colat)});
    }
  }
  verts.push_back({0, 0, -radius});  // south pole
  int south = static_cast<int>(verts.size()) - 1;
  auto ring_id = [&](int s, int k) {
    return 1 + (s - 1) * slices + ((k % slices + slices) % slices);
  };
  std::vector<std::array<int, 3>> tris;
  for (int k = 0; k < slices; ++k)
    tris.push_back({0, ring_id(1, k), ring_id(1, k + 1)});
  for (int s = 1; s + 1 < stacks; ++s)
    for (int k = 0; k < slices; ++k) {
      tris.push_back({ring_id(s, k), ring_id(s + 1, k), ring_id(s + 1, k + 1)});
      tris.push_back({ring_id(s, k), ring_id(s + 1, k + 1), ring_id(s, k + 1)});
    }
  for (int k = 0; k < slices; ++k)
    tris.push_back({south, ring_id(stacks - 1, k + 1), ring_id(stacks - 1, k)});
  return ClosedMesh(std::move(verts), std::move(tris));
}

}  // namespace

ClosedMesh sphere_mesh(int slices, int stacks, double radius) {
  return sphere_like(slices, stacks, radius, 0.0, 0);
}

ClosedMesh perturbed_sphere_mesh(int slices, int stacks, double amplitude,
                                 std::uint64_t seed) {
  return sphere_like(slices, stacks, 1.0, amplitude, seed);
}

ClosedMesh csaszar_torus_mesh() {
  // Classical coordinates with the Moebius-torus combinatorics on K7; this
  // labeling gives a self-intersection-free surface (checked pairwise on
  // non-adjacent faces).
  std::vector<Vec3> v = {{3, -3, 0}, {-3, 3, 0},  {-3, -3, 1}, {3, 3, 1},
                         {-1, -2, 3}, {1, 2, 3},  {0, 0, 15}};
  std::vector<std::array<int, 3>> tris = {
      {0, 1, 3}, {1, 4, 6}, {4, 3, 2}, {3, 6, 5}, {6, 2, 0}, {2, 5, 1},
      {5, 0, 4}, {0, 4, 3}, {1, 3, 6}, {4, 6, 2}, {3, 2, 5}, {6, 5, 0},
      {2, 0, 1}, {5, 1, 4}};
  return ClosedMesh(std::move(v), orient_triangles(std::move(tris)));
}

}  // namespace gaussmap
