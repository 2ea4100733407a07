#pragma once

#include <cstdint>

#include "gaussmap/mesh.hpp"

namespace gaussmap {

// Canonical closed meshes used by the verification suites and tests.

ClosedMesh tetrahedron_mesh();

// Triangulated torus of revolution on an nu x nv vertex grid.
ClosedMesh grid_torus_mesh(int nu = 8, int nv = 8, double major = 2.0,
                           double minor = 0.8);

// Longitude/latitude sphere with triangle fans at the poles.
ClosedMesh sphere_mesh(int slices = 12, int stacks = 8, double radius = 1.0);

// Sphere with a seeded radial perturbation (still star-shaped, hence
// embedded).
ClosedMesh perturbed_sphere_mesh(int slices = 12, int stacks = 8,
                                 double amplitude = 0.05,
                                 std::uint64_t seed = 1);

// The 7-vertex torus (Moebius combinatorics on K7) with Csaszar's embedding:
// the only known polyhedra without interior diagonals are this torus and the
// tetrahedron. Its z-like height functions have exactly three critical
// points.
ClosedMesh csaszar_torus_mesh();

// Consistently oriented triangle list from unordered triples (the surface
// must be orientable and connected).
std::vector<std::array<int, 3>> orient_triangles(
    std::vector<std::array<int, 3>> triangles);

}  // namespace gaussmap
