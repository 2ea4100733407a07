#pragma once

#include <cstdint>
#include <vector>

#include "gaussmap/spherical.hpp"
#include "gaussmap/star.hpp"

namespace gaussmap {

// Deterministic PRNG (splitmix64 core) with the sampling helpers used across
// the library. Self-contained so that seeded runs are reproducible across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform01();  // [0, 1)
  double uniform(double lo, double hi);
  int uniform_int(int lo, int hi);  // inclusive bounds
  double normal();                  // standard normal, Box-Muller

  // Uniform on S^2 (normal deviates, normalized).
  UnitVec unit_vec();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives a stream seed; used to give parallel blocks independent,
// reproducible streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

SphericalPolygon rotate(const SphericalPolygon& p, const UnitVec& axis,
                        double angle);

// Random embedded vertex star (triangular fan, valence in [min_valence,
// max_valence], mixed convex and saddle shapes). The projected polygon is
// simple and in general position, and so is the Gauss image.
VertexStar random_embedded_star(Rng& rng, int min_valence = 4,
                                int max_valence = 12);

// Random embedded star where one face is planar with a reflex corner angle.
VertexStar random_reflex_star(Rng& rng);

// Random, possibly self-intersecting spherical polygon in general position
// with transversal crossings; its polar polygon is in general position too.
SphericalPolygon random_immersed_polygon(Rng& rng, int min_n = 4,
                                         int max_n = 8);

// Random simple spherical polygon in general position.
SphericalPolygon random_simple_polygon(Rng& rng, int min_n = 4,
                                       int max_n = 12);

// Direction that is general for the star/polygon (margin above kEpsGen),
// redrawn until found.
UnitVec random_general_direction(Rng& rng, const VertexStar& s);
UnitVec random_general_direction(Rng& rng, const SphericalPolygon& w);

// General and admissible direction whose equator the polygon crosses at
// least twice.
UnitVec random_admissible_direction(Rng& rng, const SphericalPolygon& w);

}  // namespace gaussmap
