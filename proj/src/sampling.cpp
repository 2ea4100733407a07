#include "gaussmap/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "gaussmap/index.hpp"

namespace gaussmap {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

int Rng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(
                                                 hi - lo + 1));
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

UnitVec Rng::unit_vec() {
  while (true) {
    Vec3 v{normal(), normal(), normal()};
    if (norm(v) > 1e-6) return UnitVec(v);
  }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  Rng mix(master ^ (0x517cc1b727220a95ULL * (stream + 1)));
  return mix.next_u64();
}

SphericalPolygon rotate(const SphericalPolygon& p, const UnitVec& axis,
                        double angle) {
  std::vector<UnitVec> out;
  out.reserve(p.vertices.size());
  for (const UnitVec& v : p.vertices)
    out.push_back(rotate_about(v, axis, angle));
  return SphericalPolygon(std::move(out));
}

namespace {

// Direction at the given azimuth/colatitude in the frame with pole `axis`.
UnitVec frame_dir(const UnitVec& axis, const Vec3& e1, const Vec3& e2,
                  double azimuth, double colatitude) {
  double s = std::sin(colatitude), c = std::cos(colatitude);
  Vec3 v = axis.vec() * c +
           (e1 * std::cos(azimuth) + e2 * std::sin(azimuth)) * s;
  return UnitVec(v);
}

std::vector<double> jittered_azimuths(Rng& rng, int n) {
  std::vector<double> az(n);
  for (int i = 0; i < n; ++i)
    az[i] = kTwoPi * (i + 0.15 + 0.7 * rng.uniform01()) / n;
  return az;
}

// Well-conditioned general position: keeps downstream arrangement
// predicates comfortably away from their kEpsGen thresholds.
bool comfortably_general(const SphericalPolygon& p, double margin) {
  int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec3 c = cross(p.vertex(i), p.vertex(j));
      if (norm(c) <= margin) return false;
      UnitVec gc(c);
      for (int k = j + 1; k < n; ++k)
        if (std::abs(dot(gc, p.vertex(k))) <= margin) return false;
    }
  return true;
}

bool crossings_transversal(const SphericalPolygon& p) {
  try {
    crossing_count(p);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

}  // namespace

VertexStar random_embedded_star(Rng& rng, int min_valence, int max_valence) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = rng.uniform_int(min_valence, max_valence);
    UnitVec axis = rng.unit_vec();
    Vec3 e1, e2;
    orthonormal_frame(axis, e1, e2);
    std::vector<double> az = jittered_azimuths(rng, n);

    bool convexish = rng.uniform01() < 0.4;
    std::vector<Vec3> ring;
    Vec3 center{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (int i = 0; i < n; ++i) {
      double colat = convexish ? rng.uniform(0.35, 1.25)
                               : rng.uniform(0.5, kPi - 0.5);
      UnitVec d = frame_dir(axis, e1, e2, az[i], colat);
      ring.push_back(center + d.vec() * rng.uniform(0.5, 1.5));
    }
    try {
      VertexStar s = VertexStar::fan(center, ring);
      SphericalPolygon w = project_to_sphere(s);
      if (!comfortably_general(w, 1e-7)) continue;
      if (crossing_count(w) != 0) continue;
      SphericalPolygon g = gauss_image(s);
      if (!comfortably_general(g, 1e-7)) continue;
      if (!crossings_transversal(g)) continue;
      return s;
    } catch (const GeometryError&) {
      continue;
    }
  }
  fail(ErrorCode::InvalidInput, "random star generation did not converge");
}

VertexStar random_reflex_star(Rng& rng) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    int n = rng.uniform_int(4, 8);  // center-incident edges
    UnitVec axis = rng.unit_vec();
    Vec3 e1, e2;
    orthonormal_frame(axis, e1, e2);
    std::vector<double> az = jittered_azimuths(rng, n);
    std::vector<UnitVec> dirs;
    for (int i = 0; i < n; ++i)
      dirs.push_back(
          frame_dir(axis, e1, e2, az[i], rng.uniform(0.6, kPi - 0.6)));

    Vec3 center{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    // Face 0 spans dirs[0] -> dirs[1] the long way around inside its own
    // plane (reflex corner); the rest are triangles. With normal w x u, the
    // counterclockwise angle from u to w is the reflex angle.
    Vec3 u = dirs[0].vec();
    Vec3 w = dirs[1].vec();
    Vec3 nrm = cross(w, u);
    if (norm(nrm) < 0.1) continue;
    UnitVec face_normal(nrm);
    double minor = angle_between(dirs[0], dirs[1]);
    double alpha = kTwoPi - minor;  // reflex angle of face 0
    if (alpha < kPi + 0.2 || alpha > kTwoPi - 0.3) continue;

    std::vector<std::vector<Vec3>> chains;
    std::vector<Vec3> chain0{center, center + u};
    for (int k = 1; k <= 3; ++k) {
      Vec3 d = rotate_about(u, face_normal, alpha * k / 4.0);
      chain0.push_back(center + d * rng.uniform(1.0, 1.4));
    }
    chain0.push_back(center + w);
    chains.push_back(chain0);
    for (int i = 1; i < n; ++i) {
      chains.push_back({center, center + dirs[i].vec(),
                        center + dirs[(i + 1) % n].vec()});
    }
    try {
      VertexStar s(center, std::move(chains));
      if (!s.face(0).reflex) continue;
      SphericalPolygon w_poly = project_to_sphere(s);
      if (crossing_count(w_poly) != 0) continue;
      SphericalPolygon g = gauss_image(s);
      if (!comfortably_general(g, 1e-7)) continue;
      if (!crossings_transversal(g)) continue;
      return s;
    } catch (const GeometryError&) {
      continue;
    }
  }
  fail(ErrorCode::InvalidInput, "random reflex star generation did not converge");
}

SphericalPolygon random_immersed_polygon(Rng& rng, int min_n, int max_n) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    int n = rng.uniform_int(min_n, max_n);
    std::vector<UnitVec> verts;
    for (int i = 0; i < n; ++i) verts.push_back(rng.unit_vec());
    try {
      SphericalPolygon w(verts);
      if (!comfortably_general(w, 1e-6)) continue;
      if (!crossings_transversal(w)) continue;
      SphericalPolygon polar = polar_polygon(w);
      if (!comfortably_general(polar, 1e-6)) continue;
      if (!crossings_transversal(polar)) continue;
      return w;
    } catch (const GeometryError&) {
      continue;
    }
  }
  fail(ErrorCode::InvalidInput,
       "random immersed polygon generation did not converge");
}

SphericalPolygon random_simple_polygon(Rng& rng, int min_n, int max_n) {
  for (int attempt = 0; attempt < 2000; ++attempt) {
    int n = rng.uniform_int(min_n, max_n);
    UnitVec axis = rng.unit_vec();
    Vec3 e1, e2;
    orthonormal_frame(axis, e1, e2);
    std::vector<double> az = jittered_azimuths(rng, n);
    std::vector<UnitVec> verts;
    for (int i = 0; i < n; ++i)
      verts.push_back(
          frame_dir(axis, e1, e2, az[i], rng.uniform(0.4, kPi - 0.4)));
    try {
      SphericalPolygon w(verts);
      if (!comfortably_general(w, 1e-6)) continue;
      if (crossing_count(w) != 0) continue;
      return w;
    } catch (const GeometryError&) {
      continue;
    }
  }
  fail(ErrorCode::InvalidInput,
       "random simple polygon generation did not converge");
}

UnitVec random_general_direction(Rng& rng, const VertexStar& s) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    UnitVec xi = rng.unit_vec();
    double margin = 0.0;
    if (is_general(xi, s, &margin) && margin > 1e-7) return xi;
  }
  fail(ErrorCode::NotGeneral, "no general direction found");
}

UnitVec random_general_direction(Rng& rng, const SphericalPolygon& w) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    UnitVec xi = rng.unit_vec();
    double margin = 0.0;
    if (is_general(xi, w, &margin) && margin > 1e-7) return xi;
  }
  fail(ErrorCode::NotGeneral, "no general direction found");
}

UnitVec random_admissible_direction(Rng& rng, const SphericalPolygon& w) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    UnitVec xi = rng.unit_vec();
    double margin = 0.0;
    if (!is_general(xi, w, &margin) || margin <= 1e-7) continue;
    if (!is_admissible(xi, w)) continue;
    if (polygon_index(w, xi) <= 0) return xi;
  }
  fail(ErrorCode::NotAdmissible, "no admissible direction found");
}

}  // namespace gaussmap
