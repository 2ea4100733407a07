#include "gaussmap/index.hpp"

#include <cmath>
#include <vector>

#include "gaussmap/sampling.hpp"

namespace gaussmap {

namespace {

// Heights of the fan directions relative to the center; signs agree with
// the heights of the actual ring points.
std::vector<double> fan_heights(const VertexStar& s, const UnitVec& xi) {
  std::vector<double> h;
  h.reserve(s.fan_directions().size());
  for (const UnitVec& d : s.fan_directions()) h.push_back(dot(xi, d));
  return h;
}

std::vector<double> vertex_heights(const SphericalPolygon& w,
                                   const UnitVec& xi) {
  std::vector<double> h;
  h.reserve(w.vertices.size());
  for (const UnitVec& v : w.vertices) h.push_back(dot(xi, v));
  return h;
}

double min_abs(const std::vector<double>& h) {
  double m = 2.0;
  for (double x : h) m = std::min(m, std::abs(x));
  return m;
}

int index_from_heights(const std::vector<double>& h) {
  int n = static_cast<int>(h.size());
  int spokes_below = 0;
  int wedges_below = 0;
  for (int i = 0; i < n; ++i) {
    if (h[i] < 0.0) ++spokes_below;
    if (h[i] < 0.0 && h[(i + 1) % n] < 0.0) ++wedges_below;
  }
  return 1 - spokes_below + wedges_below;
}

int middle_from_heights(const std::vector<double>& h) {
  int n = static_cast<int>(h.size());
  int m = 0;
  for (int i = 0; i < n; ++i)
    if ((h[i] < 0.0) != (h[(i + 1) % n] < 0.0)) ++m;
  return m;
}

}  // namespace

bool is_general(const UnitVec& xi, const VertexStar& s, double* margin) {
  double m = min_abs(fan_heights(s, xi));
  if (margin) *margin = m;
  return m > kEpsGen;
}

bool is_general(const UnitVec& xi, const SphericalPolygon& w, double* margin) {
  double m = min_abs(vertex_heights(w, xi));
  if (margin) *margin = m;
  return m > kEpsGen;
}

int above_index(const VertexStar& s, const UnitVec& xi) {
  require(is_general(xi, s), ErrorCode::NotGeneral,
          "direction not general for the star");
  return index_from_heights(fan_heights(s, xi));
}

int polygon_index(const SphericalPolygon& w, const UnitVec& xi) {
  require(is_general(xi, w), ErrorCode::NotGeneral,
          "direction not general for the polygon");
  return index_from_heights(vertex_heights(w, xi));
}

IndexReport middle_vertex_index(const VertexStar& s, const UnitVec& xi) {
  require(is_general(xi, s), ErrorCode::NotGeneral,
          "direction not general for the star");
  std::vector<double> h = fan_heights(s, xi);
  IndexReport report;
  report.middle_count = middle_from_heights(h);
  report.above_index = index_from_heights(h);
  report.agrees = report.above_index == 1 - report.middle_count / 2;
  return report;
}

bool is_admissible(const UnitVec& xi, const SphericalPolygon& w) {
  int n = w.size();
  for (int i = 0; i < n; ++i) {
    double h = dot(xi, w.vertex(i));
    if (std::abs(h) > kEpsGen) continue;
    double hp = dot(xi, w.vertex(i - 1));
    double hn = dot(xi, w.vertex(i + 1));
    if (!(std::abs(hp) > kEpsGen && std::abs(hn) > kEpsGen && hp * hn < 0.0))
      return false;
  }
  return true;
}

McEstimate curvature_by_index_integration(const VertexStar& s, long n_samples,
                                          std::uint64_t seed) {
  require(n_samples >= 1000, ErrorCode::InvalidInput,
          "need at least 1e3 samples");
  // Fixed-size blocks with derived seeds; the result depends only on
  // (seed, n_samples), never on how blocks are scheduled.
  constexpr long kBlock = 1 << 16;
  double sum = 0.0, sum2 = 0.0;
  long produced = 0;
  for (std::uint64_t block = 0; produced < n_samples; ++block) {
    Rng rng(derive_seed(seed, block));
    long want = std::min(kBlock, n_samples - produced);
    for (long k = 0; k < want; ++k) {
      UnitVec xi = rng.unit_vec();
      while (!is_general(xi, s)) xi = rng.unit_vec();
      double v = static_cast<double>(above_index(s, xi));
      sum += v;
      sum2 += v * v;
    }
    produced += want;
  }
  double n = static_cast<double>(n_samples);
  double mean = sum / n;
  double var = std::max(0.0, sum2 / n - mean * mean);
  McEstimate est;
  est.estimate = kTwoPi * mean;
  est.std_error = kTwoPi * std::sqrt(var / n);
  est.n_samples = n_samples;
  est.seed = seed;
  return est;
}

}  // namespace gaussmap
