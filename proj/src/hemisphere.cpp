#include "gaussmap/hemisphere.hpp"

#include <cmath>

namespace gaussmap {

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

}  // namespace

std::optional<HemispherePole> open_hemisphere(
    const std::vector<UnitVec>& points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return std::nullopt;

  UnitVec best(0.0, 0.0, 1.0);
  double best_margin = -2.0;
  bool found = false;

  auto consider = [&](const Vec3& cand) {
    double len = norm(cand);
    if (len <= kEpsGen) return;
    UnitVec t(cand);
    double margin = 2.0;
    for (const UnitVec& p : points) margin = std::min(margin, dot(t, p));
    if (margin > best_margin + 1e-15 ||
        (std::abs(margin - best_margin) <= 1e-15 &&
         lex_less(t.vec(), best.vec()))) {
      best = t;
      best_margin = margin;
      found = true;
    }
  };

  // One active constraint: the pole is a data point itself.
  for (int i = 0; i < n; ++i) consider(points[i].vec());

  // Two active constraints at equal angle: pole on the bisector.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      consider(points[i].vec() + points[j].vec());

  // Three active constraints: s = ni x nj + nj x nk + nk x ni has equal
  // scalar product det(ni, nj, nk) with all three; orient by the sign.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec3 s = cross(points[i].vec(), points[j].vec()) +
                 cross(points[j].vec(), points[k].vec()) +
                 cross(points[k].vec(), points[i].vec());
        double d = triple(points[i].vec(), points[j].vec(), points[k].vec());
        if (d < 0.0) s = -s;
        consider(s);
      }

  if (!found || best_margin <= kEpsGen) return std::nullopt;
  return HemispherePole{best, best_margin};
}

}  // namespace gaussmap
