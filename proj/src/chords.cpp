#include "gaussmap/chords.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gaussmap/degree.hpp"
#include "gaussmap/index.hpp"

namespace gaussmap {

namespace {

int mod2r(int x, int two_r) { return ((x % two_r) + two_r) % two_r; }

// Strictly inside the open cyclic interval (a -> b), counterclockwise.
bool in_open_cyclic(int x, int a, int b, int two_r) {
  int db = mod2r(b - a, two_r);
  int dx = mod2r(x - a, two_r);
  return dx > 0 && dx < db;
}

bool chords_cross(std::pair<int, int> c1, std::pair<int, int> c2, int two_r) {
  return in_open_cyclic(c2.first, c1.first, c1.second, two_r) !=
         in_open_cyclic(c2.second, c1.first, c1.second, two_r);
}

}  // namespace

bool ChordDiagram::valid() const {
  if (r < 1) return false;
  int two_r = 2 * r;
  if (static_cast<int>(pi.size()) != two_r || pi[0] != 1) return false;
  std::vector<bool> seen(two_r + 1, false);
  for (int v : pi) {
    if (v < 1 || v > two_r || seen[v]) return false;
    seen[v] = true;
  }
  for (int hemi = 0; hemi < 2; ++hemi) {
    std::vector<std::pair<int, int>> ranks;
    for (int k = 0; k < r; ++k) {
      auto [s, t] = hemi == 0 ? upper_chord(k) : lower_chord(k);
      ranks.push_back({rank_of(s), rank_of(t)});
    }
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        if (chords_cross(ranks[a], ranks[b], two_r)) return false;
  }
  return true;
}

ChordDiagram extract_diagram(const SphericalPolygon& w, const UnitVec& xi) {
  require(crossing_count(w) == 0, ErrorCode::NotSimple,
          "polygon must be simple");
  require(is_admissible(xi, w), ErrorCode::NotAdmissible,
          "direction not admissible for the polygon");

  // Equator crossing events in traversal order.
  struct Event {
    UnitVec point;
    bool up;
  };
  std::vector<Event> events;
  int n = w.size();
  for (int i = 0; i < n; ++i) {
    double hi = dot(xi, w.vertex(i));
    double hn = dot(xi, w.vertex(i + 1));
    if (std::abs(hi) <= kEpsGen) {
      // The vertex itself sits on S(xi); admissibility guarantees a
      // transversal crossing there.
      events.push_back({w.vertex(i), dot(xi, w.vertex(i + 1)) > 0.0});
      continue;
    }
    if (std::abs(hn) <= kEpsGen) continue;  // handled as the next vertex
    if (hi * hn < 0.0) {
      Vec3 dir = cross(cross(w.vertex(i), w.vertex(i + 1)), xi.vec());
      if (dot(dir, w.vertex(i).vec() + w.vertex(i + 1).vec()) < 0.0)
        dir = -dir;
      events.push_back({UnitVec(dir), hn > 0.0});
    }
  }

  ChordDiagram d;
  if (events.empty()) return d;  // polygon clear of S(xi): index 1

  require(events.size() % 2 == 0, ErrorCode::NotAdmissible,
          "odd number of equator crossings");
  d.r = static_cast<int>(events.size()) / 2;
  int two_r = 2 * d.r;

  // Start the traversal at the first upward crossing.
  int start = -1;
  for (int k = 0; k < two_r; ++k)
    if (events[k].up) {
      start = k;
      break;
    }
  require(start >= 0, ErrorCode::NotAdmissible, "no upward crossing");
  std::vector<Event> ordered;
  for (int k = 0; k < two_r; ++k)
    ordered.push_back(events[(start + k) % two_r]);
  for (int k = 0; k < two_r; ++k)
    require(ordered[k].up == (k % 2 == 0), ErrorCode::NotAdmissible,
            "equator crossings do not alternate");

  // Equator ranks, counterclockwise around xi starting at the first point.
  Vec3 e1, e2;
  orthonormal_frame(xi, e1, e2);
  std::vector<double> azimuth(two_r);
  for (int k = 0; k < two_r; ++k) {
    const Vec3& p = ordered[k].point.vec();
    azimuth[k] = std::atan2(dot(p, e2), dot(p, e1));
  }
  std::vector<int> by_az(two_r);
  for (int k = 0; k < two_r; ++k) by_az[k] = k;
  std::sort(by_az.begin(), by_az.end(),
            [&](int a, int b) { return azimuth[a] < azimuth[b]; });
  std::vector<int> pos(two_r);
  for (int k = 0; k < two_r; ++k) pos[by_az[k]] = k;
  d.pi.resize(two_r);
  for (int k = 0; k < two_r; ++k)
    d.pi[k] = mod2r(pos[k] - pos[0], two_r) + 1;
  require(d.valid(), ErrorCode::NotAdmissible,
          "extracted chord diagram is invalid");
  return d;
}

std::vector<int> free_chords(const ChordDiagram& d) {
  require(d.r >= 1, ErrorCode::InvalidInput, "empty diagram has no chords");
  int two_r = 2 * d.r;
  std::vector<int> free;
  for (int k = 0; k < d.r; ++k) {
    auto [s, t] = d.upper_chord(k);
    int gap = mod2r(d.rank_of(s) - d.rank_of(t), two_r);
    if (gap == 1 || gap == two_r - 1) free.push_back(k);
  }
  if (d.r > 1)
    require(free.size() >= 2, ErrorCode::IdentityViolation,
            "separating chord set with fewer than two free chords");
  return free;
}

ChordSigns chord_signs(const ChordDiagram& d, int anchor) {
  std::vector<int> free = free_chords(d);
  require(std::find(free.begin(), free.end(), anchor) != free.end(),
          ErrorCode::AnchorNotFree, "anchor chord is not free");
  ChordSigns signs;
  signs.r = d.r;
  signs.anchor = anchor;
  int two_r = 2 * d.r;
  int base = d.rank_of(d.upper_chord(anchor).first);
  auto rel = [&](int traversal_point) {
    return mod2r(d.rank_of(traversal_point) - base, two_r);
  };
  for (int k = 0; k < d.r; ++k) {
    if (k == anchor) continue;
    auto [s, t] = d.upper_chord(k);
    if (rel(s) < rel(t))
      ++signs.n_plus;
    else
      ++signs.n_minus;
  }
  return signs;
}

std::pair<int, int> degree_from_diagram(const ChordSigns& signs) {
  return {1 - signs.r, -signs.n_plus + signs.n_minus};
}

namespace {

// Nesting height per chord for a fixed cut between ranks 2r and 1: chords
// are laminar intervals there; leaves get height 0.
std::vector<int> nesting_heights(
    const std::vector<std::pair<int, int>>& rank_pairs) {
  int m = static_cast<int>(rank_pairs.size());
  std::vector<std::pair<int, int>> intervals(m);
  for (int k = 0; k < m; ++k)
    intervals[k] = {std::min(rank_pairs[k].first, rank_pairs[k].second),
                    std::max(rank_pairs[k].first, rank_pairs[k].second)};
  std::vector<int> order(m);
  for (int k = 0; k < m; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return intervals[a].second - intervals[a].first <
           intervals[b].second - intervals[b].first;
  });
  std::vector<int> height(m, 0);
  for (int oi = 0; oi < m; ++oi) {
    int k = order[oi];
    for (int oj = 0; oj < oi; ++oj) {
      int j = order[oj];
      if (intervals[k].first <= intervals[j].first &&
          intervals[j].second <= intervals[k].second)
        height[k] = std::max(height[k], height[j] + 1);
    }
  }
  return height;
}

}  // namespace

SphericalPolygon realize_diagram(const ChordDiagram& d) {
  require(d.r >= 1, ErrorCode::Unrealizable, "cannot realize empty diagram");
  require(d.valid(), ErrorCode::Unrealizable, "invalid chord diagram");
  int two_r = 2 * d.r;
  auto az_of_rank = [&](double rank) {
    return kTwoPi * (rank - 1.0) / two_r + 0.37;
  };

  std::vector<std::pair<int, int>> upper_ranks, lower_ranks;
  for (int k = 0; k < d.r; ++k) {
    upper_ranks.push_back({d.rank_of(d.upper_chord(k).first),
                           d.rank_of(d.upper_chord(k).second)});
    lower_ranks.push_back({d.rank_of(d.lower_chord(k).first),
                           d.rank_of(d.lower_chord(k).second)});
  }
  std::vector<int> upper_h = nesting_heights(upper_ranks);
  std::vector<int> lower_h = nesting_heights(lower_ranks);

  auto apex = [&](std::pair<int, int> ranks, int height, double hemi) {
    double lo = std::min(ranks.first, ranks.second);
    double hi = std::max(ranks.first, ranks.second);
    double az = az_of_rank(0.5 * (lo + hi));
    double lat = (15.0 + 12.0 * height) * kPi / 180.0;
    double c = std::cos(lat);
    return UnitVec(c * std::cos(az), c * std::sin(az), hemi * std::sin(lat));
  };

  std::vector<UnitVec> verts;
  for (int k = 1; k <= two_r; ++k) {
    double az = az_of_rank(d.rank_of(k));
    verts.push_back(UnitVec(std::cos(az), std::sin(az), 0.0));
    bool up = k % 2 == 1;
    int chord = up ? (k - 1) / 2 : (k / 2 - 1);
    verts.push_back(up ? apex(upper_ranks[chord], upper_h[chord], +1.0)
                       : apex(lower_ranks[chord], lower_h[chord], -1.0));
  }
  SphericalPolygon poly(std::move(verts));
  require(crossing_count(poly) == 0, ErrorCode::Unrealizable,
          "chord lift self-intersects");
  return poly;
}

SphericalPolygon realize_index_degree(int index, int degree) {
  if (index == 1) {
    require(std::abs(degree) == 1, ErrorCode::InadmissiblePair,
            "index 1 forces degree +-1");
    // Small triangle far below the equator; orientation fixes the sign.
    std::vector<UnitVec> verts;
    for (int k = 0; k < 3; ++k) {
      double az = 0.37 + kTwoPi * k / 3.0;
      double colat = 2.6 + 0.1 * k;
      verts.push_back(UnitVec(std::sin(colat) * std::cos(az),
                              std::sin(colat) * std::sin(az),
                              std::cos(colat)));
    }
    SphericalPolygon w(verts);
    UnitVec north(0.0, 0.0, 1.0);
    if (normal_degree(w, north) == degree) return w;
    SphericalPolygon rev = w.reversed();
    require(normal_degree(rev, north) == degree, ErrorCode::InadmissiblePair,
            "could not realize the requested degree");
    return rev;
  }
  require(index <= 0, ErrorCode::InadmissiblePair, "index must be <= 0 or 1");
  require(std::abs(degree) <= std::abs(index), ErrorCode::InadmissiblePair,
          "|degree| exceeds |index|");
  require((degree - index) % 2 == 0, ErrorCode::InadmissiblePair,
          "degree - index must be even");

  int r = 1 - index;
  int want_plus = (r - 1 - degree) / 2;
  int want_minus = (r - 1 + degree) / 2;
  for (const ChordDiagram& d : enumerate_diagrams(r)) {
    ChordSigns signs = chord_signs(d, free_chords(d).front());
    if (signs.n_plus == want_plus && signs.n_minus == want_minus)
      return realize_diagram(d);
  }
  fail(ErrorCode::InadmissiblePair, "no diagram with the requested signs");
}

std::vector<std::vector<std::pair<int, int>>> enumerate_separating_chord_sets(
    int r) {
  // Non-crossing matchings of the cyclic points 1..2r, enumerated on the
  // cut linear order: the first point pairs with an odd-offset partner and
  // the inside/outside blocks are matched independently.
  std::function<std::vector<std::vector<std::pair<int, int>>>(
      const std::vector<int>&)>
      matchings = [&](const std::vector<int>& pts)
      -> std::vector<std::vector<std::pair<int, int>>> {
    std::vector<std::vector<std::pair<int, int>>> result;
    if (pts.empty()) {
      result.push_back({});
      return result;
    }
    for (std::size_t j = 1; j < pts.size(); j += 2) {
      std::vector<int> inside(pts.begin() + 1, pts.begin() + j);
      std::vector<int> outside(pts.begin() + j + 1, pts.end());
      for (const auto& mi : matchings(inside))
        for (const auto& mo : matchings(outside)) {
          std::vector<std::pair<int, int>> m;
          m.push_back({pts[0], pts[j]});
          m.insert(m.end(), mi.begin(), mi.end());
          m.insert(m.end(), mo.begin(), mo.end());
          result.push_back(std::move(m));
        }
    }
    return result;
  };
  std::vector<int> points(2 * r);
  for (int i = 0; i < 2 * r; ++i) points[i] = i + 1;
  return matchings(points);
}

std::vector<ChordDiagram> enumerate_diagrams(int r) {
  std::vector<ChordDiagram> out;
  auto matchings = enumerate_separating_chord_sets(r);
  int two_r = 2 * r;
  for (const auto& upper : matchings) {
    std::vector<int> upper_partner(two_r + 1, 0);
    for (auto [a, b] : upper) {
      upper_partner[a] = b;
      upper_partner[b] = a;
    }
    for (const auto& lower : matchings) {
      std::vector<int> lower_partner(two_r + 1, 0);
      for (auto [a, b] : lower) {
        lower_partner[a] = b;
        lower_partner[b] = a;
      }
      // Traverse from position 1 along alternating chords.
      std::vector<int> traversal;
      std::vector<bool> visited(two_r + 1, false);
      int at = 1;
      bool ok = true;
      for (int step = 0; step < two_r; ++step) {
        if (visited[at]) {
          ok = false;
          break;
        }
        visited[at] = true;
        traversal.push_back(at);
        at = step % 2 == 0 ? upper_partner[at] : lower_partner[at];
      }
      if (!ok || at != 1) continue;  // not a single cycle
      ChordDiagram d;
      d.r = r;
      d.pi = traversal;  // rank of traversal point k is its position label
      if (d.valid()) out.push_back(std::move(d));
    }
  }
  return out;
}

std::vector<int> diagram_canonical_key(const ChordDiagram& d) {
  int two_r = 2 * d.r;
  std::vector<int> best;
  auto offer = [&](const std::vector<int>& key) {
    if (best.empty() || key < best) best = key;
  };
  for (int reflect = 0; reflect < 2; ++reflect) {
    // Forward starts at odd traversal points, reverse at even ones; both
    // keep the first chord in the upper hemisphere.
    for (int dir = 0; dir < 2; ++dir) {
      for (int s = dir == 0 ? 1 : 2; s <= two_r; s += 2) {
        std::vector<int> traversal(two_r);
        for (int k = 0; k < two_r; ++k) {
          int old_idx = dir == 0 ? mod2r(s - 1 + k, two_r)
                                 : mod2r(s - 1 - k, two_r);
          traversal[k] = old_idx + 1;
        }
        int base = d.rank_of(traversal[0]);
        std::vector<int> key(two_r);
        for (int k = 0; k < two_r; ++k) {
          int rk = d.rank_of(traversal[k]);
          key[k] = reflect == 0 ? mod2r(rk - base, two_r) + 1
                                : mod2r(base - rk, two_r) + 1;
        }
        offer(key);
      }
    }
  }
  return best;
}

bool diagrams_equivalent(const ChordDiagram& a, const ChordDiagram& b) {
  if (a.r != b.r) return false;
  if (a.r == 0) return true;
  return diagram_canonical_key(a) == diagram_canonical_key(b);
}

}  // namespace gaussmap
