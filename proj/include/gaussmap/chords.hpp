#pragma once

#include <utility>
#include <vector>

#include "gaussmap/spherical.hpp"

namespace gaussmap {

// Combinatorial normal form of how a simple polygon crosses the equator
// S(xi): 2r equator points visited alternately by chords in the upper and
// lower hemisphere. Traversal points are labeled 1..2r in traversal order;
// pi[k-1] is the equator rank of traversal point k, counted counterclockwise
// around xi starting at point 1 (so pi[0] = 1). Upper chords join traversal
// points (2i+1, 2i+2), lower chords (2i+2, 2i+3).
struct ChordDiagram {
  int r = 0;
  std::vector<int> pi;

  bool empty() const { return r == 0; }
  int rank_of(int traversal_point) const { return pi[traversal_point - 1]; }
  std::pair<int, int> upper_chord(int k) const {  // k in [0, r)
    return {2 * k + 1, 2 * k + 2};
  }
  std::pair<int, int> lower_chord(int k) const {
    return {2 * k + 2, 2 * k + 3 <= 2 * r ? 2 * k + 3 : 1};
  }

  // pi is a permutation with pi[0] = 1 and the chords of each hemisphere are
  // pairwise non-crossing as equator chords.
  bool valid() const;
};

struct ChordSigns {
  int r = 0;
  int anchor = 0;  // index of the upper anchor chord
  int n_plus = 0;
  int n_minus = 0;  // 1 + n_plus + n_minus == r
};

// Extracts the diagram of a simple polygon with respect to an admissible
// direction. A polygon disjoint from S(xi) yields the empty diagram (index
// 1). Crossing points are taken in traversal order, starting at the first
// upward crossing.
ChordDiagram extract_diagram(const SphericalPolygon& w, const UnitVec& xi);

// Indices of upper chords whose endpoints are adjacent on the equator.
// For r > 1 there are always at least two (free chord lemma).
std::vector<int> free_chords(const ChordDiagram& d);

// Chord signs relative to a free anchor chord: a non-anchor upper chord is
// positive when its first traversal endpoint precedes its second in the
// cyclic equator order starting at the anchor.
ChordSigns chord_signs(const ChordDiagram& d, int anchor);

// (index, degree) = (1 - r, -N+ + N-). Requires r >= 1.
std::pair<int, int> degree_from_diagram(const ChordSigns& signs);

// Geometric realization: equator points of a regular 2r-gon (offset to avoid
// coordinate degeneracies), each chord lifted to a once-broken geodesic with
// apex height growing with its nesting height. xi is the north pole.
SphericalPolygon realize_diagram(const ChordDiagram& d);

// Simple polygon whose measured (index, degree) with respect to the north
// pole equal the given pair. Requires i < 1 with |d| <= |i| and d - i even,
// or (i, d) = (1, +-1).
SphericalPolygon realize_index_degree(int index, int degree);

// All valid diagrams with r chords per hemisphere (pairs of non-crossing
// perfect matchings whose union is a single cycle).
std::vector<ChordDiagram> enumerate_diagrams(int r);

// All non-crossing perfect matchings of 2r cyclic points (separating chord
// sets), as lists of rank pairs.
std::vector<std::vector<std::pair<int, int>>> enumerate_separating_chord_sets(
    int r);

// Equality up to rotation/reflection of the equator labeling and the choice
// of starting traversal point.
bool diagrams_equivalent(const ChordDiagram& a, const ChordDiagram& b);
std::vector<int> diagram_canonical_key(const ChordDiagram& d);

}  // namespace gaussmap
