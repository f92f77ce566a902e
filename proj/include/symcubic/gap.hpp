#pragma once
#include "symcubic/lamination.hpp"

namespace symcubic {

// Return-map data for the critical gap, derived from the record alone.
// The gap hangs off the periodic major M on its sibling side; mh1/mh2 are
// M's endpoints with the vertex-bearing arc running ccw from mh2 to mh1,
// and uh1/uh2 are the sibling major's endpoints in the same ccw order.
struct GapMap {
  ComajorRecord record;
  int exponent = 1;        // tripling steps per return: period, halved for flips
  bool half_turn = false;  // compose with tau (flip records)
  Angle mh1, mh2;
  Angle uh1, uh2;
};

GapMap gap_map(const ComajorRecord& rec);  // throws for Misiurewicz records

// One application of the return map.
Angle eta(const GapMap& g, const Angle& v);
Chord eta(const GapMap& g, const Chord& e);

// Exact binary coordinate on the gap boundary, conjugating eta to doubling:
// phi(M) = 0, phi(sibling) = 1/2, phi(eta v) = 2 phi(v) mod 1.
// Throws if the orbit of v falls into an open hole behind either major.
mpq_class phi(const GapMap& g, const Angle& v);

// Finite-depth critical gap boundary read off a lamination: the major plus
// every leaf on the vertex side not hidden behind another such leaf.
struct GapBoundary {
  GapMap map;
  std::vector<Chord> edges;     // major first, then ccw from mh2
  std::vector<Angle> vertices;  // edge endpoints, ccw from mh2
};
GapBoundary critical_gap(const Lamination& L);

// Induced comajor of a doubling rotation cycle. x and y must span an edge of
// a periodic rotation set for angle doubling; the pair only picks out the
// cycle. The cycle's longest edge is pulled back through phi to a chord of
// gap vertices, whose ends then slide by thirds onto the comajor's short
// arc. The result is validated before being returned.
Chord induce(const GapMap& g, const Angle& x, const Angle& y);
Chord induce(const GapBoundary& gap, const Chord& ell);

// Shortest edge of the unique doubling rotation cycle with rotation number p/q.
Chord quadratic_rotation_major(const mpq_class& pq);

// Record whose major is the longest edge of the tau-symmetric tripling
// rotation set with rotation number p/q; 1/2 gives the diameter record
// with comajor {1/6, 1/3}.
ComajorRecord main_gap_edge(const mpq_class& pq);

} // namespace symcubic
