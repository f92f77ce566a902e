#include "doctest.h"

#include "symcubic/lamination.hpp"

using namespace symcubic;

namespace {
ComajorRecord rec_of(long an, long ad, long bn, long bd) {
  return classify(Chord(Angle(an, ad), Angle(bn, bd)));
}
} // namespace

TEST_CASE("seed orbit of the diameter record") {
  Lamination L = build_lamination(rec_of(1, 6, 1, 3), 3);
  CHECK(lamination_has(L, Chord(Angle(0, 1), Angle(1, 2))));   // the invariant major
  CHECK(lamination_has(L, Chord(Angle(2, 3), Angle(5, 6))));   // sibling
  CHECK(lamination_has(L, Chord(Angle(1, 6), Angle(1, 3))));   // the comajor itself
}

TEST_CASE("pullback leaves of the diameter record") {
  Lamination L = build_lamination(rec_of(1, 6, 1, 3), 3);
  // boundary leaves of the invariant gap
  CHECK(lamination_has(L, Chord(Angle(5, 9), Angle(11, 18))));
  CHECK(lamination_has(L, Chord(Angle(2, 9), Angle(5, 18))));
  // absent: chords that would cut through the critical gaps
  CHECK(!lamination_has(L, Chord(Angle(1, 2), Angle(2, 3))));
  CHECK(!lamination_has(L, Chord(Angle(0, 1), Angle(1, 6))));
}

TEST_CASE("depth invariants hold for sample records") {
  for (int depth : {0, 2, 4}) {
    for (auto rec : {rec_of(5, 48, 7, 48), rec_of(7, 78, 4, 39), rec_of(11, 12, 1, 12)}) {
      Lamination L = build_lamination(rec, depth);
      CAPTURE(rec.comajor.str());
      CAPTURE(depth);
      CHECK(lamination_noncrossing(L));
      CHECK(lamination_tau_closed(L));
      CHECK(lamination_forward_invariant(L));
      CHECK(L.depth == depth);
    }
  }
}

TEST_CASE("leaf counts grow and nest with depth") {
  ComajorRecord rec = rec_of(5, 48, 7, 48);
  Lamination shallow = build_lamination(rec, 2);
  Lamination deep = build_lamination(rec, 4);
  CHECK(shallow.leaves.size() < deep.leaves.size());
  for (const Leaf& lf : shallow.leaves) CHECK(lamination_has(deep, lf.chord));
}

TEST_CASE("parallel pullback is deterministic") {
  ComajorRecord rec = rec_of(7, 78, 4, 39);
  Lamination s = build_lamination(rec, 5, false);
  Lamination p = build_lamination(rec, 5, true);
  REQUIRE(s.leaves.size() == p.leaves.size());
  for (size_t i = 0; i < s.leaves.size(); ++i) {
    CHECK(s.leaves[i].chord == p.leaves[i].chord);
    CHECK(s.leaves[i].level == p.leaves[i].level);
  }
}

TEST_CASE("levels record the pullback round") {
  Lamination L = build_lamination(rec_of(5, 48, 7, 48), 3);
  int maxlevel = 0;
  for (const Leaf& lf : L.leaves) {
    CHECK(lf.level >= 0);
    CHECK(lf.level <= 3);
    maxlevel = std::max(maxlevel, lf.level);
    if (lf.level > 0) {
      // image of a level-k leaf is present at a lower level (or degenerate)
      Chord im = triple(lf.chord);
      if (!im.degenerate()) CHECK(lamination_has(L, im));
    }
  }
  CHECK(maxlevel == 3);
}
