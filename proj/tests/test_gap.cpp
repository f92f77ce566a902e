#include "doctest.h"

#include "symcubic/atlas.hpp"
#include "symcubic/gap.hpp"

using namespace symcubic;

namespace {
ComajorRecord rec_of(long an, long ad, long bn, long bd) {
  return classify(Chord(Angle(an, ad), Angle(bn, bd)));
}
} // namespace

TEST_CASE("return-map data for the diameter record") {
  GapMap g = gap_map(rec_of(1, 6, 1, 3));
  CHECK(g.exponent == 1);
  CHECK(!g.half_turn);
  CHECK(g.mh2 == Angle(1, 2));
  CHECK(g.mh1 == Angle(0, 1));
  CHECK(g.uh1 == Angle(2, 3));
  CHECK(g.uh2 == Angle(5, 6));
}

TEST_CASE("phi pins the majors and conjugates eta to doubling") {
  GapMap g = gap_map(rec_of(1, 6, 1, 3));
  CHECK(phi(g, g.mh1) == 0);
  CHECK(phi(g, g.mh2) == 0);
  CHECK(phi(g, g.uh1) == mpq_class(1, 2));
  CHECK(phi(g, g.uh2) == mpq_class(1, 2));
  CHECK(phi(g, Angle(5, 8)) == mpq_class(1, 3));
  CHECK(phi(g, Angle(7, 8)) == mpq_class(2, 3));

  Lamination L = build_lamination(rec_of(1, 6, 1, 3), 6);
  GapBoundary gap = critical_gap(L);
  CHECK(gap.edges.front() == g.record.major);
  bool has_sibling = false;
  for (const Chord& e : gap.edges) has_sibling |= e == g.record.sibling_major;
  CHECK(has_sibling);
  for (const Angle& v : gap.vertices) {
    mpq_class lhs = phi(g, eta(g, v));
    CHECK(lhs == frac1(2 * phi(g, v)));
  }
}

TEST_CASE("gap boundaries for flip records use the half turn") {
  GapMap g = gap_map(rec_of(5, 48, 7, 48));
  CHECK(g.exponent == 2);  // period 4, halved
  CHECK(g.half_turn);
  Angle v = eta(g, g.mh1);
  CHECK(v == g.mh1);  // major endpoints are eta-fixed

  GapMap d = gap_map(rec_of(7, 78, 4, 39));
  CHECK(d.exponent == 3);
  CHECK(!d.half_turn);

  CHECK_THROWS(gap_map(classify(Chord(Angle(1, 36), Angle(35, 36)))));
}

TEST_CASE("induced comajors: frozen values") {
  GapMap g = gap_map(rec_of(1, 6, 1, 3));
  Chord ind = induce(g, Angle(1, 3), Angle(2, 3));
  CHECK(ind == Chord(Angle(5, 24), Angle(7, 24)));
  ComajorRecord irec = classify(ind);
  CHECK(irec.type == LamType::D);
  CHECK(irec.period == 2);
  CHECK(irec.major == Chord(Angle(5, 8), Angle(7, 8)));

  GapMap d = gap_map(rec_of(7, 78, 4, 39));
  Chord ind2 = induce(d, Angle(1, 3), Angle(2, 3));
  CHECK(ind2 == Chord(Angle(197, 2184), Angle(223, 2184)));
  CHECK(is_under(ind2, d.record.comajor));

  // the GapBoundary wrapper reaches the same value
  Lamination L = build_lamination(rec_of(7, 78, 4, 39), 4);
  CHECK(induce(critical_gap(L), Chord(Angle(1, 3), Angle(2, 3))) == ind2);

  CHECK_THROWS(induce(g, Angle(1, 4), Angle(3, 4)));  // dyadic input names an edge
}

TEST_CASE("induced comajors: longer cycles and wide gaps") {
  GapMap g = gap_map(rec_of(1, 6, 1, 3));
  Chord i7 = induce(g, Angle(1, 7), Angle(2, 7));
  CHECK(i7 == Chord(Angle(7, 39), Angle(8, 39)));
  ComajorRecord r7 = classify(i7);
  CHECK(r7.type == LamType::D);
  CHECK(r7.period == 3);
  CHECK(r7.major == Chord(Angle(7, 13), Angle(11, 13)));

  Chord i15 = induce(g, Angle(1, 15), Angle(2, 15));
  CHECK(i15 == Chord(Angle(41, 240), Angle(43, 240)));
  CHECK(classify(i15).major == Chord(Angle(41, 80), Angle(67, 80)));

  // flip gap, odd cycle: the half turns do not cancel, so the satellite flips
  GapMap b = gap_map(rec_of(5, 48, 7, 48));
  Chord ib = induce(b, Angle(1, 7), Angle(2, 7));
  CHECK(ib == Chord(Angle(457, 4368), Angle(473, 4368)));
  ComajorRecord rb = classify(ib);
  CHECK(rb.type == LamType::B);
  CHECK(rb.period == 12);

  // a gap whose return arcs span several preimage sheets
  GapMap w = gap_map(rec_of(1, 39, 38, 39));
  Chord iw = induce(w, Angle(1, 3), Angle(2, 3));
  CHECK(iw == Chord(Angle(1, 42), Angle(41, 42)));
  ComajorRecord rw = classify(iw);
  CHECK(rw.type == LamType::D);
  CHECK(rw.period == 6);

  CHECK_THROWS(induce(g, Angle(1, 5), Angle(2, 5)));    // orbit is not a rotation set
  CHECK_THROWS(induce(g, Angle(1, 15), Angle(4, 15)));  // pair skips a polygon vertex
  CHECK_THROWS(induce(g, Angle(1, 6), Angle(1, 3)));    // preperiodic under doubling
}

TEST_CASE("quadratic rotation majors") {
  CHECK(quadratic_rotation_major(mpq_class(1, 2)) == Chord(Angle(1, 3), Angle(2, 3)));
  CHECK(quadratic_rotation_major(mpq_class(1, 3)) == Chord(Angle(1, 7), Angle(2, 7)));
  CHECK(quadratic_rotation_major(mpq_class(1, 4)) == Chord(Angle(1, 15), Angle(2, 15)));
  CHECK(quadratic_rotation_major(mpq_class(2, 3)) == Chord(Angle(5, 7), Angle(6, 7)));
  CHECK_THROWS(quadratic_rotation_major(mpq_class(0)));
  CHECK_THROWS(quadratic_rotation_major(mpq_class(3, 2)));  // rotation numbers live in (0,1)
}

TEST_CASE("main-gap edge records") {
  ComajorRecord half = main_gap_edge(mpq_class(1, 2));
  CHECK(half.comajor == Chord(Angle(1, 6), Angle(1, 3)));

  ComajorRecord third = main_gap_edge(mpq_class(1, 3));
  CHECK(third.comajor == Chord(Angle(35, 39), Angle(71, 78)));
  CHECK(third.major == Chord(Angle(6, 26), Angle(15, 26)));
  CHECK(third.period == 3);

  ComajorRecord quarter = main_gap_edge(mpq_class(1, 4));
  CHECK(quarter.comajor == Chord(Angle(41, 48), Angle(43, 48)));
  CHECK(quarter.major == Chord(Angle(3, 16), Angle(9, 16)));

  // conjugation symmetry: rotation number p/q mirrors to 1 - p/q
  ComajorRecord two_thirds = main_gap_edge(mpq_class(2, 3));
  Angle ma(mpq_class(1) - third.comajor.b.value());
  Angle mb(mpq_class(1) - third.comajor.a.value());
  CHECK(two_thirds.comajor == Chord(ma, mb));

  // and that mirror is the short-period D record used everywhere else
  CHECK(two_thirds.comajor == Chord(Angle(7, 78), Angle(4, 39)));

  // every main-gap comajor is an atlas record
  AtlasOptions opt;
  opt.max_period = 4;
  Atlas atlas = enumerate_comajors(opt);
  bool found = false;
  for (const ComajorRecord& r : atlas.comajors) found |= r.comajor == quarter.comajor;
  CHECK(found);
}
