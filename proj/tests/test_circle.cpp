#include "doctest.h"

#include "symcubic/chord.hpp"

using namespace symcubic;

TEST_CASE("angle parsing and normalization") {
  CHECK(Angle::parse("5/48").str() == "5/48");
  CHECK(Angle::parse("7/3") == Angle(1, 3));
  CHECK(Angle::parse("-1/3") == Angle(2, 3));
  CHECK(Angle::parse("0").str() == "0");
  CHECK(Angle::parse("6/4") == Angle(1, 2));
  CHECK_THROWS(Angle::parse("1/0"));
  CHECK_THROWS(Angle::parse("3/4x"));
  CHECK_THROWS(Angle::parse(""));
}

TEST_CASE("tripling, half turn, preimages") {
  CHECK(triple(Angle(5, 48)) == Angle(5, 16));
  CHECK(tau(Angle(5, 48)) == Angle(29, 48));
  CHECK(triple_pow(Angle(1, 26), 3) == Angle(1, 26));

  auto pre = third_preimages(Angle(1, 2));
  CHECK(pre[0] == Angle(1, 6));
  CHECK(pre[1] == Angle(1, 2));
  CHECK(pre[2] == Angle(5, 6));
  for (const Angle& p : pre) CHECK(triple(p) == Angle(1, 2));

  for (long k = 0; k < 48; ++k) {
    Angle t(k, 48);
    CHECK(triple(tau(t)) == tau(triple(t)));
  }
}

TEST_CASE("orbit bookkeeping") {
  OrbitInfo o = orbit_info(Angle(5, 48));
  CHECK(o.preperiod == 1);
  CHECK(o.period == 4);

  o = orbit_info(Angle(7, 26));
  CHECK(o.preperiod == 0);
  CHECK(o.period == 3);

  o = orbit_info(Angle(0, 1));
  CHECK(o.preperiod == 0);
  CHECK(o.period == 1);

  o = orbit_info(Angle(1, 36));
  CHECK(o.preperiod == 2);
  CHECK(o.period == 2);
}

TEST_CASE("arc membership conventions") {
  // (s,e) is the ccw open arc
  CHECK(in_open_arc(Angle(1, 4), Angle(0, 1), Angle(1, 2)));
  CHECK(!in_open_arc(Angle(3, 4), Angle(0, 1), Angle(1, 2)));
  CHECK(!in_open_arc(Angle(0, 1), Angle(0, 1), Angle(1, 2)));
  CHECK(in_open_arc(Angle(1, 12), Angle(11, 12), Angle(1, 6)));  // wraps through 0
  CHECK(in_closed_arc(Angle(1, 2), Angle(0, 1), Angle(1, 2)));
  CHECK(arc_length(Angle(5, 6), Angle(1, 6)) == mpq_class(1, 3));
}

TEST_CASE("chord length and the image length law") {
  CHECK(chord_length(Chord(Angle(7, 16), Angle(13, 16))) == mpq_class(3, 8));
  CHECK(chord_length(Chord(Angle(0, 1), Angle(1, 2))) == mpq_class(1, 2));
  CHECK(tripled_length(mpq_class(5, 16)) == mpq_class(1, 16));
  CHECK(tripled_length(mpq_class(1, 6)) == mpq_class(1, 2));
  CHECK(tripled_length(mpq_class(1, 12)) == mpq_class(1, 4));
  CHECK(tripled_length(mpq_class(2, 5)) == mpq_class(1, 5));

  for (long i = 0; i < 26; ++i)
    for (long j = i + 1; j < 26; ++j) {
      Chord e(Angle(i, 26), Angle(j, 26));
      Chord im = triple(e);
      if (!im.degenerate()) CHECK(chord_length(im) == tripled_length(chord_length(e)));
    }
}

TEST_CASE("crossing is strict interleaving") {
  Chord d1(Angle(0, 1), Angle(1, 2));
  Chord d2(Angle(1, 4), Angle(3, 4));
  CHECK(crosses(d1, d2));
  CHECK(crosses(d2, d1));

  CHECK(!crosses(Chord(Angle(0, 1), Angle(1, 4)), Chord(Angle(1, 2), Angle(3, 4))));
  // shared endpoint never crosses
  CHECK(!crosses(Chord(Angle(0, 1), Angle(1, 2)), Chord(Angle(1, 2), Angle(3, 4))));
  // degenerate never crosses
  CHECK(!crosses(Chord(Angle(1, 4), Angle(1, 4)), d1));
}

TEST_CASE("under-relation on the short side") {
  Chord outer(Angle(1, 12), Angle(1, 4));
  CHECK(is_under(Chord(Angle(1, 8), Angle(1, 6)), outer));
  CHECK(is_under(outer, outer));
  CHECK(!is_under(Chord(Angle(1, 2), Angle(2, 3)), outer));
  CHECK(!is_under(Chord(Angle(1, 8), Angle(1, 3)), outer));
  CHECK_THROWS(is_under(outer, Chord(Angle(0, 1), Angle(1, 2))));
}
