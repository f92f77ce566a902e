#include "doctest.h"

#include "symcubic/comajor.hpp"

using namespace symcubic;

TEST_CASE("major candidates sit a third of a turn away") {
  auto [m1, m2] = majors_of(Chord(Angle(5, 48), Angle(7, 48)));
  CHECK(m1 == Chord(Angle(7, 16), Angle(13, 16)));
  CHECK(m2 == Chord(Angle(23, 48), Angle(37, 48)));

  auto [n1, n2] = majors_of(Chord(Angle(7, 78), Angle(4, 39)));
  CHECK(n1 == Chord(Angle(33, 78), Angle(60, 78)));
  CHECK(n2 == Chord(Angle(34, 78), Angle(59, 78)));

  // the arc crossing zero is the short one here
  auto [k1, k2] = majors_of(Chord(Angle(11, 12), Angle(1, 12)));
  CHECK(k1 == Chord(Angle(1, 4), Angle(3, 4)));
  CHECK(k2 == Chord(Angle(5, 12), Angle(7, 12)));
}

TEST_CASE("strips are bounded by the majors and their half turns") {
  StripSet s = short_strips(Chord(Angle(5, 48), Angle(7, 48)));
  CHECK(s.M == Chord(Angle(7, 16), Angle(13, 16)));
  CHECK(s.tM == tau(s.M));
  CHECK(s.Mp == Chord(Angle(23, 48), Angle(37, 48)));
  CHECK(s.tMp == tau(s.Mp));
  // footprint arcs start at a shift of the first endpoint
  CHECK(s.arcs[0].s == Angle(5, 48).plus(mpq_class(1, 3)));
  CHECK(s.arcs[0].e == Angle(7, 48).plus(mpq_class(1, 3)));
}

TEST_CASE("classification oracles") {
  ComajorRecord rec = classify(Chord(Angle(5, 48), Angle(7, 48)));
  CHECK(rec.type == LamType::B);
  CHECK(rec.period == 4);
  CHECK(rec.preperiod == 1);
  CHECK(rec.major == Chord(Angle(7, 16), Angle(13, 16)));
  CHECK(rec.sibling_major == Chord(Angle(23, 48), Angle(37, 48)));

  rec = classify(Chord(Angle(7, 78), Angle(4, 39)));
  CHECK(rec.type == LamType::D);
  CHECK(rec.period == 3);
  CHECK(rec.major == Chord(Angle(33, 78), Angle(30, 39)));

  rec = classify(Chord(Angle(11, 12), Angle(1, 12)));
  CHECK(rec.type == LamType::B);
  CHECK(rec.period == 2);
  CHECK(rec.major == Chord(Angle(1, 4), Angle(3, 4)));

  // deeper preperiod: Misiurewicz record keeps the long candidate as major
  Angle a(1, 36), b(35, 36);
  ComajorRecord mis = classify(Chord(a, b));
  CHECK(mis.type == LamType::Misiurewicz);
  CHECK(mis.preperiod == 2);
  CHECK(mis.period == 2);

  CHECK_THROWS(classify(Chord(Angle(1, 4), Angle(1, 4))));
  CHECK_THROWS(classify(Chord(Angle(1, 26), Angle(2, 26))));  // periodic endpoints
}

TEST_CASE("legality verdicts with witnesses") {
  CHECK(is_legal(Chord(Angle(5, 48), Angle(7, 48))).legal);
  CHECK(is_legal(Chord(Angle(7, 78), Angle(4, 39))).legal);

  LegalityReport far = is_legal(Chord(Angle(1, 48), Angle(25, 48)));
  CHECK(!far.legal);  // length 1/2 > 1/6

  LegalityReport bad = is_legal(Chord(Angle(1, 9), Angle(2, 9)));
  CHECK(!bad.legal);
  CHECK((bad.crossing.has_value() || bad.strip_hit.has_value()));
  CHECK(!bad.reason.empty());
}

TEST_CASE("legality is half-turn symmetric") {
  for (long q : {36L, 48L, 78L})
    for (long i = 0; i < q; ++i) {
      Chord e{Angle(i, q), Angle(i + 3, q)};
      if (e.degenerate()) continue;
      CHECK(is_legal(e).legal == is_legal(tau(e)).legal);
    }
}

TEST_CASE("production checker against the reference checker") {
  for (long q : {26L, 48L, 53L, 80L})
    for (long i = 0; i < q; ++i)
      for (long j = i + 1; j < q; ++j) {
        Chord e{Angle(i, q), Angle(j, q)};
        if (chord_length(e) > mpq_class(1, 6)) continue;
        LegalityReport a = is_legal(e);
        LegalityReport b = is_legal_naive(e);
        REQUIRE_MESSAGE(a.legal == b.legal, e.str());
      }
}
