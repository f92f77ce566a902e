#include "doctest.h"

#include "symcubic/atlas.hpp"
#include "symcubic/io.hpp"
#include "symcubic/render.hpp"

#include <cmath>

using namespace symcubic;

TEST_CASE("geodesic arcs meet the circle at right angles") {
  AtlasOptions opt;
  opt.max_period = 3;
  Atlas atlas = enumerate_comajors(opt);
  for (const ComajorRecord& rec : atlas.comajors) {
    for (const Chord& e : {rec.comajor, rec.major}) {
      ArcGeom g = chord_arc(e);
      if (g.straight) continue;
      double dx = g.x1 - g.cx, dy = g.y1 - g.cy;
      CHECK(std::abs(dx * dx + dy * dy - g.r * g.r) <= 1e-9);
      CHECK(std::abs(dx * g.x1 + dy * g.y1) <= 1e-9);  // radius orthogonal to position
      double ex = g.x2 - g.cx, ey = g.y2 - g.cy;
      CHECK(std::abs(ex * g.x2 + ey * g.y2) <= 1e-9);
    }
  }
  CHECK(chord_arc(Chord(Angle(0, 1), Angle(1, 2))).straight);
}

TEST_CASE("SVG output is stable and rejects crossings") {
  std::vector<Chord> chords = {Chord(Angle(1, 6), Angle(1, 3)), Chord(Angle(2, 3), Angle(5, 6))};
  std::string svg = render_lamination(chords);
  CHECK(svg == render_lamination(chords));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);

  std::vector<Chord> bad = {Chord(Angle(0, 1), Angle(1, 2)), Chord(Angle(1, 4), Angle(3, 4))};
  CHECK_THROWS_WITH_AS(render_lamination(bad),
                       "render_lamination: chords {0, 1/2} and {1/4, 3/4} cross",
                       std::invalid_argument);

  // shared endpoints and nesting are fine
  std::vector<Chord> nest = {Chord(Angle(0, 1), Angle(1, 2)), Chord(Angle(1, 8), Angle(1, 4)),
                             Chord(Angle(1, 8), Angle(3, 8))};
  CHECK(render_lamination(nest).find("</svg>") != std::string::npos);
}

TEST_CASE("PNG container and determinism") {
  PlaneGrid grid = param_grid(48, 32, 0, 0, 2.0, 120);
  auto png = render_plane(grid);
  REQUIRE(png.size() > 45);
  const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  for (int i = 0; i < 8; ++i) CHECK(png[i] == sig[i]);
  // IHDR width/height, big endian
  CHECK(png[16] == 0);
  CHECK(png[19] == 48);
  CHECK(png[23] == 32);
  std::string tail(png.end() - 8, png.end());
  CHECK(tail.substr(0, 4) == "IEND");

  CHECK(render_plane(grid) == png);

  Overlay ov;
  ov.marks.push_back(cplx(0, 0));
  auto decorated = render_plane(grid, ov);
  CHECK(decorated != png);
}

TEST_CASE("style file") {
  PlaneStyle st = plane_style_from_json(R"({"interior":[1,2,3],"mark_half":7})");
  CHECK(st.interior.r == 1);
  CHECK(st.interior.g == 2);
  CHECK(st.interior.b == 3);
  CHECK(st.mark_half == 7);
  CHECK_THROWS(plane_style_from_json("not json"));
}

TEST_CASE("atlas JSON round-trip") {
  AtlasOptions opt;
  opt.max_period = 3;
  opt.max_preperiod = 2;
  Atlas atlas = enumerate_comajors(opt);
  std::string text = atlas_to_json(atlas);
  CHECK(text.find("\"bound\"") != std::string::npos);
  CHECK(text.find("\"pair\"") != std::string::npos);

  Atlas back = atlas_from_json(text);
  REQUIRE(back.comajors.size() == atlas.comajors.size());
  for (size_t i = 0; i < atlas.comajors.size(); ++i) {
    CHECK(back.comajors[i].comajor == atlas.comajors[i].comajor);
    CHECK(back.comajors[i].type == atlas.comajors[i].type);
    CHECK(back.comajors[i].period == atlas.comajors[i].period);
    CHECK(back.comajors[i].major == atlas.comajors[i].major);
  }
  CHECK(back.misiurewicz == atlas.misiurewicz);
}

TEST_CASE("lamination JSON round-trip") {
  Lamination L = build_lamination(classify(Chord(Angle(5, 48), Angle(7, 48))), 3);
  Lamination back = lamination_from_json(lamination_to_json(L));
  CHECK(back.depth == L.depth);
  CHECK(back.record.comajor == L.record.comajor);
  REQUIRE(back.leaves.size() == L.leaves.size());
  for (size_t i = 0; i < L.leaves.size(); ++i) {
    CHECK(back.leaves[i].chord == L.leaves[i].chord);
    CHECK(back.leaves[i].level == L.leaves[i].level);
  }
}

TEST_CASE("ray trace serialization") {
  RayTrace tr = trace_param_ray(Angle(0, 1), 1e-2);
  std::string csv = raytrace_to_csv(tr);
  CHECK(csv.rfind("potential,re,im\n", 0) == 0);
  size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == tr.points.size() + 1);

  std::string js = raytrace_to_json(tr);
  CHECK(js.find("\"theta\": \"0\"") != std::string::npos);
  CHECK(js.find("\"kind\": \"parameter\"") != std::string::npos);
  CHECK(js.find("\"landed_estimate\"") != std::string::npos);

  CHECK(complex_to_json(cplx(1.5, -2.0)) == "{\"re\":1.5,\"im\":-2.0}");
}

TEST_CASE("record and legality serialization") {
  ComajorRecord rec = classify(Chord(Angle(5, 48), Angle(7, 48)));
  std::string js = record_to_json(rec);
  CHECK(js.find("\"type\": \"B\"") != std::string::npos);
  CHECK(js.find("\"period\": 4") != std::string::npos);
  CHECK(js.find("7/16") != std::string::npos);

  LegalityReport rep = is_legal(Chord(Angle(1, 9), Angle(2, 9)));
  std::string lj = legality_to_json(Chord(Angle(1, 9), Angle(2, 9)), rep);
  CHECK(lj.find("\"legal\": false") != std::string::npos);
}
