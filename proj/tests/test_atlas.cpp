#include "doctest.h"

#include "symcubic/atlas.hpp"

#include <map>
#include <set>

using namespace symcubic;

namespace {
Atlas atlas_up_to(int n, bool parallel = true) {
  AtlasOptions opt;
  opt.max_period = n;
  opt.parallel = parallel;
  return enumerate_comajors(opt);
}
} // namespace

TEST_CASE("comajor counts follow the tripling census") {
  Atlas a = atlas_up_to(4);
  // exact image periods 1..4 carry 2, 6, 24, 72 records
  CHECK(a.comajors.size() == 104);
  long expect = 1;
  for (int n = 1; n <= 4; ++n) {
    expect *= 3;  // 3^n - 1 records with image period dividing n
    long got = 0;
    for (const ComajorRecord& r : a.comajors)
      if (n % r.period == 0) ++got;
    CHECK(got == expect - 1);
  }
}

TEST_CASE("parallel enumeration matches the serial one") {
  Atlas s = atlas_up_to(4, false);
  Atlas p = atlas_up_to(4, true);
  REQUIRE(s.comajors.size() == p.comajors.size());
  for (size_t i = 0; i < s.comajors.size(); ++i) {
    CHECK(s.comajors[i].comajor == p.comajors[i].comajor);
    CHECK(s.comajors[i].type == p.comajors[i].type);
  }
}

TEST_CASE("atlas is half-turn closed and unlinked") {
  Atlas a = atlas_up_to(4);
  std::set<Chord> all;
  for (const ComajorRecord& r : a.comajors) all.insert(r.comajor);
  for (const ComajorRecord& r : a.comajors) CHECK(all.count(tau(r.comajor)) == 1);
  for (size_t i = 0; i < a.comajors.size(); ++i)
    for (size_t j = i + 1; j < a.comajors.size(); ++j)
      CHECK(!crosses(a.comajors[i].comajor, a.comajors[j].comajor));
}

TEST_CASE("every eligible angle appears on exactly one comajor") {
  Atlas a = atlas_up_to(4);
  std::map<Angle, int> count;
  for (const ComajorRecord& r : a.comajors) {
    CHECK(!r.comajor.degenerate());
    count[r.comajor.a] += 1;
    count[r.comajor.b] += 1;
  }
  long angles = 0;
  for (int n = 1; n <= 4; ++n)
    for (const Angle& t : one_preperiodic_angles(n)) {
      ++angles;
      auto it = count.find(t);
      REQUIRE_MESSAGE(it != count.end(), t.str());
      CHECK(it->second == 1);
    }
  CHECK(angles == 2 * 104);
}

TEST_CASE("records keep their sorted order") {
  Atlas a = atlas_up_to(3);
  for (size_t i = 1; i < a.comajors.size(); ++i) {
    const ComajorRecord& x = a.comajors[i - 1];
    const ComajorRecord& y = a.comajors[i];
    bool ordered = x.period < y.period ||
                   (x.period == y.period && x.comajor.a < y.comajor.a);
    CHECK(ordered);
  }
}

TEST_CASE("exact-period filtering") {
  AtlasOptions opt;
  opt.max_period = 4;
  opt.exact_period = true;
  Atlas a = enumerate_comajors(opt);
  CHECK(a.comajors.size() == 80 - 8);  // divisors 1, 2, 4: drop periods 1 and 2
  for (const ComajorRecord& r : a.comajors) CHECK(r.period == 4);
}

TEST_CASE("landing classes") {
  AtlasOptions opt;
  opt.max_period = 2;
  opt.max_preperiod = 2;
  Atlas a = enumerate_comajors(opt);

  // periodic angles land alone
  CHECK(class_of(Angle(1, 8), a).size() == 1);

  // a preperiod-1 angle pairs with its comajor partner
  std::vector<Angle> cls = class_of(Angle(1, 12), a);
  REQUIRE(cls.size() == 2);

  // preperiod-2 class around the cocritical gap
  cls = class_of(Angle(1, 36), a);
  std::set<Angle> got(cls.begin(), cls.end());
  CHECK(got.count(Angle(1, 36)) == 1);
  CHECK(got.count(Angle(35, 36)) == 1);

  CHECK_THROWS_AS((void)class_of(Angle(1, 3000), a), std::out_of_range);
}
