// Timings for the three parallel kernels against their serial runs, with a
// cheap equality check so the comparison stays honest.
#include "symcubic/atlas.hpp"
#include "symcubic/lamination.hpp"
#include "symcubic/plane.hpp"

#include <chrono>
#include <cstdio>
#include <string>

using namespace symcubic;

namespace {

template <class F>
double seconds(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-22s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "outputs match" : "OUTPUTS DIFFER");
}

} // namespace

int main(int argc, char** argv) {
  int period = argc > 1 ? std::stoi(argv[1]) : 6;
  int depth = argc > 2 ? std::stoi(argv[2]) : 8;
  int px = argc > 3 ? std::stoi(argv[3]) : 512;

  std::printf("%-22s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  AtlasOptions so, po;
  so.max_period = po.max_period = period;
  so.parallel = false;
  po.parallel = true;
  Atlas as, ap;
  double t1 = seconds([&] { as = enumerate_comajors(so); });
  double t2 = seconds([&] { ap = enumerate_comajors(po); });
  bool same = as.comajors.size() == ap.comajors.size();
  for (size_t i = 0; same && i < as.comajors.size(); ++i)
    same = as.comajors[i].comajor == ap.comajors[i].comajor;
  row(("atlas period " + std::to_string(period)).c_str(), t1, t2, same);

  ComajorRecord rec = classify(Chord(Angle(5, 48), Angle(7, 48)));
  Lamination ls, lp;
  t1 = seconds([&] { ls = build_lamination(rec, depth, false); });
  t2 = seconds([&] { lp = build_lamination(rec, depth, true); });
  same = ls.leaves.size() == lp.leaves.size();
  for (size_t i = 0; same && i < ls.leaves.size(); ++i)
    same = ls.leaves[i].chord == lp.leaves[i].chord;
  row(("pullback depth " + std::to_string(depth)).c_str(), t1, t2, same);

  PlaneGrid gs, gp;
  t1 = seconds([&] { gs = param_grid(px, px, 0, 0, 2.0, 400, false); });
  t2 = seconds([&] { gp = param_grid(px, px, 0, 0, 2.0, 400, true); });
  row(("grid " + std::to_string(px) + "px").c_str(), t1, t2,
      gs.member == gp.member && gs.greenv == gp.greenv);
  return 0;
}
