#include "symcubic/atlas.hpp"
#include <algorithm>
#include <map>
#include <stdexcept>

namespace symcubic {

std::vector<Angle> one_preperiodic_angles(int n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("period out of supported range [1,12]");
  long q = 1;
  for (int i = 0; i < n; ++i) q *= 3;
  q -= 1;

  // multiplication by 3 permutes Z/q, so every point lies on a pure cycle
  std::vector<char> visited(static_cast<size_t>(q), 0);
  std::vector<Angle> out;
  std::vector<long> cyc;
  for (long r = 0; r < q; ++r) {
    if (visited[r]) continue;
    cyc.clear();
    long p = r;
    while (!visited[p]) {
      visited[p] = 1;
      cyc.push_back(p);
      p = (p * 3) % q;
    }
    if (static_cast<int>(cyc.size()) != n) continue;
    for (size_t i = 0; i < cyc.size(); ++i) {
      long cur = cyc[i];
      long prev = cyc[(i + cyc.size() - 1) % cyc.size()];
      for (long j = 0; j < 3; ++j) {
        long num = cur + j * q;  // candidate num/(3q)
        if (num == 3 * prev) continue;  // that preimage is the cycle itself
        mpq_class v(num, 3 * q);
        v.canonicalize();
        out.push_back(Angle(std::move(v)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) {
    for (int i = 0; i < n; ++i) p[i] = i;
  }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

std::vector<ComajorRecord> scan_records(const std::vector<Angle>& A, bool parallel) {
  const mpq_class win(1, 6);
  const int W = static_cast<int>(A.size());
  std::vector<ComajorRecord> recs;
#pragma omp parallel if (parallel)
  {
    std::vector<ComajorRecord> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int i = 0; i < W; ++i) {
      for (int d = 1; d < W; ++d) {
        int j = (i + d) % W;
        if (arc_length(A[i], A[j]) > win) break;
        Chord c(A[i], A[j]);
        if (is_legal(c).legal) local.push_back(classify_unchecked(c));
      }
    }
#pragma omp critical
    recs.insert(recs.end(), local.begin(), local.end());
  }
  std::sort(recs.begin(), recs.end(), [](const ComajorRecord& x, const ComajorRecord& y) {
    if (x.period != y.period) return x.period < y.period;
    return x.comajor < y.comajor;
  });
  return recs;
}

std::vector<std::vector<Angle>> scan_classes(const std::vector<Angle>& A, bool parallel) {
  const mpq_class win(1, 6);
  const int W = static_cast<int>(A.size());
  std::vector<std::pair<int, int>> edges;
#pragma omp parallel if (parallel)
  {
    std::vector<std::pair<int, int>> local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int i = 0; i < W; ++i) {
      for (int d = 1; d < W; ++d) {
        int j = (i + d) % W;
        if (arc_length(A[i], A[j]) > win) break;
        if (is_legal(Chord(A[i], A[j])).legal) local.emplace_back(i, j);
      }
    }
#pragma omp critical
    edges.insert(edges.end(), local.begin(), local.end());
  }
  DSU dsu(W);
  for (auto& e : edges) dsu.unite(e.first, e.second);
  std::map<int, std::vector<Angle>> by_root;
  for (int i = 0; i < W; ++i) by_root[dsu.find(i)].push_back(A[i]);
  std::vector<std::vector<Angle>> classes;
  for (auto& kv : by_root) {
    std::sort(kv.second.begin(), kv.second.end());
    classes.push_back(std::move(kv.second));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<Angle>& x, const std::vector<Angle>& y) { return x[0] < y[0]; });
  return classes;
}

} // namespace

Atlas enumerate_comajors(const AtlasOptions& opts) {
  if (opts.max_period < 1 || opts.max_period > 12)
    throw std::invalid_argument("max_period out of supported range [1,12]");
  if (opts.max_preperiod < 1)
    throw std::invalid_argument("max_preperiod must be >= 1");

  Atlas atlas;
  atlas.opts = opts;

  for (int n = opts.exact_period ? opts.max_period : 1; n <= opts.max_period; ++n) {
    std::vector<Angle> A = one_preperiodic_angles(n);
    auto recs = scan_records(A, opts.parallel);
    atlas.comajors.insert(atlas.comajors.end(), recs.begin(), recs.end());

    // deeper preperiods: vertex classes of Misiurewicz laminations
    std::vector<Angle> level = A;
    for (int k = 2; k <= opts.max_preperiod; ++k) {
      std::vector<Angle> next;
      next.reserve(level.size() * 3);
      for (const Angle& t : level)
        for (const Angle& pre : third_preimages(t)) next.push_back(pre);
      level = std::move(next);
      if (level.size() > 200000)
        throw std::invalid_argument("atlas bound too large; refusing preperiod level with " +
                                    std::to_string(level.size()) + " angles");
      std::sort(level.begin(), level.end());
      auto classes = scan_classes(level, opts.parallel);
      atlas.misiurewicz.insert(atlas.misiurewicz.end(), classes.begin(), classes.end());
    }
  }

  std::sort(atlas.comajors.begin(), atlas.comajors.end(),
            [](const ComajorRecord& x, const ComajorRecord& y) {
              if (x.period != y.period) return x.period < y.period;
              return x.comajor < y.comajor;
            });
  return atlas;
}

std::vector<Angle> class_of(const Angle& theta, const Atlas& atlas) {
  OrbitInfo oi = orbit_info(theta);
  if (oi.preperiod == 0) return {theta};
  const auto& o = atlas.opts;
  bool period_covered =
      o.exact_period ? oi.period == o.max_period : oi.period <= o.max_period;
  if (!period_covered || oi.preperiod > std::max(1, o.max_preperiod))
    throw std::out_of_range("atlas bound too small for angle " + theta.str() + " (preperiod " +
                            std::to_string(oi.preperiod) + ", period " +
                            std::to_string(oi.period) + ")");
  if (oi.preperiod == 1) {
    for (const auto& rec : atlas.comajors)
      if (rec.comajor.a == theta || rec.comajor.b == theta)
        return {rec.comajor.a, rec.comajor.b};
    throw std::out_of_range("angle " + theta.str() + " not found in atlas records");
  }
  for (const auto& cls : atlas.misiurewicz)
    for (const Angle& t : cls)
      if (t == theta) return cls;
  throw std::out_of_range("angle " + theta.str() + " not found in atlas classes");
}

} // namespace symcubic
