#include "symcubic/lamination.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace symcubic {
namespace {

// Pullback engine over integer positions x/D on the circle, D = common
// denominator * 3^depth so every preimage at every round stays integral.
template <class I>
struct PullEngine {
  I D, H;                               // denominator, half turn D/2
  std::array<std::pair<I, I>, 4> crit;  // M, M', tau M, tau M'
  std::array<std::pair<I, I>, 4> foot;  // footprint arcs (start, end), ccw
  std::set<I> verts;                    // the eight critical endpoints

  std::set<std::pair<I, I>> have;          // canonical (u <= v) chords
  std::multimap<I, I> ends;                // endpoint -> partner, both ways
  std::vector<std::tuple<I, I, int>> out;  // insertion order, with level

  I norm(I x) const {
    x %= D;
    if (x < 0) x += D;
    return x;
  }
  static std::pair<I, I> canon(const I& u, const I& v) {
    return u <= v ? std::pair<I, I>(u, v) : std::pair<I, I>(v, u);
  }

  bool inside(const I& x, const I& s, const I& e) const {
    I d = norm(x - s);
    return d != 0 && d < norm(e - s);
  }
  bool cross(const I& u1, const I& v1, const I& u2, const I& v2) const {
    if (u1 == v1 || u2 == v2) return false;
    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return false;
    return inside(u2, u1, v1) != inside(v2, u1, v1);
  }

  // -1 outside every footprint arc, 0..3 strictly interior to that arc,
  // 4 one of the eight critical endpoints
  int arc_class(const I& x) const {
    if (verts.count(x)) return 4;
    for (int i = 0; i < 4; ++i)
      if (inside(x, foot[i].first, foot[i].second)) return i;
    return -1;
  }

  bool is_critical_chord(const I& u, const I& v) const {
    auto k = canon(u, v);
    for (const auto& m : crit)
      if (canon(m.first, m.second) == k) return true;
    return false;
  }

  // Crossing and endpoint rules that do not depend on previously accepted
  // leaves; safe to evaluate in parallel.
  bool admissible(const I& u, const I& v) const {
    for (const auto& m : crit)
      if (cross(u, v, m.first, m.second)) return false;
    int cu = arc_class(u), cv = arc_class(v);
    if (cu == -1 && cv == -1) return true;            // clear of the strips
    if ((cu == -1 && cv == 4) || (cu == 4 && cv == -1)) return true;
    if (cu >= 0 && cu < 4 && cu == cv) return true;   // same arc, interior
    if (cu == 4 && cv == 4) return is_critical_chord(u, v);
    return false;
  }

  // does {u,v} (u < v) cross any stored leaf?
  bool crosses_stored(const I& u, const I& v) const {
    for (auto it = ends.upper_bound(u); it != ends.end() && it->first < v; ++it) {
      const I& p = it->second;
      if (p < u || p > v) return true;  // one end inside, partner outside
    }
    return false;
  }

  void add(const I& u, const I& v, int level) {
    auto key = canon(u, v);
    if (!have.insert(key).second) return;
    ends.emplace(key.first, key.second);
    ends.emplace(key.second, key.first);
    out.emplace_back(key.first, key.second, level);
  }

  void seed_orbit(I ca, I cb) {
    std::set<std::pair<I, I>> seen;
    while (true) {
      auto key = canon(ca, cb);
      if (!seen.insert(key).second) break;
      add(key.first, key.second, 0);
      add(norm(ca + H), norm(cb + H), 0);
      ca = norm(ca * 3);
      cb = norm(cb * 3);
    }
  }

  void pull(int depth, bool parallel) {
    for (int r = 1; r <= depth; ++r) {
      std::vector<std::pair<I, I>> front;
      for (const auto& t : out)
        if (std::get<2>(t) == r - 1) front.emplace_back(std::get<0>(t), std::get<1>(t));

      std::vector<std::pair<I, I>> cand;
      cand.reserve(front.size() * 9);
      for (const auto& f : front)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            I u = (f.first + I(i) * D) / 3;  // exact: frontier positions are divisible
            I v = (f.second + I(j) * D) / 3;
            cand.push_back(canon(u, v));
          }

      std::vector<char> ok(cand.size(), 0);
      std::int64_t n = static_cast<std::int64_t>(cand.size());
#pragma omp parallel for schedule(static) if (parallel)
      for (std::int64_t k = 0; k < n; ++k)
        ok[k] = admissible(cand[k].first, cand[k].second) ? 1 : 0;

      // serial, deterministic: crossing against everything accepted so far,
      // inserting tau images alongside to keep the set symmetric
      for (std::int64_t k = 0; k < n; ++k) {
        if (!ok[k]) continue;
        const auto& c = cand[k];
        if (c.first == c.second) continue;
        if (have.count(c)) continue;
        if (crosses_stored(c.first, c.second)) continue;
        add(c.first, c.second, r);
        auto tc = canon(norm(c.first + H), norm(c.second + H));
        if (!have.count(tc) && !crosses_stored(tc.first, tc.second)) add(tc.first, tc.second, r);
      }
    }
  }
};

template <class I>
Lamination run_pull(const ComajorRecord& rec, int depth, bool parallel, const mpz_class& Dz) {
  const Chord& cm = rec.comajor;
  // positively oriented short arc a -> b
  Angle a = cm.a, b = cm.b;
  if (arc_length(a, b) > mpq_class(1, 2)) std::swap(a, b);

  PullEngine<I> eng;
  if constexpr (std::is_same_v<I, mpz_class>)
    eng.D = Dz;
  else
    eng.D = Dz.get_si();
  eng.H = eng.D / 2;

  auto pos = [&](const Angle& t) -> I {
    mpq_class q = t.value() * Dz;
    q.canonicalize();
    if constexpr (std::is_same_v<I, mpz_class>)
      return q.get_num();
    else
      return static_cast<I>(q.get_num().get_si());
  };
  auto sh = [&](const Angle& t, long num, long den) { return pos(t.plus(mpq_class(num, den))); };

  eng.crit[0] = PullEngine<I>::canon(sh(a, 1, 3), sh(b, 2, 3));  // M
  eng.crit[1] = PullEngine<I>::canon(sh(a, 2, 3), sh(b, 1, 3));  // M'
  eng.crit[2] = PullEngine<I>::canon(sh(a, 5, 6), sh(b, 1, 6));  // tau M
  eng.crit[3] = PullEngine<I>::canon(sh(a, 1, 6), sh(b, 5, 6));  // tau M'
  eng.foot[0] = {sh(a, 1, 3), sh(b, 1, 3)};
  eng.foot[1] = {sh(a, 2, 3), sh(b, 2, 3)};
  eng.foot[2] = {sh(a, 5, 6), sh(b, 5, 6)};
  eng.foot[3] = {sh(a, 1, 6), sh(b, 1, 6)};
  for (const auto& f : eng.foot) {
    eng.verts.insert(f.first);
    eng.verts.insert(f.second);
  }

  eng.seed_orbit(eng.crit[0].first, eng.crit[0].second);
  eng.seed_orbit(eng.crit[1].first, eng.crit[1].second);
  eng.pull(depth, parallel);

  Lamination L;
  L.record = rec;
  L.depth = depth;
  L.leaves.reserve(eng.out.size());
  for (const auto& t : eng.out) {
    mpq_class qa(mpz_class(std::get<0>(t)), Dz);
    mpq_class qb(mpz_class(std::get<1>(t)), Dz);
    qa.canonicalize();
    qb.canonicalize();
    L.leaves.push_back({Chord(Angle(qa), Angle(qb)), std::get<2>(t)});
  }
  std::sort(L.leaves.begin(), L.leaves.end(),
            [](const Leaf& x, const Leaf& y) { return x.chord < y.chord; });
  return L;
}

} // namespace

Lamination build_lamination(const ComajorRecord& rec, int depth, bool parallel) {
  if (depth < 0 || depth > 40) throw std::invalid_argument("build_lamination: depth out of range");
  if (rec.comajor.degenerate())
    throw std::invalid_argument("build_lamination: degenerate comajor has no lamination");

  mpz_class Dseed = lcm(lcm(rec.comajor.a.value().get_den(), rec.comajor.b.value().get_den()),
                        mpz_class(6));
  mpz_class Dz = Dseed;
  for (int i = 0; i < depth; ++i) Dz *= 3;

  mpz_class cap = mpz_class(1) << 61;
  if (Dz < cap) return run_pull<long>(rec, depth, parallel, Dz);
  return run_pull<mpz_class>(rec, depth, parallel, Dz);
}

bool lamination_has(const Lamination& L, const Chord& c) {
  Leaf probe{c, 0};
  auto it = std::lower_bound(L.leaves.begin(), L.leaves.end(), probe,
                             [](const Leaf& x, const Leaf& y) { return x.chord < y.chord; });
  return it != L.leaves.end() && it->chord == c;
}

// Stack check: chords as intervals [a,b] in [0,1) are pairwise non-crossing
// exactly when the endpoint sequence is well nested.
bool lamination_noncrossing(const Lamination& L) {
  struct Ev {
    mpq_class pos;
    bool open;
    mpq_class far;  // partner position, for nesting order at equal keys
    size_t id;
  };
  std::vector<Ev> evs;
  evs.reserve(L.leaves.size() * 2);
  for (size_t i = 0; i < L.leaves.size(); ++i) {
    const Chord& c = L.leaves[i].chord;
    if (c.degenerate()) continue;
    evs.push_back({c.a.value(), true, c.b.value(), i});
    evs.push_back({c.b.value(), false, c.a.value(), i});
  }
  std::sort(evs.begin(), evs.end(), [](const Ev& x, const Ev& y) {
    if (x.pos != y.pos) return x.pos < y.pos;
    if (x.open != y.open) return !x.open;  // closes before opens
    if (x.open) return x.far > y.far;      // longer spans pushed first
    return x.far > y.far;                  // pop most recent first
  });
  std::vector<size_t> stack;
  for (size_t i = 0; i < evs.size();) {
    size_t j = i;
    while (j < evs.size() && evs[j].pos == evs[i].pos && !evs[j].open) {
      if (stack.empty() || stack.back() != evs[j].id) return false;
      stack.pop_back();
      ++j;
    }
    while (j < evs.size() && evs[j].pos == evs[i].pos) {
      stack.push_back(evs[j].id);
      ++j;
    }
    i = j;
  }
  return stack.empty();
}

bool lamination_tau_closed(const Lamination& L) {
  std::set<Chord> all;
  for (const auto& l : L.leaves) all.insert(l.chord);
  for (const auto& l : L.leaves)
    if (!all.count(tau(l.chord))) return false;
  return true;
}

bool lamination_forward_invariant(const Lamination& L) {
  std::set<Chord> all;
  for (const auto& l : L.leaves) all.insert(l.chord);
  for (const auto& l : L.leaves) {
    Chord im = triple(l.chord);
    if (!im.degenerate() && !all.count(im)) return false;
  }
  return true;
}

} // namespace symcubic
