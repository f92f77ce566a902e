#include "symcubic/gap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace symcubic {

GapMap gap_map(const ComajorRecord& rec) {
  if (rec.type == LamType::Misiurewicz)
    throw std::invalid_argument("gap_map: Misiurewicz records have no periodic return map");
  if (rec.comajor.degenerate())
    throw std::invalid_argument("gap_map: degenerate comajor");

  GapMap g;
  g.record = rec;
  g.half_turn = rec.type == LamType::B;
  g.exponent = g.half_turn ? rec.period / 2 : rec.period;

  const Chord& M = rec.major;
  const Chord& Mp = rec.sibling_major;
  // vertex-bearing side of M = the side holding the sibling major
  if (in_open_arc(Mp.a, M.a, M.b)) {
    g.mh2 = M.a;
    g.mh1 = M.b;
  } else {
    g.mh2 = M.b;
    g.mh1 = M.a;
  }
  if (arc_length(g.mh2, Mp.a) <= arc_length(g.mh2, Mp.b)) {
    g.uh1 = Mp.a;
    g.uh2 = Mp.b;
  } else {
    g.uh1 = Mp.b;
    g.uh2 = Mp.a;
  }

  // Sanity of the four marked points: both sibling ends on the vertex side,
  // at matching offsets from M's ends, and folding onto M under one tripling
  // (sibling majors share their image chord).  The return map must also fix
  // M's endpoint pair.
  if (!in_open_arc(g.uh2, g.mh2, g.mh1))
    throw std::logic_error("gap_map: sibling major is not on the vertex side");
  if (arc_length(g.mh2, g.uh1) != arc_length(g.uh2, g.mh1))
    throw std::logic_error("gap_map: sibling ends sit at uneven offsets from the major");
  Angle f1 = triple(g.uh1), f2 = triple(g.uh2);
  Angle m1 = triple(g.mh1), m2 = triple(g.mh2);
  if (!((f1 == m1 && f2 == m2) || (f1 == m2 && f2 == m1)))
    throw std::logic_error("gap_map: sibling does not fold onto the major under tripling");
  Angle r1 = eta(g, g.mh1), r2 = eta(g, g.mh2);
  if (r1 == r2 || (r1 != g.mh1 && r1 != g.mh2) || (r2 != g.mh1 && r2 != g.mh2))
    throw std::logic_error("gap_map: major is not fixed by the return map");
  return g;
}

Angle eta(const GapMap& g, const Angle& v) {
  Angle w = triple_pow(v, g.exponent);
  return g.half_turn ? tau(w) : w;
}

Chord eta(const GapMap& g, const Chord& e) { return Chord(eta(g, e.a), eta(g, e.b)); }

namespace {

// bit of the itinerary, or -1 inside an open hole
int phi_bit(const GapMap& g, const Angle& v) {
  if (v == g.mh1 || v == g.mh2 || in_open_arc(v, g.mh2, g.uh1)) return 0;
  if (v == g.uh1 || v == g.uh2 || in_open_arc(v, g.uh2, g.mh1)) return 1;
  return -1;
}

mpq_class binary_value(const std::vector<int>& bits, int K, int P) {
  mpz_class B(0), C(0);
  for (int i = 0; i < K; ++i) B = B * 2 + bits[i];
  for (int j = 0; j < P; ++j) C = C * 2 + bits[K + j];
  mpz_class twoP = mpz_class(1) << P;
  mpq_class r(C, twoP - 1);
  r += B;
  r /= mpq_class(mpz_class(1) << K);
  r.canonicalize();
  mpz_class fl = r.get_num() / r.get_den();  // subtract integer part (B+cyc may hit 2^K)
  r -= fl;
  return r;
}

} // namespace

mpq_class phi(const GapMap& g, const Angle& v) {
  std::map<Angle, int> index;
  std::vector<int> bits;
  Angle cur = v;
  while (true) {
    auto it = index.find(cur);
    if (it != index.end()) {
      int K = it->second;
      int P = static_cast<int>(bits.size()) - K;
      return binary_value(bits, K, P);
    }
    int b = phi_bit(g, cur);
    if (b < 0)
      throw std::domain_error("phi: orbit of " + cur.str() +
                              " falls in an open hole behind a major");
    index.emplace(cur, static_cast<int>(bits.size()));
    bits.push_back(b);
    cur = eta(g, cur);
  }
}

GapBoundary critical_gap(const Lamination& L) {
  GapBoundary gb;
  gb.map = gap_map(L.record);
  const GapMap& g = gb.map;

  mpq_class L0 = g.mh2.value();
  mpq_class len = arc_length(g.mh2, g.mh1);
  // explicit return type: the gmpxx expression template must not outlive its temporaries
  auto lift = [&](const Angle& t) -> mpq_class { return L0 + arc_length(g.mh2, t); };

  const Chord M(g.mh1, g.mh2);
  struct Cand {
    mpq_class lu, lv;
    Chord c;
  };
  std::vector<Cand> cands;
  for (const auto& leaf : L.leaves) {
    const Chord& c = leaf.chord;
    if (c == M) continue;
    if (!in_closed_arc(c.a, g.mh2, g.mh1) || !in_closed_arc(c.b, g.mh2, g.mh1)) continue;
    mpq_class lu = lift(c.a), lv = lift(c.b);
    if (lu > lv) std::swap(lu, lv);
    if (lv > L0 + len) throw std::logic_error("critical_gap: lift out of range");
    cands.push_back({lu, lv, c});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.lu != y.lu) return x.lu < y.lu;
    return x.lv > y.lv;
  });

  gb.edges.push_back(M);
  mpq_class reach(-1);
  for (const auto& c : cands) {
    if (reach >= 0 && c.lv <= reach) continue;  // hidden behind an earlier edge
    gb.edges.push_back(c.c);
    reach = c.lv;
  }

  const Chord& Mp = L.record.sibling_major;
  if (std::find(gb.edges.begin(), gb.edges.end(), Mp) == gb.edges.end())
    throw std::logic_error("critical_gap: sibling major is not a boundary edge");

  std::vector<std::pair<mpq_class, Angle>> vs;
  for (const auto& e : gb.edges) {
    vs.emplace_back(lift(e.a), e.a);
    vs.emplace_back(lift(e.b), e.b);
  }
  std::sort(vs.begin(), vs.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& p : vs)
    if (gb.vertices.empty() || gb.vertices.back() != p.second) gb.vertices.push_back(p.second);
  return gb;
}

namespace {

// doubling itinerary of a non-dyadic angle
void doubling_bits(const Angle& x, std::vector<int>& bits, int& K, int& P) {
  std::map<Angle, int> index;
  Angle cur = x;
  mpq_class half(1, 2);
  while (true) {
    auto it = index.find(cur);
    if (it != index.end()) {
      K = it->second;
      P = static_cast<int>(bits.size()) - K;
      return;
    }
    index.emplace(cur, static_cast<int>(bits.size()));
    bits.push_back(cur.value() >= half ? 1 : 0);
    cur = Angle(cur.value() * 2);
  }
}

bool is_dyadic(const Angle& x) {
  mpz_class d = x.value().get_den();
  while (d % 2 == 0) d /= 2;
  return d == 1;
}

// left and right ends of the return arc carrying the given bit
const Angle& arc_start(const GapMap& g, int bit) { return bit ? g.uh2 : g.mh2; }
const Angle& arc_end(const GapMap& g, int bit) { return bit ? g.mh1 : g.uh1; }

// One inverse branch of the return map.  The slice of boundary inside the
// bit's return arc that the return carries onto the next bit's arc hugs one
// end of its arc: the coordinate on the boundary is monotone, so everything
// left of the arc's halfway edge maps to next bit 0 and everything right of
// it to next bit 1.  The slice is 3^exponent times narrower than the arc,
// which leaves one preimage candidate near its midpoint; the pick is exact
// as soon as the incoming target is closer to the true one than half the
// candidate spacing, which the first pull already guarantees.
Angle pull_branch(const GapMap& g, const Angle& target, int bit, int next,
                  const mpz_class& p3e, const mpq_class& cell) {
  Angle y = g.half_turn ? tau(target) : target;
  const Angle& anchor = next ? arc_end(g, bit) : arc_start(g, bit);
  mpq_class mid = anchor.value() + (next ? -cell : cell) / 2;
  mpq_class base = y.value() / p3e;
  mpq_class steps = (mid - base) * p3e + mpq_class(1, 2);
  mpz_class j;
  mpz_fdiv_q(j.get_mpz_t(), steps.get_num_mpz_t(), steps.get_den_mpz_t());
  return Angle(base + mpq_class(j) / p3e);
}

// The eta-periodic vertex with the given bit cycle.  Three rounds of branch
// pullback contract far below the spacing of the exact candidates
// (denominators divide 2(3^(e P) - 1), the 2 because half turns can fold
// in), so one snap lands on the vertex; an exact forward run of the cycle
// through the boundary slices certifies it.
Angle vertex_at(const GapMap& g, const std::vector<int>& cyc) {
  const int P = static_cast<int>(cyc.size());
  mpz_class p3e(1);
  for (int i = 0; i < g.exponent; ++i) p3e *= 3;
  const mpq_class cell = arc_length(g.mh2, g.uh1) / p3e;

  Angle x = g.mh2;
  for (int round = 0; round < 3; ++round)
    for (int k = P - 1; k >= 0; --k)
      x = pull_branch(g, x, cyc[k], cyc[(k + 1) % P], p3e, cell);

  mpz_class FeP(1);
  for (int i = 0; i < g.exponent * P; ++i) FeP *= 3;
  mpz_class D = 2 * (FeP - 1);
  mpq_class t = x.value() * D + mpq_class(1, 2);
  mpz_class n = t.get_num() / t.get_den();  // floor: t >= 0
  mpq_class snapped(n % D, D);
  snapped.canonicalize();
  Angle v(snapped);

  Angle u = v;
  for (int k = 0; k < P; ++k) {
    int next = cyc[(k + 1) % P];
    const Angle& anchor = next ? arc_end(g, cyc[k]) : arc_start(g, cyc[k]);
    Angle lo = next ? anchor.plus(-cell) : anchor;
    if (!in_closed_arc(u, lo, lo.plus(cell)))
      throw std::logic_error("induce: vertex fell outside its boundary slice");
    u = eta(g, u);
  }
  if (u != v) throw std::logic_error("induce: vertex cycle does not close up");
  return v;
}

} // namespace

Chord induce(const GapMap& g, const Angle& x, const Angle& y) {
  if (is_dyadic(x) || is_dyadic(y))
    throw std::invalid_argument("induce: dyadic angles name edges, not vertices");
  if (x == y) throw std::invalid_argument("induce: the angles must be distinct");
  if (x.value().get_den() % 2 == 0 || y.value().get_den() % 2 == 0)
    throw std::invalid_argument("induce: the angles must be periodic under doubling");

  std::vector<Angle> orbit;
  Angle cur = x;
  do {
    orbit.push_back(cur);
    if (orbit.size() > 64) throw std::out_of_range("induce: doubling orbit too long");
    cur = Angle(cur.value() * 2);
  } while (cur != x);
  const int P = static_cast<int>(orbit.size());
  if (std::find(orbit.begin(), orbit.end(), y) == orbit.end())
    throw std::invalid_argument("induce: the angles must share one doubling orbit");

  std::vector<Angle> ring = orbit;
  std::sort(ring.begin(), ring.end());
  auto at = [&](const Angle& a) {
    return static_cast<int>(std::lower_bound(ring.begin(), ring.end(), a) - ring.begin());
  };
  int shift = at(Angle(ring[0].value() * 2));
  for (int i = 0; i < P; ++i)
    if (Angle(ring[i].value() * 2) != ring[(i + shift) % P])
      throw std::invalid_argument("induce: the orbit is not a rotation set");
  int dxy = (at(y) - at(x) + P) % P;
  if (dxy != 1 && dxy != P - 1)
    throw std::invalid_argument("induce: the angles must span an edge of the cycle polygon");

  // The polygon names the cycle; the pair passed in only picks it out.  Its
  // longest edge carries the major data, and phi^{-1} of that edge is the
  // induced record's own major.
  int besti = 0;
  for (int i = 1; i < P; ++i)
    if (chord_length(Chord(ring[i], ring[(i + 1) % P])) >
        chord_length(Chord(ring[besti], ring[(besti + 1) % P])))
      besti = i;
  Angle X = ring[besti], Y = ring[(besti + 1) % P];

  std::vector<int> bits;
  int K = 0, BP = 0;
  doubling_bits(X, bits, K, BP);
  if (K != 0 || BP != P) throw std::logic_error("induce: itinerary does not close up");

  Angle vx = vertex_at(g, bits);
  if (phi(g, vx) != X.value())
    throw std::logic_error("induce: vertex misses its binary coordinate");
  Angle vy = vx;
  for (Angle t = X; t != Y; t = Angle(t.value() * 2)) vy = eta(g, vy);

  // comajor's short arc, positively oriented
  Angle a = g.record.comajor.a, b = g.record.comajor.b;
  if (arc_length(a, b) > mpq_class(1, 2)) std::swap(a, b);
  auto slide = [&](const Angle& v) -> Angle {
    Angle best = v;
    int hits = 0;
    for (int k = 0; k < 3; ++k) {
      Angle w = v.plus(canonical(k, 3));
      if (in_closed_arc(w, a, b)) {
        best = w;
        ++hits;
      }
    }
    if (hits != 1) throw std::logic_error("induce: no unique slide onto the comajor arc");
    return best;
  };

  Chord out(slide(vx), slide(vy));
  LegalityReport rep = is_legal(out);
  if (!rep.legal)
    throw std::runtime_error("induce: result " + out.str() + " is not legal: " + rep.reason);
  if (!is_under(out, Chord(a, b)))
    throw std::runtime_error("induce: result " + out.str() + " is not under the comajor");
  return out;
}

Chord induce(const GapBoundary& gap, const Chord& ell) {
  return induce(gap.map, ell.a, ell.b);
}

namespace {

// orbit of r under t -> mul*t mod den; returns sorted positions, or empty if
// the exact orbit size differs from want
std::vector<long> exact_orbit(long r, long mul, long den, int want) {
  std::vector<long> o;
  long cur = r;
  do {
    o.push_back(cur);
    cur = static_cast<long>((static_cast<unsigned long>(cur) * mul) % den);
    if (static_cast<int>(o.size()) > want) return {};
  } while (cur != r);
  if (static_cast<int>(o.size()) != want) return {};
  std::sort(o.begin(), o.end());
  return o;
}

// rotation number shift/size if mul acts as a circular shift on sorted
// positions, else -1
int shift_of(const std::vector<long>& S, long mul, long den) {
  int n = static_cast<int>(S.size());
  long img0 = static_cast<long>((static_cast<unsigned long>(S[0]) * mul) % den);
  auto it = std::lower_bound(S.begin(), S.end(), img0);
  if (it == S.end() || *it != img0) return -1;
  int shift = static_cast<int>(it - S.begin());
  for (int i = 0; i < n; ++i) {
    long img = static_cast<long>((static_cast<unsigned long>(S[i]) * mul) % den);
    if (img != S[(i + shift) % n]) return -1;
  }
  return shift;
}

} // namespace

Chord quadratic_rotation_major(const mpq_class& pq) {
  mpq_class r = pq;
  r.canonicalize();
  if (r <= 0 || r >= 1) throw std::invalid_argument("rotation number must lie in (0,1)");
  long q = r.get_den().get_si();
  if (q < 2 || q > 25) throw std::out_of_range("rotation denominator out of range (2..25)");

  long den = (1L << q) - 1;
  std::vector<char> seen(den, 0);
  for (long s = 1; s < den; ++s) {
    if (seen[s]) continue;
    std::vector<long> orb = exact_orbit(s, 2, den, static_cast<int>(q));
    if (orb.empty()) {
      // mark the whole (wrong-sized) cycle
      long cur = s;
      do {
        seen[cur] = 1;
        cur = (cur * 2) % den;
      } while (cur != s);
      continue;
    }
    for (long v : orb) seen[v] = 1;
    int shift = shift_of(orb, 2, den);
    if (shift < 0) continue;
    mpq_class rot(shift, q);
    rot.canonicalize();
    if (rot != r) continue;

    int n = static_cast<int>(orb.size());
    Chord best(Angle(orb[0], den), Angle(orb[1 % n], den));
    for (int i = 1; i < n; ++i) {
      Chord e(Angle(orb[i], den), Angle(orb[(i + 1) % n], den));
      if (chord_length(e) < chord_length(best)) best = e;
    }
    return best;
  }
  throw std::logic_error("quadratic_rotation_major: no rotation cycle found");
}

ComajorRecord main_gap_edge(const mpq_class& pq) {
  mpq_class r = pq;
  r.canonicalize();
  if (r <= 0 || r >= 1) throw std::invalid_argument("rotation number must lie in (0,1)");
  long q = r.get_den().get_si();
  if (r == mpq_class(1, 2)) return classify(Chord(Angle(1, 6), Angle(1, 3)));
  if (q < 2 || q > 12) throw std::out_of_range("rotation denominator out of range (2..12)");

  long den = 1;
  for (long i = 0; i < q; ++i) den *= 3;
  den -= 1;
  long half = den / 2;

  std::vector<char> seen(den, 0);
  std::vector<std::vector<long>> matches;
  for (long s = 1; s < den; ++s) {
    if (seen[s]) continue;
    std::vector<long> orb = exact_orbit(s, 3, den, static_cast<int>(q));
    {
      long cur = s;
      do {
        seen[cur] = 1;
        cur = (cur * 3) % den;
      } while (cur != s);
    }
    if (orb.empty()) continue;

    std::vector<long> torb;
    torb.reserve(orb.size());
    for (long v : orb) torb.push_back((v + half) % den);
    std::sort(torb.begin(), torb.end());

    std::vector<long> H;
    if (torb == orb) {
      H = orb;
    } else {
      for (long v : torb) seen[v] = 1;  // the mirror orbit gives the same set
      H.resize(orb.size() * 2);
      std::merge(orb.begin(), orb.end(), torb.begin(), torb.end(), H.begin());
    }

    int shift = shift_of(H, 3, den);
    if (shift < 0) continue;
    mpq_class rot(shift, static_cast<long>(H.size()));
    rot.canonicalize();
    if (rot == r) matches.push_back(H);
  }
  if (matches.empty())
    throw std::logic_error("main_gap_edge: no tau-symmetric rotation set found");
  std::sort(matches.begin(), matches.end());
  const std::vector<long>& H = matches.front();

  // longest edge by chord length; the two maximal edges are half-turn twins,
  // and keeping the first one (H is sorted) picks the smaller start point
  int n = static_cast<int>(H.size());
  auto edge_len = [&](int i) {
    long gap = (H[(i + 1) % n] - H[i] + den) % den;
    return canonical(std::min(gap, den - gap), den);
  };
  int besti = 0;
  for (int i = 1; i < n; ++i)
    if (edge_len(i) > edge_len(besti)) besti = i;
  Chord M(Angle(H[besti], den), Angle(H[(besti + 1) % n], den));

  // recover the comajor: slide M's ends back by thirds so the pair closes up
  Angle A = M.a, B = M.b;
  if (arc_length(A, B) > mpq_class(1, 2)) std::swap(A, B);
  Chord cands[2] = {Chord(A.plus(mpq_class(-1, 3)), B.plus(mpq_class(-2, 3))),
                    Chord(A.plus(mpq_class(-2, 3)), B.plus(mpq_class(-1, 3)))};
  for (const Chord& c : cands) {
    if (c.degenerate() || chord_length(c) > mpq_class(1, 6)) continue;
    auto ms = majors_of(c);
    if (ms.first != M && ms.second != M) continue;
    if (!is_legal(c).legal) continue;
    ComajorRecord rec = classify(c);
    if (rec.major != M)
      throw std::logic_error("main_gap_edge: rotation edge is not the periodic major");
    return rec;
  }
  throw std::logic_error("main_gap_edge: no comajor reproduces the rotation edge");
}

} // namespace symcubic
