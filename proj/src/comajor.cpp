#include "symcubic/comajor.hpp"
#include <set>
#include <stdexcept>
#include <vector>

namespace symcubic {

const char* lam_type_name(LamType t) {
  switch (t) {
    case LamType::B: return "B";
    case LamType::D: return "D";
    case LamType::Misiurewicz: return "Misiurewicz";
  }
  return "?";
}

namespace {

// endpoints of the positively oriented short arc
std::pair<Angle, Angle> oriented(const Chord& c) {
  if (arc_length(c.a, c.b) <= mpq_class(1, 2)) return {c.a, c.b};
  return {c.b, c.a};
}

} // namespace

std::pair<Chord, Chord> majors_of(const Chord& c) {
  if (chord_length(c) > mpq_class(1, 6))
    throw std::invalid_argument("majors_of: arc longer than 1/6: " + c.str());
  auto [a, b] = oriented(c);
  const mpq_class t1(1, 3), t2(2, 3);
  return {Chord(a.plus(t1), b.plus(t2)), Chord(a.plus(t2), b.plus(t1))};
}

StripSet short_strips(const Chord& c) {
  if (chord_length(c) > mpq_class(1, 6))
    throw std::invalid_argument("short_strips: arc longer than 1/6: " + c.str());
  auto [a, b] = oriented(c);
  const mpq_class t1(1, 3), t2(2, 3), h(1, 2);
  StripSet s;
  s.M = Chord(a.plus(t1), b.plus(t2));
  s.Mp = Chord(a.plus(t2), b.plus(t1));
  s.tM = tau(s.M);
  s.tMp = tau(s.Mp);
  s.arcs[0] = {a.plus(t1), b.plus(t1)};
  s.arcs[1] = {a.plus(t2), b.plus(t2)};
  s.arcs[2] = {a.plus(t1 + h), b.plus(t1 + h)};
  s.arcs[3] = {a.plus(t2 + h), b.plus(t2 + h)};
  return s;
}

namespace {

// Orbit-legality engine on integer positions modulo a common denominator D
// (divisible by 6). Tripling fixes the denominator, so the whole computation
// stays in Z/D.
template <class I>
struct LegalEngine {
  I D, T, H;  // D/3 and D/2
  I pa, pb;   // comajor endpoints, positively oriented short arc pa -> pb

  struct Raw {
    bool legal = true;
    int kind = -1;  // 0 chords cross, 1 image crosses a major, 2 endpoint in footprint
    I u1 = 0, v1 = 0, u2 = 0, v2 = 0;
  };

  I norm(I x) const {
    x %= D;
    if (x < 0) x += D;
    return x;
  }

  // is x strictly inside the ccw arc (s, e)?
  bool inside(const I& x, const I& s, const I& e) const {
    I d = norm(x - s);
    return d != 0 && d < norm(e - s);
  }

  bool cross(const I& u1, const I& v1, const I& u2, const I& v2) const {
    if (u1 == v1 || u2 == v2) return false;
    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) return false;
    return inside(u2, u1, v1) != inside(v2, u1, v1);
  }

  Raw run() {
    const std::array<std::pair<I, I>, 4> majors = {{
        {norm(pa + T), norm(pb + T + T)},
        {norm(pa + T + T), norm(pb + T)},
        {norm(pa + T + H), norm(pb + T + T + H)},
        {norm(pa + T + T + H), norm(pb + T + H)},
    }};
    const std::array<std::pair<I, I>, 4> arcs = {{
        {norm(pa + T), norm(pb + T)},
        {norm(pa + T + T), norm(pb + T + T)},
        {norm(pa + T + H), norm(pb + T + H)},
        {norm(pa + T + T + H), norm(pb + T + T + H)},
    }};

    std::vector<std::pair<I, I>> acc;  // both chains, insertion order
    std::set<std::pair<I, I>> seen;    // base chain keys, for termination
    I ca = pa, cb = pb;
    for (int k = 0;; ++k) {
      std::pair<I, I> key = ca <= cb ? std::make_pair(ca, cb) : std::make_pair(cb, ca);
      if (seen.count(key)) break;
      seen.insert(key);
      if (k >= 1) {
        for (const auto& m : majors)
          if (cross(ca, cb, m.first, m.second))
            return {false, 1, ca, cb, m.first, m.second};
        for (const auto& A : arcs)
          for (const I& x : {ca, cb})
            if (inside(x, A.first, A.second))
              return {false, 2, ca, cb, A.first, A.second};
      }
      const std::pair<I, I> chain[2] = {{ca, cb}, {norm(ca + H), norm(cb + H)}};
      for (const auto& X : chain) {
        for (const auto& P : acc)
          if (cross(P.first, P.second, X.first, X.second))
            return {false, 0, P.first, P.second, X.first, X.second};
        acc.push_back(X);
      }
      ca = norm(ca * 3);
      cb = norm(cb * 3);
    }
    return {};
  }
};

mpz_class common_denominator(const Chord& c) {
  mpz_class D;
  mpz_lcm(D.get_mpz_t(), c.a.value().get_den_mpz_t(), c.b.value().get_den_mpz_t());
  mpz_lcm_ui(D.get_mpz_t(), D.get_mpz_t(), 6);
  return D;
}

template <class I>
LegalityReport run_engine(const Chord& c, const mpz_class& D) {
  auto [a, b] = oriented(c);
  auto pos = [&](const Angle& x) {
    mpz_class p = x.value().get_num() * (D / x.value().get_den());
    if constexpr (std::is_same_v<I, mpz_class>)
      return p;
    else
      return static_cast<I>(p.get_si());
  };
  LegalEngine<I> eng;
  if constexpr (std::is_same_v<I, mpz_class>)
    eng.D = D;
  else
    eng.D = static_cast<I>(D.get_si());
  eng.T = eng.D / 3;
  eng.H = eng.D / 2;
  eng.pa = pos(a);
  eng.pb = pos(b);
  auto raw = eng.run();

  LegalityReport rep;
  rep.legal = raw.legal;
  if (raw.legal) {
    rep.reason = "legal";
    return rep;
  }
  auto ang = [&](const I& p) {
    mpq_class q(mpz_class(p), D);
    q.canonicalize();
    return Angle(q);
  };
  Chord w1(ang(raw.u1), ang(raw.v1)), w2(ang(raw.u2), ang(raw.v2));
  switch (raw.kind) {
    case 0:
      rep.reason = "orbit chords cross: " + w1.str() + " x " + w2.str();
      rep.crossing = {w1, w2};
      break;
    case 1:
      rep.reason = "forward image " + w1.str() + " crosses major " + w2.str();
      rep.crossing = {w1, w2};
      rep.strip_hit = w1;
      break;
    default:
      rep.reason = "forward image " + w1.str() + " has an endpoint inside footprint (" +
                   ang(raw.u2).str() + ", " + ang(raw.v2).str() + ")";
      rep.strip_hit = w1;
      break;
  }
  return rep;
}

} // namespace

LegalityReport is_legal(const Chord& c) {
  LegalityReport rep;
  if (c.degenerate()) {
    rep.legal = true;
    rep.reason = "degenerate comajor";
    return rep;
  }
  if (chord_length(c) > mpq_class(1, 6)) {
    rep.legal = false;
    rep.reason = "arc longer than 1/6";
    return rep;
  }
  mpz_class D = common_denominator(c);
  // int64 fast path: positions stay below D and get multiplied by at most 3
  if (D < (mpz_class(1) << 61)) return run_engine<long>(c, D);
  return run_engine<mpz_class>(c, D);
}

namespace {

bool endpoint_periodic(const Chord& ch) {
  return orbit_info(ch.a).preperiod == 0 && orbit_info(ch.b).preperiod == 0;
}

} // namespace

ComajorRecord classify_unchecked(const Chord& c) {
  if (c.degenerate())
    throw std::invalid_argument("classify: degenerate comajor " + c.str());
  OrbitInfo oa = orbit_info(c.a), ob = orbit_info(c.b);
  if (oa.preperiod == 0 || ob.preperiod == 0)
    throw std::invalid_argument("classify: endpoints must be strictly preperiodic: " + c.str());
  if (oa.preperiod != ob.preperiod || oa.period != ob.period)
    throw std::invalid_argument("classify: endpoint orbit shapes differ: " + c.str());
  const int k = oa.preperiod, n = oa.period;

  auto [M1, M2] = majors_of(c);
  ComajorRecord rec;
  rec.comajor = c;
  rec.period = n;
  rec.preperiod = k;
  if (k == 1) {
    bool p1 = endpoint_periodic(M1), p2 = endpoint_periodic(M2);
    if (p1 == p2)
      throw std::logic_error("classify: expected exactly one periodic major for " + c.str());
    rec.major = p1 ? M1 : M2;
    rec.sibling_major = p1 ? M2 : M1;
    // flip type: half the image period composed with the half turn fixes the major
    bool flip = n % 2 == 0 && triple_pow(rec.major.a, n / 2) == tau(rec.major.a) &&
                triple_pow(rec.major.b, n / 2) == tau(rec.major.b);
    rec.type = flip ? LamType::B : LamType::D;
  } else {
    rec.type = LamType::Misiurewicz;
    rec.major = M1;  // canonical order; neither candidate is periodic here
    rec.sibling_major = M2;
  }
  return rec;
}

ComajorRecord classify(const Chord& c) {
  auto rep = is_legal(c);
  if (!rep.legal)
    throw std::invalid_argument("classify: " + c.str() + " is not legal: " + rep.reason);
  return classify_unchecked(c);
}

} // namespace symcubic
