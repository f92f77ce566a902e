#include "symcubic/selftest.hpp"

#include "symcubic/atlas.hpp"
#include "symcubic/gap.hpp"
#include "symcubic/io.hpp"
#include "symcubic/render.hpp"
#include "symcubic/solve.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace symcubic {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("selftest: " + what);
}

std::vector<Angle> sample_angles() {
  std::vector<Angle> out;
  for (long q : {5L, 7L, 12L, 16L, 26L, 48L, 78L})
    for (long k = 0; k < q; ++k) out.push_back(Angle(k, q));
  return out;
}

void circle_checks() {
  std::vector<Angle> S = sample_angles();
  for (const Angle& t : S)
    need(triple(tau(t)) == tau(triple(t)), "tripling must commute with the half turn at " + t.str());

  for (size_t i = 0; i < S.size(); i += 7)
    for (size_t j = i + 1; j < S.size(); j += 5) {
      if (S[i] == S[j]) continue;
      Chord e(S[i], S[j]);
      Chord im = triple(e);
      if (!im.degenerate())
        need(chord_length(im) == tripled_length(chord_length(e)),
             "image length law fails at " + e.str());
    }

  for (const Angle& t : S) {
    OrbitInfo o = orbit_info(t);
    need(o.preperiod + o.period <= t.value().get_den().get_si() || t.value() == 0,
         "orbit of " + t.str() + " is longer than its denominator");
    Angle back = o.path[o.preperiod];
    Angle cur = back;
    for (int k = 0; k < o.period; ++k) cur = triple(cur);
    need(cur == back, "cycle of " + t.str() + " does not close up");
  }

  // crossing symmetry and the under-relation as a partial order
  std::vector<Chord> cs;
  for (size_t i = 0; i < S.size(); i += 11)
    for (size_t j = i + 1; j < S.size(); j += 13)
      if (S[i] != S[j] && chord_length(Chord(S[i], S[j])) < mpq_class(1, 2))
        cs.push_back(Chord(S[i], S[j]));
  for (size_t i = 0; i < cs.size(); ++i) {
    need(is_under(cs[i], cs[i]), "under-relation must be reflexive");
    for (size_t j = 0; j < cs.size(); ++j) {
      need(crosses(cs[i], cs[j]) == crosses(cs[j], cs[i]), "crossing must be symmetric");
      if (i != j && is_under(cs[i], cs[j]) && is_under(cs[j], cs[i]))
        need(cs[i] == cs[j], "under-relation must be antisymmetric");
      for (size_t k = 0; k < cs.size(); k += 3)
        if (is_under(cs[i], cs[j]) && is_under(cs[j], cs[k]))
          need(is_under(cs[i], cs[k]), "under-relation must be transitive");
    }
  }
}

void comajor_checks(const Atlas& atlas) {
  // tau-symmetry of legality on a denominator sweep, against the naive checker
  for (long q : {26L, 48L, 71L}) {
    for (long i = 0; i < q; ++i)
      for (long j = i + 1; j < q; ++j) {
        Chord e{Angle(i, q), Angle(j, q)};
        if (chord_length(e) > mpq_class(1, 6)) continue;
        bool a = is_legal(e).legal;
        need(a == is_legal(tau(e)).legal, "legality must be half-turn symmetric at " + e.str());
        need(a == is_legal_naive(e).legal,
             "production and reference legality disagree at " + e.str());
      }
  }

  std::set<Chord> seen;
  std::map<Angle, int> endpoint_count;
  for (const ComajorRecord& rec : atlas.comajors) {
    need(triple(rec.comajor) == triple(rec.major) &&
             triple(rec.comajor) == triple(rec.sibling_major),
         "comajor and majors must share their image at " + rec.comajor.str());
    Chord M = rec.major;
    if (rec.type == LamType::B) {
      Chord half = M;
      for (int k = 0; k < rec.period / 2; ++k) half = triple(half);
      need(half == tau(M), "type B major must return as its half turn: " + rec.comajor.str());
    } else if (rec.type == LamType::D) {
      Chord cur = M;
      for (int k = 1; k <= rec.period; ++k) {
        cur = triple(cur);
        if (k < rec.period)
          need(cur != tau(M), "type D major must never return as its half turn: " +
                                  rec.comajor.str());
      }
    }
    seen.insert(rec.comajor);
    if (!rec.comajor.degenerate()) {
      endpoint_count[rec.comajor.a] += 1;
      endpoint_count[rec.comajor.b] += 1;
    }
  }
  for (const ComajorRecord& rec : atlas.comajors)
    need(seen.count(tau(rec.comajor)) == 1, "atlas must be half-turn closed");
  for (size_t i = 0; i < atlas.comajors.size(); ++i)
    for (size_t j = i + 1; j < atlas.comajors.size(); ++j)
      need(!crosses(atlas.comajors[i].comajor, atlas.comajors[j].comajor),
           "atlas comajors must be pairwise unlinked");
  for (int n = 1; n <= atlas.opts.max_period; ++n)
    for (const Angle& t : one_preperiodic_angles(n)) {
      auto it = endpoint_count.find(t);
      need(it != endpoint_count.end() && it->second == 1,
           "angle " + t.str() + " must sit on exactly one nondegenerate comajor");
    }
}

void lamination_checks() {
  for (const char* pair : {"5/48 7/48", "7/78 4/39", "11/12 1/12"}) {
    std::string s(pair);
    auto sp = s.find(' ');
    ComajorRecord rec =
        classify(Chord(Angle::parse(s.substr(0, sp)), Angle::parse(s.substr(sp + 1))));
    Lamination L = build_lamination(rec, 5);
    need(lamination_noncrossing(L), "lamination of " + rec.comajor.str() + " must be unlinked");
    need(lamination_tau_closed(L),
         "lamination of " + rec.comajor.str() + " must be half-turn symmetric");
    need(lamination_forward_invariant(L),
         "lamination of " + rec.comajor.str() + " must be forward invariant");

    GapBoundary gap = critical_gap(L);
    for (const Chord& e : gap.edges) {
      Chord cur = e;
      bool hit = false;
      for (int k = 0; k <= (L.depth + 2) * rec.period && !hit; ++k) {
        hit = cur == rec.major;
        cur = triple(cur);
      }
      need(hit, "gap edge " + e.str() + " must iterate onto the major");
    }
    for (const Angle& v : gap.vertices) {
      mpq_class lhs = phi(gap.map, eta(gap.map, v));
      mpq_class rhs = frac1(2 * phi(gap.map, v));
      need(lhs == rhs, "phi must semiconjugate the return map to doubling at " + v.str());
    }
    for (const Chord& q : {quadratic_rotation_major(mpq_class(1, 2)),
                           quadratic_rotation_major(mpq_class(1, 3))}) {
      Chord ind = induce(gap.map, q.a, q.b);  // throws unless legal
      need(is_under(ind, rec.comajor), "induced comajor must sit under the generator");
    }
  }
}

void plane_checks() {
  // escape-rate functional equation on escaping samples
  for (double re : {2.0, 0.9, -1.4})
    for (double im : {0.0, 0.7, -1.1}) {
      cplx c(re, im), z(re + 0.3, im - 0.2);
      if (!escape_time(c, z).escaped) continue;
      double g1 = green(c, z), g3 = green(c, step(z, c));
      need(std::abs(g3 - 3.0 * g1) <= 1e-9 * std::max(1.0, std::abs(g3)),
           "escape rate must triple along the orbit");
    }

  // escape coordinate stays injective on a sampled ring outside the locus
  std::vector<cplx> psi;
  for (double r : {2.2, 2.8, 3.5})
    for (int k = 0; k < 16; ++k) {
      double t = 2.0 * M_PI * k / 16;
      psi.push_back(bottcher_psi(r * cplx(std::cos(t), std::sin(t))));
    }
  for (size_t i = 0; i < psi.size(); ++i)
    for (size_t j = i + 1; j < psi.size(); ++j)
      need(std::abs(psi[i] - psi[j]) > 1e-6, "escape coordinate must separate sampled points");

  // membership symmetric under quarter turn and sign
  for (double re : {0.05, 0.31, 0.83, 1.21})
    for (double im : {0.11, 0.47, 0.99}) {
      cplx c(re, im);
      bool m = !escape_time(c, c, 600).escaped;
      need(m == !escape_time(cplx(0, 1) * c, cplx(0, 1) * c, 600).escaped,
           "membership must be invariant under a quarter turn");
      need(m == !escape_time(-c, -c, 600).escaped,
           "membership must be invariant under the sign flip");
    }
}

void solve_checks() {
  ComajorRecord recB = classify(Chord(Angle(5, 48), Angle(7, 48)));
  CenterResult ctr = find_center(recB);
  RootResult root = find_root(recB, ctr.c);
  need(std::abs(root.mult.ray_rho - root.mult.half * root.mult.half) <= 1e-8,
       "type B ray multiplier must be the square of the half multiplier");
  need(std::abs(root.mult.half - 1.0) <= 1e-6, "type B root must have unit half multiplier");

  LandingReport rep = verify_landing(recB);
  need(rep.pass, "characteristic rays must land together at the root");

  // a preperiodic ray from a different class stays away from this root
  RayTrace other = trace_param_ray(Angle(1, 12));
  need(std::abs(other.landed_estimate - rep.root) > 1e-2,
       "unrelated preperiodic rays must not land on this root");
}

void render_checks(const Atlas& atlas) {
  std::vector<Chord> chords;
  for (const ComajorRecord& rec : atlas.comajors) chords.push_back(rec.comajor);
  std::string svg1 = render_lamination(chords);
  std::string svg2 = render_lamination(chords);
  need(svg1 == svg2, "vector output must be byte-stable");

  for (const Chord& e : chords) {
    ArcGeom g = chord_arc(e);
    if (g.straight) continue;
    double dx = g.x1 - g.cx, dy = g.y1 - g.cy;
    need(std::abs(dx * dx + dy * dy - g.r * g.r) <= 1e-9, "arc must pass through its endpoints");
    need(std::abs(dx * g.x1 + dy * g.y1) <= 1e-9, "arc must meet the circle at a right angle");
  }

  PlaneGrid grid = param_grid(64, 64, 0, 0, 2.0, 200);
  auto png1 = render_plane(grid);
  auto png2 = render_plane(grid);
  need(png1 == png2, "raster output must be byte-stable");
}

void io_checks(const Atlas& atlas) {
  Atlas back = atlas_from_json(atlas_to_json(atlas));
  need(back.comajors.size() == atlas.comajors.size() && back.misiurewicz == atlas.misiurewicz,
       "atlas must round-trip through its JSON form");
  for (size_t i = 0; i < atlas.comajors.size(); ++i)
    need(back.comajors[i].comajor == atlas.comajors[i].comajor &&
             back.comajors[i].major == atlas.comajors[i].major,
         "atlas records must round-trip through JSON");
}

} // namespace

void selftest(const std::function<void(const std::string&)>& report) {
  AtlasOptions opt;
  opt.max_period = 4;
  Atlas atlas = enumerate_comajors(opt);

  circle_checks();
  report("circle: half-turn equivariance, length law, orbit bounds, order relations");
  comajor_checks(atlas);
  report("comajor: legality symmetry + reference agreement, atlas structure");
  lamination_checks();
  report("lamination: depth invariants, gap return map, induced comajors");
  plane_checks();
  report("plane: escape-rate law, escape-coordinate injectivity, symmetry");
  solve_checks();
  report("solve: multiplier relations, ray landing");
  render_checks(atlas);
  report("render: determinism, geodesic orthogonality");
  io_checks(atlas);
  report("io: atlas JSON round-trip");
}

} // namespace symcubic
