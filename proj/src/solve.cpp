#include "symcubic/solve.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symcubic {

Multipliers multipliers(cplx c, cplx z, int n, LamType kind) {
  if (n < 1) throw std::invalid_argument("multipliers: period must be positive");
  if (kind == LamType::B && n % 2 != 0)
    throw std::invalid_argument("multipliers: type B needs an even period");

  cplx cur = z, rho = 1.0, half_prod = 1.0;
  int m = n / 2;
  for (int k = 0; k < n; ++k) {
    cplx d = 3.0 * (cur * cur - c * c);
    rho *= d;
    if (kind == LamType::B && k < m) half_prod *= d;
    cur = step(cur, c);
  }
  if (std::abs(cur - z) > 1e-6 * (1.0 + std::abs(z)))
    throw std::invalid_argument("multipliers: z does not close up at the stated period");

  Multipliers out;
  out.rho = rho;
  if (kind == LamType::B) {
    out.half = -half_prod;
    out.ray_rho = out.half * out.half;
  } else {
    out.half = 0.0;
    out.ray_rho = rho;
  }
  return out;
}

namespace {

// Newton for p_c^n(c) = c; returns true on convergence
bool center_newton(cplx& c, int n) {
  for (int it = 0; it < 80; ++it) {
    cplx u = c, du = 1.0;
    for (int k = 0; k < n; ++k) {
      du = 3.0 * (u * u - c * c) * du - 6.0 * c * u;
      u = step(u, c);
    }
    cplx F = u - c;
    if (std::abs(F) <= 1e-13 * (1.0 + std::abs(c))) return true;
    cplx dF = du - 1.0;
    if (dF == 0.0 || !std::isfinite(std::abs(F))) return false;
    c -= F / dF;
    if (!std::isfinite(std::abs(c)) || std::abs(c) > 10.0) return false;
  }
  return false;
}

bool exact_critical_period(cplx c, int n) {
  cplx z = c;
  for (int k = 1; k < n; ++k) {
    z = step(z, c);
    if (std::abs(z - c) <= 1e-6) return false;
  }
  z = step(z, c);
  return std::abs(z - c) <= 1e-9 * (1.0 + std::abs(c));
}

CenterResult accept_center(const ComajorRecord& rec, cplx c) {
  CenterResult out;
  out.c = c;
  out.period = rec.period;
  cplx u = c;
  for (int k = 0; k < rec.period; ++k) u = step(u, c);
  out.residual = std::abs(u - c);
  out.cycle_multiplier = std::abs(multipliers(c, c, rec.period, LamType::D).rho);
  if (out.residual > 1e-12 * (1.0 + std::abs(c)))
    throw std::runtime_error("find_center: residual above tolerance");
  if (out.cycle_multiplier > 1e-6)
    throw std::runtime_error("find_center: cycle through the critical point is not superattracting");
  return out;
}

} // namespace

CenterResult find_center(const ComajorRecord& rec, cplx seed) {
  if (rec.type == LamType::Misiurewicz)
    throw std::invalid_argument("find_center: Misiurewicz records have no center");
  cplx c = seed;
  if (!center_newton(c, rec.period) || !exact_critical_period(c, rec.period))
    throw std::runtime_error("find_center: Newton failed from the given seed");
  if (std::abs(c - seed) > 1.0)
    throw std::runtime_error("find_center: Newton left the seed's neighborhood");
  return accept_center(rec, c);
}

CenterResult find_center(const ComajorRecord& rec) {
  if (rec.type == LamType::Misiurewicz)
    throw std::invalid_argument("find_center: Misiurewicz records have no center");

  std::vector<RayTrace> traces;
  traces.push_back(trace_param_ray(rec.comajor.a));
  traces.push_back(trace_param_ray(rec.comajor.b));

  std::string failures;
  for (double kappa : {1.0, 2.0, 4.0, 8.0}) {
    for (const RayTrace& tr : traces) {
      size_t k = tr.points.size();
      if (k < 7) continue;
      cplx est = tr.landed_estimate;
      cplx back = tr.points[k - 6].pos;
      cplx dir = est - back;  // inward continuation of the ray
      cplx c = est + kappa * dir;
      if (!center_newton(c, rec.period)) continue;
      if (!exact_critical_period(c, rec.period)) continue;
      if (std::abs(c - est) > 0.5) continue;  // wandered to a different component
      try {
        CenterResult out = accept_center(rec, c);
        out.rays = traces;
        return out;
      } catch (const std::exception& e) {
        failures = e.what();
      }
    }
  }
  throw std::runtime_error("find_center(" + rec.comajor.str() +
                           "): no seed converged" + (failures.empty() ? "" : "; last: " + failures));
}

namespace {

struct Sys {
  cplx F1, F2;       // G - z, G_z - lambda
  cplx J11, J12, J21, J22;
};

// G = sign * p^m; derivatives via one pass over the orbit
Sys eval_system(cplx c, cplx z, int m, double sign, double lambda) {
  cplx u = 1.0, v = 0.0, s = 0.0, t = 0.0;
  cplx cur = z;
  for (int k = 0; k < m; ++k) {
    cplx A = 3.0 * (cur * cur - c * c);
    cplx Bc = -6.0 * c * cur;
    cplx nu = A * u;
    cplx nv = A * v + Bc;
    cplx ns = A * s + 6.0 * cur * u * u;
    cplx nt = A * t + (6.0 * cur * v - 6.0 * c) * u;
    u = nu;
    v = nv;
    s = ns;
    t = nt;
    cur = step(cur, c);
  }
  Sys out;
  out.F1 = sign * cur - z;
  out.F2 = sign * u - lambda;
  out.J11 = sign * v;        // d F1 / d c
  out.J12 = sign * u - 1.0;  // d F1 / d z
  out.J21 = sign * t;        // d F2 / d c
  out.J22 = sign * s;        // d F2 / d z
  return out;
}

bool root_newton(cplx& c, cplx& z, int m, double sign, double lambda) {
  for (int it = 0; it < 60; ++it) {
    Sys S = eval_system(c, z, m, sign, lambda);
    double scale = 1.0 + std::abs(z);
    if (std::abs(S.F1) + std::abs(S.F2) <= 1e-13 * scale) return true;
    cplx det = S.J11 * S.J22 - S.J12 * S.J21;
    if (std::abs(det) < 1e-280) return false;
    cplx dc = (S.F1 * S.J22 - S.F2 * S.J12) / det;
    cplx dz = (S.J11 * S.F2 - S.J21 * S.F1) / det;
    c -= dc;
    z -= dz;
    if (!std::isfinite(std::abs(c)) || !std::isfinite(std::abs(z))) return false;
  }
  return false;
}

} // namespace

RootResult find_root(const ComajorRecord& rec, cplx center) {
  if (rec.type == LamType::Misiurewicz)
    throw std::invalid_argument("find_root: Misiurewicz records have no component root");
  if (std::abs(center) < 1e-8)
    throw std::invalid_argument("find_root: the main component has no root");

  int n = rec.period;
  bool flip = rec.type == LamType::B;
  int m = flip ? n / 2 : n;
  double sign = flip ? -1.0 : 1.0;

  // internal multiplier path lambda: 0 -> 1 from the superattracting center
  cplx c = center, z = center;
  double lambda = 0.0, dl = 0.25;
  while (lambda < 1.0) {
    double next = std::min(1.0, lambda + dl);
    cplx ct = c, zt = z;
    if (root_newton(ct, zt, m, sign, next)) {
      c = ct;
      z = zt;
      lambda = next;
      dl = std::min(0.25, dl * 1.4);
    } else {
      dl *= 0.5;
      if (dl < 1e-7)
        throw std::runtime_error("find_root(" + rec.comajor.str() +
                                 "): multiplier continuation stalled at lambda=" +
                                 std::to_string(lambda));
    }
  }

  if (n == 1) {
    // Half-turn symmetry pins the period-one parabolic at the origin, where the
    // joint system is triply degenerate (p(z) - z = z^3 there) and the 2x2
    // Newton cannot resolve z.  Polish c alone on p'(0) = 1 and set z exactly.
    for (int it = 0; it < 60; ++it) {
      cplx F = -3.0 * c * c - 1.0;
      if (std::abs(F) <= 1e-15) break;
      c -= F / (-6.0 * c);
    }
    z = 0.0;
  }

  Sys S = eval_system(c, z, m, sign, 1.0);
  double residual = std::max(std::abs(S.F1), std::abs(S.F2));
  if (residual > 1e-10)
    throw std::runtime_error("find_root: residual above tolerance at lambda=1");

  RootResult out;
  out.c = c;
  out.z = z;
  out.residual = residual;
  out.mult = multipliers(c, z, n, rec.type);
  return out;
}

namespace {

// period-n point of p_c by Newton from a seed
bool cycle_newton(cplx c, int n, cplx& z) {
  for (int it = 0; it < 60; ++it) {
    cplx u = z, du = 1.0;
    for (int k = 0; k < n; ++k) {
      du = 3.0 * (u * u - c * c) * du;
      u = step(u, c);
    }
    cplx dF = du - 1.0;
    if (std::abs(dF) < 1e-280) return false;
    cplx s = (u - z) / dF;
    z -= s;
    if (!std::isfinite(std::abs(z))) return false;
    if (std::abs(s) <= 1e-14 * (1.0 + std::abs(z))) return true;
  }
  return false;
}

cplx orbit_derivative(cplx c, int m, cplx z) {
  cplx u = z, du = 1.0;
  for (int k = 0; k < m; ++k) {
    du = 3.0 * (u * u - c * c) * du;
    u = step(u, c);
  }
  return du;
}

bool exact_cycle_period(cplx c, int n, cplx z) {
  cplx u = z;
  for (int k = 1; k < n; ++k) {
    u = step(u, c);
    if (std::abs(u - z) < 1e-8) return false;
  }
  return true;
}

// Landing point of a characteristic parameter ray of a Fatou record.  The raw
// trace approaches the root only like 1 / log(1/t), with slowly rotating
// corrections, so no extrapolation in the potential gets anywhere near 1e-3
// from t = 1e-5.  Instead use the cycle that is about to bifurcate: its return
// derivative (half-turn return for type B) equals 1 exactly at the root, and c
// is an analytic function of nu = derivative - 1 there.  The cycle is seeded
// from the dynamical ray at the major angle, continued along the trace tail,
// and c is regressed on powers of nu; the constant term is the landing point.
cplx landing_chart_estimate(const RayTrace& tr, const ComajorRecord& rec) {
  std::vector<cplx> cs;
  for (const RayPoint& p : tr.points)
    if (p.t <= 1e-2) cs.push_back(p.pos);
  int mpts = (int)cs.size();
  if (mpts < 12) return tr.landed_estimate;

  int n = rec.period;
  bool flip = rec.type == LamType::B;
  int half = flip ? n / 2 : n;

  cplx z;
  try {
    RayTrace seed = trace_dyn_ray(cs.back(), rec.major.a, 1e-4);
    z = seed.points.back().pos;
  } catch (const std::exception&) {
    return tr.landed_estimate;
  }
  if (!cycle_newton(cs.back(), n, z)) return tr.landed_estimate;
  if (n > 1 && !exact_cycle_period(cs.back(), n, z)) return tr.landed_estimate;

  std::vector<cplx> nu(mpts);
  cplx zc = z;
  for (int k = mpts - 1; k >= 0; --k) {
    if (!cycle_newton(cs[k], n, zc)) return tr.landed_estimate;
    cplx d = orbit_derivative(cs[k], half, zc);
    nu[k] = (flip ? -d : d) - 1.0;
  }

  int deg = mpts >= 36 ? 5 : mpts >= 24 ? 4 : mpts >= 16 ? 3 : 2;
  int nb = deg + 1;
  std::vector<std::vector<cplx>> F(mpts, std::vector<cplx>(nb));
  std::vector<double> scale(nb);
  for (int k = 0; k < mpts; ++k) {
    F[k][0] = 1.0;
    for (int i = 1; i < nb; ++i) F[k][i] = F[k][i - 1] * nu[k];
  }
  for (int i = 0; i < nb; ++i) {
    double s = 0;
    for (int k = 0; k < mpts; ++k) s += std::norm(F[k][i]);
    scale[i] = 1.0 / std::sqrt(s);
  }
  std::vector<std::vector<cplx>> M(nb, std::vector<cplx>(nb, 0.0));
  std::vector<cplx> rhs(nb, 0.0);
  for (int k = 0; k < mpts; ++k)
    for (int i = 0; i < nb; ++i) {
      cplx ci = std::conj(F[k][i]) * scale[i];
      for (int j = 0; j < nb; ++j) M[i][j] += ci * F[k][j] * scale[j];
      rhs[i] += ci * cs[k];
    }
  for (int col = 0; col < nb; ++col) {
    int piv = col;
    for (int r = col + 1; r < nb; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    if (std::abs(M[col][col]) < 1e-280) return tr.landed_estimate;
    for (int r = col + 1; r < nb; ++r) {
      cplx f = M[r][col] / M[col][col];
      for (int k2 = col; k2 < nb; ++k2) M[r][k2] -= f * M[col][k2];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<cplx> sol(nb);
  for (int r = nb - 1; r >= 0; --r) {
    cplx s = rhs[r];
    for (int k2 = r + 1; k2 < nb; ++k2) s -= M[r][k2] * sol[k2];
    sol[r] = s / M[r][r];
  }
  cplx est = sol[0] * scale[0];
  // the landing point sits within the approach scale of the trace end
  if (!std::isfinite(std::abs(est)) || std::abs(est - cs.back()) > 0.5) return tr.landed_estimate;
  return est;
}

LandingReport land_common(std::vector<Angle> angles, double pot_end, double tol,
                          const ComajorRecord* rec) {
  LandingReport rep;
  rep.angles = std::move(angles);
  std::vector<RayTrace> traces;
  for (const Angle& a : rep.angles) {
    traces.push_back(trace_param_ray(a, pot_end));
    rep.endpoints.push_back(rec && rec->type != LamType::Misiurewicz
                                ? landing_chart_estimate(traces.back(), *rec)
                                : traces.back().landed_estimate);
  }
  for (size_t i = 0; i < rep.endpoints.size(); ++i)
    for (size_t j = i + 1; j < rep.endpoints.size(); ++j)
      rep.spread = std::max(rep.spread, std::abs(rep.endpoints[i] - rep.endpoints[j]));

  if (rec && rec->type != LamType::Misiurewicz) {
    CenterResult ctr = find_center(*rec);
    RootResult rt = find_root(*rec, ctr.c);
    rep.root = rt.c;
    rep.has_root = true;
    for (const cplx& e : rep.endpoints)
      rep.root_dist = std::max(rep.root_dist, std::abs(e - rep.root));
  }
  rep.pass = rep.spread <= tol && (!rep.has_root || rep.root_dist <= tol);
  return rep;
}

} // namespace

LandingReport verify_landing(const ComajorRecord& rec, double pot_end, double tol) {
  return land_common({rec.comajor.a, rec.comajor.b}, pot_end, tol, &rec);
}

LandingReport verify_landing_class(const std::vector<Angle>& cls, double pot_end, double tol) {
  if (cls.empty()) throw std::invalid_argument("verify_landing_class: empty class");
  return land_common(cls, pot_end, tol, nullptr);
}

} // namespace symcubic
