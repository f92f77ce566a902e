#include "symcubic/rays.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symcubic {
namespace {

constexpr double kPotTop = 2.0;
constexpr double kTwoPi = 6.283185307179586476925286766559;

// tripling level that lifts potential t into the tail-safe annulus for the
// current |c|; returns 3^N t
double lift_level(double absc, double t, int& N) {
  double need = std::max(2.0, std::log(3.0 * std::max(1.0, absc)));
  N = 0;
  double tt = t;
  while (tt < need) {
    tt *= 3.0;
    if (++N > 700) throw std::runtime_error("ray: potential underflows the lift level");
  }
  return tt;
}

bool bad(cplx v) { return !std::isfinite(v.real()) || !std::isfinite(v.imag()); }

// one schedule point of a parameter ray: solve p_c^N(2c) = B_c^{-1}(W),
// refreshing the target W-preimage as c moves
cplx param_point(cplx cg, const Angle& theta, double t) {
  for (int it = 0; it < 60; ++it) {
    int N;
    double tt = lift_level(std::abs(cg), t, N);
    Angle th = triple_pow(theta, N);
    cplx W = std::polar(std::exp(tt), kTwoPi * to_double(th));
    cplx Z = bottcher_inverse(cg, W);
    cplx u = 2.0 * cg, du = 2.0;
    for (int k = 0; k < N; ++k) {
      du = 3.0 * (u * u - cg * cg) * du - 6.0 * cg * u;
      u = step(u, cg);
    }
    cplx F = u - Z;
    if (bad(F) || bad(du) || du == 0.0) throw std::runtime_error("param ray: Newton blew up");
    cplx dc = F / du;
    // the residual floor scales with |du|, so a tiny step also counts as converged
    if (std::abs(F) <= 1e-12 * (1.0 + std::abs(Z)) || std::abs(dc) <= 1e-15 * (1.0 + std::abs(cg)))
      return cg;
    cg -= dc;
    if (bad(cg)) throw std::runtime_error("param ray: Newton blew up");
  }
  throw std::runtime_error("param ray: Newton stalled");
}

// one schedule point of a dynamical ray: solve p_c^N(z) = B_c^{-1}(W)
cplx dyn_point(cplx c, cplx zg, const Angle& theta, double t) {
  for (int it = 0; it < 60; ++it) {
    int N;
    double tt = lift_level(std::abs(c), t, N);
    Angle th = triple_pow(theta, N);
    cplx W = std::polar(std::exp(tt), kTwoPi * to_double(th));
    cplx Z = bottcher_inverse(c, W);
    cplx u = zg, du = 1.0;
    for (int k = 0; k < N; ++k) {
      du *= 3.0 * (u * u - c * c);
      u = step(u, c);
    }
    cplx F = u - Z;
    if (bad(F) || bad(du) || du == 0.0) throw std::runtime_error("dyn ray: Newton blew up");
    cplx dz = F / du;
    if (std::abs(F) <= 1e-12 * (1.0 + std::abs(Z)) || std::abs(dz) <= 1e-15 * (1.0 + std::abs(zg)))
      return zg;
    zg -= dz;
    if (bad(zg)) throw std::runtime_error("dyn ray: Newton blew up");
  }
  throw std::runtime_error("dyn ray: Newton stalled");
}

// geometric split on failure, at most two levels deep
template <class PointFn>
cplx advance(cplx prev, double t_prev, double t_next, int depth, PointFn&& at) {
  try {
    return at(prev, t_next);
  } catch (const std::exception&) {
    if (depth >= 2) throw;
    double t_mid = std::sqrt(t_prev * t_next);
    cplx m = advance(prev, t_prev, t_mid, depth + 1, at);
    return advance(m, t_mid, t_next, depth + 1, at);
  }
}

std::vector<double> schedule(double pot_end, int steps) {
  std::vector<double> ts;
  if (steps > 0) {
    if (steps == 1) return {pot_end};
    double ratio = std::pow(pot_end / kPotTop, 1.0 / (steps - 1));
    double t = kPotTop;
    for (int i = 0; i < steps - 1; ++i) {
      ts.push_back(t);
      t *= ratio;
    }
    ts.push_back(pot_end);
    return ts;
  }
  double t = kPotTop;
  while (t > pot_end * 1.0000001) {
    ts.push_back(t);
    t *= 0.85;
  }
  ts.push_back(pot_end);
  return ts;
}

// c(t) ~ r + a sqrt(t) + b t near the landing point; least squares for r
cplx tail_fit(const std::vector<RayPoint>& pts) {
  double tmin = pts.back().t;
  double cut = std::max(1e-3, 120.0 * tmin);
  double M[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  cplx rhs[3] = {0, 0, 0};
  int used = 0;
  for (const auto& p : pts) {
    if (p.t > cut) continue;
    double f[3] = {1.0, std::sqrt(p.t), p.t};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) M[i][j] += f[i] * f[j];
      rhs[i] += f[i] * p.pos;
    }
    ++used;
  }
  if (used < 5) return pts.back().pos;
  // gaussian elimination with partial pivoting
  int pr[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(M[pr[r]][col]) > std::fabs(M[pr[piv]][col])) piv = r;
    std::swap(pr[col], pr[piv]);
    if (std::fabs(M[pr[col]][col]) < 1e-300) return pts.back().pos;
    for (int r = col + 1; r < 3; ++r) {
      double f = M[pr[r]][col] / M[pr[col]][col];
      for (int k = col; k < 3; ++k) M[pr[r]][k] -= f * M[pr[col]][k];
      rhs[pr[r]] -= f * rhs[pr[col]];
    }
  }
  cplx x[3];
  for (int r = 2; r >= 0; --r) {
    cplx s = rhs[pr[r]];
    for (int k = r + 1; k < 3; ++k) s -= M[pr[r]][k] * x[k];
    x[r] = s / M[pr[r]][r];
  }
  return x[0];
}

template <class PointFn>
void run_trace(RayTrace& R, double pot_end, int steps, cplx seed, PointFn&& at,
               const char* what) {
  std::vector<double> sched = schedule(pot_end, steps);
  cplx cur = at(seed, sched[0]);
  R.points.push_back({sched[0], cur});
  for (size_t i = 1; i < sched.size(); ++i) {
    try {
      cur = advance(cur, sched[i - 1], sched[i], 0, at);
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << what << "(" << R.theta.str() << "): failed between potentials " << sched[i - 1]
         << " and " << sched[i] << "; last good point at t=" << sched[i - 1] << " (" << e.what()
         << ")";
      throw std::runtime_error(os.str());
    }
    R.points.push_back({sched[i], cur});
  }
  R.final_potential = R.points.back().t;
  R.landed_estimate = tail_fit(R.points);
}

} // namespace

RayTrace trace_param_ray(const Angle& theta, double pot_end, int steps) {
  if (!(pot_end > 0) || pot_end >= kPotTop)
    throw std::invalid_argument("trace_param_ray: pot_end must lie in (0, 2)");
  RayTrace R;
  R.theta = theta;
  R.param = true;
  cplx seed = std::polar(std::exp(kPotTop) / std::cbrt(2.0), kTwoPi * to_double(theta));
  run_trace(
      R, pot_end, steps, seed,
      [&theta](cplx cg, double t) { return param_point(cg, theta, t); }, "trace_param_ray");
  return R;
}

RayTrace trace_dyn_ray(cplx c, const Angle& theta, double pot_end, int steps) {
  if (!(pot_end > 0) || pot_end >= kPotTop)
    throw std::invalid_argument("trace_dyn_ray: pot_end must lie in (0, 2)");
  RayTrace R;
  R.theta = theta;
  R.param = false;
  R.c = c;
  cplx seed = std::polar(std::exp(kPotTop), kTwoPi * to_double(theta));
  run_trace(
      R, pot_end, steps, seed, [c, &theta](cplx zg, double t) { return dyn_point(c, zg, theta, t); },
      "trace_dyn_ray");
  return R;
}

} // namespace symcubic
