#include "symcubic/plane.hpp"

#include <cmath>
#include <stdexcept>

namespace symcubic {

cplx step(cplx z, cplx c) {
  double x = z.real(), y = z.imag();
  double a = c.real(), b = c.imag();
  double x2 = x * x, y2 = y * y;
  double a2 = a * a, b2 = b * b;
  double zr = x * (x2 - 3 * y2);  // z^3
  double zi = y * (3 * x2 - y2);
  double cr = a2 - b2;  // c^2
  double ci = 2 * (a * b);
  double tr = 3 * (cr * x - ci * y);  // 3 c^2 z
  double ti = 3 * (cr * y + ci * x);
  return cplx(zr - tr, zi - ti);
}

double escape_radius(cplx c) { return std::max(4.0, 2.0 * std::abs(c)); }

EscapeResult escape_time(cplx c, cplx z, int limit) {
  if (!std::isfinite(std::abs(c)) || !std::isfinite(std::abs(z)))
    throw std::invalid_argument("escape_time: non-finite input");
  double R = escape_radius(c);
  double R2 = R * R;
  EscapeResult out;
  for (int n = 0; n <= limit; ++n) {
    if (std::norm(z) > R2) {
      out.escaped = true;
      out.steps = n;
      out.final = z;
      out.green_estimate = std::pow(3.0, -n) * std::log(std::abs(z));
      return out;
    }
    if (n < limit) z = step(z, c);
  }
  out.final = z;
  return out;
}

namespace {

// assumes z already past the escape radius at step n; pushes far out so the
// 3^{-n} log is accurate to full precision
double green_tail(cplx c, cplx z, int n) {
  while (std::abs(z) < 1e100) {
    z = step(z, c);
    ++n;
  }
  return std::pow(3.0, -n) * std::log(std::abs(z));
}

} // namespace

double green(cplx c, cplx z, int limit) {
  double R2 = escape_radius(c);
  R2 *= R2;
  for (int n = 0; n < limit; ++n) {
    if (std::norm(z) > R2) return green_tail(c, z, n);
    z = step(z, c);
  }
  return 0.0;
}

double PlaneGrid::px(int i) const {
  long u = 2L * i + 1 - w;  // symmetric integer offsets keep +/- pixels exact mirrors
  return cx + (u * halfw) / w;
}

double PlaneGrid::py(int j) const {
  double halfh = halfw * (static_cast<double>(h) / w);
  long v = h - 1 - 2L * j;
  return cy + (v * halfh) / h;
}

namespace {

template <class F>
PlaneGrid fill_grid(int w, int h, double cx, double cy, double halfw, bool parallel, F pixel) {
  PlaneGrid G;
  G.w = w;
  G.h = h;
  G.cx = cx;
  G.cy = cy;
  G.halfw = halfw;
  G.member.assign(static_cast<size_t>(w) * h, 0);
  G.greenv.assign(static_cast<size_t>(w) * h, 0.0);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      double gv = pixel(cplx(G.px(i), G.py(j)));
      G.greenv[G.idx(i, j)] = gv;
      G.member[G.idx(i, j)] = gv == 0.0 ? 1 : 0;
    }
  }
  return G;
}

} // namespace

PlaneGrid param_grid(int w, int h, double cx, double cy, double halfw, int limit, bool parallel) {
  return fill_grid(w, h, cx, cy, halfw, parallel,
                   [limit](cplx c) { return green(c, c, limit); });
}

PlaneGrid julia_grid(cplx c, int w, int h, double cx, double cy, double halfw, int limit,
                     bool parallel) {
  return fill_grid(w, h, cx, cy, halfw, parallel,
                   [c, limit](cplx z) { return green(c, z, limit); });
}

} // namespace symcubic
