#pragma once
#include <complex>
#include <vector>

namespace symcubic {

using cplx = std::complex<double>;

// One step of z -> z^3 - 3 c^2 z, component-wise so quarter-turn rotations of
// (c, z) rotate the result bit-exactly. Keep the expression tree as written;
// the grid symmetry checks depend on it (and on -ffp-contract=off).
cplx step(cplx z, cplx c);

double escape_radius(cplx c);

struct EscapeResult {
  bool escaped = false;
  int steps = -1;              // first n with |p^n(z)| beyond the escape radius
  cplx final{0.0, 0.0};        // the orbit point at that n (or at the limit)
  double green_estimate = 0;   // crude 3^{-n} log|final| at escape, 0 if bounded
};

// Iterate z under p_c until escape or the limit; rejects non-finite inputs.
EscapeResult escape_time(cplx c, cplx z, int limit = 2000);

// rate of escape: 3^{-n} log |z_n|, pushed far out for accuracy; 0 if bounded
double green(cplx c, cplx z, int limit = 2000);

struct PlaneGrid {
  int w = 0, h = 0;
  double cx = 0, cy = 0, halfw = 1;  // center and half-width; square pixels
  std::vector<char> member;          // bounded within the iteration limit
  std::vector<double> greenv;        // escape rate, 0 for members
  double px(int i) const;
  double py(int j) const;  // +imag is up: row 0 sits on top
  int idx(int i, int j) const { return j * w + i; }
};

// connectedness-locus slice: per pixel c, iterate the critical point c
PlaneGrid param_grid(int w, int h, double cx, double cy, double halfw, int limit = 400,
                     bool parallel = true);
// filled-set slice for a fixed c
PlaneGrid julia_grid(cplx c, int w, int h, double cx, double cy, double halfw, int limit = 400,
                     bool parallel = true);

// Conformal escape coordinate at the image of the critical point,
// normalized so bottcher_psi(c) is tangent to cbrt(2) * c at infinity.
cplx bottcher_psi(cplx c);

// Inverse escape coordinate: z with B_c(z) = w. Requires w (and hence z) in
// the tail-safe region |z|^2 >= max(6|c|^2, 4); throws otherwise.
cplx bottcher_inverse(cplx c, cplx w);

} // namespace symcubic
