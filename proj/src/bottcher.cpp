#include "symcubic/plane.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace symcubic {
namespace {

double tail_safe_norm(cplx c) { return std::max(6.0 * std::norm(c), 4.0); }

// B_c and dB/dz through the convergent tail product; every orbit point of z
// must satisfy |3c^2/z_k^2| <= 1/2, i.e. |z_k|^2 >= 6|c|^2.
void bottcher_tail(cplx c, cplx z, cplx& B, cplx& dB) {
  double safe = tail_safe_norm(c);
  cplx c2 = c * c;
  cplx cur = z, u = 1.0;  // u = d z_k / d z
  cplx lsum = 0.0, dsum = 0.0;
  double w3 = 1.0 / 3.0;
  for (int k = 0; k < 200; ++k) {
    if (std::norm(cur) < safe)
      throw std::runtime_error("bottcher: orbit left the tail-safe region");
    cplx cur2 = cur * cur;
    cplx r = 1.0 - 3.0 * c2 / cur2;
    cplx lg = std::log(r);
    cplx dterm = (6.0 * c2 / (cur2 * cur)) * u / r;
    lsum += w3 * lg;
    dsum += w3 * dterm;
    if (w3 * (std::abs(lg) + std::abs(dterm)) < 1e-19) break;
    u = 3.0 * (cur2 - c2) * u;
    cur = step(cur, c);
    w3 /= 3.0;
  }
  B = z * std::exp(lsum);
  dB = B * (1.0 / z + dsum);
}

double ang_dist(double a, double b) {
  double d = std::fmod(a - b, 2.0 * M_PI);
  if (d > M_PI) d -= 2.0 * M_PI;
  if (d <= -M_PI) d += 2.0 * M_PI;
  return std::fabs(d);
}

// the cube root of B whose direction matches the reference point; the match
// must be unambiguous or we refuse rather than guess
cplx cube_root_toward(cplx B, cplx ref) {
  double mag = std::cbrt(std::abs(B));
  double base = std::arg(B) / 3.0;
  double target = std::arg(ref);
  double bestd = 1e9, secondd = 1e9;
  cplx best = 0;
  for (int j = 0; j < 3; ++j) {
    double ang = base + j * (2.0 * M_PI / 3.0);
    double d = ang_dist(ang, target);
    if (d < bestd) {
      secondd = bestd;
      bestd = d;
      best = std::polar(mag, ang);
    } else if (d < secondd) {
      secondd = d;
    }
  }
  if (bestd > 0.55 || secondd < 0.9)
    throw std::runtime_error("bottcher: cube-root ladder is ambiguous");
  return best;
}

} // namespace

cplx bottcher_psi(cplx c) {
  if (c == 0.0) throw std::invalid_argument("bottcher_psi: c = 0 lies in the locus");
  double safe = tail_safe_norm(c);
  std::vector<cplx> orbit;
  cplx z = 2.0 * c;
  int m = -1;
  for (int k = 0; k < 2000; ++k) {
    orbit.push_back(z);
    if (std::norm(z) >= safe) {
      m = k;
      break;
    }
    z = step(z, c);
  }
  if (m < 0) throw std::runtime_error("bottcher_psi: c does not escape (inside the locus?)");

  cplx B, dB;
  bottcher_tail(c, orbit[m], B, dB);
  for (int k = m - 1; k >= 0; --k) B = cube_root_toward(B, orbit[k]);
  return B;
}

cplx bottcher_inverse(cplx c, cplx w) {
  if (std::norm(w) < tail_safe_norm(c))
    throw std::invalid_argument("bottcher_inverse: w below the tail-safe region");
  cplx z = w;
  for (int it = 0; it < 60; ++it) {
    cplx B, dB;
    bottcher_tail(c, z, B, dB);
    cplx F = B - w;
    if (std::abs(F) <= 1e-13 * (1.0 + std::abs(w))) return z;
    z -= F / dB;
  }
  cplx B, dB;
  bottcher_tail(c, z, B, dB);
  if (std::abs(B - w) <= 1e-9 * (1.0 + std::abs(w))) return z;
  throw std::runtime_error("bottcher_inverse: Newton failed to converge");
}

} // namespace symcubic
