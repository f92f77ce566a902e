#pragma once
#include "symcubic/comajor.hpp"
#include "symcubic/rays.hpp"

#include <vector>

namespace symcubic {

struct Multipliers {
  cplx rho;      // (p^n)' along the full cycle
  cplx ray_rho;  // rho for type D; half^2 for type B
  cplx half;     // -(p^m)' at z with m = n/2; type B only, else 0
};
// z must close up to period n within 1e-6. kind B requires n even.
Multipliers multipliers(cplx c, cplx z, int n, LamType kind);

struct CenterResult {
  cplx c;
  int period = 0;
  double residual = 0;          // |p^n(c) - c|
  double cycle_multiplier = 0;  // |(p^n)'| through the critical cycle, ~0
  std::vector<RayTrace> rays;   // characteristic traces used for seeding
};
// Newton on p_c^n(c) = c, seeded from the record's traced parameter rays.
CenterResult find_center(const ComajorRecord& rec);
CenterResult find_center(const ComajorRecord& rec, cplx seed);

struct RootResult {
  cplx c, z;
  Multipliers mult;  // ray_rho = 1 (D) resp. half = 1 (B) at the root
  double residual = 0;
};
// Continue the attracting cycle from the center along real internal
// multiplier 0 -> 1. Rejects the main component (center 0, which has no root).
RootResult find_root(const ComajorRecord& rec, cplx center);

struct LandingReport {
  std::vector<Angle> angles;
  std::vector<cplx> endpoints;
  cplx root;
  bool has_root = false;
  double spread = 0;     // max pairwise endpoint distance
  double root_dist = 0;  // max endpoint-to-root distance
  bool pass = false;
};
// Trace all characteristic rays of a record (or a Misiurewicz angle class)
// and compare landing estimates, and for Fatou records the Newton root.
LandingReport verify_landing(const ComajorRecord& rec, double pot_end = 1e-5, double tol = 1e-3);
LandingReport verify_landing_class(const std::vector<Angle>& cls, double pot_end = 1e-5,
                                   double tol = 1e-3);

} // namespace symcubic
