#pragma once
#include "symcubic/angle.hpp"
#include "symcubic/plane.hpp"

#include <vector>

namespace symcubic {

struct RayPoint {
  double t;  // potential
  cplx pos;
};

struct RayTrace {
  Angle theta;
  bool param = true;
  cplx c;                        // base parameter, dynamical rays only
  std::vector<RayPoint> points;  // potentials strictly decreasing
  double final_potential = 0;
  cplx landed_estimate;  // sqrt-law tail extrapolation; verify_landing refines
                         // parabolic landings, which converge far slower
};

// External parameter ray at angle theta, from potential 2 down to pot_end.
// steps > 0 fixes the number of schedule points; 0 means a geometric schedule
// of ratio 0.85. Failures throw, naming the last good potential.
RayTrace trace_param_ray(const Angle& theta, double pot_end = 1e-5, int steps = 0);

// Dynamical ray of p_c at angle theta.
RayTrace trace_dyn_ray(cplx c, const Angle& theta, double pot_end = 1e-5, int steps = 0);

} // namespace symcubic
