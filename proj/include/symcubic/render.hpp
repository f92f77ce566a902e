#pragma once
#include "symcubic/lamination.hpp"
#include "symcubic/plane.hpp"
#include "symcubic/rays.hpp"

#include <string>
#include <vector>

namespace symcubic {

// Hyperbolic geodesic of a chord: the circular arc through both endpoints
// meeting the unit circle at right angles. Diameters degenerate to segments.
struct ArcGeom {
  bool straight = false;
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // endpoints on the unit circle
  double cx = 0, cy = 0, r = 0;           // arc circle when curved
};
ArcGeom chord_arc(const Chord& e);

struct LamStyle {
  int size = 800;        // square canvas in pixels
  bool geodesic = true;  // straight chords are the debugging mode
  double stroke = 1.0;
  std::string circle_color = "#303030";
  std::string chord_color = "#b03434";
  std::string seed_color = "#1f5fa8";  // level-0 leaves when rendering a Lamination
};

// SVG disk diagram of a non-crossing chord set; crossing input is rejected
// with a diagnostic naming the offending pair. Output bytes are stable for
// fixed input and style.
std::string render_lamination(const std::vector<Chord>& chords, const LamStyle& style = {});
std::string render_lamination(const Lamination& L, const LamStyle& style = {});

struct RGB {
  unsigned char r = 0, g = 0, b = 0;
};

struct PlaneStyle {
  RGB interior{38, 38, 48};
  RGB exterior_near{108, 138, 210};  // escape rate ~ 0 (close to the set)
  RGB exterior_far{250, 250, 252};
  RGB ray_color{225, 122, 24};
  RGB mark_color{24, 165, 70};
  int mark_half = 4;  // cross arm, pixels
};
PlaneStyle plane_style_from_json(const std::string& text);

struct Overlay {
  std::vector<RayTrace> rays;  // drawn as polylines
  std::vector<cplx> marks;     // drawn as crosses
};

// PNG bytes (8-bit RGB, mathematical orientation: +imag up) for a plane grid:
// interior solid, exterior shaded by escape rate, overlays on top.
std::vector<unsigned char> render_plane(const PlaneGrid& grid, const Overlay& overlay = {},
                                        const PlaneStyle& style = {});

} // namespace symcubic
