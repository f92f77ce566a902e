#pragma once
#include "symcubic/angle.hpp"

namespace symcubic {

// Unordered pair of circle points (a hyperbolic chord); stored with a <= b.
struct Chord {
  Angle a, b;
  Chord() = default;
  Chord(Angle x, Angle y);
  bool degenerate() const { return a == b; }
  std::string str() const;

  friend bool operator==(const Chord& x, const Chord& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Chord& x, const Chord& y) { return !(x == y); }
  friend bool operator<(const Chord& x, const Chord& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }
};

// Length of the shorter subtended arc, in [0, 1/2]; 1/2 exactly for diameters.
mpq_class chord_length(const Chord& c);

// Arc length of the image chord under tripling, as a function of length alone.
mpq_class tripled_length(const mpq_class& len);

Chord triple(const Chord& c);
Chord tau(const Chord& c);

// Strict interleaving of endpoints. Chords sharing an endpoint, or with a
// degenerate argument, do not cross.
bool crosses(const Chord& c1, const Chord& c2);

// True iff both endpoints of `inner` lie in the closed shorter arc of `outer`.
// Throws for diameter arguments (no well-defined short side).
bool is_under(const Chord& inner, const Chord& outer);

} // namespace symcubic
