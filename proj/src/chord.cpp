#include "symcubic/chord.hpp"
#include <stdexcept>
#include <utility>

namespace symcubic {

Chord::Chord(Angle x, Angle y) : a(std::move(x)), b(std::move(y)) {
  if (b < a) std::swap(a, b);
}

std::string Chord::str() const { return "{" + a.str() + ", " + b.str() + "}"; }

mpq_class chord_length(const Chord& c) {
  mpq_class d = arc_length(c.a, c.b);
  if (d > mpq_class(1, 2)) d = 1 - d;
  return d;
}

mpq_class tripled_length(const mpq_class& len) {
  if (len < 0 || len > mpq_class(1, 2))
    throw std::invalid_argument("tripled_length: not a chord length");
  if (len <= mpq_class(1, 6)) return 3 * len;
  mpq_class v = 3 * len - 1;
  return v < 0 ? mpq_class(-v) : v;
}

Chord triple(const Chord& c) { return Chord(triple(c.a), triple(c.b)); }

Chord tau(const Chord& c) { return Chord(tau(c.a), tau(c.b)); }

bool crosses(const Chord& c1, const Chord& c2) {
  if (c1.degenerate() || c2.degenerate()) return false;
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
  bool ia = in_open_arc(c2.a, c1.a, c1.b);
  bool ib = in_open_arc(c2.b, c1.a, c1.b);
  return ia != ib;
}

bool is_under(const Chord& inner, const Chord& outer) {
  if (chord_length(inner) == mpq_class(1, 2) || chord_length(outer) == mpq_class(1, 2))
    throw std::invalid_argument("is_under: diameter has no short side");
  Angle s = outer.a, e = outer.b;
  if (arc_length(s, e) > mpq_class(1, 2)) std::swap(s, e);
  return in_closed_arc(inner.a, s, e) && in_closed_arc(inner.b, s, e);
}

} // namespace symcubic
