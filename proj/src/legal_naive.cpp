#include "symcubic/comajor.hpp"
#include <set>

// Reference legality checker: plain rational arithmetic, full orbits, all
// pairs. Deliberately shares nothing with the integer-position engine beyond
// the circle primitives.

namespace symcubic {

LegalityReport is_legal_naive(const Chord& c) {
  LegalityReport rep;
  if (c.degenerate()) {
    rep.legal = true;
    rep.reason = "degenerate comajor";
    return rep;
  }
  if (chord_length(c) > mpq_class(1, 6)) {
    rep.legal = false;
    rep.reason = "arc longer than 1/6";
    return rep;
  }

  std::vector<Chord> chain;  // forward orbit of the pair, in order
  {
    std::set<Chord> seen;
    Chord cur = c;
    while (!seen.count(cur)) {
      seen.insert(cur);
      chain.push_back(cur);
      cur = triple(cur);
    }
  }
  std::vector<Chord> all = chain;
  for (const Chord& ch : chain) all.push_back(tau(ch));

  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (crosses(all[i], all[j])) {
        rep.legal = false;
        rep.reason = "orbit chords cross: " + all[i].str() + " x " + all[j].str();
        rep.crossing = {all[i], all[j]};
        return rep;
      }

  StripSet s = short_strips(c);
  for (size_t k = 1; k < chain.size(); ++k) {
    for (const Chord& m : {s.M, s.Mp, s.tM, s.tMp})
      if (crosses(chain[k], m)) {
        rep.legal = false;
        rep.reason = "forward image " + chain[k].str() + " crosses major " + m.str();
        rep.crossing = {chain[k], m};
        rep.strip_hit = chain[k];
        return rep;
      }
    for (const Arc& A : s.arcs)
      for (const Angle& x : {chain[k].a, chain[k].b})
        if (in_open_arc(x, A.s, A.e)) {
          rep.legal = false;
          rep.reason = "forward image " + chain[k].str() + " has an endpoint inside footprint (" +
                       A.s.str() + ", " + A.e.str() + ")";
          rep.strip_hit = chain[k];
          return rep;
        }
  }
  rep.legal = true;
  rep.reason = "legal";
  return rep;
}

} // namespace symcubic
