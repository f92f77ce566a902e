#pragma once
#include "symcubic/comajor.hpp"
#include <vector>

namespace symcubic {

struct Leaf {
  Chord chord;
  int level = 0;  // pullback round that introduced it; 0 = seed orbit
};

struct Lamination {
  ComajorRecord record;
  int depth = 0;
  std::vector<Leaf> leaves;  // sorted by chord
};

// Pullback lamination: seed with the forward orbits of both major candidates
// and their half-turn images, then adjoin admissible preimage chords of each
// round's frontier. Admissibility = no crossing with the four critical chords
// or any accepted leaf, plus the footprint-arc endpoint rules that keep the
// critical gaps intact.
Lamination build_lamination(const ComajorRecord& rec, int depth, bool parallel = true);

bool lamination_has(const Lamination& L, const Chord& c);

// Structure checks used by tests and the acceptance battery.
bool lamination_noncrossing(const Lamination& L);
bool lamination_tau_closed(const Lamination& L);
bool lamination_forward_invariant(const Lamination& L);

} // namespace symcubic
