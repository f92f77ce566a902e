#pragma once
#include "symcubic/chord.hpp"
#include <optional>

namespace symcubic {

enum class LamType { B, D, Misiurewicz };
const char* lam_type_name(LamType t);

// A comajor is a chord of arc length <= 1/6 between two strictly preperiodic
// angles. majors_of lifts it to the two candidate majors a third of a turn away:
// with (a,b) the positively oriented short arc, M1 = {a+1/3, b+2/3} (the long
// candidate) and M2 = {a+2/3, b+1/3} (the short one).
std::pair<Chord, Chord> majors_of(const Chord& comajor);

struct Arc {
  Angle s, e;  // ccw from s to e
};

// The two strips cut out by the major candidates and their half-turn images.
struct StripSet {
  Chord M, Mp, tM, tMp;      // {a+1/3,b+2/3}, {a+2/3,b+1/3} and half-turn images
  std::array<Arc, 4> arcs;   // footprints: [a+1/3,b+1/3], [a+2/3,b+2/3], + half-turn
};
StripSet short_strips(const Chord& comajor);

struct LegalityReport {
  bool legal = false;
  std::string reason;                            // human-readable verdict
  std::optional<std::pair<Chord, Chord>> crossing;  // witness pair, if any
  std::optional<Chord> strip_hit;                // forward image violating a strip
};

// Legality of a candidate comajor: no two chords in the forward orbits of the
// pair and its half-turn image may cross, and no strict forward image may
// cross a major candidate or end inside an open strip footprint.
// Production checker: rescales to a common integer denominator.
LegalityReport is_legal(const Chord& comajor);

// Reference checker: direct rational arithmetic over the full orbit, written
// independently of the production path.
LegalityReport is_legal_naive(const Chord& comajor);

struct ComajorRecord {
  Chord comajor;
  LamType type = LamType::D;
  int period = 0;        // period of the image endpoints
  int preperiod = 1;     // preperiod of the comajor endpoints
  Chord major;           // the endpoint-periodic candidate (canonical long one
                         // for Misiurewicz records, where neither is periodic)
  Chord sibling_major;
};

// Throws std::invalid_argument for degenerate, illegal, or endpoint-periodic input.
ComajorRecord classify(const Chord& comajor);

// classify() when legality has already been established (used by enumeration).
ComajorRecord classify_unchecked(const Chord& comajor);

} // namespace symcubic
