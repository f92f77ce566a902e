#pragma once
#include "symcubic/comajor.hpp"
#include <vector>

namespace symcubic {

struct AtlasOptions {
  int max_period = 1;
  int max_preperiod = 1;
  bool exact_period = false;  // keep only records whose image period equals max_period
  bool parallel = true;
};

struct Atlas {
  AtlasOptions opts;
  std::vector<ComajorRecord> comajors;          // preperiod-1 records, sorted
  std::vector<std::vector<Angle>> misiurewicz;  // vertex classes for preperiod >= 2
};

// Scan all strictly 1-preperiodic angle pairs (and deeper preperiods when
// requested) within arc distance 1/6 and keep the legal ones.
Atlas enumerate_comajors(const AtlasOptions& opts);

// All 1-preperiodic angles whose image has exact period n, sorted.
std::vector<Angle> one_preperiodic_angles(int n);

// Landing class of theta: {theta} for periodic theta, the record pair for
// preperiod 1, the Misiurewicz vertex class for deeper preperiods.
// Throws std::out_of_range when the atlas bound does not cover theta.
std::vector<Angle> class_of(const Angle& theta, const Atlas& atlas);

} // namespace symcubic
