#pragma once
#include "symcubic/atlas.hpp"
#include "symcubic/lamination.hpp"
#include "symcubic/rays.hpp"
#include "symcubic/solve.hpp"

#include <string>

namespace symcubic {

// Atlas JSON: {"bound":{"period":N,"preperiod":K},
//              "comajors":[{"pair":["5/48","7/48"],"type":"B",
//                           "major":["7/16","13/16"],"period":4}, ...],
//              "misiurewicz":[["...","..."], ...]}
// comajors sorted by (period, smaller endpoint); reading re-derives each
// record from its pair and cross-checks the stored fields.
std::string atlas_to_json(const Atlas& A);
Atlas atlas_from_json(const std::string& text);

std::string record_to_json(const ComajorRecord& rec);
std::string legality_to_json(const Chord& pair, const LegalityReport& rep);

// {"record":..., "depth":D, "leaves":[["a","b",level], ...]}
std::string lamination_to_json(const Lamination& L);
Lamination lamination_from_json(const std::string& text);

std::string complex_to_json(cplx z);  // {"re":..., "im":...}

std::string raytrace_to_json(const RayTrace& t);
std::string raytrace_to_csv(const RayTrace& t);  // potential,re,im rows

std::string landing_to_json(const LandingReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);
void write_file(const std::string& path, const std::vector<unsigned char>& data);

} // namespace symcubic
