#include "symcubic/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symcubic {

using nlohmann::ordered_json;

namespace {

ordered_json chord_json(const Chord& e) { return ordered_json::array({e.a.str(), e.b.str()}); }

Chord chord_from(const ordered_json& j) {
  return Chord(Angle::parse(j.at(0).get<std::string>()), Angle::parse(j.at(1).get<std::string>()));
}

ordered_json record_json(const ComajorRecord& rec) {
  ordered_json j;
  j["pair"] = chord_json(rec.comajor);
  j["type"] = lam_type_name(rec.type);
  j["major"] = chord_json(rec.major);
  j["period"] = rec.period;
  return j;
}

ordered_json complex_json(cplx z) {
  ordered_json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

} // namespace

std::string atlas_to_json(const Atlas& A) {
  ordered_json j;
  j["bound"] = {{"period", A.opts.max_period}, {"preperiod", A.opts.max_preperiod}};
  j["comajors"] = ordered_json::array();
  for (const ComajorRecord& rec : A.comajors) j["comajors"].push_back(record_json(rec));
  j["misiurewicz"] = ordered_json::array();
  for (const std::vector<Angle>& cls : A.misiurewicz) {
    ordered_json c = ordered_json::array();
    for (const Angle& a : cls) c.push_back(a.str());
    j["misiurewicz"].push_back(c);
  }
  return j.dump(2) + "\n";
}

Atlas atlas_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Atlas A;
  A.opts.max_period = j.at("bound").at("period").get<int>();
  A.opts.max_preperiod = j.at("bound").at("preperiod").get<int>();
  for (const auto& r : j.at("comajors")) {
    ComajorRecord rec = classify(chord_from(r.at("pair")));
    if (std::string(lam_type_name(rec.type)) != r.at("type").get<std::string>() ||
        rec.period != r.at("period").get<int>() || rec.major != chord_from(r.at("major")))
      throw std::runtime_error("atlas_from_json: stored fields disagree with the pair " +
                               rec.comajor.str());
    A.comajors.push_back(std::move(rec));
  }
  for (const auto& c : j.at("misiurewicz")) {
    std::vector<Angle> cls;
    for (const auto& s : c) cls.push_back(Angle::parse(s.get<std::string>()));
    A.misiurewicz.push_back(std::move(cls));
  }
  return A;
}

std::string record_to_json(const ComajorRecord& rec) {
  ordered_json j = record_json(rec);
  j["preperiod"] = rec.preperiod;
  j["sibling_major"] = chord_json(rec.sibling_major);
  return j.dump(2) + "\n";
}

std::string legality_to_json(const Chord& pair, const LegalityReport& rep) {
  ordered_json j;
  j["pair"] = chord_json(pair);
  j["legal"] = rep.legal;
  j["reason"] = rep.reason;
  if (rep.crossing)
    j["crossing"] = ordered_json::array({chord_json(rep.crossing->first),
                                         chord_json(rep.crossing->second)});
  if (rep.strip_hit) j["strip_hit"] = chord_json(*rep.strip_hit);
  return j.dump(2) + "\n";
}

std::string lamination_to_json(const Lamination& L) {
  ordered_json j;
  j["record"] = record_json(L.record);
  j["depth"] = L.depth;
  j["leaves"] = ordered_json::array();
  for (const Leaf& lf : L.leaves)
    j["leaves"].push_back(ordered_json::array({lf.chord.a.str(), lf.chord.b.str(), lf.level}));
  return j.dump(2) + "\n";
}

Lamination lamination_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  Lamination L;
  L.record = classify(chord_from(j.at("record").at("pair")));
  L.depth = j.at("depth").get<int>();
  for (const auto& t : j.at("leaves")) {
    Leaf lf;
    lf.chord = Chord(Angle::parse(t.at(0).get<std::string>()),
                     Angle::parse(t.at(1).get<std::string>()));
    lf.level = t.at(2).get<int>();
    L.leaves.push_back(std::move(lf));
  }
  return L;
}

std::string complex_to_json(cplx z) { return complex_json(z).dump(); }

std::string raytrace_to_json(const RayTrace& t) {
  ordered_json j;
  j["theta"] = t.theta.str();
  j["kind"] = t.param ? "parameter" : "dynamical";
  if (!t.param) j["c"] = complex_json(t.c);
  j["points"] = ordered_json::array();
  for (const RayPoint& p : t.points) {
    ordered_json q;
    q["t"] = p.t;
    q["re"] = p.pos.real();
    q["im"] = p.pos.imag();
    j["points"].push_back(q);
  }
  j["final_potential"] = t.final_potential;
  j["landed_estimate"] = complex_json(t.landed_estimate);
  return j.dump(2) + "\n";
}

std::string raytrace_to_csv(const RayTrace& t) {
  std::string out = "potential,re,im\n";
  char buf[96];
  for (const RayPoint& p : t.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.t, p.pos.real(), p.pos.imag());
    out += buf;
  }
  return out;
}

std::string landing_to_json(const LandingReport& rep) {
  ordered_json j;
  j["angles"] = ordered_json::array();
  for (const Angle& a : rep.angles) j["angles"].push_back(a.str());
  j["endpoints"] = ordered_json::array();
  for (const cplx& e : rep.endpoints) j["endpoints"].push_back(complex_json(e));
  j["spread"] = rep.spread;
  if (rep.has_root) {
    j["root"] = complex_json(rep.root);
    j["root_dist"] = rep.root_dist;
  }
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

void write_file(const std::string& path, const std::vector<unsigned char>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

} // namespace symcubic
