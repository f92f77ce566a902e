#include "CLI11.hpp"

#include "symcubic/atlas.hpp"
#include "symcubic/gap.hpp"
#include "symcubic/io.hpp"
#include "symcubic/render.hpp"
#include "symcubic/selftest.hpp"
#include "symcubic/solve.hpp"

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace symcubic;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Angle angle_arg(const std::string& s) {
  try {
    return Angle::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

mpq_class fraction_arg(const std::string& s) {
  try {
    return parse_fraction(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

cplx complex_arg(const std::string& s) {
  size_t comma = s.find(',');
  try {
    size_t used = 0;
    double re = std::stod(comma == std::string::npos ? s : s.substr(0, comma), &used);
    if (comma == std::string::npos) {
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    std::string imp = s.substr(comma + 1);
    double im = std::stod(imp, &used);
    if (used != imp.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw UsageError("bad complex number '" + s + "' (expected re,im)");
  }
}

double env_default(const char* name, double fallback) {
  if (const char* v = std::getenv(name)) {
    try {
      return std::stod(v);
    } catch (...) {
      // fall through to the default; --help documents the variable
    }
  }
  return fallback;
}

std::string cstr(cplx z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  return buf;
}

std::string record_text(const ComajorRecord& rec) {
  std::string out = "pair " + rec.comajor.str() + ": legal, ";
  if (rec.type == LamType::Misiurewicz)
    out += "Misiurewicz, preperiod " + std::to_string(rec.preperiod) + ", period " +
           std::to_string(rec.period);
  else
    out += std::string("type ") + lam_type_name(rec.type) + ", period " +
           std::to_string(rec.period);
  out += ", major " + rec.major.str() + ", sibling " + rec.sibling_major.str();
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symcubic: exact circle combinatorics and plane numerics for the family z^3 - 3c^2 z.\n"
      "Env overrides: SYMCUBIC_POT_END (ray end potential, default 1e-5),\n"
      "               SYMCUBIC_LAND_TOL (landing tolerance, default 1e-3)."};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: logical cores)");

  // callbacks only record the work; it runs after global flags are settled
  int rc = 0;
  bool json = false;
  std::function<void()> body;

  // legal A B
  std::string la, lb;
  auto* legal_cmd = app.add_subcommand("legal", "decide legality of a candidate comajor pair");
  legal_cmd->add_option("A", la, "first angle p/q")->required();
  legal_cmd->add_option("B", lb, "second angle p/q")->required();
  legal_cmd->callback([&] {
    body = [&] {
      Chord e(angle_arg(la), angle_arg(lb));
      LegalityReport rep = is_legal(e);
      if (json) {
        std::cout << legality_to_json(e, rep);
      } else if (rep.legal) {
        ComajorRecord rec = classify_unchecked(e);
        if (rec.type == LamType::Misiurewicz)
          std::cout << "legal, Misiurewicz, preperiod " << rec.preperiod << ", period "
                    << rec.period << "\n";
        else
          std::cout << "legal, type " << lam_type_name(rec.type) << ", period " << rec.period
                    << "\n";
      } else {
        std::cout << "illegal: " << rep.reason << "\n";
      }
      rc = rep.legal ? 0 : 1;
    };
  });

  // classify A B
  std::string ca, cb;
  auto* classify_cmd = app.add_subcommand("classify", "full record for a legal pair");
  classify_cmd->add_option("A", ca)->required();
  classify_cmd->add_option("B", cb)->required();
  classify_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = classify(Chord(angle_arg(ca), angle_arg(cb)));
      std::cout << (json ? record_to_json(rec) : record_text(rec) + "\n");
    };
  });

  // atlas
  int amax = 1, aprep = 1;
  bool aexact = false;
  std::string aout;
  auto* atlas_cmd = app.add_subcommand("atlas", "enumerate all comajors within a bound");
  atlas_cmd->add_option("--max-period", amax, "largest image period")->required();
  atlas_cmd->add_option("--max-preperiod", aprep, "largest preperiod")->capture_default_str();
  atlas_cmd->add_flag("--exact-period", aexact, "keep only records of exactly max-period");
  atlas_cmd->add_option("--out", aout, "output JSON path")->required();
  atlas_cmd->callback([&] {
    body = [&] {
      AtlasOptions opt;
      opt.max_period = amax;
      opt.max_preperiod = aprep;
      opt.exact_period = aexact;
      Atlas atlas = enumerate_comajors(opt);
      write_file(aout, atlas_to_json(atlas));
      std::cout << "atlas: " << atlas.comajors.size() << " comajors, "
                << atlas.misiurewicz.size() << " Misiurewicz classes -> " << aout << "\n";
    };
  });

  // lam
  std::string ga, gb, gsvg, gjson;
  int gdepth = 5;
  bool gstraight = false;
  int gsize = 800;
  auto* lam_cmd = app.add_subcommand("lam", "pullback lamination of a legal pair");
  lam_cmd->add_option("A", ga)->required();
  lam_cmd->add_option("B", gb)->required();
  lam_cmd->add_option("--depth", gdepth, "pullback rounds")->capture_default_str();
  lam_cmd->add_option("--svg", gsvg, "write a disk diagram here");
  lam_cmd->add_option("--json", gjson, "write the leaf list here");
  lam_cmd->add_flag("--straight", gstraight, "straight chords instead of geodesics");
  lam_cmd->add_option("--size", gsize, "SVG canvas size, px")->capture_default_str();
  lam_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = classify(Chord(angle_arg(ga), angle_arg(gb)));
      Lamination L = build_lamination(rec, gdepth);
      if (!gsvg.empty()) {
        LamStyle st;
        st.geodesic = !gstraight;
        st.size = gsize;
        write_file(gsvg, render_lamination(L, st));
      }
      if (!gjson.empty()) write_file(gjson, lamination_to_json(L));
      std::cout << "lamination of " << rec.comajor.str() << ": depth " << L.depth << ", "
                << L.leaves.size() << " leaves\n";
    };
  });

  // maingap P/Q
  std::string mg;
  auto* maingap_cmd =
      app.add_subcommand("maingap", "main-gap edge record for a rotation number p/q");
  maingap_cmd->add_option("P/Q", mg, "rotation number")->required();
  maingap_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = main_gap_edge(fraction_arg(mg));
      std::cout << (json ? record_to_json(rec) : record_text(rec) + "\n");
    };
  });

  // induce A B --quad P1 P2
  std::string ia, ib;
  std::vector<std::string> iquad;
  auto* induce_cmd =
      app.add_subcommand("induce", "comajor induced in the gap of A B by a quadratic chord");
  induce_cmd->add_option("A", ia)->required();
  induce_cmd->add_option("B", ib)->required();
  induce_cmd->add_option("--quad", iquad, "the two endpoints of the doubling-circle chord")
      ->expected(2)
      ->required();
  induce_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = classify(Chord(angle_arg(ia), angle_arg(ib)));
      Chord ind = induce(gap_map(rec), angle_arg(iquad[0]), angle_arg(iquad[1]));
      ComajorRecord irec = classify(ind);
      if (json)
        std::cout << record_to_json(irec);
      else
        std::cout << "induced comajor " << ind.str() << "\n" << record_text(irec) << "\n";
    };
  });

  // ray
  std::string rparam, rdyn, rbase, rcsv, rjson;
  double rpot = env_default("SYMCUBIC_POT_END", 1e-5);
  int rsteps = 0;
  auto* ray_cmd = app.add_subcommand("ray", "trace an external ray");
  ray_cmd->add_option("--param", rparam, "parameter-plane ray at this angle");
  ray_cmd->add_option("--dyn", rdyn, "dynamical ray at this angle (needs --c)");
  ray_cmd->add_option("--c", rbase, "base parameter re,im for --dyn");
  ray_cmd->add_option("--pot-end", rpot, "final potential")->capture_default_str();
  ray_cmd->add_option("--steps", rsteps, "fixed number of schedule points (0 = geometric)");
  ray_cmd->add_option("--csv", rcsv, "write potential,re,im rows here");
  ray_cmd->add_option("--json", rjson, "write the trace as JSON here");
  ray_cmd->callback([&] {
    body = [&] {
      if (rparam.empty() == rdyn.empty())
        throw UsageError("ray: give exactly one of --param or --dyn");
      RayTrace tr;
      if (!rparam.empty()) {
        tr = trace_param_ray(angle_arg(rparam), rpot, rsteps);
      } else {
        if (rbase.empty()) throw UsageError("ray: --dyn needs --c re,im");
        tr = trace_dyn_ray(complex_arg(rbase), angle_arg(rdyn), rpot, rsteps);
      }
      if (!rcsv.empty()) write_file(rcsv, raytrace_to_csv(tr));
      if (!rjson.empty()) write_file(rjson, raytrace_to_json(tr));
      if (json)
        std::cout << raytrace_to_json(tr);
      else
        std::cout << "ray " << tr.theta.str() << (tr.param ? " (parameter)" : " (dynamical)")
                  << ": " << tr.points.size() << " points, final potential "
                  << tr.final_potential << ", landed estimate " << cstr(tr.landed_estimate)
                  << "\n";
    };
  });

  // param-render / julia-render
  struct RenderArgs {
    std::string out, center = "0,0", cs, style;
    double halfw = 2.0;
    int px = 512, limit = 400;
    std::vector<std::string> rays, marks;
  };
  RenderArgs pr, jr;
  auto add_render_opts = [](CLI::App* cmd, RenderArgs& ra) {
    cmd->add_option("--out", ra.out, "output PNG path")->required();
    cmd->add_option("--px", ra.px, "image width = height, pixels")->capture_default_str();
    cmd->add_option("--center", ra.center, "view center re,im")->capture_default_str();
    cmd->add_option("--halfw", ra.halfw, "half width of the view")->capture_default_str();
    cmd->add_option("--max-iter", ra.limit, "iteration limit")->capture_default_str();
    cmd->add_option("--ray", ra.rays, "overlay ray at this angle (repeatable)");
    cmd->add_option("--mark", ra.marks, "overlay cross at re,im (repeatable)");
    cmd->add_option("--style", ra.style, "palette JSON file");
  };
  auto* prender_cmd = app.add_subcommand("param-render", "connectedness-locus raster");
  add_render_opts(prender_cmd, pr);
  auto* jrender_cmd = app.add_subcommand("julia-render", "filled-set raster for a fixed c");
  add_render_opts(jrender_cmd, jr);
  jrender_cmd->add_option("--c", jr.cs, "parameter re,im")->required();

  auto run_render = [&](RenderArgs& ra, bool parameter) {
    cplx ctr = complex_arg(ra.center);
    cplx base = parameter ? cplx{} : complex_arg(ra.cs);
    PlaneGrid grid =
        parameter ? param_grid(ra.px, ra.px, ctr.real(), ctr.imag(), ra.halfw, ra.limit)
                  : julia_grid(base, ra.px, ra.px, ctr.real(), ctr.imag(), ra.halfw, ra.limit);
    Overlay ov;
    for (const std::string& s : ra.rays)
      ov.rays.push_back(parameter ? trace_param_ray(angle_arg(s))
                                  : trace_dyn_ray(base, angle_arg(s)));
    for (const std::string& s : ra.marks) ov.marks.push_back(complex_arg(s));
    PlaneStyle st;
    if (!ra.style.empty()) st = plane_style_from_json(read_file(ra.style));
    write_file(ra.out, render_plane(grid, ov, st));
    std::cout << (parameter ? "parameter" : "julia") << " raster " << ra.px << "x" << ra.px
              << " -> " << ra.out << "\n";
  };
  prender_cmd->callback([&] { body = [&] { run_render(pr, true); }; });
  jrender_cmd->callback([&] { body = [&] { run_render(jr, false); }; });

  // center A B
  std::string cea, ceb, ceseed;
  auto* center_cmd = app.add_subcommand("center", "superattracting parameter of a record");
  center_cmd->add_option("A", cea)->required();
  center_cmd->add_option("B", ceb)->required();
  center_cmd->add_option("--seed", ceseed, "start Newton here instead of the traced rays");
  center_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = classify(Chord(angle_arg(cea), angle_arg(ceb)));
      CenterResult res =
          ceseed.empty() ? find_center(rec) : find_center(rec, complex_arg(ceseed));
      if (json)
        std::cout << "{\"c\":" << complex_to_json(res.c) << ",\"period\":" << res.period
                  << ",\"residual\":" << res.residual
                  << ",\"cycle_multiplier\":" << res.cycle_multiplier << "}\n";
      else
        std::cout << "center " << cstr(res.c) << ", period " << res.period << ", residual "
                  << res.residual << ", |cycle multiplier| " << res.cycle_multiplier << "\n";
    };
  });

  // root A B
  std::string roa, rob, roseed;
  auto* root_cmd = app.add_subcommand("root", "component root of a record");
  root_cmd->add_option("A", roa)->required();
  root_cmd->add_option("B", rob)->required();
  root_cmd->add_option("--seed", roseed, "center Newton seed, as for `center`");
  root_cmd->callback([&] {
    body = [&] {
      ComajorRecord rec = classify(Chord(angle_arg(roa), angle_arg(rob)));
      CenterResult ctr =
          roseed.empty() ? find_center(rec) : find_center(rec, complex_arg(roseed));
      RootResult res = find_root(rec, ctr.c);
      if (json)
        std::cout << "{\"root\":" << complex_to_json(res.c)
                  << ",\"center\":" << complex_to_json(ctr.c)
                  << ",\"ray_multiplier\":" << complex_to_json(res.mult.ray_rho)
                  << ",\"residual\":" << res.residual << "}\n";
      else
        std::cout << "root " << cstr(res.c) << " (center " << cstr(ctr.c)
                  << "), ray multiplier " << cstr(res.mult.ray_rho) << ", residual "
                  << res.residual << "\n";
    };
  });

  // verify-landing
  std::string va, vb, vcls;
  double vpot = env_default("SYMCUBIC_POT_END", 1e-5);
  double vtol = env_default("SYMCUBIC_LAND_TOL", 1e-3);
  auto* verify_cmd = app.add_subcommand("verify-landing", "trace rays and check common landing");
  verify_cmd->add_option("A", va, "record angle (with B)");
  verify_cmd->add_option("B", vb);
  verify_cmd->add_option("--class", vcls, "verify the whole landing class of this angle");
  verify_cmd->add_option("--pot-end", vpot, "final potential")->capture_default_str();
  verify_cmd->add_option("--tol", vtol, "landing tolerance")->capture_default_str();
  verify_cmd->callback([&] {
    body = [&] {
      LandingReport rep;
      if (!vcls.empty()) {
        Angle t = angle_arg(vcls);
        OrbitInfo o = orbit_info(t);
        AtlasOptions opt;
        opt.max_period = o.period;
        opt.max_preperiod = std::max(1, o.preperiod);
        rep = verify_landing_class(class_of(t, enumerate_comajors(opt)), vpot, vtol);
      } else if (!va.empty() && !vb.empty()) {
        rep = verify_landing(classify(Chord(angle_arg(va), angle_arg(vb))), vpot, vtol);
      } else {
        throw UsageError("verify-landing: give A B or --class THETA");
      }
      if (json) {
        std::cout << landing_to_json(rep);
      } else {
        std::cout << "landing spread " << rep.spread;
        if (rep.has_root) std::cout << ", distance to root " << rep.root_dist;
        std::cout << (rep.pass ? " : pass" : " : FAIL") << "\n";
      }
      rc = rep.pass ? 0 : 1;
    };
  });

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the module invariant battery");
  selftest_cmd->callback([&] {
    body = [&] {
      selftest([](const std::string& s) { std::cout << "[ok] " << s << "\n"; });
      std::cout << "selftest: all invariants hold\n";
    };
  });

  try {
    app.parse(argc, argv);
    json = format == "json";
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    if (body) body();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
