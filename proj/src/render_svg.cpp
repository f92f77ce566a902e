#include "symcubic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace symcubic {

ArcGeom chord_arc(const Chord& e) {
  ArcGeom g;
  const double twopi = 8.0 * std::atan(1.0);
  double ta = twopi * to_double(e.a);
  double tb = twopi * to_double(e.b);
  g.x1 = std::cos(ta);
  g.y1 = std::sin(ta);
  g.x2 = std::cos(tb);
  g.y2 = std::sin(tb);

  // center C solves Re(conj(P) C) = 1 for both endpoints; r^2 = |C|^2 - 1
  double det = g.x1 * g.y2 - g.y1 * g.x2;
  if (std::abs(det) < 1e-12) {  // diameter (or numerically one)
    g.straight = true;
    return g;
  }
  g.cx = (g.y2 - g.y1) / det;
  g.cy = (g.x1 - g.x2) / det;
  g.r = std::sqrt(g.cx * g.cx + g.cy * g.cy - 1.0);
  return g;
}

namespace {

void fmt(std::string& out, const char* pattern, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, pattern, v);
  out += buf;
}

// First crossing pair, or (-1,-1). Bracket sweep: chords stored as (a,b) with
// a < b either nest, touch, or partially overlap; only the last is a crossing,
// and it surfaces as a close event whose chord is not on top of the stack.
std::pair<int, int> find_crossing(const std::vector<Chord>& chords) {
  struct Ev {
    const Angle* pos;
    const Angle* other;
    bool close;
    int idx;
  };
  std::vector<Ev> evs;
  evs.reserve(2 * chords.size());
  for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
    if (chords[i].a == chords[i].b) continue;  // points carry no arc
    evs.push_back({&chords[i].a, &chords[i].b, false, i});
    evs.push_back({&chords[i].b, &chords[i].a, true, i});
  }
  std::sort(evs.begin(), evs.end(), [](const Ev& l, const Ev& r) {
    if (*l.pos != *r.pos) return *l.pos < *r.pos;
    if (l.close != r.close) return l.close;  // close a shared endpoint first
    return *l.other > *r.other;              // opens: farther end pushed first
  });
  std::vector<int> stack;
  for (const Ev& e : evs) {
    if (!e.close) {
      stack.push_back(e.idx);
      continue;
    }
    int top = stack.back();
    stack.pop_back();
    if (chords[top] != chords[e.idx]) return {top, e.idx};
  }
  return {-1, -1};
}

void emit_chord(std::string& out, const Chord& e, const LamStyle& st, double mid, double scale,
                const std::string& color) {
  ArcGeom g = chord_arc(e);
  double X1 = mid + scale * g.x1, Y1 = mid - scale * g.y1;
  double X2 = mid + scale * g.x2, Y2 = mid - scale * g.y2;

  bool straight = g.straight || !st.geodesic;
  if (!straight) {
    // sagitta below a tenth of a pixel draws as a segment
    double dx = g.x2 - g.x1, dy = g.y2 - g.y1;
    double half = 0.5 * std::sqrt(dx * dx + dy * dy);
    double root = std::sqrt(std::max(0.0, g.r * g.r - half * half));
    double sagitta = half * half / (g.r + root);
    if (sagitta * scale < 0.1) straight = true;
  }

  if (straight) {
    out += "<line x1=\"";
    fmt(out, "%.4f", X1);
    out += "\" y1=\"";
    fmt(out, "%.4f", Y1);
    out += "\" x2=\"";
    fmt(out, "%.4f", X2);
    out += "\" y2=\"";
    fmt(out, "%.4f", Y2);
    out += "\" stroke=\"" + color + "\" stroke-width=\"";
    fmt(out, "%.2f", st.stroke);
    out += "\" fill=\"none\"/>\n";
    return;
  }

  // SVG picks the center from the flags: with large-arc 0 the center sits at
  // midpoint + k*(y1-y2, x2-x1) for sweep 1, minus for sweep 0 (screen coords).
  double mx = 0.5 * (X1 + X2), my = 0.5 * (Y1 + Y2);
  double Cx = mid + scale * g.cx, Cy = mid - scale * g.cy;
  double side = (Cx - mx) * (Y1 - Y2) + (Cy - my) * (X2 - X1);
  int sweep = side > 0 ? 1 : 0;

  out += "<path d=\"M ";
  fmt(out, "%.4f", X1);
  out += " ";
  fmt(out, "%.4f", Y1);
  out += " A ";
  fmt(out, "%.4f", g.r * scale);
  out += " ";
  fmt(out, "%.4f", g.r * scale);
  out += " 0 0 ";
  out += sweep ? "1" : "0";
  out += " ";
  fmt(out, "%.4f", X2);
  out += " ";
  fmt(out, "%.4f", Y2);
  out += "\" stroke=\"" + color + "\" stroke-width=\"";
  fmt(out, "%.2f", st.stroke);
  out += "\" fill=\"none\"/>\n";
}

std::string render_impl(const std::vector<Chord>& chords, const std::vector<int>& levels,
                        const LamStyle& st) {
  auto bad = find_crossing(chords);
  if (bad.first >= 0) {
    Chord x = chords[bad.first], y = chords[bad.second];
    if (y < x) std::swap(x, y);
    throw std::invalid_argument("render_lamination: chords " + x.str() + " and " + y.str() +
                                " cross");
  }

  double mid = st.size / 2.0;
  double scale = mid - 0.04 * st.size;  // 4% margin

  std::string out;
  out.reserve(256 + 160 * chords.size());
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(st.size) +
         "\" height=\"" + std::to_string(st.size) + "\" viewBox=\"0 0 " +
         std::to_string(st.size) + " " + std::to_string(st.size) + "\">\n";
  out += "<rect width=\"" + std::to_string(st.size) + "\" height=\"" + std::to_string(st.size) +
         "\" fill=\"#ffffff\"/>\n";
  out += "<circle cx=\"";
  fmt(out, "%.4f", mid);
  out += "\" cy=\"";
  fmt(out, "%.4f", mid);
  out += "\" r=\"";
  fmt(out, "%.4f", scale);
  out += "\" fill=\"none\" stroke=\"" + st.circle_color + "\" stroke-width=\"";
  fmt(out, "%.2f", st.stroke * 1.2);
  out += "\"/>\n";

  for (size_t k = 0; k < chords.size(); ++k) {
    bool seed = k < levels.size() && levels[k] == 0;
    emit_chord(out, chords[k], st, mid, scale, seed ? st.seed_color : st.chord_color);
  }
  out += "</svg>\n";
  return out;
}

} // namespace

std::string render_lamination(const std::vector<Chord>& chords, const LamStyle& style) {
  return render_impl(chords, {}, style);
}

std::string render_lamination(const Lamination& L, const LamStyle& style) {
  std::vector<Chord> chords;
  std::vector<int> levels;
  chords.reserve(L.leaves.size());
  levels.reserve(L.leaves.size());
  for (const Leaf& lf : L.leaves) {
    chords.push_back(lf.chord);
    levels.push_back(lf.level);
  }
  return render_impl(chords, levels, style);
}

} // namespace symcubic
