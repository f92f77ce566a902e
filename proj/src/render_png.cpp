#include "symcubic/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include <zlib.h>

#include "json.hpp"

namespace symcubic {

namespace {

void be32(std::vector<unsigned char>& v, uint32_t x) {
  v.push_back(static_cast<unsigned char>(x >> 24));
  v.push_back(static_cast<unsigned char>(x >> 16));
  v.push_back(static_cast<unsigned char>(x >> 8));
  v.push_back(static_cast<unsigned char>(x));
}

void chunk(std::vector<unsigned char>& out, const char type[4],
           const std::vector<unsigned char>& data) {
  be32(out, static_cast<uint32_t>(data.size()));
  size_t start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), data.begin(), data.end());
  uLong crc = crc32(0L, out.data() + start, static_cast<uInt>(4 + data.size()));
  be32(out, static_cast<uint32_t>(crc));
}

// filter-0 scanlines, fixed compression level: byte-stable output
std::vector<unsigned char> png_encode(const std::vector<RGB>& img, int w, int h) {
  std::vector<unsigned char> raw;
  raw.reserve(static_cast<size_t>(h) * (1 + 3 * w));
  for (int j = 0; j < h; ++j) {
    raw.push_back(0);
    for (int i = 0; i < w; ++i) {
      const RGB& p = img[static_cast<size_t>(j) * w + i];
      raw.push_back(p.r);
      raw.push_back(p.g);
      raw.push_back(p.b);
    }
  }
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<unsigned char> z(bound);
  if (compress2(z.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) != Z_OK)
    throw std::runtime_error("png: deflate failed");
  z.resize(bound);

  std::vector<unsigned char> out;
  static const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
  out.insert(out.end(), sig, sig + 8);
  std::vector<unsigned char> ihdr;
  be32(ihdr, static_cast<uint32_t>(w));
  be32(ihdr, static_cast<uint32_t>(h));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // truecolor
  ihdr.push_back(0);
  ihdr.push_back(0);
  ihdr.push_back(0);
  chunk(out, "IHDR", ihdr);
  chunk(out, "IDAT", z);
  chunk(out, "IEND", {});
  return out;
}

RGB lerp(RGB a, RGB b, double t) {
  auto mix = [t](unsigned char u, unsigned char v) {
    return static_cast<unsigned char>(std::lround(u + t * (v - u)));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

struct Canvas {
  std::vector<RGB>& img;
  int w, h;
  void set(int i, int j, RGB c) {
    if (i >= 0 && i < w && j >= 0 && j < h) img[static_cast<size_t>(j) * w + i] = c;
  }
};

// Liang-Barsky clip to the canvas, then DDA along the longer axis
void draw_line(Canvas& cv, double x0, double y0, double x1, double y1, RGB c) {
  double t0 = 0, t1 = 1, dx = x1 - x0, dy = y1 - y0;
  auto clip = [&](double p, double q) {
    if (p == 0) return q >= 0;
    double r = q / p;
    if (p < 0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  if (!clip(-dx, x0) || !clip(dx, cv.w - 1 - x0) || !clip(-dy, y0) || !clip(dy, cv.h - 1 - y0))
    return;
  double ax = x0 + t0 * dx, ay = y0 + t0 * dy;
  double bx = x0 + t1 * dx, by = y0 + t1 * dy;
  int steps = static_cast<int>(std::ceil(std::max(std::abs(bx - ax), std::abs(by - ay)))) + 1;
  for (int k = 0; k <= steps; ++k) {
    double t = static_cast<double>(k) / steps;
    cv.set(static_cast<int>(std::lround(ax + t * (bx - ax))),
           static_cast<int>(std::lround(ay + t * (by - ay))), c);
  }
}

} // namespace

PlaneStyle plane_style_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PlaneStyle st;
  auto rgb = [&](const char* key, RGB& dst) {
    if (!j.contains(key)) return;
    const auto& a = j.at(key);
    dst = {static_cast<unsigned char>(a.at(0).get<int>()),
           static_cast<unsigned char>(a.at(1).get<int>()),
           static_cast<unsigned char>(a.at(2).get<int>())};
  };
  rgb("interior", st.interior);
  rgb("exterior_near", st.exterior_near);
  rgb("exterior_far", st.exterior_far);
  rgb("ray", st.ray_color);
  rgb("mark", st.mark_color);
  if (j.contains("mark_half")) st.mark_half = j.at("mark_half").get<int>();
  return st;
}

std::vector<unsigned char> render_plane(const PlaneGrid& grid, const Overlay& overlay,
                                        const PlaneStyle& style) {
  if (grid.w <= 0 || grid.h <= 0 ||
      grid.greenv.size() != static_cast<size_t>(grid.w) * grid.h)
    throw std::invalid_argument("render_plane: grid dimensions do not match its data");

  double gmax = 0;
  for (double g : grid.greenv) gmax = std::max(gmax, g);
  if (gmax == 0) gmax = 1;

  std::vector<RGB> img(static_cast<size_t>(grid.w) * grid.h);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < grid.h; ++j) {
    for (int i = 0; i < grid.w; ++i) {
      size_t k = static_cast<size_t>(grid.idx(i, j));
      if (grid.member[k]) {
        img[k] = style.interior;
      } else {
        // fourth root spreads contrast near the boundary, where g -> 0
        double t = std::pow(grid.greenv[k] / gmax, 0.25);
        img[k] = lerp(style.exterior_near, style.exterior_far, std::min(1.0, t));
      }
    }
  }

  Canvas cv{img, grid.w, grid.h};
  double halfh = grid.halfw * (static_cast<double>(grid.h) / grid.w);
  auto fx = [&](double x) { return ((x - grid.cx) * grid.w / grid.halfw + grid.w - 1) / 2.0; };
  auto fy = [&](double y) { return (grid.h - 1 - (y - grid.cy) * grid.h / halfh) / 2.0; };

  for (const RayTrace& ray : overlay.rays)
    for (size_t k = 1; k < ray.points.size(); ++k)
      draw_line(cv, fx(ray.points[k - 1].pos.real()), fy(ray.points[k - 1].pos.imag()),
                fx(ray.points[k].pos.real()), fy(ray.points[k].pos.imag()), style.ray_color);

  for (const cplx& m : overlay.marks) {
    int ci = static_cast<int>(std::lround(fx(m.real())));
    int cj = static_cast<int>(std::lround(fy(m.imag())));
    for (int d = -style.mark_half; d <= style.mark_half; ++d) {
      cv.set(ci + d, cj, style.mark_color);
      cv.set(ci, cj + d, style.mark_color);
    }
  }

  return png_encode(img, grid.w, grid.h);
}

} // namespace symcubic
