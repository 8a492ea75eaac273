#include "clifford/viz/scene.hpp"

#include "clifford/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace clifford::viz {

namespace {

std::string fixed6(double v) {
  if (std::abs(v) < 5e-7)
    v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

class ObjWriter {
public:
  void object(const std::string &name) { out_ << "o " << name << "\n"; }

  int vertex(Vec3 p) {
    out_ << "v " << fixed6(p.x) << " " << fixed6(p.y) << " " << fixed6(p.z) << "\n";
    return ++count_;
  }

  void face(std::initializer_list<int> idx) { element('f', idx); }
  void line(std::initializer_list<int> idx) { element('l', idx); }
  void line(const std::vector<int> &idx) {
    out_ << 'l';
    for (int i : idx)
      out_ << ' ' << i;
    out_ << "\n";
  }

  std::string str() const { return out_.str(); }

private:
  void element(char tag, std::initializer_list<int> idx) {
    out_ << tag;
    for (int i : idx)
      out_ << ' ' << i;
    out_ << "\n";
  }

  std::ostringstream out_;
  int count_ = 0;
};

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  file << content;
  if (!file)
    throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

} // namespace

std::string to_obj(const Scene &s) {
  ObjWriter w;
  for (std::size_t i = 0; i < s.arrows.size(); ++i) {
    const Arrow &a = s.arrows[i];
    w.object("arrow_" + std::to_string(i));
    int base = w.vertex(a.origin);
    int tip = w.vertex(a.tip);
    w.line({base, tip});
    for (const Triangle &t : a.cone) {
      int v0 = w.vertex(t[0]), v1 = w.vertex(t[1]), v2 = w.vertex(t[2]);
      w.face({v0, v1, v2});
    }
  }
  for (std::size_t i = 0; i < s.patches.size(); ++i) {
    const Patch &p = s.patches[i];
    w.object("patch_" + std::to_string(i));
    int c0 = w.vertex(p.corners[0]), c1 = w.vertex(p.corners[1]);
    int c2 = w.vertex(p.corners[2]), c3 = w.vertex(p.corners[3]);
    w.face({c0, c1, c2, c3});
    std::vector<int> tick;
    for (Vec3 v : p.tick)
      tick.push_back(w.vertex(v));
    if (!tick.empty())
      w.line(tick);
  }
  for (std::size_t i = 0; i < s.cubes.size(); ++i) {
    w.object("cube_" + std::to_string(i));
    auto verts = cube_vertices(s.cubes[i]);
    int first = 0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      int id = w.vertex(verts[k]);
      if (k == 0)
        first = id;
    }
    for (const auto &f : cube_faces())
      w.face({first + f[0], first + f[1], first + f[2], first + f[3]});
  }
  return "# clifford scene\n" + w.str();
}

void export_obj(const Scene &s, const std::filesystem::path &path) { write_file(path, to_obj(s)); }

namespace {

struct Drawable {
  std::vector<Vec3> points;
  Color color;
  bool filled = true;
  double opacity = 1.0;
  double depth = 0;
};

std::string hex(Color c) {
  auto channel = [](double v) {
    return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255));
  };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(c.r), channel(c.g), channel(c.b));
  return buf;
}

std::vector<Drawable> collect(const Scene &s) {
  std::vector<Drawable> out;
  for (const Arrow &a : s.arrows) {
    out.push_back({{a.origin, a.tip}, a.color, false, 1.0, 0});
    for (const Triangle &t : a.cone)
      out.push_back({{t[0], t[1], t[2]}, a.color, true, 1.0, 0});
  }
  for (const Patch &p : s.patches) {
    out.push_back({{p.corners.begin(), p.corners.end()}, p.color, true, 0.6, 0});
    if (!p.tick.empty())
      out.push_back({p.tick, Color{0.05, 0.05, 0.2}, false, 1.0, 0});
  }
  for (const Cube &c : s.cubes) {
    auto v = cube_vertices(c);
    for (const auto &f : cube_faces())
      out.push_back({{v[f[0]], v[f[1]], v[f[2]], v[f[3]]}, c.color, true, 0.35, 0});
  }
  if (s.axes) {
    out.push_back({{Vec3{}, Vec3{1, 0, 0}}, Color{0.4, 0.4, 0.4}, false, 1.0, 0});
    out.push_back({{Vec3{}, Vec3{0, 1, 0}}, Color{0.4, 0.4, 0.4}, false, 1.0, 0});
    out.push_back({{Vec3{}, Vec3{0, 0, 1}}, Color{0.4, 0.4, 0.4}, false, 1.0, 0});
  }
  return out;
}

} // namespace

std::string to_svg(const Scene &s, const SvgOptions &options) {
  Vec3 view = options.view_direction;
  if (norm(view) == 0.0)
    throw Error(ErrorKind::ZeroVector, "view direction must be nonzero");
  view = (1.0 / norm(view)) * view;
  Vec3 up{0, 0, 1};
  if (norm(cross(up, view)) < 1e-9)
    up = {0, 1, 0};
  Vec3 right = cross(up, view);
  right = (1.0 / norm(right)) * right;
  Vec3 screen_up = cross(view, right);

  std::vector<Drawable> items = collect(s);
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (Drawable &d : items) {
    Vec3 centroid;
    for (Vec3 p : d.points) {
      centroid = centroid + p;
      double px = dot(p, right), py = dot(p, screen_up);
      min_x = std::min(min_x, px);
      max_x = std::max(max_x, px);
      min_y = std::min(min_y, py);
      max_y = std::max(max_y, py);
    }
    d.depth = dot((1.0 / static_cast<double>(d.points.size())) * centroid, view);
  }
  // Farther first; larger depth is closer to the viewer.
  std::stable_sort(items.begin(), items.end(),
                   [](const Drawable &a, const Drawable &b) { return a.depth < b.depth; });

  const double size = options.size;
  const double usable = size * (1 - 2 * options.margin);
  double extent = std::max(max_x - min_x, max_y - min_y);
  double scale = (items.empty() || extent <= 0) ? 1.0 : usable / extent;
  double cx = items.empty() ? 0 : (min_x + max_x) / 2;
  double cy = items.empty() ? 0 : (min_y + max_y) / 2;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  char buf[64];
  for (const Drawable &d : items) {
    std::string pts;
    for (Vec3 p : d.points) {
      double sx = size / 2 + (dot(p, right) - cx) * scale;
      double sy = size / 2 - (dot(p, screen_up) - cy) * scale;
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", sx, sy);
      pts += buf;
    }
    if (!pts.empty())
      pts.pop_back();
    if (d.filled) {
      svg << "<polygon points=\"" << pts << "\" fill=\"" << hex(d.color) << "\" fill-opacity=\""
          << d.opacity << "\" stroke=\"#202020\" stroke-width=\"0.5\"/>\n";
    } else {
      svg << "<polyline points=\"" << pts << "\" fill=\"none\" stroke=\"" << hex(d.color)
          << "\" stroke-width=\"2\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_svg(const Scene &s, const std::filesystem::path &path, const SvgOptions &options) {
  write_file(path, to_svg(s, options));
}

} // namespace clifford::viz
