#pragma once

#include "clifford/multivector.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace clifford::viz {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);

struct Color {
  double r = 0, g = 0, b = 0;
};

using Triangle = std::array<Vec3, 3>;

struct Arrow {
  Vec3 origin;
  Vec3 tip;
  Color color;
  std::vector<Triangle> cone;
};

// Square in a coordinate plane. Corners run counterclockwise with respect
// to the plane's orientation when `positive`, clockwise otherwise.
struct Patch {
  std::array<Vec3, 4> corners;
  bool positive = true;
  Color color;
  // Polyline marking the traversal sense on the first edge.
  std::vector<Vec3> tick;
};

// Axis-aligned, centered at the origin.
struct Cube {
  double edge = 0;
  Color color;
};

struct Scene {
  std::vector<Arrow> arrows;
  std::vector<Patch> patches;
  std::vector<Cube> cubes;
  bool axes = false;
};

// One arrow for the vector part, one patch per bivector component, one cube
// for the trivector part. Throws DimensionTooLarge outside R_{3,0}.
Scene scene_from_multivector(const Multivector &a);

// 25 cone triangles from the fixed template (base radius 1/14, height 1/5),
// scaled by |tip|/2, turned from e3 onto the tip direction, apex at tip.
std::vector<Triangle> build_arrow_cone(Vec3 tip);

std::array<Vec3, 8> cube_vertices(const Cube &c);
// Quads as indices into cube_vertices.
const std::array<std::array<int, 4>, 6> &cube_faces();

std::string to_obj(const Scene &s);
void export_obj(const Scene &s, const std::filesystem::path &path);

struct SvgOptions {
  // Direction from the scene towards the viewer.
  Vec3 view_direction{1, 1, 1};
  int size = 800;
  double margin = 0.10;
};

std::string to_svg(const Scene &s, const SvgOptions &options = {});
void export_svg(const Scene &s, const std::filesystem::path &path,
                const SvgOptions &options = {});

} // namespace clifford::viz
