#include "clifford/viz/scene.hpp"

#include "clifford/error.hpp"
#include "clifford/geometry.hpp"

#include <cmath>

namespace clifford::viz {

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

namespace {

constexpr Color kArrowColor{0.85, 0.20, 0.15};
constexpr Color kPatchColor{0.20, 0.45, 0.85};
constexpr Color kCubeColor{0.25, 0.70, 0.35};

Multivector to_mv(Vec3 v) {
  std::array<Scalar, 3> coords{Scalar(v.x), Scalar(v.y), Scalar(v.z)};
  return to_basis(coords).to_float();
}

Vec3 from_mv(const Multivector &m) {
  auto c = to_vector(grade_project(m, 1), 3);
  return {c[0].to_double(), c[1].to_double(), c[2].to_double()};
}

Vec3 axis(unsigned index) {
  Vec3 v;
  (index == 1 ? v.x : index == 2 ? v.y : v.z) = 1.0;
  return v;
}

} // namespace

std::vector<Triangle> build_arrow_cone(Vec3 tip) {
  double length = norm(tip);
  if (length == 0.0)
    throw Error(ErrorKind::ZeroVector, "an arrow needs a nonzero tip");
  const double sc = length / 2;
  // Only the +e3 direction needs no turn; -e3 goes through the antipodal rule.
  const bool along_e3 = tip.x == 0.0 && tip.y == 0.0 && tip.z > 0.0;
  const Multivector e3 = Multivector::basis(3).to_float();
  const Multivector target = to_mv(tip);

  auto place = [&](Vec3 p) {
    Vec3 scaled = sc * p;
    return along_e3 ? scaled : from_mv(rotate_vec_to_vec(to_mv(scaled), e3, target));
  };

  const Vec3 apex = place({0, 0, 1.0 / 5});
  const Vec3 shift = tip - apex;
  std::vector<Triangle> cone;
  for (int step = 1; step <= 25; ++step) {
    double t = 0.25 * step;
    Vec3 m1{std::sin(t) / 14, std::cos(t) / 14, 0};
    Vec3 m2{std::sin(t + 0.25) / 14, std::cos(t + 0.25) / 14, 0};
    cone.push_back({place(m1) + shift, place(m2) + shift, apex + shift});
  }
  return cone;
}

Scene scene_from_multivector(const Multivector &a) {
  Signature sig = a.signature();
  if (a.max_dimension() > 3 || (!sig.is_euclidean() && *sig.p() < 3))
    throw Error(ErrorKind::DimensionTooLarge, "only multivectors of R_{3,0} can be drawn");
  Scene scene;

  Multivector vec = grade_project(a, 1);
  if (!vec.is_zero()) {
    Vec3 tip = from_mv(vec);
    scene.arrows.push_back({Vec3{}, tip, kArrowColor, build_arrow_cone(tip)});
  }

  const Multivector bivectors = grade_project(a, 2);
  for (const auto &[blade, c] : bivectors.terms()) {
    auto idx = blade.indices();
    Vec3 u = axis(idx[0]), w = axis(idx[1]);
    double value = c.to_double();
    double h = std::sqrt(std::abs(value)) / 2;
    Patch patch;
    patch.positive = value > 0;
    patch.color = kPatchColor;
    std::array<Vec3, 4> corners{(-h) * u + (-h) * w, h * u + (-h) * w, h * u + h * w,
                                (-h) * u + h * w};
    if (!patch.positive)
      std::swap(corners[1], corners[3]);
    patch.corners = corners;
    Vec3 start = corners[0], end = corners[1];
    Vec3 dir = (1.0 / norm(end - start)) * (end - start);
    Vec3 mid = 0.5 * (start + end);
    Vec3 inward = (-1.0 / norm(mid)) * mid;
    double s = 2 * h * 0.12;
    patch.tick = {mid + (-s) * dir + s * inward, mid, mid + (-s) * dir + (-s) * inward};
    scene.patches.push_back(std::move(patch));
  }

  const Multivector trivector = grade_project(a, 3);
  for (const auto &[blade, c] : trivector.terms())
    scene.cubes.push_back({std::cbrt(std::abs(c.to_double())), kCubeColor});

  return scene;
}

std::array<Vec3, 8> cube_vertices(const Cube &c) {
  double h = c.edge / 2;
  std::array<Vec3, 8> v;
  for (int i = 0; i < 8; ++i)
    v[i] = {(i & 1) ? h : -h, (i & 2) ? h : -h, (i & 4) ? h : -h};
  return v;
}

const std::array<std::array<int, 4>, 6> &cube_faces() {
  // Outward-facing, counterclockwise seen from outside.
  static const std::array<std::array<int, 4>, 6> faces{{
      {0, 2, 3, 1}, // z-
      {4, 5, 7, 6}, // z+
      {0, 1, 5, 4}, // y-
      {2, 6, 7, 3}, // y+
      {0, 4, 6, 2}, // x-
      {1, 3, 7, 5}, // x+
  }};
  return faces;
}

} // namespace clifford::viz
