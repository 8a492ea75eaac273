#pragma once

#include "clifford/blade.hpp"
#include "clifford/calculus/expr.hpp"

#include <array>

namespace clifford::calculus {

// Coordinates of the three-dimensional ambient space.
inline const std::array<std::string, 3> kCoordinates{"x1", "x2", "x3"};

Expr coordinate(unsigned k); // k in 1..3

struct VectorFieldExpr {
  std::array<Expr, 3> components;
  Signature signature;
};

// Component k is (e_k . e_k) d(phi)/dx_k.
VectorFieldExpr geo_grad(const Expr &phi, Signature sig);
// sum_k (e_k . e_k)^2 d(f_k)/dx_k.
Expr geo_div(const VectorFieldExpr &f);
// Componentwise sum_k (e_k . e_k)^3 d^2/dx_k^2.
VectorFieldExpr geo_lap(const VectorFieldExpr &f);
// sum_k (e_k . e_k) a_k b_k.
Expr field_inner(const VectorFieldExpr &a, const VectorFieldExpr &b);

VectorFieldExpr simplify(const VectorFieldExpr &f);

// k = 1/2 [n . lap(n) + (div n)^2] for the surface f(x1, x2, x3) = 0 with
// n = grad f / |grad f|. |grad f|^2 is the signed metric square grad f . grad f;
// k is rational in it, so the result carries no square roots. Throws
// DegenerateNormal when grad f . grad f vanishes identically.
Expr gaussian_curvature(const Expr &f, Signature sig);

} // namespace clifford::calculus
