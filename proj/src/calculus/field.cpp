#include "clifford/calculus/field.hpp"

#include "clifford/error.hpp"

namespace clifford::calculus {

Expr coordinate(unsigned k) {
  if (k < 1 || k > 3)
    throw Error(ErrorKind::IndexOutOfRange, "field coordinates are x1, x2, x3");
  return Expr::variable(kCoordinates[k - 1]);
}

namespace {

int sign_power(unsigned k, Signature sig, int power) {
  int s = metric_sign(k, sig);
  return (power % 2 == 0) ? 1 : s;
}

} // namespace

VectorFieldExpr geo_grad(const Expr &phi, Signature sig) {
  VectorFieldExpr out{{}, sig};
  for (unsigned k = 1; k <= 3; ++k)
    out.components[k - 1] = simplify(Expr(metric_sign(k, sig)) * diff(phi, kCoordinates[k - 1]));
  return out;
}

Expr geo_div(const VectorFieldExpr &f) {
  std::vector<Expr> terms;
  for (unsigned k = 1; k <= 3; ++k)
    terms.push_back(Expr(sign_power(k, f.signature, 2)) *
                    diff(f.components[k - 1], kCoordinates[k - 1]));
  return simplify(Expr::sum(std::move(terms)));
}

VectorFieldExpr geo_lap(const VectorFieldExpr &f) {
  VectorFieldExpr out{{}, f.signature};
  for (unsigned c = 0; c < 3; ++c) {
    std::vector<Expr> terms;
    for (unsigned k = 1; k <= 3; ++k) {
      const std::string &x = kCoordinates[k - 1];
      terms.push_back(Expr(sign_power(k, f.signature, 3)) * diff(diff(f.components[c], x), x));
    }
    out.components[c] = simplify(Expr::sum(std::move(terms)));
  }
  return out;
}

Expr field_inner(const VectorFieldExpr &a, const VectorFieldExpr &b) {
  std::vector<Expr> terms;
  for (unsigned k = 1; k <= 3; ++k)
    terms.push_back(Expr(metric_sign(k, a.signature)) * a.components[k - 1] *
                    b.components[k - 1]);
  return simplify(Expr::sum(std::move(terms)));
}

VectorFieldExpr simplify(const VectorFieldExpr &f) {
  VectorFieldExpr out = f;
  for (Expr &c : out.components)
    c = simplify(c);
  return out;
}

Expr gaussian_curvature(const Expr &f, Signature sig) {
  // n = g w with w = N^{-1/2}, N = g . g. Every derivative of n is w times
  // a rational expression: d(w)/dx = -1/2 w N_x / N, so
  //   d n_k / dx_j       = w a_kj,  a_kj = d g_k/dx_j - 1/2 g_k N_j / N
  //   d^2 n_k / dx_j^2   = w b_kj,  b_kj = d a_kj/dx_j - 1/2 a_kj N_j / N
  // and k = (w^2 / 2) [sum_k s_k g_k sum_j s_j^3 b_kj + (sum_k s_k^2 a_kk)^2].
  VectorFieldExpr g = geo_grad(f, sig);
  Expr norm_sq = field_inner(g, g);
  if (norm_sq.is_zero())
    throw Error(ErrorKind::DegenerateNormal, "the gradient of " + f.to_string() +
                                                 " is null everywhere");

  std::array<Expr, 3> norm_deriv;
  for (unsigned j = 0; j < 3; ++j)
    norm_deriv[j] = simplify(diff(norm_sq, kCoordinates[j]));

  const Expr half(Rational(1, 2));
  std::array<std::array<Expr, 3>, 3> first;
  std::array<std::array<Expr, 3>, 3> second;
  for (unsigned k = 0; k < 3; ++k) {
    for (unsigned j = 0; j < 3; ++j) {
      const std::string &x = kCoordinates[j];
      first[k][j] = simplify(diff(g.components[k], x) -
                             half * g.components[k] * norm_deriv[j] / norm_sq);
      second[k][j] =
          simplify(diff(first[k][j], x) - half * first[k][j] * norm_deriv[j] / norm_sq);
    }
  }

  std::vector<Expr> n_dot_lap;
  std::vector<Expr> divergence;
  for (unsigned k = 0; k < 3; ++k) {
    std::vector<Expr> lap_k;
    for (unsigned j = 0; j < 3; ++j)
      lap_k.push_back(Expr(sign_power(j + 1, sig, 3)) * second[k][j]);
    n_dot_lap.push_back(Expr(metric_sign(k + 1, sig)) * g.components[k] *
                        Expr::sum(std::move(lap_k)));
    divergence.push_back(Expr(sign_power(k + 1, sig, 2)) * first[k][k]);
  }
  Expr div = Expr::sum(std::move(divergence));
  Expr bracket = Expr::sum(std::move(n_dot_lap)) + pow(div, 2);
  return simplify(half * bracket / norm_sq);
}

} // namespace clifford::calculus
