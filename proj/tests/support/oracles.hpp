#pragma once

// Independent reference implementations used only by the tests.

#include "clifford/multivector.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using clifford::Blade;
using clifford::Multivector;
using clifford::Rational;
using clifford::Scalar;
using clifford::Signature;

struct SignedBlade {
  int sign;
  Blade blade;
};

// Concatenate the index words and bubble-sort them, flipping the sign on
// every swap of distinct neighbours and contracting equal neighbours with
// the metric value of that generator.
inline SignedBlade bubble_product(Blade a, Blade b, Signature sig) {
  std::vector<unsigned> word = a.indices();
  for (unsigned i : b.indices())
    word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        sign *= clifford::metric_sign(word[k], sig);
        word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return {sign, Blade::from_indices(word)};
}

// Geometric product assembled term by term from the bubble oracle.
inline Multivector product(const Multivector &a, const Multivector &b) {
  Multivector out(a.signature());
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      SignedBlade p = bubble_product(ba, bb, a.signature());
      out.accumulate(p.blade, ca * cb * Scalar(p.sign));
    }
  return out;
}

// Outer product from the definition on blades: disjoint blades multiply,
// overlapping ones vanish.
inline Multivector wedge(const Multivector &a, const Multivector &b) {
  Multivector out(a.signature());
  for (const auto &[ba, ca] : a.terms())
    for (const auto &[bb, cb] : b.terms()) {
      if ((ba.bits() & bb.bits()) != 0)
        continue;
      SignedBlade p = bubble_product(ba, bb, a.signature());
      out.accumulate(p.blade, ca * cb * Scalar(p.sign));
    }
  return out;
}

// Gaussian curvature of an implicit surface f = 0 in Euclidean R3 from the
// bordered-Hessian formula, with central finite differences.
inline double implicit_curvature(const std::function<double(double, double, double)> &f,
                                 double x, double y, double z, double h = 1e-3) {
  double p[3] = {x, y, z};
  auto at = [&](int i, double di, int j, double dj) {
    double q[3] = {p[0], p[1], p[2]};
    q[i] += di;
    q[j] += dj;
    return f(q[0], q[1], q[2]);
  };
  double g[3], H[3][3];
  for (int i = 0; i < 3; ++i) {
    g[i] = (at(i, h, i, 0) - at(i, -h, i, 0)) / (2 * h);
    for (int j = 0; j < 3; ++j)
      H[i][j] = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) /
                (4 * h * h);
  }
  // det [[H, g], [g^T, 0]] = -g^T adj(H) g.
  double adj[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = H[r0][c0] * H[r1][c1] - H[r0][c1] * H[r1][c0];
    }
  double quad = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      quad += g[i] * adj[i][j] * g[j];
  double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
  return quad / (g2 * g2);
}

} // namespace oracle
