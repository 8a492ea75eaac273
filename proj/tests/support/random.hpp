#pragma once

// Seeded generators for property tests.

#include "clifford/multivector.hpp"

#include <random>
#include <vector>

namespace gen {

using clifford::Blade;
using clifford::Multivector;
using clifford::Rational;
using clifford::Scalar;
using clifford::Signature;

class Source {
public:
  explicit Source(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Small rational, nonzero unless allow_zero.
  Rational rational(bool allow_zero = true) {
    while (true) {
      Rational q(integer(-9, 9), integer(1, 6));
      q.canonicalize();
      if (allow_zero || q != 0)
        return q;
    }
  }

  Blade blade(unsigned n) {
    return Blade(static_cast<std::uint64_t>(integer(0, (1 << n) - 1)));
  }

  // Up to max_terms random terms over generators 1..n.
  Multivector multivector(unsigned n, Signature sig = {}, int max_terms = 6) {
    Multivector out(sig);
    int terms = integer(0, max_terms);
    for (int t = 0; t < terms; ++t)
      out.accumulate(blade(n), rational());
    return out;
  }

  Multivector nonzero_multivector(unsigned n, Signature sig = {}, int max_terms = 6) {
    while (true) {
      Multivector m = multivector(n, sig, max_terms);
      if (!m.is_zero())
        return m;
    }
  }

  Multivector vector(unsigned n, Signature sig = {}) {
    Multivector out(sig);
    for (unsigned i = 1; i <= n; ++i)
      if (coin(0.8))
        out.accumulate(Blade::generator(i), rational());
    return out;
  }

  Multivector nonzero_vector(unsigned n, Signature sig = {}) {
    while (true) {
      Multivector v = vector(n, sig);
      if (!v.is_zero())
        return v;
    }
  }

  // Homogeneous grade-k element.
  Multivector graded(unsigned n, unsigned k, Signature sig = {}, int max_terms = 4) {
    Multivector out(sig);
    for (int t = 0; t < max_terms; ++t) {
      Blade b = blade(n);
      if (static_cast<unsigned>(std::popcount(b.bits())) == k)
        out.accumulate(b, rational());
    }
    return out;
  }

  std::mt19937_64 &engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

} // namespace gen
