#pragma once

#include "clifford/blade.hpp"
#include "clifford/scalar.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace clifford {

// Sparse element of Cl(p,q): blade -> nonzero coefficient. Every value
// carries the signature it was built under and a coefficient mode; the
// mode is floating as soon as any coefficient is a double.
class Multivector {
public:
  using Terms = std::map<Blade, Scalar, BladeOrder>;

  explicit Multivector(Signature sig = {}, Mode mode = Mode::rational)
      : sig_(sig), mode_(mode) {}

  static Multivector scalar(Scalar c, Signature sig = {});
  static Multivector blade(Blade b, Scalar c = 1, Signature sig = {});
  // e_i with coefficient 1.
  static Multivector basis(unsigned index, Signature sig = {});
  // Product of generators in the given (arbitrary) order, contracted and
  // reordered into canonical form: basis_word({2,1}) == -e1e2.
  static Multivector basis_word(std::span<const unsigned> indices, Signature sig = {});

  Signature signature() const { return sig_; }
  Mode mode() const { return mode_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(Blade b) const;
  // Adds c to the coefficient of b, dropping the term if it cancels.
  void accumulate(Blade b, const Scalar &c);

  // Largest generator index in any term (0 for scalars and zero).
  unsigned max_dimension() const;
  std::vector<unsigned> grades() const;
  bool is_grade(unsigned k) const;
  bool is_vector() const { return is_grade(1); }
  bool is_scalar() const { return is_grade(0); }
  // Scalar part, or throws NotAVector-style DomainError when other grades exist.
  Scalar scalar_value() const;

  Multivector to_float() const;
  Multivector in_mode(Mode m) const { return m == Mode::floating ? to_float() : *this; }
  // Drops coefficients with |c| <= eps * max|c| (floating mode only).
  Multivector chop(double eps = 1e-12) const;

  Multivector operator-() const;
  Multivector &operator+=(const Multivector &o);
  Multivector &operator-=(const Multivector &o);
  friend Multivector operator+(Multivector a, const Multivector &b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector &b) { return a -= b; }
  // Geometric product.
  friend Multivector operator*(const Multivector &a, const Multivector &b);
  friend Multivector operator*(const Scalar &c, const Multivector &a);
  friend Multivector operator*(const Multivector &a, const Scalar &c) { return c * a; }
  friend Multivector operator/(const Multivector &a, const Scalar &c);

  // Same signature, mode-insensitive coefficient comparison.
  friend bool operator==(const Multivector &a, const Multivector &b);

private:
  Signature sig_;
  Mode mode_;
  Terms terms_;
};

// Throws SignatureMismatch unless the two signatures agree.
void require_same_signature(const Multivector &a, const Multivector &b);

Multivector add(const Multivector &a, const Multivector &b);
Multivector scale(const Scalar &c, const Multivector &a);

Multivector geometric_product(const Multivector &a, const Multivector &b);
// Left-to-right fold; at least one factor.
Multivector geometric_product(std::span<const Multivector> factors);
Multivector geometric_product(std::initializer_list<Multivector> factors);

Multivector grade_project(const Multivector &a, unsigned k);

// Sum over grade pairs (k, l), both nonzero, of <<a>_k <b>_l>_{|k-l|}.
Multivector inner_product(const Multivector &a, const Multivector &b);
// Sum over grade pairs of <<a>_k <b>_l>_{k+l}.
Multivector outer_product(const Multivector &a, const Multivector &b);
Multivector outer_product(std::span<const Multivector> factors);
Multivector outer_product(std::initializer_list<Multivector> factors);

// Grade k scaled by (-1)^{k(k-1)/2}.
Multivector reverse(const Multivector &a);

// <reverse(a) a>_0, signed.
Scalar norm_squared(const Multivector &a);
// sqrt(|norm_squared|).
double magnitude(const Multivector &a);

// Outcome of the exact inverse solver. Exactly one member is set: the
// inverse, or a nonzero Y with a*Y == 0 proving a is a zero divisor.
struct InverseOutcome {
  std::optional<Multivector> inverse;
  std::optional<Multivector> null_witness;
};

InverseOutcome solve_inverse(const Multivector &a);
// Throws ZeroMultivector or Singular.
Multivector inverse(const Multivector &a);

// a * pseudoscalar(dim)^{-1}; the pseudoscalar is e1...e_dim.
Multivector dual(const Multivector &a, unsigned dim);
Multivector pseudoscalar(unsigned dim, Signature sig = {});

// Number of blades with max index <= n.
std::uint64_t blade_count(unsigned n);

} // namespace clifford
