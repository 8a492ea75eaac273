#pragma once

#include "clifford/scalar.hpp"

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace clifford::calculus {

// Immutable scalar expression tree over named variables with exact rational
// constants. Constructors fold the obvious identities (0 + x, 1 * x, x^1)
// but never reorder or expand; simplify() does the heavy lifting.
class Expr {
public:
  enum class Kind { constant, variable, sum, product, power, quotient, sqrt };

  Expr(); // the constant 0
  Expr(int value);
  Expr(Rational value);

  static Expr constant(Rational value) { return Expr(std::move(value)); }
  static Expr variable(std::string name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, int exponent);
  static Expr quotient(Expr numerator, Expr denominator);
  static Expr square_root(Expr argument);

  Kind kind() const;
  // Valid for constants only.
  const Rational &value() const;
  // Valid for variables only.
  const std::string &name() const;
  // Operands: sum terms, product factors, {base}, {num, den}, {arg}.
  std::span<const Expr> children() const;
  // Valid for powers only.
  int exponent() const;

  bool is_constant() const { return kind() == Kind::constant; }
  bool is_zero() const;
  bool is_one() const;

  std::string to_string() const;

  friend bool operator==(const Expr &a, const Expr &b);

  friend Expr operator+(const Expr &a, const Expr &b) { return sum({a, b}); }
  friend Expr operator-(const Expr &a, const Expr &b);
  friend Expr operator-(const Expr &a);
  friend Expr operator*(const Expr &a, const Expr &b) { return product({a, b}); }
  friend Expr operator/(const Expr &a, const Expr &b) { return quotient(a, b); }

private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend struct ExprAccess;
};

Expr pow(const Expr &base, int exponent);
Expr sqrt(const Expr &argument);

Expr diff(const Expr &e, const std::string &variable);

using Point = std::map<std::string, Scalar>;

// Exact when every constant, binding and square root stays rational; a
// square root of a non-square falls back to double precision.
// Throws UnboundVariable or DomainError.
Scalar eval(const Expr &e, const Point &point);

// Normal form p / (f1^m1 ... fk^mk) with expanded polynomial numerator and
// primitive denominator factors. Cancels numerator factors that match a
// denominator factor by exact polynomial division; does not factor.
Expr simplify(const Expr &e);

std::set<std::string> free_variables(const Expr &e);

} // namespace clifford::calculus
