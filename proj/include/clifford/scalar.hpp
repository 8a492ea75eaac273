#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <variant>

namespace clifford {

using Rational = mpq_class;

enum class Mode { rational, floating };

// A coefficient: an exact rational or a double. Arithmetic between two
// rationals stays exact; anything touching a double becomes a double.
class Scalar {
public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}
  Scalar(long v) : value_(Rational(v)) {}
  Scalar(unsigned v) : value_(Rational(v)) {}
  Scalar(Rational v) : value_(std::move(v)) { canonical(); }
  Scalar(double v) : value_(v) {}

  static Scalar ratio(long num, long den);
  // Parses "p", "p/q" or a decimal float literal (contains '.' or 'e').
  static Scalar parse(const std::string &text);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_float() const { return !is_rational(); }
  Mode mode() const { return is_rational() ? Mode::rational : Mode::floating; }

  const Rational &rational() const { return std::get<Rational>(value_); }
  double to_double() const;
  Scalar to_float() const { return Scalar(to_double()); }
  Scalar in_mode(Mode m) const { return m == Mode::floating ? to_float() : *this; }

  bool is_zero() const;
  bool is_one() const;
  int sign() const;
  bool is_integer() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  // Throws DomainError on division by zero.
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  // Mixed comparisons promote to double; rational-rational is exact.
  friend bool operator==(const Scalar &a, const Scalar &b);
  friend std::partial_ordering operator<=>(const Scalar &a, const Scalar &b);

  // "p/q" style for rationals, shortest round-trip form for doubles.
  std::string to_string() const;

private:
  void canonical() {
    if (auto *q = std::get_if<Rational>(&value_))
      q->canonicalize();
  }
  std::variant<Rational, double> value_;
};

// Exact square root of a rational if it is a perfect square.
bool exact_sqrt(const Rational &q, Rational &out);

} // namespace clifford
