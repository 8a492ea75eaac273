#include "clifford/scalar.hpp"

#include "clifford/error.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace clifford {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorKind::SignatureMismatch: return "SignatureMismatch";
  case ErrorKind::ZeroMultivector: return "ZeroMultivector";
  case ErrorKind::Singular: return "Singular";
  case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorKind::NotAVector: return "NotAVector";
  case ErrorKind::CollinearPlane: return "CollinearPlane";
  case ErrorKind::ZeroVector: return "ZeroVector";
  case ErrorKind::NotUnitVersor: return "NotUnitVersor";
  case ErrorKind::NotInEvenSubalgebra: return "NotInEvenSubalgebra";
  case ErrorKind::ZeroQuaternion: return "ZeroQuaternion";
  case ErrorKind::WrongSignature: return "WrongSignature";
  case ErrorKind::UnboundVariable: return "UnboundVariable";
  case ErrorKind::DomainError: return "DomainError";
  case ErrorKind::DegenerateNormal: return "DegenerateNormal";
  case ErrorKind::LexError: return "LexError";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Scalar Scalar::ratio(long num, long den) {
  if (den == 0)
    throw Error(ErrorKind::DomainError, "division by zero");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse(const std::string &text) {
  if (text.find_first_of(".eE") != std::string::npos) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw Error(ErrorKind::DomainError, "bad float literal '" + text + "'");
    return Scalar(v);
  }
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw Error(ErrorKind::DomainError, "bad rational literal '" + text + "'");
  if (q.get_den() == 0)
    throw Error(ErrorKind::DomainError, "zero denominator in '" + text + "'");
  return Scalar(std::move(q));
}

double Scalar::to_double() const {
  if (is_rational())
    return rational().get_d();
  return std::get<double>(value_);
}

bool Scalar::is_zero() const {
  return is_rational() ? sgn(rational()) == 0 : std::get<double>(value_) == 0.0;
}

bool Scalar::is_one() const {
  return is_rational() ? rational() == 1 : std::get<double>(value_) == 1.0;
}

int Scalar::sign() const {
  if (is_rational())
    return sgn(rational());
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Scalar::is_integer() const {
  if (is_rational())
    return rational().get_den() == 1;
  double d = std::get<double>(value_);
  return std::isfinite(d) && std::floor(d) == d;
}

Scalar Scalar::operator-() const {
  if (is_rational())
    return Scalar(Rational(-rational()));
  return Scalar(-std::get<double>(value_));
}

Scalar &Scalar::operator+=(const Scalar &o) {
  if (is_rational() && o.is_rational())
    std::get<Rational>(value_) += o.rational();
  else
    value_ = to_double() + o.to_double();
  return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
  if (is_rational() && o.is_rational())
    std::get<Rational>(value_) -= o.rational();
  else
    value_ = to_double() - o.to_double();
  return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
  if (is_rational() && o.is_rational())
    std::get<Rational>(value_) *= o.rational();
  else
    value_ = to_double() * o.to_double();
  return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
  if (o.is_zero())
    throw Error(ErrorKind::DomainError, "division by zero");
  if (is_rational() && o.is_rational())
    std::get<Rational>(value_) /= o.rational();
  else
    value_ = to_double() / o.to_double();
  return *this;
}

bool operator==(const Scalar &a, const Scalar &b) {
  if (a.is_rational() && b.is_rational())
    return a.rational() == b.rational();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Scalar &a, const Scalar &b) {
  if (a.is_rational() && b.is_rational()) {
    int c = cmp(a.rational(), b.rational());
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater
                          : std::partial_ordering::equivalent);
  }
  return a.to_double() <=> b.to_double();
}

std::string Scalar::to_string() const {
  if (is_rational())
    return rational().get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, ptr);
}

bool exact_sqrt(const Rational &q, Rational &out) {
  if (sgn(q) < 0)
    return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

} // namespace clifford
