#include "clifford/geometry.hpp"

#include "clifford/error.hpp"

#include <cmath>

namespace clifford {

namespace {

constexpr double kUnitTolerance = 1e-9;

void require_vector(const Multivector &v, const char *what) {
  if (!v.is_vector())
    throw Error(ErrorKind::NotAVector, std::string(what) + " must be a pure vector");
}

Multivector normalized(const Multivector &v) {
  double m = magnitude(v);
  if (m == 0.0)
    throw Error(ErrorKind::ZeroVector, "cannot normalize a zero vector");
  return v.to_float() / Scalar(m);
}

Multivector sandwich(const Multivector &rotor, const Multivector &v) {
  return reverse(rotor) * v * rotor;
}

} // namespace

Multivector cross_product(const Multivector &a, const Multivector &b) {
  require_vector(a, "cross product operand");
  require_vector(b, "cross product operand");
  if (a.max_dimension() > 3 || b.max_dimension() > 3)
    throw Error(ErrorKind::DimensionTooLarge, "cross product is defined in three dimensions");
  Signature sig = a.signature();
  if (!sig.is_euclidean() && *sig.p() < 3)
    throw Error(ErrorKind::WrongSignature, "cross product needs e1, e2, e3 squaring to +1");
  Multivector minus_i = -pseudoscalar(3, sig);
  return minus_i * outer_product(a, b);
}

Multivector rotate_in_plane(const Multivector &v, const Multivector &a, const Multivector &b,
                            double theta) {
  require_vector(a, "plane vector");
  require_vector(b, "plane vector");
  Multivector plane = outer_product(a, b);
  double area = magnitude(plane);
  if (plane.is_zero() || area == 0.0)
    throw Error(ErrorKind::CollinearPlane, "a ^ b vanishes, the rotation plane is undefined");
  Multivector rotor = Multivector::scalar(std::cos(theta / 2), v.signature()) +
                      plane.to_float() * Scalar(std::sin(theta / 2) / area);
  return sandwich(rotor, v.to_float()).chop();
}

Multivector rotate_vec_to_vec(const Multivector &x, const Multivector &from,
                              const Multivector &to) {
  require_vector(from, "rotation source");
  require_vector(to, "rotation target");
  require_same_signature(from, to);
  Multivector f = normalized(from);
  Multivector t = normalized(to);
  Signature sig = f.signature();

  double cosine = inner_product(f, t).coeff(Blade()).to_double();
  if (1.0 + cosine <= 1e-12) {
    unsigned dim = std::max(3u, f.max_dimension());
    for (unsigned i = 1; i <= dim; ++i) {
      Multivector axis = Multivector::basis(i, sig);
      if (magnitude(outer_product(f, axis)) > 1e-9)
        return rotate_in_plane(x, f, axis, M_PI);
    }
    throw Error(ErrorKind::CollinearPlane, "no plane available for the antipodal rotation");
  }

  // ~U f U = t for U proportional to 1 + f t.
  Multivector rotor = Multivector::scalar(1.0, sig) + f * t;
  rotor = rotor / Scalar(std::sqrt(2.0 * (1.0 + cosine)));
  return sandwich(rotor, x.to_float()).chop();
}

Multivector apply_versor(const Multivector &v, std::span<const Multivector> factors) {
  if (factors.empty())
    return v;
  for (const Multivector &u : factors)
    require_vector(u, "versor factor");
  Multivector product = geometric_product(factors);
  Multivector unit = product * reverse(product);
  Multivector one = Multivector::scalar(1, product.signature());
  bool is_unit;
  if (unit.mode() == Mode::rational) {
    is_unit = unit == one;
  } else {
    Multivector residue = unit - one;
    is_unit = true;
    for (const auto &[b, c] : residue.terms())
      if (std::abs(c.to_double()) > kUnitTolerance)
        is_unit = false;
  }
  if (!is_unit)
    throw Error(ErrorKind::NotUnitVersor, "(u1...uk)(uk...u1) must equal 1");
  Multivector out = sandwich(product, v);
  if (factors.size() % 2 == 1)
    out = -out;
  return out.chop();
}

Multivector to_basis(std::span<const Scalar> coords, Signature sig) {
  Multivector out(sig);
  for (std::size_t i = 0; i < coords.size(); ++i)
    out.accumulate(Blade::generator(static_cast<unsigned>(i + 1)), coords[i]);
  return out;
}

std::vector<Scalar> to_vector(const Multivector &a, unsigned dim) {
  if (!a.is_vector())
    throw Error(ErrorKind::NotAVector, "to_vector needs a pure vector");
  if (a.max_dimension() > dim)
    throw Error(ErrorKind::DimensionTooSmall,
                "vector has components beyond dimension " + std::to_string(dim));
  std::vector<Scalar> out;
  out.reserve(dim);
  for (unsigned i = 1; i <= dim; ++i)
    out.push_back(a.coeff(Blade::generator(i)));
  return out;
}

Scalar coeff(const Multivector &a, Blade b) { return a.coeff(b); }

} // namespace clifford
