#include "clifford/embeddings.hpp"

#include "clifford/error.hpp"

namespace clifford {

namespace {

const Blade kE12 = Blade::from_indices({1, 2});
const Blade kE13 = Blade::from_indices({1, 3});
const Blade kE23 = Blade::from_indices({2, 3});

void require_support(const Multivector &a, std::initializer_list<Blade> allowed,
                     const char *what) {
  for (const auto &[b, c] : a.terms()) {
    bool ok = false;
    for (Blade x : allowed)
      ok = ok || x == b;
    if (!ok)
      throw Error(ErrorKind::NotInEvenSubalgebra,
                  to_string(b) + " has no counterpart in the " + what);
  }
}

} // namespace

Multivector complex_to_mv(const ComplexGA &z) {
  Multivector out(Signature::euclidean());
  out.accumulate(Blade(), z.re);
  out.accumulate(kE12, z.im);
  return out;
}

ComplexGA mv_to_complex(const Multivector &a) {
  require_support(a, {Blade(), kE12}, "complex numbers");
  return {a.coeff(Blade()), a.coeff(kE12)};
}

ComplexGA complex_product(const ComplexGA &z, const ComplexGA &w) {
  return mv_to_complex(complex_to_mv(z) * complex_to_mv(w));
}

ComplexGA complex_conjugate(const ComplexGA &z) { return mv_to_complex(reverse(complex_to_mv(z))); }

ComplexGA complex_inverse(const ComplexGA &z) {
  if (z.re.is_zero() && z.im.is_zero())
    throw Error(ErrorKind::ZeroMultivector, "zero has no inverse");
  return mv_to_complex(inverse(complex_to_mv(z)));
}

double complex_abs(const ComplexGA &z) { return magnitude(complex_to_mv(z)); }

Scalar complex_abs_squared(const ComplexGA &z) { return norm_squared(complex_to_mv(z)); }

Scalar complex_re(const ComplexGA &z) { return grade_project(complex_to_mv(z), 0).coeff(Blade()); }

Scalar complex_im(const ComplexGA &z) {
  Multivector minus_i = Multivector::blade(kE12, -1);
  return (grade_project(complex_to_mv(z), 2) * minus_i).coeff(Blade());
}

Multivector quaternion_to_mv(const QuaternionGA &q) {
  Multivector out(Signature::euclidean());
  out.accumulate(Blade(), q.q0);
  out.accumulate(kE23, -q.q1);
  out.accumulate(kE13, q.q2);
  out.accumulate(kE12, -q.q3);
  return out;
}

QuaternionGA mv_to_quaternion(const Multivector &a) {
  require_support(a, {Blade(), kE12, kE13, kE23}, "quaternions");
  return {a.coeff(Blade()), -a.coeff(kE23), a.coeff(kE13), -a.coeff(kE12)};
}

QuaternionGA quaternion_product(const QuaternionGA &p, const QuaternionGA &q) {
  return mv_to_quaternion(quaternion_to_mv(p) * quaternion_to_mv(q));
}

QuaternionGA quaternion_turn(const QuaternionGA &q) {
  return mv_to_quaternion(reverse(quaternion_to_mv(q)));
}

double quaternion_magnitude(const QuaternionGA &q) { return magnitude(quaternion_to_mv(q)); }

QuaternionGA quaternion_inverse(const QuaternionGA &q) {
  Multivector m = quaternion_to_mv(q);
  if (m.is_zero())
    throw Error(ErrorKind::ZeroQuaternion, "zero quaternion has no inverse");
  return mv_to_quaternion(inverse(m));
}

namespace {

void require_dirac_signature(Signature sig) {
  if (sig.is_euclidean() || *sig.p() != 3)
    throw Error(ErrorKind::WrongSignature, "Pauli/Dirac generators live in R_{3,1} (p = 3)");
}

} // namespace

Multivector pauli_sigma(unsigned i, Signature sig) {
  require_dirac_signature(sig);
  if (i < 1 || i > 3)
    throw Error(ErrorKind::IndexOutOfRange, "Pauli index must be 1, 2 or 3");
  return Multivector::basis(i, sig) * Multivector::basis(4, sig);
}

std::array<Multivector, 4> dirac_basis(Signature sig) {
  require_dirac_signature(sig);
  return {Multivector::basis(1, sig), Multivector::basis(2, sig), Multivector::basis(3, sig),
          Multivector::basis(4, sig)};
}

} // namespace clifford
