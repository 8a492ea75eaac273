#pragma once

#include "clifford/multivector.hpp"

#include <array>
#include <vector>

namespace clifford {

// z = re + im i with i = e1e2 inside the even subalgebra of R_{2,0}.
struct ComplexGA {
  Scalar re;
  Scalar im;
  friend bool operator==(const ComplexGA &, const ComplexGA &) = default;
};

Multivector complex_to_mv(const ComplexGA &z);
// Throws NotInEvenSubalgebra unless the support is within {1, e1e2}.
ComplexGA mv_to_complex(const Multivector &a);

ComplexGA complex_product(const ComplexGA &z, const ComplexGA &w);
ComplexGA complex_conjugate(const ComplexGA &z);
ComplexGA complex_inverse(const ComplexGA &z);
double complex_abs(const ComplexGA &z);
Scalar complex_abs_squared(const ComplexGA &z);
Scalar complex_re(const ComplexGA &z);
Scalar complex_im(const ComplexGA &z);

// q0 + q1 i + q2 j + q3 k with i = -e2e3, j = e1e3, k = -e1e2 in R_{3,0}.
struct QuaternionGA {
  Scalar q0, q1, q2, q3;
  friend bool operator==(const QuaternionGA &, const QuaternionGA &) = default;
};

Multivector quaternion_to_mv(const QuaternionGA &q);
// Throws NotInEvenSubalgebra on any term outside {1, e12, e13, e23}.
QuaternionGA mv_to_quaternion(const Multivector &a);

QuaternionGA quaternion_product(const QuaternionGA &p, const QuaternionGA &q);
QuaternionGA quaternion_turn(const QuaternionGA &q);
double quaternion_magnitude(const QuaternionGA &q);
// Throws ZeroQuaternion for q == 0.
QuaternionGA quaternion_inverse(const QuaternionGA &q);

// R_{3,1}: sigma_i = e_i e4. Both throw WrongSignature unless p == 3.
Multivector pauli_sigma(unsigned i, Signature sig);
std::array<Multivector, 4> dirac_basis(Signature sig);

} // namespace clifford
