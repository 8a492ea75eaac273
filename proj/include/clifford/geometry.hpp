#pragma once

#include "clifford/multivector.hpp"

#include <span>
#include <vector>

namespace clifford {

// (-e1e2e3)(a ^ b) for pure vectors of R_{3,0}.
Multivector cross_product(const Multivector &a, const Multivector &b);

// ~U v U with U = cos(theta/2) + (a^b)/|a^b| sin(theta/2). The orientation
// of a^b picks the sense: (a, b) = (e1, e2) turns e1 towards e2.
Multivector rotate_in_plane(const Multivector &v, const Multivector &a, const Multivector &b,
                            double theta);

// Rotor taking the direction of `from` to the direction of `to`, applied
// to x. Antipodal directions rotate by pi in the plane of `from` and the
// lowest-index basis vector not collinear with it.
Multivector rotate_vec_to_vec(const Multivector &x, const Multivector &from,
                              const Multivector &to);

// (-1)^k ~U v U with U = u1 u2 ... uk; requires U ~U = 1.
Multivector apply_versor(const Multivector &v, std::span<const Multivector> factors);

Multivector to_basis(std::span<const Scalar> coords, Signature sig = {});
std::vector<Scalar> to_vector(const Multivector &a, unsigned dim);
Scalar coeff(const Multivector &a, Blade b);

} // namespace clifford
