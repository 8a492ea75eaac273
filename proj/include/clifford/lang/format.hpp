#pragma once

#include "clifford/multivector.hpp"

#include <string>

namespace clifford::lang {

// Blade name as the lexer reads it: "e12", or "e{3,10}" once an index
// exceeds 9. The scalar blade has no name and yields "".
std::string blade_name(Blade b);

// Grade-then-lexicographic terms joined by " + " / " - ". Unit
// coefficients are dropped, integers sit directly before the blade
// ("2e1"), other rationals are separated by a space ("1/2 e12"). Floats
// always carry a '.' so they re-read as floats. Zero prints as "0".
std::string format(const Multivector &a);

// Coefficient text without sign handling, as used by format().
std::string format_scalar(const Scalar &c);

} // namespace clifford::lang
