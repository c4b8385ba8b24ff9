#pragma once

#include "logcrit/poly.hpp"

namespace logcrit {

// Res(f, g) by the subresultant polynomial remainder sequence (Collins/Brown
// as in the standard computer-algebra texts), exact over the rationals.
// Res with a zero argument is 0; two nonzero constants give 1.
Rational resultant(const Poly& f, const Poly& g);

// Determinant of the Sylvester matrix of u = a + s*b and du/dz = a' + s*b'
// taken with respect to z, entries degree <= 1 in s, evaluated by Bareiss
// fraction-free elimination over the polynomial ring in s. Formal z-degrees
// are deg b and deg b - 1, so deg b > deg a is required.
Poly sylvester_resultant_in_sigma(const Poly& a, const Poly& b);

// Locus of parameters where the shifted-derivative family p' + s*p changes
// its complex root structure. The family is first reduced by gcd(p, p')
// (which divides p' + s*p for every s, and whose roots stay at a fixed
// multiplicity in the family), then the Sylvester determinant above is
// stripped of its trailing power of s (formal-degree artifact at s = 0) and
// normalized to a primitive integer polynomial with positive leading
// coefficient. Nonzero for every p with deg p >= 1; throws std::domain_error
// on constants.
Poly discriminant_in_sigma(const Poly& p);

}  // namespace logcrit
