#pragma once

#include <vector>

#include "logcrit/isolate.hpp"
#include "logcrit/ratfunc.hpp"

namespace logcrit {

// Jump count of a real rational function across its poles: a pole where the
// function jumps from -inf to +inf contributes +1, the opposite jump -1,
// even-order poles 0.

// Isolated real poles of r (roots of the reduced denominator).
std::vector<IsolatedRoot> real_poles(const RatFunc& r);

// Contribution of the single pole inside `pole`, read off from the signs of
// numerator and denominator just left and right of the pole after the region
// has been refined away from every other root of num * den. Throws
// std::invalid_argument when the region does not hold exactly one
// denominator root.
int index_at_pole(const RatFunc& r, const IsolatedRoot& pole);

// Sum over poles strictly inside (a, b); requires a < b and finite endpoints
// off the poles (std::invalid_argument otherwise).
int index_interval(const RatFunc& r, const ExtendedRational& a,
                   const ExtendedRational& b);

enum class IndexMethod {
  euclidean,  // sign variations of the Sturm chain of (den, num) at -inf/+inf
  per_pole,   // isolate poles, sum their individual contributions
};

// Index over the whole line. The two methods are independent routes and must
// agree; both stay available on purpose.
int index_line(const RatFunc& r, IndexMethod method = IndexMethod::euclidean);

// Contribution of the pole at infinity: 0 unless deg num > deg den; for
// excess e = deg num - deg den and leading-coefficient ratio c it is
// -sign(c) for odd e and 0 for even e.
int index_at_infinity(const RatFunc& r);

// Line index plus the contribution at infinity (projective line).
int index_projective(const RatFunc& r);

}  // namespace logcrit
