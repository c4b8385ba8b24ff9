#pragma once

#include <vector>

#include "logcrit/poly.hpp"

namespace logcrit {

// Generalized Sturm chain: s0 = f, s1 = g, s_{k+1} = -rem(s_{k-1}, s_k),
// each entry divided by its positive rational content only (signs preserved,
// coefficient growth tamed). Ends just before the first zero remainder, so
// the last entry is a constant multiple of gcd(f, g).
struct SturmChain {
  std::vector<Poly> polys;
};

// f must be nonzero. g may be zero (chain of length one).
SturmChain sturm_chain(const Poly& f, const Poly& g);

// Sign variations in the chain at x, zeros skipped. Signs at +/-inf come
// from leading coefficients and degree parity.
int variations_at(const SturmChain& chain, const ExtendedRational& x);

// Number of real roots of p in the open interval (a, b); distinct roots by
// default, or summed with multiplicity. Requires a < b and p nonzero; counts
// run over the square-free parts of p, and roots at a finite endpoint are
// not counted.
int count_real_roots(const Poly& p, const ExtendedRational& a,
                     const ExtendedRational& b, bool with_multiplicity);

inline int count_distinct_real_roots(const Poly& p) {
  return count_real_roots(p, ExtendedRational::neg_infinity(),
                          ExtendedRational::pos_infinity(), false);
}
inline int count_real_roots_with_multiplicity(const Poly& p) {
  return count_real_roots(p, ExtendedRational::neg_infinity(),
                          ExtendedRational::pos_infinity(), true);
}

}  // namespace logcrit
