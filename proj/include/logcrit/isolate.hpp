#pragma once

#include <vector>

#include "logcrit/sturm.hpp"

namespace logcrit {

// One real root of a polynomial, either an exact rational point or an open
// interval (lo, hi) with rational non-root endpoints known to contain exactly
// one distinct root. Interval roots are certified irrational at construction
// (see isolate_real_roots), carry their square-free defining factor, and keep
// factor(lo) * factor(hi) < 0, so refinement is plain sign bisection.
struct IsolatedRoot {
  bool is_point = false;
  Rational point;          // set when is_point
  Rational lo, hi;         // set when !is_point; lo < hi
  int multiplicity = 1;    // multiplicity in the polynomial that was isolated
  Poly factor;             // square-free witness, integer-primitive

  Rational width() const { return is_point ? Rational(0) : Rational(hi - lo); }
  // Closed-hull endpoints, usable for ordering against other regions.
  const Rational& left() const { return is_point ? point : lo; }
  const Rational& right() const { return is_point ? point : hi; }
  bool contains(const Rational& x) const {
    return is_point ? x == point : (lo < x && x < hi);
  }
};

// All real roots of p (nonzero, else std::domain_error), sorted increasing,
// regions pairwise disjoint, multiplicities from the square-free
// decomposition. Every rational root comes back as an exact point: each
// candidate interval is narrowed below 1/(2*lc^2) for the primitive factor's
// leading coefficient lc — rational roots have denominator dividing lc, so
// the interval then holds at most one candidate, found as the
// minimal-denominator rational in the interval and confirmed by evaluation.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p);

// Shrink an interval root below the given width (no-op on points).
void refine_below(IsolatedRoot& root, const Rational& width);

// Refine two regions of distinct roots until they are disjoint as sets.
void separate(IsolatedRoot& a, IsolatedRoot& b);

bool disjoint(const IsolatedRoot& a, const IsolatedRoot& b);

// B with every real root of p strictly inside (-B, B); p nonconstant.
Rational cauchy_root_bound(const Poly& p);

// The unique rational with smallest denominator strictly inside (lo, hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

}  // namespace logcrit
