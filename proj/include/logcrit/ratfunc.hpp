#pragma once

#include "logcrit/poly.hpp"

namespace logcrit {

// Real rational function in lowest terms. Canonical form: gcd(num, den) = 1
// and den integer-primitive with positive leading coefficient, fixed at
// construction, so equal functions compare equal componentwise.
class RatFunc {
 public:
  RatFunc() : num_(Poly::zero()), den_(Poly::one()) {}
  static RatFunc from_poly(Poly p);
  static RatFunc constant(const Rational& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& r);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // -1/r; requires r nonzero.
  RatFunc negated_reciprocal() const;

  friend RatFunc make_ratfunc(Poly num, Poly den);

 private:
  Poly num_, den_;
};

// Reduce num/den to canonical form. Throws std::domain_error when den = 0.
RatFunc make_ratfunc(Poly num, Poly den);

}  // namespace logcrit
