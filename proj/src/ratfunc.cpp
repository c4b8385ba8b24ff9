#include "logcrit/ratfunc.hpp"

namespace logcrit {

RatFunc make_ratfunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  RatFunc r;
  if (num.is_zero()) {
    r.num_ = Poly::zero();
    r.den_ = Poly::one();
    return r;
  }
  Poly g = gcd(num, den);
  num = exact_div(num, g);
  den = exact_div(den, g);
  // Canonical denominator: integer-primitive, positive leading coefficient;
  // the numerator absorbs the (positive or negative) rational factor.
  Rational scale = Rational(1) / den.content();
  if (sign(den.leading()) < 0) scale = -scale;
  r.num_ = scale * num;
  r.den_ = scale * den;
  return r;
}

RatFunc RatFunc::from_poly(Poly p) { return make_ratfunc(std::move(p), Poly::one()); }

RatFunc RatFunc::constant(const Rational& c) { return from_poly(Poly(c)); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return make_ratfunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& r) {
  RatFunc out = r;
  out.num_ = -out.num_;
  return out;
}

RatFunc RatFunc::negated_reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of the zero function");
  return make_ratfunc(-den_, num_);
}

}  // namespace logcrit
