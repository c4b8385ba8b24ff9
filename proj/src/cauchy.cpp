#include "logcrit/cauchy.hpp"

#include <cassert>

namespace logcrit {

std::vector<IsolatedRoot> real_poles(const RatFunc& r) {
  if (r.den().is_constant()) return {};
  return isolate_real_roots(r.den());
}

int index_at_pole(const RatFunc& r, const IsolatedRoot& pole) {
  const Poly& num = r.num();
  const Poly& den = r.den();
  // Validate the region: exactly one denominator root inside.
  if (pole.is_point) {
    if (sign(den.eval(pole.point)) != 0)
      throw std::invalid_argument("region is not a pole of the function");
  } else {
    if (count_real_roots(den, ExtendedRational(pole.lo), ExtendedRational(pole.hi),
                         false) != 1)
      throw std::invalid_argument("region does not isolate one pole");
  }

  // Shrink a probe interval around the pole until it contains just this root
  // of num*den and has clean endpoints; then one sign read per side settles
  // the jump. The numerator cannot vanish at the pole (reduced form), so its
  // sign is constant across the probe once no other roots remain inside.
  Poly both = num * den;
  IsolatedRoot probe = pole;
  bool pin_to_point = probe.is_point;
  Rational center = pin_to_point ? probe.point : Rational(0);
  Rational radius(1);
  if (pin_to_point) {
    probe.is_point = false;
    probe.lo = center - radius;
    probe.hi = center + radius;
  }
  auto clean = [&](const IsolatedRoot& reg) {
    if (both.sign_at(reg.lo) == 0 || both.sign_at(reg.hi) == 0) return false;
    return count_real_roots(both, ExtendedRational(reg.lo), ExtendedRational(reg.hi),
                            false) == 1;
  };
  while (!clean(probe)) {
    if (pin_to_point) {
      radius /= 4;
      probe.lo = center - radius;
      probe.hi = center + radius;
    } else {
      refine_below(probe, probe.width() / 4);
      if (probe.is_point) {  // collapsed onto a rational root
        pin_to_point = true;
        center = probe.point;
        probe.is_point = false;
        probe.lo = center - radius;
        probe.hi = center + radius;
      }
    }
  }

  int left = num.sign_at(probe.lo) * den.sign_at(probe.lo);
  int right = num.sign_at(probe.hi) * den.sign_at(probe.hi);
  assert(left != 0 && right != 0);
  if (left < 0 && right > 0) return 1;
  if (left > 0 && right < 0) return -1;
  return 0;  // even-order pole, no net jump
}

int index_interval(const RatFunc& r, const ExtendedRational& a,
                   const ExtendedRational& b) {
  if (!(a < b)) throw std::invalid_argument("index interval needs a < b");
  if (a.is_finite() && sign(r.den().eval(a.value())) == 0)
    throw std::invalid_argument("interval endpoint is a pole");
  if (b.is_finite() && sign(r.den().eval(b.value())) == 0)
    throw std::invalid_argument("interval endpoint is a pole");

  int total = 0;
  for (IsolatedRoot pole : real_poles(r)) {
    // Push the region strictly inside or strictly outside (a, b); endpoints
    // are non-poles, so refinement always resolves a straddle.
    if (!pole.is_point) {
      while ((a.is_finite() && pole.contains(a.value())) ||
             (b.is_finite() && pole.contains(b.value())))
        refine_below(pole, pole.width() / 4);
    }
    bool after_a = !a.is_finite() ||
                   (pole.is_point ? a.value() < pole.point : a.value() <= pole.lo);
    bool before_b = !b.is_finite() ||
                    (pole.is_point ? pole.point < b.value() : pole.hi <= b.value());
    if (after_a && before_b) total += index_at_pole(r, pole);
  }
  return total;
}

int index_line(const RatFunc& r, IndexMethod method) {
  if (method == IndexMethod::per_pole)
    return index_interval(r, ExtendedRational::neg_infinity(),
                          ExtendedRational::pos_infinity());
  // Euclidean route: variation difference of the chain seeded with
  // (denominator, numerator) at the two ends of the line.
  if (r.num().is_zero()) return 0;
  SturmChain chain = sturm_chain(r.den(), r.num());
  return variations_at(chain, ExtendedRational::neg_infinity()) -
         variations_at(chain, ExtendedRational::pos_infinity());
}

int index_at_infinity(const RatFunc& r) {
  int excess = r.num().degree() - r.den().degree();
  if (r.num().is_zero() || excess <= 0) return 0;
  if (excess % 2 == 0) return 0;
  int c = sign(r.num().leading()) * sign(r.den().leading());
  return -c;
}

int index_projective(const RatFunc& r) {
  return index_line(r, IndexMethod::euclidean) + index_at_infinity(r);
}

}  // namespace logcrit
