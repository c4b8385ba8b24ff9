#include "logcrit/isolate.hpp"

#include <algorithm>
#include <cassert>

namespace logcrit {

Rational cauchy_root_bound(const Poly& p) {
  if (p.is_constant()) throw std::domain_error("root bound of a constant");
  Rational best(0);
  Rational lead = abs_value(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rational ratio = abs_value(p.coeff(k)) / lead;
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_rational_between needs lo < hi");
  Integer fl = floor_int(lo);
  Rational candidate(fl + 1);
  if (candidate < hi) return candidate;  // integer strictly inside
  // No integer inside, so (lo, hi) sits within [fl, fl + 1]. Walk one
  // continued-fraction step: x = fl + 1/y maps (frac range) to a reciprocal
  // interval; minimal denominator of x follows from minimal denominator of y.
  Rational a = lo - Rational(fl), b = hi - Rational(fl);  // 0 <= a < b <= 1
  Rational y;
  if (sign(a) == 0) {
    y = Rational(floor_int(Rational(1) / b) + 1);  // any y > 1/b, minimal: integer
  } else {
    y = simplest_rational_between(Rational(1) / b, Rational(1) / a);
  }
  return Rational(fl) + Rational(1) / y;
}

bool disjoint(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.is_point && b.is_point) return a.point != b.point;
  if (a.is_point) return !(b.lo < a.point && a.point < b.hi);
  if (b.is_point) return !(a.lo < b.point && b.point < a.hi);
  return a.hi <= b.lo || b.hi <= a.lo;
}

void refine_below(IsolatedRoot& root, const Rational& width) {
  if (root.is_point) return;
  int sign_lo = root.factor.sign_at(root.lo);
  while (root.hi - root.lo >= width) {
    Rational mid = (root.lo + root.hi) / 2;
    int sm = root.factor.sign_at(mid);
    if (sm == 0) {  // interval roots are certified irrational; kept for safety
      root.is_point = true;
      root.point = mid;
      return;
    }
    if (sm == sign_lo) {
      root.lo = mid;
    } else {
      root.hi = mid;
    }
  }
}

void separate(IsolatedRoot& a, IsolatedRoot& b) {
  while (!disjoint(a, b)) {
    if (a.is_point && b.is_point)
      throw std::logic_error("separate() called on equal point roots");
    if (!a.is_point) refine_below(a, a.width() / 4);
    if (!b.is_point) refine_below(b, b.width() / 4);
  }
}

namespace {

class FactorIsolator {
 public:
  FactorIsolator(const Poly& f, std::vector<IsolatedRoot>& out)
      : f_(f), chain_(sturm_chain(f, f.derivative())), out_(out) {
    Integer lc(f.leading().get_num());  // integer-primitive input
    Rational q(lc);
    target_ = Rational(1) / (2 * q * q);
    if (sign(target_) < 0) target_ = -target_;
  }

  void run() {
    Rational b = cauchy_root_bound(f_);
    b = Rational(floor_int(b) + 1);  // integer endpoints keep midpoints dyadic
    process(-b, b);
  }

 private:
  int count_open(const Rational& lo, const Rational& hi) {
    int n = variations_at(chain_, ExtendedRational(lo)) -
            variations_at(chain_, ExtendedRational(hi));
    if (f_.sign_at(hi) == 0) --n;
    return n;
  }

  void emit_point(Rational x) {
    IsolatedRoot r;
    r.is_point = true;
    r.point = std::move(x);
    r.factor = f_;
    out_.push_back(std::move(r));
  }

  void process(const Rational& lo, const Rational& hi) {
    int c = count_open(lo, hi);
    if (c == 0) return;
    if (c == 1) {
      certify(lo, hi);
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (f_.sign_at(mid) == 0) emit_point(mid);
    process(lo, mid);
    process(mid, hi);
  }

  // Exactly one root strictly inside (lo, hi). Decide rational vs irrational
  // exactly: narrow under 1/(2 lc^2) — a rational root has denominator
  // dividing lc, and two rationals with denominator <= lc differ by more
  // than that — then the minimal-denominator rational in the interval is the
  // only possible candidate, settled by evaluation.
  void certify(Rational lo, Rational hi) {
    while (f_.sign_at(lo) == 0 || f_.sign_at(hi) == 0) {
      Rational mid = (lo + hi) / 2;
      if (f_.sign_at(mid) == 0) {
        emit_point(mid);
        return;
      }
      if (count_open(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    int sign_lo = f_.sign_at(lo);
    assert(sign_lo * f_.sign_at(hi) < 0);
    int steps = 0;
    while (hi - lo >= target_) {
      if (steps % 32 == 0 && try_candidate(lo, hi)) return;  // fast path for
      ++steps;                                               // small denominators
      Rational mid = (lo + hi) / 2;
      int sm = f_.sign_at(mid);
      if (sm == 0) {
        emit_point(mid);
        return;
      }
      if (sm == sign_lo) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (try_candidate(lo, hi)) return;
    IsolatedRoot r;
    r.is_point = false;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.factor = f_;
    out_.push_back(std::move(r));
  }

  bool try_candidate(const Rational& lo, const Rational& hi) {
    Rational cand = simplest_rational_between(lo, hi);
    if (f_.sign_at(cand) != 0) return false;
    emit_point(cand);
    return true;
  }

  Poly f_;
  SturmChain chain_;
  Rational target_;
  std::vector<IsolatedRoot>& out_;
};

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("isolating roots of zero polynomial");
  std::vector<IsolatedRoot> all;
  for (const auto& part : squarefree_decompose(p)) {
    std::vector<IsolatedRoot> roots;
    const Poly& f = part.factor;
    if (f.degree() == 1) {
      IsolatedRoot r;
      r.is_point = true;
      r.point = -f.coeff(0) / f.coeff(1);
      r.factor = f;
      roots.push_back(std::move(r));
    } else {
      FactorIsolator(f, roots).run();
    }
    for (auto& r : roots) {
      r.multiplicity = part.multiplicity;
      all.push_back(std::move(r));
    }
  }
  // Regions of the same factor are disjoint by construction; distinct factors
  // are coprime, so refinement always separates.
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j) separate(all[i], all[j]);
  std::sort(all.begin(), all.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    if (a.left() != b.left()) return a.left() < b.left();
    return a.right() < b.right();
  });
  return all;
}

}  // namespace logcrit
