#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logcrit/isolate.hpp"
#include "logcrit/sturm.hpp"
#include "support.hpp"

using namespace logcrit;
using testsupport::poly_proportional;
using testsupport::random_poly;
using testsupport::vca_distinct_real_roots;

namespace {
ExtendedRational ninf() { return ExtendedRational::neg_infinity(); }
ExtendedRational pinf() { return ExtendedRational::pos_infinity(); }
}  // namespace

TEST_CASE("chain for (z^2-1, 2z) is sign-equivalent to the classic one") {
  SturmChain chain = sturm_chain(Poly{-1, 0, 1}, Poly{0, 2});
  REQUIRE(chain.polys.size() == 3);
  CHECK(poly_proportional(chain.polys[0], Poly{-1, 0, 1}));
  CHECK(chain.polys[0].leading() > Rational(0));
  CHECK(poly_proportional(chain.polys[1], Poly{0, 1}));
  CHECK(chain.polys[1].leading() > Rational(0));
  CHECK(chain.polys[2].degree() == 0);
  CHECK(chain.polys[2].leading() > Rational(0));
  CHECK(variations_at(chain, ninf()) == 2);
  CHECK(variations_at(chain, pinf()) == 0);
}

TEST_CASE("root counts on intervals (open endpoints)") {
  Poly p{-1, 0, 1};  // z^2 - 1
  CHECK(count_real_roots(p, ninf(), pinf(), false) == 2);
  CHECK(count_real_roots(p, ExtendedRational(Rational(0)), ExtendedRational(Rational(2)), false) == 1);
  CHECK(count_real_roots(p, ExtendedRational(Rational(-2)), ExtendedRational(Rational(0)), false) == 1);
  CHECK(count_real_roots(p, ExtendedRational(Rational(-1)), ExtendedRational(Rational(1)), false) == 0);
  CHECK(count_real_roots(p, ExtendedRational(Rational(-2)), ExtendedRational(Rational(1)), false) == 1);
  CHECK(count_real_roots(p, ExtendedRational(Rational(1)), ExtendedRational(Rational(2)), false) == 0);

  Poly q = Poly::one();  // (z-1)^3 (z+2)^2
  for (int i = 0; i < 3; ++i) q *= Poly::linear(Rational(1));
  for (int i = 0; i < 2; ++i) q *= Poly::linear(Rational(-2));
  CHECK(count_real_roots(q, ninf(), pinf(), true) == 5);
  CHECK(count_real_roots(q, ninf(), pinf(), false) == 2);
  CHECK(count_distinct_real_roots(q) == 2);
  CHECK(count_real_roots_with_multiplicity(q) == 5);
  CHECK(count_real_roots(q, ExtendedRational(Rational(0)), ExtendedRational(Rational(2)), true) == 3);
  CHECK(count_real_roots(q, ExtendedRational(Rational(0)), ExtendedRational(Rational(2)), false) == 1);
  CHECK(count_distinct_real_roots(Poly{7}) == 0);
}

TEST_CASE("nonreal zero count is even and nonnegative") {
  Rng rng(1111);
  for (int t = 0; t < 30; ++t) {
    Poly p = random_poly(rng, static_cast<int>(rng.bounded(1, 8)), 6);
    int nonreal = p.degree() - count_real_roots_with_multiplicity(p);
    CHECK(nonreal >= 0);
    CHECK(nonreal % 2 == 0);
  }
}

TEST_CASE("Sturm counts agree with Descartes bisection counts") {
  Rng rng(1212);
  for (int t = 0; t < 200; ++t) {
    Poly p = random_poly(rng, static_cast<int>(rng.bounded(1, 8)), 9);
    CHECK(count_distinct_real_roots(p) == vca_distinct_real_roots(p));
  }
}

TEST_CASE("isolation: rational roots come back as exact points") {
  auto roots = isolate_real_roots(Poly{-1, 0, 1});
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].is_point);
  CHECK(roots[0].point == Rational(-1));
  CHECK(roots[0].multiplicity == 1);
  CHECK(roots[1].is_point);
  CHECK(roots[1].point == Rational(1));

  auto dbl = isolate_real_roots(Poly{1, -2, 1});
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0].is_point);
  CHECK(dbl[0].point == Rational(1));
  CHECK(dbl[0].multiplicity == 2);

  Poly mixed = Poly::one();  // (z - 1/2)^3 (z+5) (z^2+z+1)
  for (int i = 0; i < 3; ++i) mixed *= Poly::linear(make_rational(1, 2));
  mixed *= Poly::linear(Rational(-5));
  mixed *= Poly{1, 1, 1};
  auto mr = isolate_real_roots(mixed);
  REQUIRE(mr.size() == 2);
  CHECK(mr[0].point == Rational(-5));
  CHECK(mr[0].multiplicity == 1);
  CHECK(mr[1].point == make_rational(1, 2));
  CHECK(mr[1].multiplicity == 3);
}

TEST_CASE("isolation: irrational roots come back as sign-changing intervals") {
  Poly p{-2, 0, 1};  // z^2 - 2
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) {
    CHECK(!r.is_point);
    CHECK(r.multiplicity == 1);
    CHECK(sign(p.eval(r.lo)) * sign(p.eval(r.hi)) < 0);
  }
  CHECK(roots[0].hi <= roots[1].lo);
  CHECK(roots[0].lo < Rational(0));
  CHECK(roots[1].hi > Rational(0));
}

TEST_CASE("isolation recovers constructed rational root data") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    InstanceSpec spec;
    spec.degree = 7;
    spec.real_simple = 3;
    spec.real_multiple = {2};
    spec.nonreal_pairs = 1;
    spec.seed = seed;
    Instance inst = generate_instance(spec);
    std::vector<std::pair<Rational, int>> expected;
    for (const auto& r : inst.simple_roots) expected.emplace_back(r, 1);
    for (const auto& [r, k] : inst.multiple_roots) expected.emplace_back(r, k);
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    auto roots = isolate_real_roots(inst.poly);
    REQUIRE(roots.size() == expected.size());
    for (size_t i = 0; i < roots.size(); ++i) {
      CHECK(roots[i].is_point);
      CHECK(roots[i].point == expected[i].first);
      CHECK(roots[i].multiplicity == expected[i].second);
    }
  }
}

TEST_CASE("isolation invariants on random polynomials") {
  Rng rng(1313);
  for (int t = 0; t < 30; ++t) {
    Poly p = random_poly(rng, static_cast<int>(rng.bounded(1, 7)), 7);
    auto roots = isolate_real_roots(p);
    int mult_sum = 0;
    Rational bound = cauchy_root_bound(p);
    for (size_t i = 0; i < roots.size(); ++i) {
      mult_sum += roots[i].multiplicity;
      if (!roots[i].is_point) {
        const Poly& f = roots[i].factor;
        CHECK(sign(f.eval(roots[i].lo)) * sign(f.eval(roots[i].hi)) < 0);
      }
      CHECK(-bound < roots[i].left());
      CHECK(roots[i].right() < bound);
      if (i > 0) {
        CHECK(disjoint(roots[i - 1], roots[i]));
        CHECK(roots[i - 1].left() <= roots[i].left());
      }
    }
    CHECK(mult_sum == count_real_roots_with_multiplicity(p));
  }
}

TEST_CASE("refinement keeps the root and shrinks the interval") {
  Poly p{-2, 0, 1};
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  IsolatedRoot r = roots[1];  // contains sqrt(2)
  Rational old_lo = r.lo, old_hi = r.hi;
  refine_below(r, make_rational(1, 1000));
  CHECK(!r.is_point);
  CHECK(r.width() < make_rational(1, 1000));
  CHECK(old_lo <= r.lo);
  CHECK(r.hi <= old_hi);
  CHECK(sign(p.eval(r.lo)) * sign(p.eval(r.hi)) < 0);

  IsolatedRoot pt = isolate_real_roots(Poly{-1, 1}).front();
  refine_below(pt, make_rational(1, 100));
  CHECK(pt.is_point);
  CHECK(pt.point == Rational(1));
}

TEST_CASE("separate makes overlapping regions disjoint") {
  IsolatedRoot a = isolate_real_roots(Poly{-2, 0, 1}).back();   // sqrt(2)
  IsolatedRoot b = isolate_real_roots(Poly{-14, 10}).front();   // 7/5
  separate(a, b);
  CHECK(disjoint(a, b));
  CHECK(b.is_point);
  Poly p{-2, 0, 1};
  CHECK(sign(p.eval(a.lo)) * sign(p.eval(a.hi)) < 0);

  IsolatedRoot c = isolate_real_roots(Poly{-2, 0, 1}).back();
  IsolatedRoot d = isolate_real_roots(Poly{-1, -1, 1}).back();  // golden ratio
  separate(c, d);
  CHECK(disjoint(c, d));

  IsolatedRoot e1 = isolate_real_roots(Poly{-1, 1}).front();
  IsolatedRoot e2 = isolate_real_roots(Poly{-2, 2}).front();
  CHECK_THROWS_AS(separate(e1, e2), std::logic_error);  // identical points
}

TEST_CASE("simplest rational in an open interval") {
  CHECK(simplest_rational_between(make_rational(1, 3), make_rational(1, 2)) ==
        make_rational(2, 5));
  CHECK(simplest_rational_between(Rational(-1), Rational(1)) == Rational(0));
  CHECK(simplest_rational_between(Rational(3), Rational(4)) == make_rational(7, 2));
  CHECK(simplest_rational_between(Rational(2), Rational(3)) == make_rational(5, 2));
  CHECK(simplest_rational_between(make_rational(5, 3), make_rational(7, 4)) ==
        make_rational(12, 7));

  Rng rng(1414);
  for (int t = 0; t < 20; ++t) {
    Rational lo = rng.rational(9, 7);
    Rational hi = lo + Rational(1) / Rational(rng.bounded(1, 50));
    Rational mid = simplest_rational_between(lo, hi);
    CHECK(lo < mid);
    CHECK(mid < hi);
    Integer den = mid.get_den();
    for (Integer d = 1; d < den; ++d) {
      // no fraction with smaller denominator fits strictly inside
      Integer n = floor_int(Rational(lo.get_num() * d, lo.get_den()));
      for (Integer k = n - 1; k <= n + 3; ++k) {
        Rational cand(k, d);
        cand.canonicalize();
        CHECK(!(lo < cand && cand < hi));
      }
    }
  }
}
