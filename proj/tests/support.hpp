#pragma once

// Shared helpers for the test binaries: seeded random inputs plus oracles
// kept deliberately independent of the library's algorithm choices
// (Descartes/bisection root counting vs Sturm chains, dense determinants vs
// subresultant/Bareiss elimination).

#include <cassert>
#include <vector>

#include "logcrit/instances.hpp"
#include "logcrit/poly.hpp"

namespace testsupport {

using logcrit::Poly;
using logcrit::Rational;
using logcrit::Rng;

// Random polynomial of exact degree `degree`; integer coefficients when
// den_bound == 1.
inline Poly random_poly(Rng& rng, int degree, long num_bound, long den_bound = 1) {
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i)
    c[static_cast<size_t>(i)] = rng.rational(num_bound, den_bound);
  Rational lead(0);
  while (logcrit::sign(lead) == 0) lead = rng.rational(num_bound, den_bound);
  c[static_cast<size_t>(degree)] = lead;
  return Poly(std::move(c));
}

// Equal up to a nonzero scalar factor.
inline bool poly_proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return b.leading() * a == a.leading() * b;
}

inline int coeff_variations(const Poly& p) {
  int count = 0, prev = 0;
  for (int k = 0; k <= p.degree(); ++k) {
    int s = logcrit::sign(p.coeff(k));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Roots of square-free q inside the open interval (a, b), counted by
// bisection with the Descartes test on the Moebius image
// (1+x)^n q((a + b x)/(1 + x)), whose positive roots correspond to (a, b).
inline int descartes_count(const Poly& q, const Rational& a, const Rational& b) {
  int n = q.degree();
  Poly move_a(std::vector<Rational>{a, b});                       // a + b x
  Poly shift(std::vector<Rational>{Rational(1), Rational(1)});    // 1 + x
  std::vector<Poly> pow_a(static_cast<size_t>(n) + 1, Poly::one());
  std::vector<Poly> pow_s(static_cast<size_t>(n) + 1, Poly::one());
  for (int k = 1; k <= n; ++k) {
    pow_a[static_cast<size_t>(k)] = pow_a[static_cast<size_t>(k) - 1] * move_a;
    pow_s[static_cast<size_t>(k)] = pow_s[static_cast<size_t>(k) - 1] * shift;
  }
  Poly image = Poly::zero();
  for (int k = 0; k <= n; ++k)
    image += q.coeff(k) * (pow_a[static_cast<size_t>(k)] * pow_s[static_cast<size_t>(n - k)]);
  int v = coeff_variations(image);
  if (v == 0) return 0;
  if (v == 1) return 1;
  Rational mid = (a + b) / 2;
  int at_mid = logcrit::sign(q.eval(mid)) == 0 ? 1 : 0;
  return descartes_count(q, a, mid) + at_mid + descartes_count(q, mid, b);
}

inline int vca_distinct_real_roots(const Poly& p) {
  assert(!p.is_zero());
  if (p.is_constant()) return 0;
  Poly q = exact_div(p, gcd(p, p.derivative()));
  if (q.is_constant()) return 0;
  Rational biggest(0);
  for (int k = 0; k < q.degree(); ++k) {
    Rational m = logcrit::abs_value(q.coeff(k) / q.leading());
    if (biggest < m) biggest = m;
  }
  Rational bound = biggest + 2;  // strictly beyond the Cauchy bound 1 + max
  return descartes_count(q, -bound, bound);
}

// Determinant by cofactor expansion; fine for the small matrices used in
// cross-checks.
inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  size_t n = m.size();
  if (n == 0) return Poly::one();
  if (n == 1) return m[0][0];
  Poly acc = Poly::zero();
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(minor);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Dense Sylvester-matrix resultant over the rationals via Gaussian
// elimination with exact arithmetic.
inline Rational dense_resultant(const Poly& f, const Poly& g) {
  int m = f.degree(), n = g.degree();
  assert(m >= 0 && n >= 0);
  if (m == 0 && n == 0) return Rational(1);
  size_t size = static_cast<size_t>(m + n);
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k)
      s[static_cast<size_t>(row)][static_cast<size_t>(row + k)] = f.coeff(m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + row)][static_cast<size_t>(row + k)] = g.coeff(n - k);
  Rational det(1);
  for (size_t col = 0; col < size; ++col) {
    size_t pivot = col;
    while (pivot < size && logcrit::sign(s[pivot][col]) == 0) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det *= s[col][col];
    for (size_t row = col + 1; row < size; ++row) {
      if (logcrit::sign(s[row][col]) == 0) continue;
      Rational factor = s[row][col] / s[col][col];
      for (size_t k = col; k < size; ++k) s[row][k] -= factor * s[col][k];
    }
  }
  return det;
}

}  // namespace testsupport
