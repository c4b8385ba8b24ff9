#include "logcrit/resultant.hpp"

#include <cassert>

namespace logcrit {

namespace {

// Signed pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
Poly pseudo_rem(const Poly& a, const Poly& b) {
  int delta = a.degree() - b.degree();
  Rational scale = b.leading();
  Rational factor(1);
  for (int i = 0; i <= delta; ++i) factor *= scale;
  return divrem(factor * a, b).second;
}

Rational pow_rat(const Rational& x, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  int s = 1;
  Poly A = f, B = g;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((f.degree() % 2) && (g.degree() % 2)) s = -s;
  }
  // Pull contents out first; Res(cA', B) = c^(deg B) Res(A', B).
  Rational ca = A.content(), cb = B.content();
  A = A.primitive();
  B = B.primitive();
  Rational t = pow_rat(ca, B.degree()) * pow_rat(cb, A.degree());

  Rational gc(1), h(1);
  while (B.degree() > 0) {
    int delta = A.degree() - B.degree();
    if ((A.degree() % 2) && (B.degree() % 2)) s = -s;
    Poly R = pseudo_rem(A, B);
    A = B;
    if (R.is_zero()) return Rational(0);  // positive-degree common factor
    Rational divisor = gc * pow_rat(h, delta);
    B = Rational(Rational(1) / divisor) * R;
    gc = A.leading();
    if (delta > 0) h = pow_rat(gc, delta) / pow_rat(h, delta - 1);
  }
  // B is a nonzero constant now.
  Rational hf = pow_rat(B.leading(), A.degree());
  if (A.degree() > 1) hf /= pow_rat(h, A.degree() - 1);
  return Rational(s) * t * hf;
}

Poly sylvester_resultant_in_sigma(const Poly& a, const Poly& b) {
  if (b.is_zero() || b.degree() <= a.degree())
    throw std::domain_error("sigma resultant needs deg b > deg a");
  int m = b.degree();
  if (m == 1) return Poly(std::vector<Rational>{Rational(0), b.leading()});  // 1x1: [s*b1]

  Poly da = a.derivative(), db = b.derivative();
  auto f_entry = [&](int k) {  // coefficient of z^k in a + s*b, as poly in s
    return Poly(std::vector<Rational>{a.coeff(k), b.coeff(k)});
  };
  auto g_entry = [&](int k) {  // coefficient of z^k in a' + s*b'
    return Poly(std::vector<Rational>{da.coeff(k), db.coeff(k)});
  };

  int n = 2 * m - 1;
  std::vector<std::vector<Poly>> mat(n, std::vector<Poly>(n, Poly::zero()));
  for (int r = 0; r < m - 1; ++r)           // m-1 rows of u, degree m
    for (int j = 0; j <= m; ++j) mat[r][r + j] = f_entry(m - j);
  for (int r = 0; r < m; ++r)               // m rows of u', degree m-1
    for (int j = 0; j <= m - 1; ++j) mat[m - 1 + r][r + j] = g_entry(m - 1 - j);

  // Bareiss fraction-free elimination over the polynomial ring in s: every
  // division by the previous pivot is exact, which caps entry growth.
  int det_sign = 1;
  Poly prev = Poly::one();
  for (int k = 0; k < n; ++k) {
    if (mat[k][k].is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!mat[i][k].is_zero()) { swap_row = i; break; }
      if (swap_row < 0) return Poly::zero();
      std::swap(mat[k], mat[swap_row]);
      det_sign = -det_sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        mat[i][j] = exact_div(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
      mat[i][k] = Poly::zero();
    }
    prev = mat[k][k];
  }
  Poly det = mat[n - 1][n - 1];
  return det_sign < 0 ? -det : det;
}

Poly discriminant_in_sigma(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("discriminant of a constant");
  Poly w = gcd(p, p.derivative());
  Poly b = exact_div(p, w);        // radical-like part; deg b >= 1
  Poly a = exact_div(p.derivative(), w);
  Poly raw = sylvester_resultant_in_sigma(a, b);
  assert(!raw.is_zero());  // the reduced family has no parameter-independent
                           // multiple zero, so the determinant cannot vanish
  // Drop the trailing power of s (formal leading coefficients vanish at
  // s = 0; that parameter is always treated as a breakpoint separately).
  int v = 0;
  while (sign(raw.coeff(v)) == 0) ++v;
  std::vector<Rational> shifted(raw.coeffs().begin() + v, raw.coeffs().end());
  Poly d = Poly(std::move(shifted)).primitive();
  return sign(d.leading()) < 0 ? -d : d;
}

}  // namespace logcrit
