#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "logcrit/rational.hpp"

namespace logcrit {

// Dense univariate polynomial over Rational, coefficients stored ascending.
// Dense wins at the degrees this project works at (<= ~40 after products):
// no sparse bookkeeping, cache-friendly, and Sturm/resultant loops index
// coefficients directly.
//
// Invariant: coefficient vector is empty (the zero polynomial) or its last
// entry is nonzero. degree() is -1 for the zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational constant);
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static Poly variable();                       // z
  static Poly linear(const Rational& root);     // z - root

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  // Coefficient of z^k; zero beyond the stored range.
  const Rational& coeff(int k) const;
  const Rational& leading() const;              // requires nonzero
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly derivative() const;
  Rational eval(const Rational& x) const;       // Horner
  int sign_at(const Rational& x) const { return sign(eval(x)); }
  // Sign of the (possibly infinite) limit at an endpoint, from the leading
  // coefficient and the degree parity; never by large-argument evaluation.
  int sign_at(const ExtendedRational& x) const;

  // Quotient/remainder over the rationals. Throws std::domain_error when b
  // is the zero polynomial.
  friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
  // Division known to be exact; throws std::logic_error on nonzero remainder.
  friend Poly exact_div(const Poly& a, const Poly& b);

  // Positive rational c with (*this)/c integer and content-free; 0 for zero.
  Rational content() const;
  // Integer-primitive multiple, scaled by the positive constant 1/content();
  // the sign pattern of the coefficients is untouched.
  Poly primitive() const;
  Poly monic() const;                           // requires nonzero

  std::string coeff_string() const;             // "a0,a1,...,an"
  std::string pretty(std::string_view var = "z") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Monic gcd. gcd(0, 0) throws std::domain_error.
Poly gcd(const Poly& a, const Poly& b);

// One square-free factor together with its multiplicity in the input.
struct SquareFreePart {
  Poly factor;        // square-free, integer-primitive, positive leading coeff
  int multiplicity;   // >= 1
};

// Yun decomposition: pairwise coprime square-free parts, multiplicities
// strictly increasing, product of factor^multiplicity equal to the input up
// to a nonzero rational constant. Constant input -> empty list. Throws
// std::domain_error on the zero polynomial.
std::vector<SquareFreePart> squarefree_decompose(const Poly& p);

// Product of the distinct-root factors (the radical), primitive.
Poly squarefree_part(const Poly& p);

// Largest k with (z - x)^k dividing f; f must be nonzero.
int root_order_at(const Poly& f, const Rational& x);

// Comma-separated ascending coefficients, each "n" or "n/d". Throws
// std::invalid_argument on malformed input. Trailing zero coefficients are
// dropped; an all-zero list parses to the zero polynomial.
Poly parse_polynomial(std::string_view text);

}  // namespace logcrit
