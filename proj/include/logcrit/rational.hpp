#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace logcrit {

using Integer = mpz_class;

// Exact rational numbers. mpq_class keeps the canonical form we rely on
// everywhere (gcd(num, den) == 1, den > 0) as long as every value entering
// the system is canonicalized once; arithmetic preserves it.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d" with optional leading '-'. Throws std::invalid_argument
// on anything else (including d == 0).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline Integer floor_int(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Rational line completed with symbolic endpoints for interval arguments.
class ExtendedRational {
 public:
  ExtendedRational(Rational v) : kind_(Kind::finite), value_(std::move(v)) {}
  ExtendedRational(long v) : ExtendedRational(Rational(v)) {}
  static ExtendedRational neg_infinity() { return ExtendedRational(Kind::neg_inf); }
  static ExtendedRational pos_infinity() { return ExtendedRational(Kind::pos_inf); }

  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_neg_infinity() const { return kind_ == Kind::neg_inf; }
  bool is_pos_infinity() const { return kind_ == Kind::pos_inf; }

  const Rational& value() const {
    if (!is_finite()) throw std::logic_error("value() on infinite endpoint");
    return value_;
  }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != Kind::finite || a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ == Kind::neg_inf) return b.kind_ != Kind::neg_inf;
    if (a.kind_ == Kind::pos_inf) return false;
    if (b.kind_ == Kind::neg_inf) return false;
    if (b.kind_ == Kind::pos_inf) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedRational& a, const ExtendedRational& b) {
    return a == b || a < b;
  }

  std::string str() const;

 private:
  enum class Kind { neg_inf, finite, pos_inf };
  explicit ExtendedRational(Kind k) : kind_(k), value_(0) {}
  Kind kind_;
  Rational value_;
};

}  // namespace logcrit
