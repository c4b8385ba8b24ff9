#include "logcrit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logcrit {

// --- Rational helpers -----------------------------------------------------

Rational parse_rational(std::string_view text) {
  // mpq_set_str is permissive (accepts whitespace, bases); validate the shape
  // ourselves so CLI errors are crisp.
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_int(den)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  }
  if (!is_int(num)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), std::string(text).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  if (sgn(Rational(q.get_den())) == 0)
    throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string ExtendedRational::str() const {
  if (is_neg_infinity()) return "-inf";
  if (is_pos_infinity()) return "+inf";
  return to_string(value_);
}

// --- Poly -----------------------------------------------------------------

Poly::Poly(Rational constant) {
  if (sign(constant) != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::linear(const Rational& root) {
  return Poly(std::vector<Rational>{Rational(-root), Rational(1)});
}

void Poly::normalize() {
  while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  static const Rational kZero(0);
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(k)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rational& s, const Poly& p) {
  if (sign(s) == 0) return Poly::zero();
  Poly r(p);
  for (auto& x : r.c_) x *= s;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly::zero();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly::sign_at(const ExtendedRational& x) const {
  if (x.is_finite()) return sign_at(x.value());
  if (is_zero()) return 0;
  int s = sign(leading());
  if (x.is_neg_infinity() && degree() % 2 == 1) s = -s;
  return s;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = a;
  if (a.degree() < b.degree()) return {Poly::zero(), rem};
  std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational& lead = b.leading();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Rational factor = rem.leading() / lead;
    q[static_cast<size_t>(shift)] = factor;
    // rem -= factor * z^shift * b, done in place on the coefficient vector
    std::vector<Rational> sub(static_cast<size_t>(rem.degree()) + 1, Rational(0));
    for (size_t i = 0; i < b.c_.size(); ++i)
      sub[static_cast<size_t>(shift) + i] = factor * b.c_[i];
    rem = rem - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), rem};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

Rational Poly::content() const {
  if (is_zero()) return Rational(0);
  Integer den_lcm(1);
  for (const auto& x : c_) {
    Integer d(x.get_den());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Integer num_gcd(0);
  for (const auto& x : c_) {
    Rational scaled = x * Rational(den_lcm);
    Integer n(scaled.get_num());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;  // positive: gcd/lcm of magnitudes
}

Poly Poly::primitive() const {
  if (is_zero()) return *this;
  Rational inv = Rational(1) / content();
  return inv * *this;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  return Rational(Rational(1) / leading()) * *this;
}

std::string Poly::coeff_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += to_string(c_[i]);
  }
  return out;
}

std::string Poly::pretty(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = coeff(k);
    if (sign(a) == 0) continue;
    Rational mag = abs_value(a);
    if (first) {
      if (sign(a) < 0) os << "-";
      first = false;
    } else {
      os << (sign(a) > 0 ? " + " : " - ");
    }
    bool unit = (mag == 1);
    if (k == 0 || !unit) os << to_string(mag);
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

// --- gcd, square-free -----------------------------------------------------

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0)");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Poly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    Poly r = divrem(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : r.primitive();
  }
  return x.monic();
}

std::vector<SquareFreePart> squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
  std::vector<SquareFreePart> parts;
  if (p.is_constant()) return parts;

  auto canonical = [](const Poly& f) {
    Poly g = f.primitive();
    return sign(g.leading()) < 0 ? -g : g;
  };

  // Yun: peels factors by increasing multiplicity.
  Poly g = gcd(p, p.derivative());
  Poly c = exact_div(p, g);
  Poly d = exact_div(p.derivative(), g) - c.derivative();
  int mult = 1;
  while (!c.is_constant()) {
    Poly f = gcd(c, d);
    if (!f.is_constant()) parts.push_back({canonical(f), mult});
    Poly c_next = exact_div(c, f);
    d = exact_div(d, f) - c_next.derivative();
    c = std::move(c_next);
    ++mult;
  }
  return parts;
}

Poly squarefree_part(const Poly& p) {
  Poly prod = Poly::one();
  for (const auto& part : squarefree_decompose(p)) prod *= part.factor;
  return prod.primitive();
}

int root_order_at(const Poly& f, const Rational& x) {
  if (f.is_zero()) throw std::domain_error("root order in zero polynomial");
  Poly cur = f;
  int order = 0;
  Poly lin = Poly::linear(x);
  while (!cur.is_zero() && sign(cur.eval(x)) == 0) {
    cur = exact_div(cur, lin);
    ++order;
  }
  return order;
}

Poly parse_polynomial(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<Rational> coeffs;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view tok = comma == std::string_view::npos
                               ? text.substr(pos)
                               : text.substr(pos, comma - pos);
    // trim spaces
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial");
    coeffs.push_back(parse_rational(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(coeffs));
}

}  // namespace logcrit
