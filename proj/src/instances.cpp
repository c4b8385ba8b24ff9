#include "logcrit/instances.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "logcrit/sturm.hpp"

namespace logcrit {

long Rng::bounded(long lo, long hi) {
  assert(lo <= hi);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<long>(next());  // full 64-bit range
  // Accept only draws below the largest multiple of span to stay unbiased.
  std::uint64_t overhang = (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t top = std::numeric_limits<std::uint64_t>::max() - overhang;
  std::uint64_t x;
  do {
    x = next();
  } while (x > top);
  return lo + static_cast<long>(x % span);
}

Rational Rng::rational(long num_bound, long den_bound) {
  assert(num_bound >= 0 && den_bound >= 1);
  return make_rational(bounded(-num_bound, num_bound), bounded(1, den_bound));
}

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.coefficient_bound < 1) throw std::invalid_argument("coefficient bound < 1");
  if (spec.real_simple < 0 || spec.nonreal_pairs < 0)
    throw std::invalid_argument("negative factor count");
  int mult_total = 0;
  for (int k : spec.real_multiple) {
    if (k < 2) throw std::invalid_argument("listed multiplicity < 2");
    mult_total += k;
  }
  if (spec.degree != spec.real_simple + mult_total + 2 * spec.nonreal_pairs)
    throw std::invalid_argument("degree does not match the factor recipe");

  Rng rng(spec.seed);
  long b = spec.coefficient_bound;
  Instance inst;

  std::vector<Rational> used;
  auto fresh_root = [&]() {
    for (int attempt = 0; attempt < 10000; ++attempt) {
      Rational r = rng.rational(b, b);
      if (std::find(used.begin(), used.end(), r) == used.end()) {
        used.push_back(r);
        return r;
      }
    }
    throw std::invalid_argument("coefficient bound too small for distinct roots");
  };

  for (int i = 0; i < spec.real_simple; ++i) inst.simple_roots.push_back(fresh_root());
  for (int k : spec.real_multiple) inst.multiple_roots.emplace_back(fresh_root(), k);
  for (int i = 0; i < spec.nonreal_pairs; ++i) {
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 1000000) throw std::invalid_argument("no valid quadratic found");
      Rational qb = rng.rational(b, b), qc = rng.rational(b, b);
      if (qb * qb < Rational(4) * qc) {
        inst.quadratics.emplace_back(qb, qc);
        break;
      }
    }
  }

  Rational lead = Rational(0);
  while (sign(lead) == 0) lead = rng.rational(b, b);
  Poly p(lead);
  for (const auto& r : inst.simple_roots) p *= Poly::linear(r);
  for (const auto& [r, k] : inst.multiple_roots)
    for (int j = 0; j < k; ++j) p *= Poly::linear(r);
  for (const auto& [qb, qc] : inst.quadratics) p *= Poly(std::vector<Rational>{qc, qb, Rational(1)});
  inst.poly = std::move(p);

  assert(inst.poly.degree() == spec.degree);
  assert(inst.poly.is_constant() ||
         inst.poly.degree() - count_real_roots_with_multiplicity(inst.poly) ==
             2 * spec.nonreal_pairs);
  return inst;
}

std::uint64_t child_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace logcrit
