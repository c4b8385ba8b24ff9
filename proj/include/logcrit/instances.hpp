#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "logcrit/poly.hpp"

namespace logcrit {

// Deterministic RNG with engine-level portability: mt19937_64 output is
// pinned by the standard; the bounded draw below avoids the
// implementation-defined std distributions so identical seeds give identical
// instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  long bounded(long lo, long hi);  // uniform on [lo, hi], rejection sampling
  // Nonzero-denominator rational with |num| <= num_bound, 1 <= den <= den_bound.
  Rational rational(long num_bound, long den_bound);

 private:
  std::mt19937_64 eng_;
};

// Recipe for a polynomial with prescribed real/nonreal zero structure,
// assembled backwards from its factors so 2m is known by construction.
struct InstanceSpec {
  int degree = 0;
  int real_simple = 0;                // distinct rational simple roots
  std::vector<int> real_multiple;     // multiplicities (each >= 2)
  int nonreal_pairs = 0;              // irreducible quadratic factors
  long coefficient_bound = 6;         // bound on factor coefficients
  std::uint64_t seed = 0;
};

struct Instance {
  Poly poly;
  std::vector<Rational> simple_roots;
  std::vector<std::pair<Rational, int>> multiple_roots;
  std::vector<std::pair<Rational, Rational>> quadratics;  // z^2 + b z + c, b^2 < 4c
};

// Throws std::invalid_argument when the spec is infeasible (degree mismatch,
// bound < 1, multiplicity < 2). The nonreal count of the product is
// recomputed and asserted equal to 2*nonreal_pairs after assembly.
Instance generate_instance(const InstanceSpec& spec);

// Child seed for instance i of a batch run; splitmix64 keeps streams with
// nearby seeds uncorrelated.
std::uint64_t child_seed(std::uint64_t base, std::uint64_t index);

}  // namespace logcrit
