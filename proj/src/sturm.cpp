#include "logcrit/sturm.hpp"

namespace logcrit {

SturmChain sturm_chain(const Poly& f, const Poly& g) {
  if (f.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
  SturmChain chain;
  chain.polys.push_back(f.primitive());
  if (g.is_zero()) return chain;
  chain.polys.push_back(g.primitive());
  while (true) {
    const Poly& a = chain.polys[chain.polys.size() - 2];
    const Poly& b = chain.polys.back();
    Poly r = divrem(a, b).second;
    if (r.is_zero()) break;
    // Negate, then strip the positive content only: scaling by a positive
    // rational keeps every sign evaluation intact.
    chain.polys.push_back((-r).primitive());
  }
  return chain;
}

int variations_at(const SturmChain& chain, const ExtendedRational& x) {
  int count = 0, prev = 0;
  for (const Poly& p : chain.polys) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

namespace {

// Distinct roots of square-free f in the open interval (a, b). The variation
// difference counts roots in (a, b]; a root exactly at a finite b is dropped.
int count_squarefree(const Poly& f, const ExtendedRational& a,
                     const ExtendedRational& b) {
  if (f.degree() < 1) return 0;
  SturmChain chain = sturm_chain(f, f.derivative());
  int n = variations_at(chain, a) - variations_at(chain, b);
  if (b.is_finite() && sign(f.eval(b.value())) == 0) --n;
  return n;
}

}  // namespace

int count_real_roots(const Poly& p, const ExtendedRational& a,
                     const ExtendedRational& b, bool with_multiplicity) {
  if (p.is_zero()) throw std::domain_error("root count of zero polynomial");
  if (!(a < b)) throw std::invalid_argument("root count needs a < b");
  auto parts = squarefree_decompose(p);
  int total = 0;
  for (const auto& part : parts) {
    int c = count_squarefree(part.factor, a, b);
    total += with_multiplicity ? part.multiplicity * c : c;
  }
  return total;
}

}  // namespace logcrit
