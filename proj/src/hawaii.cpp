#include "logcrit/hawaii.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "logcrit/resultant.hpp"

namespace logcrit {

namespace {

// F[p] without the degree guard: zero for constants. Keeps the identity
// checks total (they specialize cleanly when a derivative degenerates).
Poly f_poly(const Poly& p) {
  return p * p.derivative().derivative() - p.derivative() * p.derivative();
}

bool takes_positive_value(const Poly& f) {
  // Leading coefficient of any F[g] is negative, so f <= 0 everywhere iff
  // every real root has even multiplicity; a positive value exists iff some
  // odd-multiplicity real root lets the sign cross.
  if (f.is_zero()) return false;
  if (f.is_constant()) return sign(f.leading()) > 0;
  if (sign(f.leading()) > 0) return true;
  for (const auto& part : squarefree_decompose(f))
    if (part.multiplicity % 2 == 1 && count_distinct_real_roots(part.factor) > 0)
      return true;
  return false;
}

// Distinct real roots of f that are also roots of g (0 when g is constant).
int shared_distinct_real_roots(const Poly& f, const Poly& g) {
  if (f.is_constant() || g.is_constant()) return 0;
  Poly h = gcd(f, g);
  if (h.is_constant()) return 0;
  return count_distinct_real_roots(h);
}

}  // namespace

Poly laguerre_derivative(const Poly& p, const Rational& sigma) {
  if (p.is_zero()) throw std::domain_error("shifted derivative of zero polynomial");
  return p.derivative() + sigma * p;
}

Poly invert_laguerre(const Poly& q, const Rational& sigma) {
  if (sign(sigma) == 0) throw std::domain_error("inverse shifted derivative needs sigma != 0");
  if (q.is_zero()) return Poly::zero();
  int n = q.degree();
  std::vector<Rational> a(static_cast<size_t>(n) + 1, Rational(0));
  // Top-down: coefficient k of p' + sigma*p is (k+1) a_{k+1} + sigma a_k.
  for (int k = n; k >= 0; --k) {
    Rational above = k == n ? Rational(0) : Rational(k + 1) * a[static_cast<size_t>(k) + 1];
    a[static_cast<size_t>(k)] = (q.coeff(k) - above) / sigma;
  }
  return Poly(std::move(a));
}

Poly f_numerator(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("F of a constant");
  return f_poly(p);
}

RatFunc q_reduced(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("Q of a constant");
  return make_ratfunc(f_numerator(p), p * p);
}

int count_nonreal(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("nonreal count of zero polynomial");
  if (p.is_constant()) return 0;
  int nonreal = p.degree() - count_real_roots_with_multiplicity(p);
  assert(nonreal % 2 == 0);
  return nonreal;
}

int count_real_zeros_q(const Poly& p) {
  RatFunc q = q_reduced(p);
  if (q.num().is_constant()) return 0;
  return count_real_roots_with_multiplicity(q.num());
}

HawaiiReport check_hawaii(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("analysis needs deg p >= 1");
  HawaiiReport rep;
  rep.degree = p.degree();
  rep.real_zeros_with_multiplicity = count_real_roots_with_multiplicity(p);
  rep.nonreal_2m = rep.degree - rep.real_zeros_with_multiplicity;
  rep.f = f_numerator(p);
  rep.q = q_reduced(p);
  rep.z_r_q = rep.q.num().is_constant() ? 0 : count_real_roots_with_multiplicity(rep.q.num());
  rep.hawaii_holds = rep.z_r_q <= rep.nonreal_2m;
  return rep;
}

bool check_global_negativity(const Poly& g) {
  if (g.degree() < 1) throw std::domain_error("negativity check needs deg >= 1");
  Poly f = f_poly(g);
  // Shape sanity: deg F = 2 deg g - 2 with leading coefficient -(lead g)^2 * deg g.
  assert(f.degree() == 2 * g.degree() - 2);
  assert(f.leading() == -(g.leading() * g.leading() * Rational(g.degree())));

  if (f.is_constant()) return sign(f.leading()) < 0;
  for (const auto& part : squarefree_decompose(f))
    if (part.multiplicity % 2 == 1 && count_distinct_real_roots(part.factor) > 0)
      return false;  // odd-multiplicity real root: F crosses zero
  int f_roots = count_distinct_real_roots(f);
  if (f_roots != shared_distinct_real_roots(f, g))
    return false;  // F vanishes somewhere g does not
  // Sample negativity beyond every root; follows from the two checks above
  // but read off explicitly.
  Rational probe = cauchy_root_bound(f);
  return sign(f.eval(probe)) < 0;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::premise_not_met: return "premise-not-met";
    case Verdict::not_witnessed: return "not-witnessed";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

CravenReport verify_craven_equality(const Poly& p, const Rational& sigma) {
  if (p.degree() < 1) throw std::domain_error("equality check needs deg p >= 1");
  CravenReport rep;
  Poly ps = laguerre_derivative(p, sigma);
  if (ps.degree() < 1) {
    rep.detail = "p_sigma is constant; negativity premise unavailable";
    return rep;
  }
  rep.premise_negativity = check_global_negativity(ps);
  if (!rep.premise_negativity) {
    rep.detail = "Q[p_sigma] is not negative on the whole line";
    return rep;
  }
  rep.z_r_q = count_real_zeros_q(p);
  rep.two_m = count_nonreal(p);
  rep.two_m_sigma = count_nonreal(ps);
  rep.equality_ok = rep.z_r_q == rep.two_m - rep.two_m_sigma;

  // Multiple real zeros of Q[p] may sit only at zeros of p_sigma of
  // multiplicity > 2 (where the order drops by exactly one).
  Poly w3 = Poly::one();
  for (const auto& part : squarefree_decompose(ps))
    if (part.multiplicity >= 3) w3 *= part.factor;
  rep.simplicity_ok = true;
  for (const auto& part : squarefree_decompose(q_reduced(p).num())) {
    if (part.multiplicity < 2) continue;
    int real_here = count_distinct_real_roots(part.factor);
    int covered = w3.is_constant() ? 0 : shared_distinct_real_roots(part.factor, w3);
    if (real_here != covered) rep.simplicity_ok = false;
  }
  if (rep.equality_ok && rep.simplicity_ok) {
    rep.verdict = Verdict::verified;
  } else {
    rep.verdict = Verdict::violation;
    std::ostringstream os;
    os << "negativity premise holds but ";
    if (!rep.equality_ok)
      os << "Z_R(Q[p]) = " << rep.z_r_q << " != " << rep.two_m - rep.two_m_sigma;
    if (!rep.simplicity_ok) os << (rep.equality_ok ? "" : "; ") << "multiple zero misplaced";
    rep.detail = os.str();
  }
  return rep;
}

SigmaScan sigma_scan(const Poly& p) {
  if (p.degree() < 2) throw std::domain_error("sigma scan needs deg p >= 2");
  SigmaScan scan;
  Poly d = discriminant_in_sigma(p);

  std::vector<IsolatedRoot> d_roots;
  if (!d.is_constant()) d_roots = isolate_real_roots(d);
  bool zero_found = false;
  for (auto& root : d_roots) {
    SigmaBreakpoint bp;
    if (root.is_point && sign(root.point) == 0) {
      bp.degree_drop = true;
      zero_found = true;
    } else if (!root.is_point) {
      while (root.contains(Rational(0))) refine_below(root, root.width() / 4);
    }
    bp.root = root;
    bp.from_discriminant = true;
    scan.breakpoints.push_back(std::move(bp));
  }
  if (!zero_found) {
    SigmaBreakpoint bp;
    bp.root.is_point = true;
    bp.root.point = Rational(0);
    bp.degree_drop = true;
    scan.breakpoints.push_back(std::move(bp));
  }
  std::sort(scan.breakpoints.begin(), scan.breakpoints.end(),
            [](const SigmaBreakpoint& a, const SigmaBreakpoint& b) {
              if (a.root.left() != b.root.left()) return a.root.left() < b.root.left();
              return a.root.right() < b.root.right();
            });

  auto z_c_at = [&](const Rational& s) {
    return count_nonreal(laguerre_derivative(p, s));
  };
  auto push_sample = [&](const Rational& s, int z, bool at_bp) {
    scan.resolved.push_back({s, z, at_bp});
  };

  // One evaluation per open cell, cross-checked at a second interior point
  // (the count is constant between breakpoints), plus every rational
  // breakpoint itself.
  size_t k = scan.breakpoints.size();
  for (size_t i = 0; i <= k; ++i) {
    Rational s1, s2;
    if (i == 0) {
      Rational edge = scan.breakpoints.front().root.left();
      s1 = edge - 1;
      s2 = edge - 2;
    } else if (i == k) {
      Rational edge = scan.breakpoints.back().root.right();
      s1 = edge + 1;
      s2 = edge + 2;
    } else {
      SigmaBreakpoint& lb = scan.breakpoints[i - 1];
      SigmaBreakpoint& rb = scan.breakpoints[i];
      // Need left probe base strictly above lb's root: refine when a point
      // breakpoint touches the neighbouring interval's endpoint.
      while (lb.root.right() == rb.root.left()) {
        if (!lb.root.is_point) {
          refine_below(lb.root, lb.root.width() / 4);
        } else if (!rb.root.is_point) {
          refine_below(rb.root, rb.root.width() / 4);
        } else {
          break;  // distinct points cannot coincide
        }
      }
      Rational lo = lb.root.right(), hi = rb.root.left();
      if (lo == hi) {
        // Touching endpoints of two interval regions: that very endpoint is a
        // valid interior sample; take a second one by refining the left side.
        refine_below(lb.root, lb.root.width() / 4);
        Rational lo2 = lb.root.right();
        s1 = lo;
        s2 = (lo2 + lo) / 2;
        if (s2 == s1) s2 = (lb.root.right() + lo) / 2;
      } else {
        s1 = (lo + hi) / 2;
        s2 = (lo + s1) / 2;
      }
    }
    int z1 = z_c_at(s1);
    int z2 = z_c_at(s2);
    if (z1 != z2) throw std::logic_error("nonconstant count inside a scan cell");
    push_sample(s1, z1, false);
    if (i < k && scan.breakpoints[i].root.is_point)
      push_sample(scan.breakpoints[i].root.point,
                  z_c_at(scan.breakpoints[i].root.point), true);
  }
  for (const auto& bp : scan.breakpoints)
    if (!bp.root.is_point) scan.unresolved.push_back(bp.root);

  assert(!scan.resolved.empty());
  scan.min_two_m_sigma = scan.resolved.front().z_c;
  scan.witness_sigma = scan.resolved.front().sigma;
  for (const auto& s : scan.resolved)
    if (s.z_c < scan.min_two_m_sigma) {
      scan.min_two_m_sigma = s.z_c;
      scan.witness_sigma = s.sigma;
    }
  return scan;
}

LowerBoundReport verify_lower_bound(const Poly& p) {
  SigmaScan scan = sigma_scan(p);
  LowerBoundReport rep;
  rep.z_r_q = count_real_zeros_q(p);
  rep.two_m = count_nonreal(p);
  rep.resolved_min = scan.min_two_m_sigma;
  rep.candidates_checked = static_cast<int>(scan.resolved.size());
  rep.unresolved_present = !scan.unresolved.empty();
  for (const auto& s : scan.resolved) {
    if (rep.z_r_q < rep.two_m - s.z_c) {
      rep.verdict = Verdict::violation;
      std::ostringstream os;
      os << "Z_R(Q[p]) = " << rep.z_r_q << " < " << rep.two_m - s.z_c
         << " at sigma = " << to_string(s.sigma);
      rep.detail = os.str();
      return rep;
    }
  }
  rep.verdict = Verdict::verified;
  return rep;
}

MultiplicityLiftReport verify_multiplicity_lift(const Poly& p, const Rational& sigma,
                                                const Rational& lambda) {
  if (p.degree() < 1) throw std::domain_error("lift check needs deg p >= 1");
  MultiplicityLiftReport rep;
  Poly dp = p.derivative();
  Poly ps = laguerre_derivative(p, sigma);
  Poly f_p = f_poly(p);
  Poly f_dp = f_poly(dp);
  Poly f_ps = f_poly(ps);

  // The identity chain holds for every p and sigma; check it on the inputs.
  Poly ddp = dp.derivative(), dddp = ddp.derivative();
  bool id1 = dp * f_dp == ddp * f_p.derivative() - dddp * f_p;
  bool id2 = f_ps == f_dp + sigma * f_p.derivative() + (sigma * sigma) * f_p;
  bool id3 = dp * f_ps ==
             ps.derivative() * f_p.derivative() +
                 (sigma * ps.derivative() - ps.derivative().derivative()) * f_p;
  rep.identities_ok = id1 && id2 && id3;
  if (!rep.identities_ok) {
    rep.verdict = Verdict::violation;
    rep.detail = "polynomial identity chain failed";
    return rep;
  }

  rep.hypotheses_ok = sign(p.eval(lambda)) != 0 && sign(dp.eval(lambda)) != 0 &&
                      ps.degree() >= 1 && sign(ps.eval(lambda)) != 0;
  if (!rep.hypotheses_ok) {
    rep.verdict = Verdict::premise_not_met;
    rep.detail = "p, p' and p_sigma must all be nonzero at lambda";
    return rep;
  }
  rep.order_q_sigma = root_order_at(f_ps, lambda);
  rep.order_f_p = root_order_at(f_p, lambda);
  bool forward_applicable = rep.order_q_sigma >= 1 && sign(f_p.eval(lambda)) == 0;
  if (forward_applicable) rep.forward_ok = rep.order_f_p == rep.order_q_sigma + 1;
  bool converse_applicable = rep.order_f_p >= 2;
  if (converse_applicable) rep.converse_ok = rep.order_q_sigma == rep.order_f_p - 1;
  if (!rep.forward_ok || !rep.converse_ok) {
    rep.verdict = Verdict::violation;
    std::ostringstream os;
    os << "order transfer failed: ord_lambda Q[p_sigma] = " << rep.order_q_sigma
       << ", ord_lambda F[p] = " << rep.order_f_p;
    rep.detail = os.str();
    return rep;
  }
  rep.verdict = Verdict::verified;
  if (!forward_applicable && !converse_applicable)
    rep.detail = "lambda is multiple for neither side; identities verified";
  return rep;
}

SigmaCorrespondenceReport verify_sigma_correspondence(const Poly& p,
                                                      const Rational& lambda) {
  if (p.degree() < 1) throw std::domain_error("correspondence check needs deg p >= 1");
  if (sign(p.eval(lambda)) == 0)
    throw std::invalid_argument("lambda must not be a zero of p");
  SigmaCorrespondenceReport rep;
  Poly f = f_numerator(p);
  rep.order_q = root_order_at(f, lambda);
  rep.sigma_star = -p.derivative().eval(lambda) / p.eval(lambda);
  Poly ps = laguerre_derivative(p, rep.sigma_star);
  assert(!ps.is_zero());
  rep.order_p_sigma_star = root_order_at(ps, lambda);
  rep.lift_ok = rep.order_q == rep.order_p_sigma_star - 1;

  if (sign(rep.sigma_star) == 0) {
    // p'(lambda) = 0 branch: the first r+1 derivatives vanish, the next one
    // does not, for r the multiplicity of lambda as zero of Q[p].
    bool ok = true;
    Poly cur = p.derivative();
    for (int j = 1; j <= rep.order_q + 1; ++j) {
      if (sign(cur.eval(lambda)) != 0) ok = false;
      cur = cur.derivative();
    }
    if (sign(cur.eval(lambda)) == 0) ok = false;  // (r+2)-nd derivative
    rep.zero_branch_ok = ok;
  }

  rep.degree_bound_ok = f.degree() <= 2 * p.degree() - 2;
  if (gcd(p, p.derivative()).is_constant()) {
    int off = count_distinct_real_roots(f) - shared_distinct_real_roots(f, p);
    rep.real_count_bound_ok = off <= count_nonreal(p);
  }

  bool all = rep.lift_ok && rep.zero_branch_ok && rep.degree_bound_ok &&
             rep.real_count_bound_ok.value_or(true);
  rep.verdict = all ? Verdict::verified : Verdict::violation;
  if (!all) rep.detail = "multiplicity correspondence failed";
  return rep;
}

SandwichReport verify_sandwich(const Poly& p, const Rational& sigma) {
  if (p.degree() < 1) throw std::domain_error("sandwich check needs deg p >= 1");
  SandwichReport rep;
  rep.two_m = count_nonreal(p);
  if (rep.two_m == 0) {
    rep.detail = "p has no nonreal zeros; the bound is vacuous";
    return rep;
  }
  Poly ps = laguerre_derivative(p, sigma);
  if (ps.degree() < 1) {
    rep.detail = "p_sigma is constant";
    return rep;
  }
  rep.two_m_sigma = count_nonreal(ps);
  rep.z_r_q = count_real_zeros_q(p);
  rep.z_r_q_sigma = count_real_zeros_q(ps);
  rep.lower_ok = rep.z_r_q >= rep.two_m - rep.two_m_sigma;
  rep.upper_ok = rep.z_r_q <= rep.two_m - rep.two_m_sigma + rep.z_r_q_sigma;
  if (!rep.lower_ok) {
    rep.verdict = Verdict::violation;  // the lower bound holds for every sigma
    rep.detail = "lower bound failed";
  } else if (rep.upper_ok) {
    rep.verdict = Verdict::verified;
  } else {
    rep.verdict = Verdict::not_witnessed;
    rep.detail = "upper bound fails at this sigma (existential claim, not a violation)";
  }
  return rep;
}

SandwichSearchReport search_sandwich(const Poly& p) {
  SandwichSearchReport rep;
  rep.two_m = count_nonreal(p);
  if (rep.two_m == 0) {
    rep.verdict = Verdict::premise_not_met;
    rep.detail = "p has no nonreal zeros; the bound is vacuous";
    return rep;
  }
  SigmaScan scan = sigma_scan(p);
  for (const auto& s : scan.resolved) {
    SandwichReport one = verify_sandwich(p, s.sigma);
    ++rep.tried;
    if (one.verdict == Verdict::violation) {
      rep.verdict = Verdict::violation;
      rep.detail = "lower bound failed at sigma = " + to_string(s.sigma);
      return rep;
    }
    if (one.verdict == Verdict::verified && one.two_m_sigma < rep.two_m &&
        !rep.witness_found) {
      rep.witness_found = true;
      rep.witness_sigma = s.sigma;
    }
  }
  rep.verdict = rep.witness_found ? Verdict::verified : Verdict::not_witnessed;
  if (!rep.witness_found)
    rep.detail = "no sampled sigma realizes both bounds with a drop in 2m_sigma";
  return rep;
}

RootProfile root_profile(const Poly& p, const Rational& sigma) {
  if (p.degree() < 1) throw std::domain_error("profile needs deg p >= 1");
  RootProfile prof;
  prof.two_m = count_nonreal(p);
  for (const auto& part : squarefree_decompose(p)) {
    int c = count_distinct_real_roots(part.factor);
    (part.multiplicity == 1 ? prof.d1 : prof.d2) += c;
  }
  Poly ps = laguerre_derivative(p, sigma);
  if (ps.is_zero()) throw std::domain_error("p_sigma is zero");
  prof.two_m_sigma = count_nonreal(ps);
  if (!ps.is_constant()) {
    for (const auto& part : squarefree_decompose(ps)) {
      int c = count_distinct_real_roots(part.factor);
      int shared = shared_distinct_real_roots(part.factor, p);
      int off = c - shared;
      prof.shared += shared;
      if (part.multiplicity == 1) {
        prof.l1 += off;
      } else {
        prof.l2 += off;
        prof.sum_r_minus_1 += (part.multiplicity - 1) * off;
      }
    }
  }
  return prof;
}

IndexIdentityReport index_identity_check(const Poly& p, const Rational& sigma) {
  if (p.degree() < 1) throw std::domain_error("index identity needs deg p >= 1");
  Poly ps = laguerre_derivative(p, sigma);
  if (ps.is_zero()) throw std::domain_error("p_sigma is zero");
  IndexIdentityReport rep;
  rep.profile = root_profile(p, sigma);
  // (p_s/p)'/(p_s/p) == F[p]/(p * p_s); the construction reduces it.
  rep.lhs_index = index_line(make_ratfunc(f_numerator(p), p * ps));
  int defect = p.degree() - ps.degree();  // 1 when sigma = 0, else 0
  rep.rhs = rep.profile.two_m - rep.profile.two_m_sigma - rep.profile.sum_r_minus_1 -
            defect;
  if (rep.lhs_index == rep.rhs) {
    rep.verdict = Verdict::verified;
  } else {
    rep.verdict = Verdict::violation;
    std::ostringstream os;
    os << "index " << rep.lhs_index << " != profile value " << rep.rhs;
    rep.detail = os.str();
  }
  return rep;
}

ConjectureReport explore_conjecture(const Poly& p) {
  ConjectureReport rep;
  rep.z_r_q = count_real_zeros_q(p);
  rep.two_m = count_nonreal(p);
  if (rep.two_m == 0) {
    rep.verdict = Verdict::premise_not_met;
    rep.detail = "p has no nonreal zeros; the statement is vacuous";
    return rep;
  }

  std::vector<Rational> sigmas;
  SigmaScan scan = sigma_scan(p);
  for (const auto& s : scan.resolved) sigmas.push_back(s.sigma);
  // Natural equality candidates: the parameter that lifts each rational real
  // zero of F[p] into a multiple zero of the family.
  Poly f = f_numerator(p);
  if (!f.is_constant()) {
    for (const auto& root : isolate_real_roots(f)) {
      if (!root.is_point) continue;
      if (sign(p.eval(root.point)) == 0) continue;
      sigmas.push_back(-p.derivative().eval(root.point) / p.eval(root.point));
    }
  }
  std::sort(sigmas.begin(), sigmas.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end()), sigmas.end());

  for (const auto& s : sigmas) {
    Poly ps = laguerre_derivative(p, s);
    if (ps.degree() < 1) continue;
    ConjectureCandidate cand;
    cand.sigma = s;
    cand.two_m_sigma = count_nonreal(ps);
    cand.z_r_q_sigma = count_real_zeros_q(ps);
    cand.equality = rep.z_r_q == rep.two_m - cand.two_m_sigma + cand.z_r_q_sigma;
    cand.q_sigma_positive_somewhere = takes_positive_value(f_poly(ps));
    if (cand.q_sigma_positive_somewhere) rep.positive_case_applicable = true;
    if (cand.equality) {
      if (!rep.witness_found) {
        rep.witness_found = true;
        rep.witness_sigma = s;
      }
      if (cand.two_m_sigma < rep.two_m) rep.strict_drop_witness = true;
    }
    rep.candidates.push_back(std::move(cand));
  }
  rep.verdict = rep.witness_found ? Verdict::verified : Verdict::not_witnessed;
  if (!rep.witness_found) {
    rep.detail = "no witness found in sample (not a refutation)";
  } else if (rep.positive_case_applicable && !rep.strict_drop_witness) {
    rep.detail = "equality witnessed, but no sampled witness drops 2m_sigma";
  }
  return rep;
}

}  // namespace logcrit
