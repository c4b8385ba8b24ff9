#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logcrit/cauchy.hpp"

namespace logcrit {

// Objects built from a real polynomial p:
//   F[p] = p*p'' - (p')^2          (numerator of Q before reduction)
//   Q[p] = (p'/p)' = F[p]/p^2      (critical points of the log-derivative)
//   p_s  = p' + s*p                (shifted derivative, parameter s)
// plus exact verifiers for the relations between real zeros of Q[p], the
// nonreal zero count of p, and the nonreal zero counts of the family p_s.

Poly laguerre_derivative(const Poly& p, const Rational& sigma);   // p' + s*p

// Unique q with q' + s*q = input; s must be nonzero (s = 0 loses the top
// coefficient and is not invertible). Degrees match.
Poly invert_laguerre(const Poly& q, const Rational& sigma);

// F[p]; requires deg p >= 1. deg F <= 2 deg p - 2 and the leading
// coefficient is -(lead p)^2 * deg p when deg F reaches the bound.
Poly f_numerator(const Poly& p);

// F[p]/p^2 in lowest terms.
RatFunc q_reduced(const Poly& p);

// Number of nonreal complex zeros of p (with multiplicity); always even.
int count_nonreal(const Poly& p);

// Real zeros of Q[p] counted with multiplicity (zeros of the reduced
// numerator); requires deg p >= 1.
int count_real_zeros_q(const Poly& p);

struct HawaiiReport {
  int degree = 0;
  int real_zeros_with_multiplicity = 0;
  int nonreal_2m = 0;
  Poly f;            // F[p]
  RatFunc q;         // Q[p] reduced
  int z_r_q = 0;     // real zeros of Q[p] with multiplicity
  bool hawaii_holds = false;  // z_r_q <= nonreal_2m
};

// Requires deg p >= 1. hawaii_holds == false is a counterexample to a proved
// statement, i.e. an implementation bug; callers escalate it loudly.
HawaiiReport check_hawaii(const Poly& p);

// Exact test for "Q[g] < 0 everywhere it is defined": every real root of
// F[g] has even multiplicity, every real root of F[g] is a root of g (gcd
// root-containment, counted by Sturm), and F[g] is negative at a sample
// point beyond its root bound. Requires deg g >= 1.
bool check_global_negativity(const Poly& g);

enum class Verdict {
  verified,         // claim checked and true
  premise_not_met,  // hypotheses fail; nothing to check
  not_witnessed,    // existential claim: no witness in the sample (not a refutation)
  violation,        // a proved claim failed -- implementation bug, escalate
};
const char* to_string(Verdict v);

// --- equality of Z_R(Q[p]) with 2m - 2m_s under global negativity ---------
struct CravenReport {
  Verdict verdict = Verdict::premise_not_met;
  bool premise_negativity = false;
  int z_r_q = 0;
  int two_m = 0;
  int two_m_sigma = 0;
  bool equality_ok = false;
  bool simplicity_ok = false;  // multiple real zeros of Q[p] sit only at
                               // roots of p_s of multiplicity > 2
  std::string detail;
};
CravenReport verify_craven_equality(const Poly& p, const Rational& sigma);

// --- scan of s -> Z_C(p_s) over the cells cut by the discriminant ---------
struct SigmaBreakpoint {
  IsolatedRoot root;
  bool from_discriminant = false;  // real root of discriminant_in_sigma
  bool degree_drop = false;        // s = 0 (deg p_s drops there)
};
struct SigmaSample {
  Rational sigma;
  int z_c = 0;                 // Z_C(p_sigma)
  bool at_breakpoint = false;  // rational breakpoint rather than cell interior
};
struct SigmaScan {
  std::vector<SigmaBreakpoint> breakpoints;  // sorted, disjoint regions
  std::vector<SigmaSample> resolved;         // cell samples + rational breakpoints
  std::vector<IsolatedRoot> unresolved;      // irrational breakpoints, not evaluated
  int min_two_m_sigma = 0;                   // min over resolved
  Rational witness_sigma;                    // first sigma attaining the min
};
// Requires deg p >= 2. Z_C(p_s) is constant on each open cell; the scan
// samples every cell twice and checks that before recording the value.
SigmaScan sigma_scan(const Poly& p);

struct LowerBoundReport {
  Verdict verdict = Verdict::verified;
  int z_r_q = 0;
  int two_m = 0;
  int resolved_min = 0;
  int candidates_checked = 0;
  bool unresolved_present = false;
  std::string detail;
};
// Z_R(Q[p]) >= 2m - Z_C(p_s) checked for every resolved scan candidate.
LowerBoundReport verify_lower_bound(const Poly& p);

// --- multiplicity transfer between Q[p_s] and Q[p] at a rational point ----
struct MultiplicityLiftReport {
  Verdict verdict = Verdict::premise_not_met;
  bool hypotheses_ok = false;  // p, p', p_s all nonzero at lambda
  int order_q_sigma = 0;       // multiplicity of lambda as zero of Q[p_s]
  int order_f_p = 0;           // multiplicity of lambda in F[p]
  bool forward_ok = true;      // order_f_p == order_q_sigma + 1 when applicable
  bool converse_ok = true;     // order_q_sigma == order_f_p - 1 when applicable
  bool identities_ok = false;  // the three exact polynomial identities tying
                               // F[p], F[p'], F[p_s] together
  std::string detail;
};
MultiplicityLiftReport verify_multiplicity_lift(const Poly& p, const Rational& sigma,
                                                const Rational& lambda);

// --- correspondence multiple zeros of the family <-> zeros of Q[p] --------
struct SigmaCorrespondenceReport {
  Verdict verdict = Verdict::premise_not_met;
  int order_q = 0;             // multiplicity of lambda as zero of Q[p]
  Rational sigma_star;         // the unique s with p_s(lambda) = 0
  int order_p_sigma_star = 0;  // multiplicity of lambda in p_{sigma_star}
  bool lift_ok = false;        // order_q == order_p_sigma_star - 1
  bool zero_branch_ok = true;  // derivative conditions when sigma_star == 0
  bool degree_bound_ok = false;     // deg F[p] <= 2 deg p - 2
  std::optional<bool> real_count_bound_ok;  // square-free p only: distinct real
                                            // roots of F off p <= 2m
  std::string detail;
};
// Requires p(lambda) != 0 (std::invalid_argument otherwise).
SigmaCorrespondenceReport verify_sigma_correspondence(const Poly& p,
                                                      const Rational& lambda);

// --- two-sided bound for a given family member ----------------------------
struct SandwichReport {
  Verdict verdict = Verdict::premise_not_met;
  int two_m = 0;
  int two_m_sigma = 0;
  int z_r_q = 0;
  int z_r_q_sigma = 0;
  bool lower_ok = false;   // 2m - 2m_s <= Z_R(Q[p]); proved for every s
  bool upper_ok = false;   // Z_R(Q[p]) <= 2m - 2m_s + Z_R(Q[p_s]); existential
  std::string detail;
};
// Vacuous (premise_not_met) when p has no nonreal zeros; requires sigma != 0
// or deg p >= 2 so that Q[p_s] exists.
SandwichReport verify_sandwich(const Poly& p, const Rational& sigma);

struct SandwichSearchReport {
  Verdict verdict = Verdict::not_witnessed;
  bool witness_found = false;
  Rational witness_sigma;
  int tried = 0;
  int two_m = 0;
  std::string detail;
};
// Samples sigma over scan cells and rational breakpoints, looking for one
// with both bounds holding and 2m_s < 2m.
SandwichSearchReport search_sandwich(const Poly& p);

// --- index identity behind the equality theorem ---------------------------
struct RootProfile {
  int d1 = 0;              // distinct simple real zeros of p
  int d2 = 0;              // distinct multiple real zeros of p
  int l1 = 0;              // distinct simple real zeros of p_s off p
  int l2 = 0;              // distinct multiple real zeros of p_s off p
  int sum_r_minus_1 = 0;   // sum of (mult - 1) over the l2 zeros
  int shared = 0;          // distinct real zeros common to p_s and p
  int two_m = 0;
  int two_m_sigma = 0;
};
RootProfile root_profile(const Poly& p, const Rational& sigma);

struct IndexIdentityReport {
  Verdict verdict = Verdict::verified;
  int lhs_index = 0;  // line index of (p_s/p)'/(p_s/p) = F[p]/(p*p_s)
  int rhs = 0;        // 2m - 2m_s - sum(r_i - 1), minus 1 more when s = 0
  RootProfile profile;
  std::string detail;
};
// Requires p and p_s nonzero.
IndexIdentityReport index_identity_check(const Poly& p, const Rational& sigma);

// --- equality search suggested by the concluding conjecture ---------------
struct ConjectureCandidate {
  Rational sigma;
  int two_m_sigma = 0;
  int z_r_q_sigma = 0;
  bool equality = false;             // Z_R(Q[p]) == 2m - 2m_s + Z_R(Q[p_s])
  bool q_sigma_positive_somewhere = false;
};
struct ConjectureReport {
  Verdict verdict = Verdict::not_witnessed;
  int z_r_q = 0;
  int two_m = 0;
  std::vector<ConjectureCandidate> candidates;
  bool witness_found = false;
  Rational witness_sigma;
  bool positive_case_applicable = false;  // some sampled s has Q[p_s] > 0 somewhere
  bool strict_drop_witness = false;       // equality witness with 2m_s < 2m
  std::string detail;
};
// Sampled sigma: scan cells, rational breakpoints, and -p'(l)/p(l) for every
// exact rational real zero l of F[p] with p(l) != 0. "No witness found in
// sample" is reported as such, never as a refutation. Requires deg p >= 2.
ConjectureReport explore_conjecture(const Poly& p);

}  // namespace logcrit
