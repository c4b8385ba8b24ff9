#include "logcrit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logcrit/hawaii.hpp"
#include "logcrit/instances.hpp"

namespace logcrit {

namespace {

using nlohmann::ordered_json;

std::string rs(const Rational& r) { return to_string(r); }

ordered_json root_json(const IsolatedRoot& root) {
  ordered_json j;
  if (root.is_point) {
    j["kind"] = "point";
    j["value"] = rs(root.point);
  } else {
    j["kind"] = "interval";
    j["lo"] = rs(root.lo);
    j["hi"] = rs(root.hi);
  }
  return j;
}

ordered_json profile_json(const RootProfile& prof) {
  ordered_json j;
  j["d1"] = prof.d1;
  j["d2"] = prof.d2;
  j["l1"] = prof.l1;
  j["l2"] = prof.l2;
  j["sum_r_minus_1"] = prof.sum_r_minus_1;
  j["shared"] = prof.shared;
  j["two_m"] = prof.two_m;
  j["two_m_sigma"] = prof.two_m_sigma;
  return j;
}

struct Emit {
  ordered_json inputs = ordered_json::object();
  ordered_json result = ordered_json::object();
  std::vector<std::string> violations;
  std::ostringstream text;
};

Poly parse_nonzero(const std::string& text, const char* what) {
  Poly p = parse_polynomial(text);
  if (p.is_zero()) throw std::invalid_argument(std::string(what) + " must be nonzero");
  return p;
}

void run_analyze(const std::string& poly_text, Emit& e) {
  Poly p = parse_nonzero(poly_text, "polynomial");
  if (p.is_constant()) throw std::invalid_argument("polynomial must have degree >= 1");
  HawaiiReport rep = check_hawaii(p);
  e.inputs["p"] = p.coeff_string();
  e.result["pretty"] = p.pretty();
  e.result["degree"] = rep.degree;
  e.result["real_zeros_with_multiplicity"] = rep.real_zeros_with_multiplicity;
  e.result["nonreal_2m"] = rep.nonreal_2m;
  e.result["f"] = rep.f.coeff_string();
  e.result["q_num"] = rep.q.num().coeff_string();
  e.result["q_den"] = rep.q.den().coeff_string();
  e.result["z_r_q"] = rep.z_r_q;
  e.result["hawaii_holds"] = rep.hawaii_holds;
  if (!rep.hawaii_holds) {
    std::ostringstream os;
    os << "hawaii: Z_R(Q[p]) = " << rep.z_r_q << " exceeds 2m = " << rep.nonreal_2m;
    e.violations.push_back(os.str());
  }
  e.text << "p = " << p.pretty() << "  (degree " << rep.degree << ")\n"
         << "real zeros (with multiplicity): " << rep.real_zeros_with_multiplicity
         << "\n"
         << "nonreal zeros 2m: " << rep.nonreal_2m << "\n"
         << "F[p] = " << rep.f.pretty() << "\n"
         << "Q[p] = (" << rep.q.num().pretty() << ") / (" << rep.q.den().pretty()
         << ")\n"
         << "Z_R(Q[p]) = " << rep.z_r_q << "\n"
         << "Z_R(Q[p]) <= 2m: " << (rep.hawaii_holds ? "holds" : "FAILS") << "\n";
}

void run_index(const std::string& num_text, const std::string& den_text,
               const std::vector<std::string>& interval, bool projective,
               const std::string& method_name, Emit& e) {
  Poly num = parse_polynomial(num_text);
  Poly den = parse_nonzero(den_text, "denominator");
  RatFunc r = make_ratfunc(num, den);
  IndexMethod method =
      method_name == "per-pole" ? IndexMethod::per_pole : IndexMethod::euclidean;
  e.inputs["num"] = num.coeff_string();
  e.inputs["den"] = den.coeff_string();
  e.result["method"] = method_name;
  int value = 0;
  std::string region;
  if (!interval.empty()) {
    Rational a = parse_rational(interval[0]);
    Rational b = parse_rational(interval[1]);
    if (!(a < b)) throw std::invalid_argument("interval needs a < b");
    e.inputs["interval"] = ordered_json::array({rs(a), rs(b)});
    value = index_interval(r, a, b);
    region = "interval";
  } else if (projective) {
    value = index_projective(r);
    region = "projective";
  } else {
    value = index_line(r, method);
    region = "line";
  }
  e.result["region"] = region;
  e.result["index"] = value;
  e.text << "index over " << region << ": " << value << "\n";
}

void run_laguerre(const std::string& poly_text, const std::string& sigma_text,
                  bool invert, Emit& e) {
  Poly p = parse_nonzero(poly_text, "polynomial");
  Rational sigma = parse_rational(sigma_text);
  e.inputs["p"] = p.coeff_string();
  e.inputs["sigma"] = rs(sigma);
  e.inputs["invert"] = invert;
  Poly out = invert ? invert_laguerre(p, sigma) : laguerre_derivative(p, sigma);
  e.result["coefficients"] = out.coeff_string();
  e.result["pretty"] = out.pretty();
  e.text << (invert ? "inverse image under q -> q' + sigma*q:\n" : "p' + sigma*p:\n")
         << "  " << out.pretty() << "\n  coefficients: " << out.coeff_string() << "\n";
}

void run_sigma_min(const std::string& poly_text, Emit& e) {
  Poly p = parse_nonzero(poly_text, "polynomial");
  if (p.degree() < 2) throw std::invalid_argument("sigma-min needs degree >= 2");
  SigmaScan scan = sigma_scan(p);
  e.inputs["p"] = p.coeff_string();
  ordered_json bps = ordered_json::array();
  for (const auto& bp : scan.breakpoints) {
    ordered_json j = root_json(bp.root);
    j["from_discriminant"] = bp.from_discriminant;
    j["degree_drop"] = bp.degree_drop;
    bps.push_back(std::move(j));
  }
  e.result["breakpoints"] = std::move(bps);
  ordered_json samples = ordered_json::array();
  for (const auto& s : scan.resolved) {
    ordered_json j;
    j["sigma"] = rs(s.sigma);
    j["z_c"] = s.z_c;
    j["at_breakpoint"] = s.at_breakpoint;
    samples.push_back(std::move(j));
  }
  e.result["resolved"] = std::move(samples);
  ordered_json unres = ordered_json::array();
  for (const auto& root : scan.unresolved) unres.push_back(root_json(root));
  e.result["unresolved"] = std::move(unres);
  e.result["min_two_m_sigma"] = scan.min_two_m_sigma;
  e.result["witness_sigma"] = rs(scan.witness_sigma);

  e.text << "breakpoints of sigma -> Z_C(p_sigma):\n";
  for (const auto& bp : scan.breakpoints) {
    if (bp.root.is_point)
      e.text << "  sigma = " << rs(bp.root.point);
    else
      e.text << "  sigma in (" << rs(bp.root.lo) << ", " << rs(bp.root.hi)
             << ") [irrational, unresolved]";
    if (bp.degree_drop) e.text << "  (degree drop)";
    e.text << "\n";
  }
  e.text << "samples:\n";
  for (const auto& s : scan.resolved)
    e.text << "  sigma = " << rs(s.sigma) << " -> Z_C = " << s.z_c
           << (s.at_breakpoint ? "  (breakpoint)" : "") << "\n";
  e.text << "min Z_C(p_sigma) over resolved candidates: " << scan.min_two_m_sigma
         << " at sigma = " << rs(scan.witness_sigma) << "\n";
  if (!scan.unresolved.empty())
    e.text << "note: " << scan.unresolved.size()
           << " irrational breakpoint(s) not evaluated\n";
}

void verdict_common(const char* tag, Verdict v, const std::string& detail, Emit& e) {
  e.result["verdict"] = to_string(v);
  if (!detail.empty()) e.result["detail"] = detail;
  if (v == Verdict::violation)
    e.violations.push_back(std::string(tag) + ": " +
                           (detail.empty() ? "check failed" : detail));
  e.text << "verdict: " << to_string(v) << "\n";
  if (!detail.empty()) e.text << "detail: " << detail << "\n";
}

void run_verify(const std::string& poly_text, const std::string& theorem,
                const std::string& sigma_text, const std::string& lambda_text,
                Emit& e) {
  Poly p = parse_nonzero(poly_text, "polynomial");
  if (p.is_constant()) throw std::invalid_argument("polynomial must have degree >= 1");
  e.inputs["p"] = p.coeff_string();
  e.inputs["theorem"] = theorem;
  auto need = [&](const std::string& text, const char* flag) {
    if (text.empty())
      throw std::invalid_argument("--theorem " + theorem + " requires " + flag);
    return parse_rational(text);
  };
  if (!sigma_text.empty()) e.inputs["sigma"] = rs(parse_rational(sigma_text));
  if (!lambda_text.empty()) e.inputs["lambda"] = rs(parse_rational(lambda_text));

  if (theorem == "hawaii") {
    HawaiiReport rep = check_hawaii(p);
    e.result["z_r_q"] = rep.z_r_q;
    e.result["nonreal_2m"] = rep.nonreal_2m;
    e.text << "Z_R(Q[p]) = " << rep.z_r_q << ", 2m = " << rep.nonreal_2m << "\n";
    verdict_common("hawaii", rep.hawaii_holds ? Verdict::verified : Verdict::violation,
                   rep.hawaii_holds ? "" : "Z_R(Q[p]) exceeds 2m", e);
  } else if (theorem == "t21") {
    Rational sigma = need(sigma_text, "--sigma");
    Rational lambda = need(lambda_text, "--lambda");
    MultiplicityLiftReport rep = verify_multiplicity_lift(p, sigma, lambda);
    e.result["hypotheses_ok"] = rep.hypotheses_ok;
    e.result["identities_ok"] = rep.identities_ok;
    e.result["order_q_sigma"] = rep.order_q_sigma;
    e.result["order_f_p"] = rep.order_f_p;
    e.result["forward_ok"] = rep.forward_ok;
    e.result["converse_ok"] = rep.converse_ok;
    e.text << "ord_lambda Q[p_sigma] = " << rep.order_q_sigma
           << ", ord_lambda F[p] = " << rep.order_f_p << "\n";
    verdict_common("t21", rep.verdict, rep.detail, e);
  } else if (theorem == "t31") {
    Rational lambda = need(lambda_text, "--lambda");
    SigmaCorrespondenceReport rep = verify_sigma_correspondence(p, lambda);
    e.result["order_q"] = rep.order_q;
    e.result["sigma_star"] = rs(rep.sigma_star);
    e.result["order_p_sigma_star"] = rep.order_p_sigma_star;
    e.result["lift_ok"] = rep.lift_ok;
    e.result["zero_branch_ok"] = rep.zero_branch_ok;
    e.result["degree_bound_ok"] = rep.degree_bound_ok;
    e.result["real_count_bound_ok"] =
        rep.real_count_bound_ok.has_value() ? ordered_json(*rep.real_count_bound_ok)
                                            : ordered_json(nullptr);
    e.text << "sigma* = " << rs(rep.sigma_star) << ", ord_lambda Q[p] = " << rep.order_q
           << ", ord_lambda p_sigma* = " << rep.order_p_sigma_star << "\n";
    verdict_common("t31", rep.verdict, rep.detail, e);
  } else if (theorem == "t42") {
    Rational sigma = need(sigma_text, "--sigma");
    CravenReport rep = verify_craven_equality(p, sigma);
    e.result["premise_negativity"] = rep.premise_negativity;
    e.result["z_r_q"] = rep.z_r_q;
    e.result["two_m"] = rep.two_m;
    e.result["two_m_sigma"] = rep.two_m_sigma;
    e.result["equality_ok"] = rep.equality_ok;
    e.result["simplicity_ok"] = rep.simplicity_ok;
    if (rep.premise_negativity)
      e.text << "Z_R(Q[p]) = " << rep.z_r_q << ", 2m - 2m_sigma = "
             << rep.two_m - rep.two_m_sigma << "\n";
    verdict_common("t42", rep.verdict, rep.detail, e);
  } else if (theorem == "t43") {
    if (p.degree() < 2) throw std::invalid_argument("t43 needs degree >= 2");
    LowerBoundReport rep = verify_lower_bound(p);
    e.result["z_r_q"] = rep.z_r_q;
    e.result["two_m"] = rep.two_m;
    e.result["resolved_min"] = rep.resolved_min;
    e.result["candidates_checked"] = rep.candidates_checked;
    e.result["unresolved_present"] = rep.unresolved_present;
    e.text << "Z_R(Q[p]) = " << rep.z_r_q << " >= 2m - Z_C(p_sigma) checked at "
           << rep.candidates_checked << " candidates; resolved min Z_C = "
           << rep.resolved_min << "\n";
    verdict_common("t43", rep.verdict, rep.detail, e);
  } else if (theorem == "sandwich") {
    if (!sigma_text.empty()) {
      SandwichReport rep = verify_sandwich(p, parse_rational(sigma_text));
      e.result["two_m"] = rep.two_m;
      e.result["two_m_sigma"] = rep.two_m_sigma;
      e.result["z_r_q"] = rep.z_r_q;
      e.result["z_r_q_sigma"] = rep.z_r_q_sigma;
      e.result["lower_ok"] = rep.lower_ok;
      e.result["upper_ok"] = rep.upper_ok;
      e.text << rep.two_m - rep.two_m_sigma << " <= Z_R(Q[p]) = " << rep.z_r_q
             << " <= " << rep.two_m - rep.two_m_sigma + rep.z_r_q_sigma << "\n";
      verdict_common("sandwich", rep.verdict, rep.detail, e);
    } else {
      if (p.degree() < 2)
        throw std::invalid_argument("sandwich search needs degree >= 2");
      SandwichSearchReport rep = search_sandwich(p);
      e.result["two_m"] = rep.two_m;
      e.result["tried"] = rep.tried;
      e.result["witness_found"] = rep.witness_found;
      if (rep.witness_found) e.result["witness_sigma"] = rs(rep.witness_sigma);
      if (rep.witness_found)
        e.text << "witness sigma = " << rs(rep.witness_sigma) << " (of " << rep.tried
               << " tried)\n";
      verdict_common("sandwich", rep.verdict, rep.detail, e);
    }
  } else if (theorem == "identity") {
    Rational sigma = need(sigma_text, "--sigma");
    IndexIdentityReport rep = index_identity_check(p, sigma);
    e.result["lhs_index"] = rep.lhs_index;
    e.result["rhs"] = rep.rhs;
    e.result["profile"] = profile_json(rep.profile);
    e.text << "Ind_R((p_sigma/p)'/(p_sigma/p)) = " << rep.lhs_index
           << ", root-profile value = " << rep.rhs << "\n";
    verdict_common("identity", rep.verdict, rep.detail, e);
  } else if (theorem == "conjecture") {
    if (p.degree() < 2) throw std::invalid_argument("conjecture needs degree >= 2");
    ConjectureReport rep = explore_conjecture(p);
    e.result["z_r_q"] = rep.z_r_q;
    e.result["two_m"] = rep.two_m;
    ordered_json cands = ordered_json::array();
    for (const auto& c : rep.candidates) {
      ordered_json j;
      j["sigma"] = rs(c.sigma);
      j["two_m_sigma"] = c.two_m_sigma;
      j["z_r_q_sigma"] = c.z_r_q_sigma;
      j["equality"] = c.equality;
      j["q_sigma_positive_somewhere"] = c.q_sigma_positive_somewhere;
      cands.push_back(std::move(j));
    }
    e.result["candidates"] = std::move(cands);
    e.result["witness_found"] = rep.witness_found;
    if (rep.witness_found) e.result["witness_sigma"] = rs(rep.witness_sigma);
    e.result["positive_case_applicable"] = rep.positive_case_applicable;
    e.result["strict_drop_witness"] = rep.strict_drop_witness;
    if (rep.witness_found)
      e.text << "equality witness: sigma = " << rs(rep.witness_sigma) << "\n";
    verdict_common("conjecture", rep.verdict, rep.detail, e);
  } else {
    throw std::invalid_argument("unknown theorem tag: " + theorem);
  }
}

struct FuzzOutcome {
  std::uint64_t seed = 0;
  std::string coeffs;
  int checks = 0;
  std::vector<std::string> violations;
};

void fuzz_one(int degree, const std::string& suite, std::uint64_t base_seed,
              std::uint64_t index, FuzzOutcome& out) {
  std::uint64_t cs = child_seed(base_seed, index);
  out.seed = cs;
  Rng structure(cs);
  InstanceSpec spec;
  spec.degree = degree;
  spec.seed = child_seed(cs, 0);
  int pairs = static_cast<int>(structure.bounded(0, degree / 2));
  int rem = degree - 2 * pairs;
  while (rem >= 2 && structure.bounded(0, 2) == 0) {
    int k = static_cast<int>(structure.bounded(2, std::min(3, rem)));
    spec.real_multiple.push_back(k);
    rem -= k;
  }
  spec.nonreal_pairs = pairs;
  spec.real_simple = rem;
  Instance inst = generate_instance(spec);
  const Poly& p = inst.poly;
  out.coeffs = p.coeff_string();

  auto flag = [&](const std::string& msg) {
    out.violations.push_back("[" + std::to_string(index) + "] " + msg);
  };

  if (suite == "all" || suite == "indices") {
    RatFunc logd = make_ratfunc(p.derivative(), p);
    int via_chain = index_line(logd, IndexMethod::euclidean);
    int via_poles = index_line(logd, IndexMethod::per_pole);
    int distinct = count_distinct_real_roots(p);
    out.checks += 3;
    if (via_chain != via_poles)
      flag("index route mismatch: " + std::to_string(via_chain) + " vs " +
           std::to_string(via_poles));
    if (via_chain != distinct)
      flag("Ind(p'/p) = " + std::to_string(via_chain) + " but " +
           std::to_string(distinct) + " distinct real roots");
  }
  if (suite == "all" || suite == "identities") {
    Rational sigma = structure.rational(4, 3);
    Rational lambda = structure.rational(4, 3);
    MultiplicityLiftReport rep = verify_multiplicity_lift(p, sigma, lambda);
    out.checks += 2;
    if (rep.verdict == Verdict::violation)
      flag("multiplicity lift at sigma=" + rs(sigma) + " lambda=" + rs(lambda) +
           ": " + rep.detail);
  }
  if (suite == "all" || suite == "theorems") {
    HawaiiReport hr = check_hawaii(p);
    out.checks += 1;
    if (!hr.hawaii_holds)
      flag("hawaii: Z_R(Q[p]) = " + std::to_string(hr.z_r_q) + " > 2m = " +
           std::to_string(hr.nonreal_2m));
    for (int t = 0; t < 3; ++t) {
      Rational sigma = structure.rational(4, 3);
      Poly ps = laguerre_derivative(p, sigma);
      out.checks += 2;
      if (ps.degree() >= 1 && count_nonreal(ps) > hr.nonreal_2m)
        flag("Z_C(p_sigma) > Z_C(p) at sigma=" + rs(sigma));
      IndexIdentityReport idr = index_identity_check(p, sigma);
      if (idr.verdict == Verdict::violation)
        flag("index identity at sigma=" + rs(sigma) + ": " + idr.detail);
    }
  }
}

void run_fuzz(int degree, int count, std::uint64_t seed, const std::string& suite,
              int threads, Emit& e) {
  if (degree < 1) throw std::invalid_argument("--degree must be >= 1");
  if (count < 1) throw std::invalid_argument("--count must be >= 1");
  if (threads < 1) throw std::invalid_argument("--threads must be >= 1");
  e.inputs["degree"] = degree;
  e.inputs["count"] = count;
  e.inputs["seed"] = seed;
  e.inputs["suite"] = suite;
  e.inputs["threads"] = threads;

  std::vector<FuzzOutcome> outcomes(static_cast<size_t>(count));
  auto worker = [&](int start) {
    for (int i = start; i < count; i += threads)
      fuzz_one(degree, suite, seed, static_cast<std::uint64_t>(i),
               outcomes[static_cast<size_t>(i)]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  ordered_json results = ordered_json::array();
  int total_checks = 0;
  for (int i = 0; i < count; ++i) {
    const FuzzOutcome& oc = outcomes[static_cast<size_t>(i)];
    ordered_json j;
    j["index"] = i;
    j["seed"] = oc.seed;
    j["p"] = oc.coeffs;
    j["checks"] = oc.checks;
    j["violations"] = oc.violations;
    results.push_back(std::move(j));
    total_checks += oc.checks;
    for (const auto& v : oc.violations) e.violations.push_back(v);
  }
  e.result["results"] = std::move(results);
  e.result["total_checks"] = total_checks;
  e.result["violation_count"] = static_cast<int>(e.violations.size());
  e.text << count << " instances of degree " << degree << ", suite " << suite << ": "
         << total_checks << " checks, " << e.violations.size() << " violation(s)\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Exact analysis of the critical points of log-derivatives of real "
               "polynomials.\nPolynomials are comma-separated ascending rational "
               "coefficients: \"-6,6,-3,1\" is z^3-3z^2+6z-6.",
               "logcrit"};
  app.require_subcommand(1);

  struct Common {
    bool json = false;
    bool no_timing = false;
  };
  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_flag("--json", c.json, "emit a JSON report instead of text");
    sub->add_flag("--no-timing", c.no_timing, "omit the elapsed-time field");
  };

  auto* analyze = app.add_subcommand(
      "analyze", "count real critical points of p'/p and compare with 2m");
  std::string an_poly;
  Common an_c;
  analyze->add_option("poly", an_poly, "coefficients of p")->required();
  add_common(analyze, an_c);

  auto* index = app.add_subcommand("index", "Cauchy index of a rational function");
  std::string ix_num, ix_den, ix_method = "euclidean";
  std::vector<std::string> ix_interval;
  bool ix_projective = false;
  Common ix_c;
  index->add_option("--num", ix_num, "numerator coefficients")->required();
  index->add_option("--den", ix_den, "denominator coefficients")->required();
  auto* ix_iopt =
      index->add_option("--interval", ix_interval, "open interval endpoints a b")
          ->expected(2);
  auto* ix_popt = index->add_flag("--projective", ix_projective,
                                  "include the contribution at infinity");
  ix_iopt->excludes(ix_popt);
  index->add_option("--method", ix_method, "line-index algorithm")
      ->check(CLI::IsMember({"euclidean", "per-pole"}));
  add_common(index, ix_c);

  auto* laguerre =
      app.add_subcommand("laguerre", "shifted derivative p' + sigma*p or its inverse");
  std::string lg_poly, lg_sigma;
  bool lg_invert = false;
  Common lg_c;
  laguerre->add_option("poly", lg_poly, "coefficients")->required();
  laguerre->add_option("--sigma", lg_sigma, "shift parameter (rational)")->required();
  laguerre->add_flag("--invert", lg_invert, "solve q' + sigma*q = poly for q");
  add_common(laguerre, lg_c);

  auto* sigma_min = app.add_subcommand(
      "sigma-min", "scan sigma -> Z_C(p_sigma) over discriminant cells");
  std::string sm_poly;
  Common sm_c;
  sigma_min->add_option("poly", sm_poly, "coefficients of p")->required();
  add_common(sigma_min, sm_c);

  auto* verify = app.add_subcommand("verify", "check one statement on one input");
  std::string vf_poly, vf_theorem, vf_sigma, vf_lambda;
  Common vf_c;
  verify->add_option("poly", vf_poly, "coefficients of p")->required();
  verify->add_option("--theorem", vf_theorem, "statement tag")
      ->required()
      ->check(CLI::IsMember({"hawaii", "t21", "t31", "t42", "t43", "sandwich",
                             "identity", "conjecture"}));
  verify->add_option("--sigma", vf_sigma, "shift parameter (rational)");
  verify->add_option("--lambda", vf_lambda, "evaluation point (rational)");
  add_common(verify, vf_c);

  auto* fuzz = app.add_subcommand("fuzz", "seeded batch checks on random instances");
  int fz_degree = 0, fz_count = 0, fz_threads = 1;
  std::uint64_t fz_seed = 0;
  std::string fz_suite = "all";
  Common fz_c;
  fuzz->add_option("--degree", fz_degree, "degree of every instance")->required();
  fuzz->add_option("--count", fz_count, "number of instances")->required();
  fuzz->add_option("--seed", fz_seed, "base seed");
  fuzz->add_option("--suite", fz_suite, "which checks to run")
      ->check(CLI::IsMember({"all", "indices", "identities", "theorems"}));
  fuzz->add_option("--threads", fz_threads, "worker threads");
  add_common(fuzz, fz_c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  Emit e;
  std::string command;
  Common common;
  auto started = std::chrono::steady_clock::now();
  try {
    if (analyze->parsed()) {
      command = "analyze";
      common = an_c;
      run_analyze(an_poly, e);
    } else if (index->parsed()) {
      command = "index";
      common = ix_c;
      run_index(ix_num, ix_den, ix_interval, ix_projective, ix_method, e);
    } else if (laguerre->parsed()) {
      command = "laguerre";
      common = lg_c;
      run_laguerre(lg_poly, lg_sigma, lg_invert, e);
    } else if (sigma_min->parsed()) {
      command = "sigma-min";
      common = sm_c;
      run_sigma_min(sm_poly, e);
    } else if (verify->parsed()) {
      command = "verify";
      common = vf_c;
      run_verify(vf_poly, vf_theorem, vf_sigma, vf_lambda, e);
    } else if (fuzz->parsed()) {
      command = "fuzz";
      common = fz_c;
      run_fuzz(fz_degree, fz_count, fz_seed, fz_suite, fz_threads, e);
    } else {
      err << "error: no subcommand\n";
      return 2;
    }
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::domain_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::logic_error& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();

  if (common.json) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = e.inputs;
    doc["result"] = e.result;
    doc["violations"] = e.violations;
    if (!common.no_timing) doc["elapsed_ms"] = elapsed;
    out << doc.dump(2) << "\n";
  } else {
    out << e.text.str();
    if (!e.violations.empty()) {
      out << "VIOLATIONS:\n";
      for (const auto& v : e.violations) out << "  " << v << "\n";
    }
    if (!common.no_timing) out << "elapsed: " << elapsed << " ms\n";
  }
  return e.violations.empty() ? 0 : 1;
}

}  // namespace logcrit
