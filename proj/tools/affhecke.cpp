// affhecke: command-line front end for simplicity tests of evaluation-module
// products, dual canonical expansions and intertwiner singularities.
//
// Exit status: 0 on success (a mathematical "false" is still success),
// 1 on a domain error, 2 on a usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affhecke/error.hpp"
#include "affhecke/grothendieck.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/multisegment.hpp"
#include "affhecke/partition.hpp"
#include "affhecke/report.hpp"
#include "affhecke/rmatrix.hpp"
#include "affhecke/uqn.hpp"
#include "affhecke/verify.hpp"

using namespace affhecke;
using report::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw UsageError("bad rational '" + text + "'");
  if (r.get_den() == 0) throw UsageError("bad rational '" + text + "'");
  r.canonicalize();
  return r;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

// "1:2,2:1" -> {1:2, 2:1}
Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad weight '" + text + "', expected letter:mult,...");
    try {
      const int letter = std::stoi(item.substr(0, colon));
      const int mult = std::stoi(item.substr(colon + 1));
      if (mult < 0) throw std::invalid_argument(item);
      if (mult > 0) w[letter] += mult;
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + text + "'");
    }
  }
  if (w.empty()) throw UsageError("empty weight");
  return w;
}

ColumnSet parse_columns(const std::string& text, int N) {
  ColumnSet J;
  J.rank = N;
  for (int x : parse_ints(text)) {
    if (x < 1 || x > N) throw DomainError("column " + std::to_string(x) + " outside 1.." + std::to_string(N));
    J.elements.insert(x);
  }
  return J;
}

unsigned workers_from_env() {
  const char* s = std::getenv("HECKE_WORKERS");
  if (!s) return 1;
  const int n = std::atoi(s);
  return n > 0 ? static_cast<unsigned>(n) : 1;
}

HookMode parse_mode(const std::string& s) {
  if (s == "positive") return HookMode::positive;
  if (s == "literal") return HookMode::literal;
  throw UsageError("unknown hook mode '" + s + "'");
}

Json suite_json(const SuiteResult& r) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) failures.push_back(r.failures[i]);
  return {{"suite", r.name},       {"scope", r.scope},       {"cases", r.cases},
          {"failed", r.failures.size()}, {"failures", failures}, {"notes", r.notes},
          {"pass", r.pass()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicity of products of evaluation modules over affine Hecke algebras,\n"
               "dual canonical bases of U_q(n^-) and singularities of trigonometric R-matrices."};
  app.require_subcommand(1, 1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  // hooks
  std::string hooks_lambda, hooks_mode = "positive";
  auto* hooks = app.add_subcommand(
      "hooks", "Hook lengths E of a partition and the exponent set Z = {±e} of the singular spectral ratios u^{±e}.");
  hooks->add_option("lambda", hooks_lambda, "Partition, e.g. 2,1")->required();
  hooks->add_option("--mode", hooks_mode, "positive (diagram hooks) or literal (full r x k grid formula)");
  add_format(hooks);

  // irreducible
  std::string irr_lambda, irr_points, irr_u = "3", irr_mode = "positive";
  bool irr_oracle = false, irr_factors = false;
  auto* irr = app.add_subcommand(
      "irreducible",
      "Simplicity of S_lambda(u^a1) ⊙ ... ⊙ S_lambda(u^am): simple iff no |a_i - a_j| is a hook length of lambda.\n"
      "With --oracle the answer is also computed from explicit Hecke-algebra matrices (Burnside) and from the\n"
      "dual canonical basis at q = 1.");
  irr->add_option("--lambda", irr_lambda, "Partition")->required();
  irr->add_option("--points", irr_points, "Exponents a_1,...,a_m")->required();
  irr->add_option("--u", irr_u, "Hecke parameter (rational, not 0 or ±1)");
  irr->add_option("--mode", irr_mode, "Hook set: positive or literal");
  irr->add_flag("--oracle", irr_oracle, "Cross-check with the Burnside test and the dual canonical product");
  irr->add_flag("--factors", irr_factors, "Also list composition factors of the induced module");
  add_format(irr);

  // canonical-basis
  std::string cb_weight, cb_multiseg;
  int cb_window = 4, cb_max_degree = 8;
  auto* cb = app.add_subcommand(
      "canonical-basis",
      "Lusztig canonical basis of U_q(n^-) on the PBW basis: G(n) = sum_{m ⊴ n} K_mn(q) E_m, with K_mn in qN[q].\n"
      "With --multisegment, the dual canonical element G*(m) at q = 1 and the standard-module expansion\n"
      "[M_m] = sum K_mn(1) [L_n].");
  cb->add_option("--weight", cb_weight, "Weight as letter:mult,..., e.g. 1:1,2:1");
  cb->add_option("--multisegment", cb_multiseg, "Multisegment, e.g. [1,1]+[2,2]");
  cb->add_option("--window", cb_window, "Rank N of the window (letters 1..N-1)");
  cb->add_option("--max-size", cb_max_degree, "Largest weight degree allowed");
  add_format(cb);

  // dual-product
  std::vector<std::string> dp_inputs;
  std::string dp_lambda, dp_points;
  auto* dp = app.add_subcommand(
      "dual-product",
      "Product of dual canonical elements G*(m_1)...G*(m_k) at q = 1 re-expanded on the dual canonical basis;\n"
      "[L_m1 ⊙ ... ⊙ L_mk] is simple iff the expansion is a single basis element.");
  // Bracketed operands are taken raw: CLI11 would read "[0,0]" as a list.
  dp->allow_extras();
  dp->footer("Operands: multisegments such as [0,0] [1,1] or [0,1]+[2,2].");
  dp->add_option("--lambda", dp_lambda, "Use evaluation factors G*(lambda, a) instead");
  dp->add_option("--points", dp_points, "Exponents a for --lambda");
  add_format(dp);

  // qcommute
  std::string qc_a, qc_b;
  int qc_window = 4;
  auto* qc = app.add_subcommand(
      "qcommute",
      "Quasi-commutation of two quantum flag minors: their product is dual canonical iff the row sets are\n"
      "weakly separated.");
  qc->add_option("A", qc_a, "Row set, e.g. 1,3")->required();
  qc->add_option("B", qc_b, "Row set, e.g. 2,4")->required();
  qc->add_option("--window", qc_window, "Ambient rank N");
  add_format(qc);

  // rmatrix-poles
  std::string rp_lambda, rp_v = "2";
  int rp_window = 2, rp_held_out = 5;
  auto* rp = app.add_subcommand(
      "rmatrix-poles",
      "Singularities of the normalized trigonometric R-matrix of V_lambda(z) for U_v(sl_N^), reconstructed\n"
      "exactly from samples; checks they lie in {u^{±e} : e a hook length of lambda}, u = v^2.\n"
      "Worker threads: HECKE_WORKERS.");
  rp->add_option("--lambda", rp_lambda, "Partition")->required();
  rp->add_option("--window", rp_window, "N of sl_N");
  rp->add_option("--v", rp_v, "Quantum parameter v (rational)");
  rp->add_option("--held-out", rp_held_out, "Held-out sample points");
  add_format(rp);

  // verify
  std::string vf_suite = "all", vf_u = "3";
  int vf_max = -1;
  auto* vf = app.add_subcommand(
      "verify",
      "Batch verification. Suites:\n"
      "  triple      hook criterion = dual canonical product = Burnside test on S_lambda(1) ⊙ S_lambda(u^a)\n"
      "  kgate       K(1) = composition multiplicities of standard modules; K unitriangular in qN[q]\n"
      "  th5         flag-minor products are dual canonical iff the row sets are weakly separated\n"
      "  multi       three-factor evaluation products follow the pairwise hook criterion\n"
      "  bialgebra   coproduct of [L_[i,j]] matches the comultiplication of the coordinate ring\n"
      "  positivity  product expansions have nonnegative integer coefficients\n"
      "  corollary   R-matrix singularities lie in {u^{±e}}\n"
      "  hooks       literal grid formula and diagram hooks give the same {±e}\n"
      "Worker threads: HECKE_WORKERS.");
  vf->add_option("--suite", vf_suite, "Suite name or 'all'");
  vf->add_option("--max-size", vf_max, "Suite size bound (suite-specific default)");
  vf->add_option("--u", vf_u, "Hecke parameter");
  add_format(vf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const report::Format fmt = report::parse_format(format);
    Json out;

    if (*hooks) {
      const Partition lambda = Partition::parse(hooks_lambda);
      const auto set = hook_exponent_set(lambda, parse_mode(hooks_mode));
      std::vector<int> E(set.exponents.rbegin(), set.exponents.rend());
      const auto z = set.symmetric();
      out = {{"lambda", lambda.to_string()},
             {"mode", hooks_mode},
             {"E", E},
             {"Z_exponents", std::vector<int>(z.begin(), z.end())},
             {"hook_multiset", hook_multiset(lambda)}};
    } else if (*irr) {
      const Partition lambda = Partition::parse(irr_lambda);
      const std::vector<int> points = parse_ints(irr_points);
      const Rational u = parse_rational(irr_u);
      check_parameter(u);
      const auto verdict = hook_criterion(lambda, points, parse_mode(irr_mode));
      out = report::hook_verdict(lambda, points, verdict);
      out["u"] = report::rational(u);
      if (irr_oracle || irr_factors) {
        std::vector<FiniteModule> factors;
        for (int a : points) factors.push_back(evaluation_module(lambda, upower(u, a), u));
        const FiniteModule m = induce_all(factors);
        out["dim"] = m.dim;
        if (irr_oracle) {
          SimplicityMethod how{};
          out["burnside_simple"] = burnside_is_simple(m, &how);
          out["burnside_method"] = how == SimplicityMethod::burnside ? "span" : "norton";
          DualCanonical dc;
          std::vector<Multisegment> ms;
          for (int a : points) ms.push_back(evaluation_multisegment(lambda, a));
          const auto sv = dc.is_simple_product(ms);
          out["dual_simple"] = sv.simple;
          out["dual_expansion"] = report::expansion(sv.expansion);
        }
        if (irr_factors) {
          Json fs = Json::array();
          for (const auto& [n, c] : composition_factors(m))
            fs.push_back({{"multisegment", report::multisegment(n)}, {"text", n.to_string()}, {"mult", c}});
          out["factors"] = fs;
        }
      }
    } else if (*cb) {
      if (cb_weight.empty() == cb_multiseg.empty()) throw UsageError("give exactly one of --weight, --multisegment");
      if (!cb_weight.empty()) {
        const Weight nu = parse_weight(cb_weight);
        const Window win(cb_window, cb_max_degree);
        if (nu.begin()->first < 1 || nu.rbegin()->first > cb_window - 1)
          throw DomainError("weight " + weight_to_string(nu) + " outside the window");
        if (weight_degree(nu) > cb_max_degree) throw ResourceError("weight degree exceeds --max-size");
        out = report::kmatrix(canonical_K(win, nu));
      } else {
        const Multisegment m = Multisegment::parse(cb_multiseg);
        DualCanonical dc(cb_max_degree);
        Json poly = Json::array();
        for (const auto& [n, c] : dc.dual_poly(m))
          poly.push_back({{"monomial", n.to_string()}, {"coeff", report::rational(c)}});
        out = {{"multisegment", report::multisegment(m)},
               {"text", m.to_string()},
               {"dual_poly", poly},
               {"standard_expansion", report::expansion(dc.expand_standard(m))}};
      }
    } else if (*dp) {
      dp_inputs = dp->remaining();
      for (const auto& s : dp_inputs)
        if (s.rfind("--", 0) == 0) throw UsageError("unknown option " + s);
      std::vector<Multisegment> ms;
      if (!dp_lambda.empty()) {
        if (!dp_inputs.empty()) throw UsageError("give either multisegments or --lambda/--points");
        const Partition lambda = Partition::parse(dp_lambda);
        for (int a : parse_ints(dp_points)) ms.push_back(evaluation_multisegment(lambda, a));
      } else {
        for (const auto& s : dp_inputs) ms.push_back(Multisegment::parse(s));
      }
      if (ms.empty()) throw UsageError("no factors given");
      DualCanonical dc;
      const auto sv = dc.is_simple_product(ms);
      Json inputs = Json::array();
      for (const auto& m : ms) inputs.push_back(m.to_string());
      out = {{"inputs", inputs}, {"simple", sv.simple}, {"expansion", report::expansion(sv.expansion)}};
    } else if (*qc) {
      const ColumnSet A = parse_columns(qc_a, qc_window), B = parse_columns(qc_b, qc_window);
      DualCanonical dc;
      const Multisegment ma = flag_minor_multisegment(A), mb = flag_minor_multisegment(B);
      const auto sv = dc.is_simple_product({ma, mb});
      const bool ws = weakly_separated(A, B);
      out = {{"A", A.to_string()},
             {"B", B.to_string()},
             {"N", qc_window},
             {"multisegments", {ma.to_string(), mb.to_string()}},
             {"weakly_separated", ws},
             {"simple_product", sv.simple},
             {"agree", ws == sv.simple},
             {"expansion", report::expansion(sv.expansion)}};
    } else if (*rp) {
      const Partition lambda = Partition::parse(rp_lambda);
      if (rp_held_out < 1) throw UsageError("--held-out must be positive");
      const auto rep = singularity_scan(lambda, QAffineParams(rp_window, parse_rational(rp_v)), workers_from_env(),
                                        static_cast<std::size_t>(rp_held_out));
      out = report::singularities(rep);
    } else if (*vf) {
      SuiteOptions opt;
      opt.max_size = vf_max;
      opt.u = parse_rational(vf_u);
      check_parameter(opt.u);
      opt.workers = workers_from_env();
      DualCanonical dc;
      if (vf_suite == "all") {
        bool all = true;
        for (const auto& name : suite_names()) {
          const auto r = run_suite(name, opt, dc);
          out[name] = suite_json(r);
          all = all && r.pass();
        }
        out["pass"] = all;
      } else {
        out = suite_json(run_suite(vf_suite, opt, dc));
      }
    }
    std::cout << report::emit(out, fmt);
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
