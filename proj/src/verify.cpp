#include "affhecke/verify.hpp"

#include <atomic>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "affhecke/error.hpp"
#include "affhecke/hecke.hpp"
#include "affhecke/rmatrix.hpp"

namespace affhecke {

namespace {

int bound(const SuiteOptions& opt, int fallback) { return opt.max_size < 0 ? fallback : opt.max_size; }

// Runs body(0..n-1) on up to `workers` threads. Exceptions are rethrown on the caller.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

std::string join(const std::vector<Multisegment>& ms) {
  std::string s;
  for (const auto& m : ms) s += (s.empty() ? "" : " * ") + m.to_string();
  return s;
}

bool hooks_hit(const Partition& lambda, const std::vector<int>& as) {
  return !hook_criterion(lambda, as).simple;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 1; k <= n; ++k)
    for (auto& p : Partition::all_of(k)) out.push_back(p);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"triple",     "kgate",     "th5",   "multi",
                                                 "bialgebra", "positivity", "corollary", "hooks"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt, const DualCanonical& dc) {
  if (name == "triple") return verify_triple(opt, dc);
  if (name == "kgate") return verify_kgate(opt, dc);
  if (name == "th5") return verify_flag_minors(opt, dc);
  if (name == "multi") return verify_multi(opt, dc);
  if (name == "bialgebra") return verify_bialgebra(opt, dc);
  if (name == "positivity") return verify_positivity(opt, dc);
  if (name == "corollary") return verify_corollary(opt);
  if (name == "hooks") return verify_hook_sets(opt);
  throw DomainError("unknown suite '" + name + "'");
}

std::vector<std::vector<Multisegment>> triple_products(int max_size) {
  std::vector<std::vector<Multisegment>> out;
  for (const auto& lambda : partitions_up_to(max_size))
    for (int a = 0; a <= 5; ++a)
      out.push_back({evaluation_multisegment(lambda, 0), evaluation_multisegment(lambda, a)});
  return out;
}

std::vector<std::vector<Multisegment>> flag_minor_products(int max_N) {
  std::vector<std::vector<Multisegment>> out;
  for (int N = 2; N <= max_N; ++N) {
    const auto sets = all_flag_minor_sets(N);
    for (std::size_t x = 0; x < sets.size(); ++x)
      for (std::size_t y = x; y < sets.size(); ++y)
        out.push_back({flag_minor_multisegment(sets[x]), flag_minor_multisegment(sets[y])});
  }
  return out;
}

std::vector<std::vector<Multisegment>> multi_products(int max_a) {
  std::vector<std::vector<Multisegment>> out;
  for (const Partition& lambda : {Partition({1}), Partition({2})})
    for (int a = 0; a <= max_a; ++a)
      for (int b = a; b <= max_a; ++b)
        for (int c = b; c <= max_a; ++c)
          out.push_back({evaluation_multisegment(lambda, a), evaluation_multisegment(lambda, b),
                         evaluation_multisegment(lambda, c)});
  return out;
}

SuiteResult verify_triple(const SuiteOptions& opt, const DualCanonical& dc) {
  const int n = bound(opt, 3);
  SuiteResult r;
  r.name = "triple";
  r.scope = "|lambda| <= " + std::to_string(n) + ", points (0,a), 0 <= a <= 5, u = " + to_string(opt.u);
  struct Case {
    Partition lambda;
    int a;
  };
  std::vector<Case> cases;
  for (const auto& lambda : partitions_up_to(n))
    for (int a = 0; a <= 5; ++a) cases.push_back({lambda, a});
  std::vector<std::string> verdicts(cases.size());
  parallel_for(cases.size(), opt.workers, [&](std::size_t k) {
    const auto& [lambda, a] = cases[k];
    const bool hook = hook_criterion(lambda, {0, a}).simple;
    const bool dual =
        dc.is_simple_product({evaluation_multisegment(lambda, 0), evaluation_multisegment(lambda, a)}).simple;
    const FiniteModule m = induce(evaluation_module(lambda, Rational(1), opt.u),
                                  evaluation_module(lambda, upower(opt.u, a), opt.u));
    const bool burnside = burnside_is_simple(m);
    const bool expected = !hook_exponent_set(lambda).contains(a);
    if (hook != dual || dual != burnside || burnside != expected) {
      std::ostringstream s;
      s << "lambda=" << lambda.to_string() << " a=" << a << ": hook=" << hook << " dual=" << dual
        << " burnside=" << burnside << " expected=" << expected;
      verdicts[k] = s.str();
    }
  });
  r.cases = cases.size();
  for (auto& v : verdicts)
    if (!v.empty()) r.failures.push_back(v);
  return r;
}

SuiteResult verify_kgate(const SuiteOptions& opt, const DualCanonical&) {
  const int D = bound(opt, 4);
  const int N = 4;
  SuiteResult r;
  r.name = "kgate";
  r.scope = "letters 1.." + std::to_string(N - 1) + ", degree <= " + std::to_string(D) + ", u = " + to_string(opt.u);
  std::vector<Weight> weights;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b)
      for (int c = 0; a + b + c <= D; ++c) {
        if (a + b + c == 0) continue;
        Weight w;
        if (a) w[1] = a;
        if (b) w[2] = b;
        if (c) w[3] = c;
        weights.push_back(w);
      }
  const Window win(N, D);
  std::mutex mu;
  parallel_for(weights.size(), opt.workers, [&](std::size_t k) {
    const Weight& nu = weights[k];
    const KMatrix K = canonical_K(win, nu);
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < K.size(); ++i) {
      const Multisegment& m = K.index[i];
      std::map<Multisegment, int> expected;
      for (std::size_t j = 0; j < K.size(); ++j) {
        const Laurent& x = K.entries[i][j];
        const Multisegment& n = K.index[j];
        if (i == j) {
          if (x != Laurent(1)) bad.push_back("K diagonal at " + m.to_string() + " is " + x.to_string());
        } else if (!x.is_zero()) {
          if (!zel_leq(m, n)) bad.push_back("K_{" + m.to_string() + "," + n.to_string() + "} nonzero off the order");
          if (!x.in_q_nat_q())
            bad.push_back("K_{" + m.to_string() + "," + n.to_string() + "} = " + x.to_string() + " not in qN[q]");
        }
        const Rational c = x.eval_q1();
        if (c != 0) expected[n] = static_cast<int>(c.get_num().get_si());
      }
      const auto factors = composition_factors(standard_module(m, opt.u));
      if (factors != expected) {
        std::string s = "M_" + m.to_string() + ": factors {";
        for (const auto& [n, c] : factors) s += " " + std::to_string(c) + "x" + n.to_string();
        s += " } vs K(1) {";
        for (const auto& [n, c] : expected) s += " " + std::to_string(c) + "x" + n.to_string();
        bad.push_back(s + " }");
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    r.cases += K.size();
    for (auto& b : bad) r.failures.push_back(weight_to_string(nu) + ": " + b);
  });
  return r;
}

SuiteResult verify_flag_minors(const SuiteOptions& opt, const DualCanonical& dc) {
  const int maxN = bound(opt, 4);
  SuiteResult r;
  r.name = "th5";
  r.scope = "pairs of flag minors, N <= " + std::to_string(maxN);
  for (int N = 2; N <= maxN; ++N) {
    const auto sets = all_flag_minor_sets(N);
    for (std::size_t x = 0; x < sets.size(); ++x)
      for (std::size_t y = x; y < sets.size(); ++y) {
        const bool ws = weakly_separated(sets[x], sets[y]);
        const bool simple =
            dc.is_simple_product({flag_minor_multisegment(sets[x]), flag_minor_multisegment(sets[y])}).simple;
        ++r.cases;
        if (ws != simple)
          r.failures.push_back(sets[x].to_string() + " " + sets[y].to_string() + ": weakly separated=" +
                               std::to_string(ws) + " simple product=" + std::to_string(simple));
      }
  }
  return r;
}

SuiteResult verify_multi(const SuiteOptions& opt, const DualCanonical& dc) {
  const int A = bound(opt, 4);
  SuiteResult r;
  r.name = "multi";
  r.scope = "lambda in {(1),(2)}, three factors, 0 <= a1 <= a2 <= a3 <= " + std::to_string(A);
  for (const Partition& lambda : {Partition({1}), Partition({2})})
    for (int a = 0; a <= A; ++a)
      for (int b = a; b <= A; ++b)
        for (int c = b; c <= A; ++c) {
          const bool expected = !hooks_hit(lambda, {a, b, c});
          const bool simple = dc.is_simple_product({evaluation_multisegment(lambda, a),
                                                    evaluation_multisegment(lambda, b),
                                                    evaluation_multisegment(lambda, c)})
                                  .simple;
          ++r.cases;
          if (expected != simple)
            r.failures.push_back("lambda=" + lambda.to_string() + " a=(" + std::to_string(a) + "," +
                                 std::to_string(b) + "," + std::to_string(c) + "): hook=" +
                                 std::to_string(expected) + " simple product=" + std::to_string(simple));
        }
  return r;
}

SuiteResult verify_bialgebra(const SuiteOptions& opt, const DualCanonical& dc) {
  const int maxN = bound(opt, 5);
  SuiteResult r;
  r.name = "bialgebra";
  r.scope = "segment generators, N <= " + std::to_string(maxN);
  for (const auto& e : dc.bialgebra_check(maxN)) {
    ++r.cases;
    if (!e.pass)
      r.failures.push_back(e.segment.to_string() + ": " + e.coproduct_side + " != " + e.delta_side);
  }
  return r;
}

SuiteResult verify_positivity(const SuiteOptions& opt, const DualCanonical& dc) {
  SuiteResult r;
  r.name = "positivity";
  const int n = opt.max_size < 0 ? 3 : opt.max_size;
  r.scope = "product expansions of the triple, flag-minor and multi grids";
  std::vector<std::vector<Multisegment>> inputs = triple_products(n);
  for (auto& p : flag_minor_products(4)) inputs.push_back(std::move(p));
  for (auto& p : multi_products(4)) inputs.push_back(std::move(p));
  std::size_t coefficients = 0;
  for (const auto& ms : inputs) {
    ++r.cases;
    try {
      for (const auto& [p, c] : dc.product_expand(ms)) {
        ++coefficients;
        if (c < 0 || c.get_den() != 1)
          r.failures.push_back(join(ms) + ": coefficient " + to_string(c) + " on " + p.to_string());
      }
    } catch (const InternalError& e) {
      r.failures.push_back(join(ms) + ": " + e.what());
    }
  }
  r.notes.push_back(std::to_string(coefficients) + " coefficients checked");
  return r;
}

SuiteResult verify_corollary(const SuiteOptions& opt) {
  const int n = bound(opt, 2);
  SuiteResult r;
  r.name = "corollary";
  r.scope = "singularity containment, v = " + to_string(opt.v);
  const std::vector<std::pair<Partition, int>> grid = {
      {Partition({1}), 2}, {Partition({1}), 3}, {Partition({2}), 2}, {Partition({1, 1}), 2}, {Partition({1, 1}), 3}};
  for (const auto& [lambda, N] : grid) {
    if (lambda.size() > n) continue;
    const SingularityReport rep = singularity_scan(lambda, QAffineParams(N, opt.v), opt.workers, 5);
    ++r.cases;
    std::string tag = "lambda=" + lambda.to_string() + " N=" + std::to_string(N);
    if (!rep.held_out_ok || rep.held_out_points < 5) r.failures.push_back(tag + ": held-out re-evaluation failed");
    if (!rep.contained) {
      std::string s = tag + ": not contained";
      for (const auto& w : rep.unmatched) s += "; " + w;
      r.failures.push_back(s);
    }
    std::string poles, zeros;
    for (const auto& p : rep.poles) poles += " " + to_string(p.value);
    for (const auto& z : rep.zeros) zeros += " " + to_string(z.value);
    r.notes.push_back(tag + " poles:" + poles + " zeros:" + zeros);
  }
  return r;
}

SuiteResult verify_hook_sets(const SuiteOptions& opt) {
  const int n = bound(opt, 12);
  SuiteResult r;
  r.name = "hooks";
  r.scope = "literal vs diagram hook sets, |lambda| <= " + std::to_string(n);
  for (int k = 0; k <= n; ++k)
    for (const auto& lambda : Partition::all_of(k)) {
      ++r.cases;
      const auto lit = hook_exponent_set(lambda, HookMode::literal).symmetric();
      const auto pos = hook_exponent_set(lambda, HookMode::positive).symmetric();
      if (lit == pos) continue;
      // Only the literal side can have extras: diagram cells give the same values in both modes.
      std::string extra, missing;
      for (int e : lit)
        if (e > 0 && !pos.count(e)) extra += " " + std::to_string(e);
      for (int e : pos)
        if (e > 0 && !lit.count(e)) missing += " " + std::to_string(e);
      std::string s = "counterexample lambda=(" + lambda.to_string() + "): literal-only +-{" + extra + " }";
      if (!missing.empty()) s += ", diagram-only +-{" + missing + " }";
      r.failures.push_back(s);
    }
  if (!r.failures.empty())
    r.notes.push_back(std::to_string(r.failures.size()) + " of " + std::to_string(r.cases) +
                      " partitions have differing sets; smallest: " + r.failures.front());
  return r;
}

}  // namespace affhecke
