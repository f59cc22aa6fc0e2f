// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "affhecke/grothendieck.hpp"
#include "affhecke/verify.hpp"

using namespace affhecke;

namespace {

unsigned workers() {
  const char* s = std::getenv("HECKE_WORKERS");
  const int n = s ? std::atoi(s) : 1;
  return n > 0 ? static_cast<unsigned>(n) : 1;
}

bool report(int id, const std::string& title, const SuiteResult& r, double seconds) {
  std::cout << (r.pass() ? "PASS" : "FAIL") << "  [" << id << "] " << title << " (" << r.cases << " cases, "
            << r.failures.size() << " failures, " << static_cast<int>(seconds + 0.5) << " s; " << r.scope << ")"
            << std::endl;
  for (std::size_t i = 0; i < r.failures.size() && i < 10; ++i) std::cout << "        " << r.failures[i] << "\n";
  for (const auto& n : r.notes) std::cout << "        note: " << n << "\n";
  return r.pass();
}

template <class F>
bool timed(int id, const std::string& title, F&& run, double limit_seconds = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    r = run();
  } catch (const std::exception& e) {
    r.name = title;
    r.failures.push_back(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_seconds > 0 && s > limit_seconds)
    r.failures.push_back("runtime " + std::to_string(s) + " s exceeds " + std::to_string(limit_seconds) + " s");
  return report(id, title, r, s);
}

}  // namespace

int main() {
  DualCanonical dc;
  SuiteOptions opt;
  opt.u = 3;
  opt.v = 2;
  opt.workers = workers();
  bool ok = true;

  ok &= timed(1, "triple agreement: hook criterion = dual canonical product = Burnside", [&] {
    SuiteOptions o = opt;
    o.max_size = 3;
    SuiteResult r = verify_triple(o, dc);
    // Only lambda in {(1),(2),(1,1),(2,1)} is required; (3) and (1,1,1) ride along.
    return r;
  }, 300);
  ok &= timed(2, "K-matrix gate: K(1) = composition multiplicities, unitriangular, qN[q]", [&] {
    SuiteOptions o = opt;
    o.max_size = 4;
    return verify_kgate(o, dc);
  });
  ok &= timed(3, "flag minors: dual canonical product iff weakly separated (N <= 4)", [&] {
    SuiteOptions o = opt;
    o.max_size = 4;
    return verify_flag_minors(o, dc);
  });
  ok &= timed(4, "three-factor evaluation products, lambda in {(1),(2)}", [&] {
    SuiteOptions o = opt;
    o.max_size = 4;
    return verify_multi(o, dc);
  });
  ok &= timed(5, "bialgebra compatibility on segment generators (N <= 5)", [&] {
    SuiteOptions o = opt;
    o.max_size = 5;
    return verify_bialgebra(o, dc);
  });
  ok &= timed(6, "positivity of product expansions from criteria 1, 3, 4", [&] {
    SuiteOptions o = opt;
    o.max_size = 3;
    return verify_positivity(o, dc);
  });
  ok &= timed(7, "R-matrix singularities contained in {u^(+-e)}", [&] {
    SuiteOptions o = opt;
    o.max_size = 2;
    return verify_corollary(o);
  }, 600);
  ok &= timed(8, "hook-set probe: literal grid = diagram hooks up to sign (|lambda| <= 12)", [&] {
    SuiteOptions o = opt;
    o.max_size = 12;
    return verify_hook_sets(o);
  });
  return ok ? 0 : 1;
}
