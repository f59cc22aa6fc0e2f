#pragma once

#include <string>
#include <vector>

#include "affhecke/grothendieck.hpp"

namespace affhecke {

/// Outcome of one batch verification over a finite grid of cases.
struct SuiteResult {
  std::string name;
  std::string scope;  // human-readable description of the grid
  std::size_t cases = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool pass() const { return cases > 0 && failures.empty(); }
};

struct SuiteOptions {
  int max_size = -1;  // suite-specific bound; -1 selects the default
  Rational u = 3;
  Rational v = 2;
  unsigned workers = 1;
};

/// Names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt, const DualCanonical& dc);

// Individual suites. Defaults for max_size are given in brackets.

/// hook_criterion, is_simple_product and burnside_is_simple agree on the
/// products S_lambda(1) ⊙ S_lambda(u^a), 0 <= a <= 5, |lambda| <= max_size [3].
SuiteResult verify_triple(const SuiteOptions& opt, const DualCanonical& dc);
/// K(1) equals the composition multiplicities of standard modules, and K is
/// unitriangular for ⊴ with off-diagonal entries in qN[q]; letters 1..3,
/// degree <= max_size [4].
SuiteResult verify_kgate(const SuiteOptions& opt, const DualCanonical& dc);
/// Products of two flag minors are dual canonical iff their index sets are
/// weakly separated, N <= max_size [4].
SuiteResult verify_flag_minors(const SuiteOptions& opt, const DualCanonical& dc);
/// Three evaluation factors for lambda in {(1),(2)}, exponents in [0, max_size] [4].
SuiteResult verify_multi(const SuiteOptions& opt, const DualCanonical& dc);
/// Coproduct compatibility on segment generators, N <= max_size [5].
SuiteResult verify_bialgebra(const SuiteOptions& opt, const DualCanonical& dc);
/// Every product expansion from the triple, flag-minor and multi grids has
/// nonnegative integer coefficients.
SuiteResult verify_positivity(const SuiteOptions& opt, const DualCanonical& dc);
/// Singularities of the normalized intertwiner lie in {u^{±e}} for the
/// desk-scale (lambda, N) list, |lambda| <= max_size [2].
SuiteResult verify_corollary(const SuiteOptions& opt);
/// The literal grid formula and the diagram hooks give the same symmetric
/// exponent set, |lambda| <= max_size [12]. Counterexamples are listed in notes.
SuiteResult verify_hook_sets(const SuiteOptions& opt);

/// Input lists used by the product-based suites.
std::vector<std::vector<Multisegment>> triple_products(int max_size);
std::vector<std::vector<Multisegment>> flag_minor_products(int max_N);
std::vector<std::vector<Multisegment>> multi_products(int max_a);

}  // namespace affhecke
