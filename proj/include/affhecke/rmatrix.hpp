#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affhecke/error.hpp"
#include "affhecke/linalg.hpp"
#include "affhecke/partition.hpp"

namespace affhecke {

/// U_v(sl_N^) with u = v^2.
struct QAffineParams {
  int N = 2;
  Rational v = 2;

  QAffineParams() = default;
  QAffineParams(int n, Rational vv);
  Rational u() const { return v * v; }
};

/// Finite-dimensional module at a numeric spectral parameter. Index 0 of each
/// generator list is the affine node.
struct EvalModule {
  QAffineParams params;
  std::size_t dim = 0;
  std::vector<QMatrix> e, f, k, kinv;

  std::optional<std::string> relation_failure() const;
  void verify() const;
};

/// Vector representation at z: e_i = E_{i,i+1}, f_i = E_{i+1,i},
/// k_i = v^{E_ii - E_{i+1,i+1}}, e_0 = z E_{N,1}, f_0 = z^{-1} E_{1,N}.
EvalModule fundamental_eval_module(const QAffineParams& p, const Rational& z);

/// A ⊗ B with Δe = e⊗1 + k⊗e, Δf = f⊗k^{-1} + 1⊗f, Δk = k⊗k.
EvalModule tensor(const EvalModule& a, const EvalModule& b);

/// Restriction to an invariant subspace.
EvalModule restrict_module(const EvalModule& m, const std::vector<QVector>& basis);

/// prod over cells (N + content) / hook
std::size_t weyl_dimension(const Partition& lambda, int N);

/// V_lambda(z): the affine submodule generated by a highest weight vector of
/// weight lambda in the tensor product of vector representations at the
/// points z v^{2 s c}, c running over the contents of a standard tableau in
/// entry order. The first tableau (in standard_tableaux order) and sign s for
/// which the submodule has the Weyl dimension are used.
struct FusedModule {
  EvalModule module;
  int content_sign = 1;
  std::vector<int> contents;
  std::size_t highest = 0;  // basis index of the highest weight vector
};
FusedModule fused_module(const Partition& lambda, const QAffineParams& p, const Rational& z);

/// No unique intertwiner at this spectral ratio.
class DegenerateError : public DomainError {
 public:
  DegenerateError(const std::string& what, std::size_t dim) : DomainError(what), dim_(dim) {}
  std::size_t solution_dimension() const { return dim_; }

 private:
  std::size_t dim_;
};

/// The intertwiner V_lambda(x) ⊗ V_lambda(1) -> V_lambda(1) ⊗ V_lambda(x),
/// normalized to fix highest ⊗ highest.
QMatrix rcheck_solve(const Partition& lambda, const QAffineParams& p, const Rational& x);

/// R12(z2/z3) R23(z1/z3) R12(z1/z2) == R23(z1/z2) R12(z1/z3) R23(z2/z3).
bool yang_baxter_holds(const Partition& lambda, const QAffineParams& p, const Rational& z1, const Rational& z2,
                       const Rational& z3);

struct Singularity {
  Rational value;
  std::optional<Rational> u_exponent;  // k with value = u^k (k may be half-integral)
};

struct SingularityReport {
  Partition lambda;
  QAffineParams params;
  std::string normalization = "highest (x) highest fixed";
  int degree_bound = 0;
  std::size_t fit_points = 0;
  std::size_t held_out_points = 0;
  bool held_out_ok = false;
  std::vector<Rational> degenerate_samples;
  std::vector<Singularity> poles;  // poles of entries and of det
  std::vector<Singularity> zeros;  // zeros of det
  std::vector<std::string> unmatched;  // witnesses of singularities that are not powers of v
  bool contained = false;
  Matrix<RatFun> R;
  RatFun det;
};

/// Reconstructs the normalized intertwiner as a rational function of x from
/// exact samples and checks that its singular values lie in {u^{±e}} for e a
/// hook length of lambda.
SingularityReport singularity_scan(const Partition& lambda, const QAffineParams& p, unsigned workers = 1,
                                   std::size_t held_out = 5);

}  // namespace affhecke
