#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/uqn.hpp"

namespace affhecke {

/// Polynomial in the commuting segment variables t_{j+1,i}; the monomial
/// prod t_{j+1,i}^{m_ij} is keyed by the multisegment m.
using PolyA = std::map<Multisegment, Rational>;
/// Coefficients on the dual canonical basis {G*(p)} at q = 1.
using DualExpansion = std::map<Multisegment, Rational>;

PolyA poly_mul(const PolyA& a, const PolyA& b);
PolyA poly_add(const PolyA& a, const PolyA& b, const Rational& scale = 1);
std::string poly_to_string(const PolyA& p);
std::string expansion_to_string(const DualExpansion& e);

/// t_m, the image of the standard module M_m.
PolyA phi_standard(const Multisegment& m);

struct SimpleVerdict {
  bool simple = false;
  DualExpansion expansion;
};

struct BialgebraEntry {
  Segment segment;
  bool pass = false;
  std::string coproduct_side;  // (Phi x Phi)(c[L]) after the factor swap
  std::string delta_side;      // delta(Phi[L])
};

/// Tensor in R x R: pairs of monomials with coefficients.
using Tensor = std::map<std::pair<Multisegment, Multisegment>, Rational>;
/// Algebra map with t_{j+1,i} -> sum_{i<=k<=j+1} t_{j+1,k} x t_{k,i}, where t_{a,a} = 1.
Tensor delta(const PolyA& p);

/// Dual canonical basis at q = 1 with K-matrices computed on demand.
/// K-matrices depend on a weight only up to translation; the cache is keyed by
/// the translate starting at letter 1 and is safe to share between threads.
class DualCanonical {
 public:
  explicit DualCanonical(int max_degree = 8);

  int max_degree() const { return max_degree_; }

  /// K-matrix of the translate of the weight starting at 1.
  std::shared_ptr<const KMatrix> k_matrix(const Weight& nu) const;

  /// G*(m) at q = 1 in the t-monomial basis.
  PolyA dual_poly(const Multisegment& m) const;
  /// {n : K_mn(1)}, the composition multiplicities of M_m.
  DualExpansion expand_standard(const Multisegment& m) const;
  /// prod G*(m_k) re-expanded on the dual canonical basis.
  DualExpansion product_expand(const std::vector<Multisegment>& ms) const;
  SimpleVerdict is_simple_product(const std::vector<Multisegment>& ms) const;

  /// Compares (Phi x Phi)(c[L_[i,j]]) with delta(Phi[L_[i,j]]) for 1 <= i <= j <= N-1.
  std::vector<BialgebraEntry> bialgebra_check(int N) const;

 private:
  struct Entry {
    std::shared_ptr<const KMatrix> K;
    std::vector<std::vector<Rational>> dual_q1;  // K^{-1} at q = 1
  };
  const Entry& entry(const Weight& normalized) const;

  int max_degree_;
  mutable std::mutex mu_;
  mutable std::map<Weight, std::unique_ptr<Entry>> cache_;
};

}  // namespace affhecke
