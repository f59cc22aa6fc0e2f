#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affhecke/linalg.hpp"
#include "affhecke/multisegment.hpp"

namespace affhecke {

/// Joint eigenvalues (y_1, ..., y_n) of a weight vector.
using YWeight = std::vector<Rational>;
/// Formal character: multiplicity of each generalized weight space.
using Character = std::map<YWeight, int>;

/// Rejects u in {0, 1, -1}, the only rational roots of unity.
void check_parameter(const Rational& u);

/// Finite-dimensional module over the affine Hecke algebra with generators
/// T_1..T_{n-1}, y_1..y_n and relations
///   (T_i - u)(T_i + 1) = 0,  braid relations,  y_j y_k = y_k y_j,
///   T_i y_j = y_j T_i (j != i, i+1),  T_i y_i T_i = u y_{i+1}.
/// Indices are 0-based in the vectors: T[i] is T_{i+1}.
struct FiniteModule {
  int n = 0;
  Rational u = 3;
  std::size_t dim = 0;
  std::vector<QMatrix> T;
  std::vector<QMatrix> y;  // empty for a module over the finite Hecke algebra only
  /// Formal character when known (filled for all constructed modules).
  Character character;

  /// First failing relation, or nullopt.
  std::optional<std::string> relation_failure() const;
  /// Throws InternalError naming the failing relation.
  void verify() const;
};

/// Young seminormal form of S_lambda over the finite Hecke algebra, on the
/// standard tableaux of lambda.
FiniteModule seminormal_rep(const Partition& lambda, const Rational& u);

/// S_lambda(z): y_1 = z, y_{i+1} = u^{-1} T_i y_i T_i.
FiniteModule evaluation_module(const Partition& lambda, const Rational& z, const Rational& u);

/// S_(j-i+1)(u^i), the one-dimensional module with y-weight (u^i, ..., u^j).
FiniteModule segment_module(const Segment& s, const Rational& u);

/// M1 ⊙ M2, on the basis T_x ⊗ v ⊗ w over minimal coset representatives x.
FiniteModule induce(const FiniteModule& a, const FiniteModule& b);
FiniteModule induce_all(const std::vector<FiniteModule>& factors);

/// u^{a} for an integer a.
Rational upower(const Rational& u, int a);
/// Exponent e with u^e == x, or nullopt.
std::optional<int> ulog(const Rational& u, const Rational& x);

/// Cyclic submodule generated by v (basis in semi-echelon form).
std::vector<QVector> spin(const FiniteModule& m, const QVector& v);
/// Same for the transposed action (submodules of the dual).
std::vector<QVector> spin_transposed(const FiniteModule& m, const QVector& v);

/// Dimension of the span of all products of generators (the image of the algebra).
std::size_t burnside_span_dimension(const FiniteModule& m);

enum class SimplicityMethod { burnside, norton };

/// Simplicity of M. Small modules use the full Burnside span; larger ones use
/// Norton's test on a one-dimensional joint eigenspace of the y's.
bool burnside_is_simple(const FiniteModule& m, SimplicityMethod* used = nullptr);

/// Dimension up to which burnside_is_simple computes the full span.
constexpr std::size_t kBurnsideSpanLimit = 16;

/// Restriction to an invariant subspace and action on the quotient.
FiniteModule submodule(const FiniteModule& m, const std::vector<QVector>& basis);
FiniteModule quotient(const FiniteModule& m, const std::vector<QVector>& basis);

/// Generalized weight multiplicities, computed from the characteristic
/// polynomial of a generic combination of the y's; the candidates must
/// contain every weight.
Character character_of(const FiniteModule& m, const std::vector<YWeight>& candidates);

/// The simple module L_m: image of the intertwiner from the product of its
/// segments in decreasing order to the product in increasing order.
FiniteModule simple_module(const Multisegment& m, const Rational& u);

/// Standard module M_m, the product of the segment modules of m.
FiniteModule standard_module(const Multisegment& m, const Rational& u);

/// Composition factors, identified by character against simple_module.
std::map<Multisegment, int> composition_factors(const FiniteModule& m, std::size_t max_dim = 128);

/// Multisegment of an exponent word's support: the multiset of exponents.
std::map<int, int> exponent_content(const Character& c, const Rational& u);

}  // namespace affhecke
