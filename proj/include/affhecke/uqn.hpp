#pragma once

#include <map>
#include <vector>

#include "affhecke/linalg.hpp"
#include "affhecke/multisegment.hpp"

namespace affhecke {

/// Finite window of U_q(n^-): Chevalley letters 1..N-1, weights of degree <= max_degree.
struct Window {
  int N = 2;
  int max_degree = 4;

  Window() = default;
  Window(int n, int d);
  bool contains(const Multisegment& m) const;
};

/// Weight = dimension vector (letter -> multiplicity).
using Weight = std::map<int, int>;
using Word = std::vector<int>;

int weight_degree(const Weight& w);
std::string weight_to_string(const Weight& w);

/// Element of the free algebra on the Chevalley generators, stored as
/// (sum over words of Laurent coefficients) / denominator.
class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement word(const Word& w, const Laurent& c = Laurent(1));

  const std::map<Word, Laurent>& terms() const { return terms_; }
  const Laurent& denominator() const { return den_; }
  RatFun coeff(const Word& w) const;
  bool is_zero() const { return terms_.empty(); }

  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);  // concatenation
  FreeElement scaled(const Laurent& c) const;
  FreeElement divided(const Laurent& d) const;
  /// Equality as elements of Q(q)<letters> (denominators cross-multiplied).
  bool equals(const FreeElement& o) const;

 private:
  std::map<Word, Laurent> terms_;
  Laurent den_ = Laurent(1);
};

/// Coefficientwise q -> q^-1 on words (fixes every word).
FreeElement bar_element(const FreeElement& x);

/// Quantum Serre relators of degree 3 (adjacent letters) and 2 (distant letters) for letters 1..N-1.
std::vector<FreeElement> serre_relators(int N);

/// All words of a weight, in lexicographic order.
std::vector<Word> words_of_weight(const Weight& w);

/// Root vector of the segment: E_[i,i] = letter i,
/// E_[i,j] = E_[j,j] E_[i,j-1] - q E_[i,j-1] E_[j,j].
FreeElement root_vector(const Segment& s);

/// PBW monomial: root vectors in segment_less order with divided powers.
FreeElement pbw_expand(const Multisegment& m, const Window& w);

/// A monomial basis of U_q(n^-)_nu: words complementary to the Serre-ideal
/// weight subspace spanned by x*s*y.
struct WeightBasis {
  Weight weight;
  std::vector<Word> words;        // all words of the weight
  std::vector<Word> basis_words;  // complement basis
  std::size_t ideal_rank = 0;
  std::size_t dimension() const { return basis_words.size(); }
};
WeightBasis weight_basis(const Window& w, const Weight& nu);

/// Coordinates on U_q(n^-)_nu through the quantum shuffle map: the word w
/// goes to the shuffle product of its letters, whose kernel on the free
/// algebra is the Serre ideal. Rows are computed lazily and cached.
class ShuffleCoordinates {
 public:
  explicit ShuffleCoordinates(const Weight& nu);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::size_t index(const Word& w) const;
  /// Coefficient of v in the shuffle image of w.
  Laurent entry(const Word& w, const Word& v) const;
  const std::vector<Laurent>& row(const Word& w);
  /// Image of x times its denominator.
  std::vector<Laurent> image_numerator(const FreeElement& x);

 private:
  std::vector<Word> words_;
  std::map<Word, std::size_t> idx_;
  std::map<Word, std::vector<Laurent>> rows_;
};

/// Expansion G(n) = sum_m K_mn E_m on the PBW basis of one weight space.
struct KMatrix {
  Weight weight;
  std::vector<Multisegment> index;  // sorted
  std::vector<std::vector<Laurent>> bar_matrix;  // bar(E_n) = sum_m A_mn E_m, stored [m][n]
  std::vector<std::vector<Laurent>> entries;  // entries[m][n] = K_mn

  std::size_t size() const { return index.size(); }
  std::size_t position(const Multisegment& m) const;
  const Laurent& at(const Multisegment& m, const Multisegment& n) const;
};

/// Lusztig's triangular bar-invariance algorithm on the PBW basis.
KMatrix canonical_K(const Window& w, const Weight& nu);

/// K^{-1}; row m lists the coefficients of G*(m) on the dual PBW basis.
std::vector<std::vector<Laurent>> dual_coeffs(const KMatrix& K);

/// Canonical basis element G(n) as a free-algebra element (over the common denominator).
FreeElement canonical_element(const KMatrix& K, const Multisegment& n, const Window& w);

/// True iff the two free elements agree modulo the Serre ideal.
bool equal_in_uqn(const FreeElement& a, const FreeElement& b, const Weight& nu);

}  // namespace affhecke
