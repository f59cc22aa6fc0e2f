#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "affhecke/error.hpp"
#include "affhecke/poly.hpp"

namespace affhecke {

// Field adaptors for the two scalar types used with the dense routines below.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RatFun& x) { return x.is_zero(); }
inline std::size_t pivot_cost(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const RatFun& x) {
  std::size_t c = static_cast<std::size_t>(x.num().degree() + x.den().degree()) * 64;
  for (const auto& a : x.num().coeffs()) c += mpz_sizeinbase(a.get_mpz_t(), 2);
  for (const auto& a : x.den().coeffs()) c += mpz_sizeinbase(a.get_mpz_t(), 2);
  return c;
}

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_col(std::size_t j, const std::vector<F>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!affhecke::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (affhecke::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (!affhecke::is_zero(y)) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> r(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const F& x = (*this)(i, j);
        if (!affhecke::is_zero(x) && !affhecke::is_zero(v[j])) r[i] += x * v[j];
      }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> a_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      std::size_t cost = pivot_cost(m(i, c));
      if (best == m.rows() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
    const F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

/// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// A solution of a x = b, or nullopt if inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;
    x[pivots[r]] = aug(r, a.cols());
  }
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DomainError("inverse: matrix not square");
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F(1);
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("inverse: singular matrix");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Incrementally grown subspace kept in semi-echelon form: every stored row
/// is 1 at its pivot and 0 at the pivots of all earlier rows.
template <class F>
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : n_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<std::vector<F>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduces v in place against the stored rows.
  void reduce(std::vector<F>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (is_zero(v[p])) continue;
      const F f = v[p];
      const auto& row = rows_[r];
      for (std::size_t j = 0; j < n_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
  }

  bool contains(std::vector<F> v) const {
    reduce(v);
    for (const auto& x : v)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Adds v if it is independent; returns whether the dimension grew.
  bool add(std::vector<F> v) {
    reduce(v);
    std::size_t p = n_;
    std::size_t best_cost = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (is_zero(v[j])) continue;
      std::size_t c = pivot_cost(v[j]);
      if (p == n_ || c < best_cost) {
        p = j;
        best_cost = c;
      }
    }
    if (p == n_) return false;
    const F inv = F(1) / v[p];
    for (auto& x : v)
      if (!is_zero(x)) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

}  // namespace affhecke
