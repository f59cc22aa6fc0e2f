#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace affhecke {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
/// Stored sparsely; zero coefficients are never kept, so equality is structural.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c);  // NOLINT: integers embed as constants
  Laurent(const BigInt& c);

  /// c * q^k
  static Laurent monomial(int k, const BigInt& c = 1);
  /// The symmetric quantum integer [n] = (q^n - q^-n)/(q - q^-1).
  static Laurent qint(int n);
  /// [n]! = [1][2]...[n]
  static Laurent qfactorial(int n);
  static Laurent parse(const std::string& text);

  const std::map<int, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(int k) const;
  int min_exponent() const;
  int max_exponent() const;

  Laurent bar() const;
  Rational eval_q1() const;
  Rational eval(const Rational& q) const;

  /// Every coefficient >= 0.
  bool nonnegative() const;
  /// Nonnegative coefficients, all exponents >= 1 (the set q N[q]).
  bool in_q_nat_q() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  /// Human-readable form, e.g. "q^2 - 3 + 2q^-1".
  std::string to_string() const;

 private:
  void add_term(int k, const BigInt& c);
  std::map<int, BigInt> terms_;
};

std::string to_string(const Rational& r);

/// n/d in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace affhecke
