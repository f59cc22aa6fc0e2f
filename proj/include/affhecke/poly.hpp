#pragma once

#include <string>
#include <vector>

#include "affhecke/laurent.hpp"

namespace affhecke {

/// Dense univariate polynomial over Z, coefficients stored low degree first.
class Poly {
 public:
  Poly() = default;
  Poly(long c);  // NOLINT
  Poly(const BigInt& c);
  explicit Poly(std::vector<BigInt> coeffs);

  static Poly x_pow(int k, const BigInt& c = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int k) const;
  const BigInt& lead() const { return c_.back(); }

  /// gcd of the coefficients (nonnegative; 0 for the zero polynomial)
  BigInt content() const;
  Poly primitive_part() const;
  /// Coefficients in reverse order: x^deg p(1/x).
  Poly reversed() const;
  Rational eval(const Rational& x) const;
  /// Multiplicity of x as a factor.
  int low_order() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const BigInt& s);
  /// Exact division by an integer; throws if not exact.
  Poly divexact(const BigInt& s) const;
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Pseudo-division: lead(b)^(deg a - deg b + 1) a = quo b + rem.
  static void pseudo_divide(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
  /// Exact division in Z[x]; throws if b does not divide a.
  static Poly exact_quotient(const Poly& a, const Poly& b);
  /// Primitive gcd with positive leading coefficient.
  static Poly gcd(const Poly& a, const Poly& b);

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Exact element of Q(x): reduced quotient of integer polynomials.
///
/// Canonical form: gcd(num, den) = 1 in Q[x], the joint integer content of
/// numerator and denominator is 1 and the denominator's leading coefficient is
/// positive. With this form equality is coefficient comparison.
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT
  RatFun(const Rational& c);            // NOLINT
  RatFun(const Laurent& l);             // NOLINT
  RatFun(Poly n, Poly d);               // normalizes; throws on zero denominator

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RatFun bar() const;
  Rational eval(const Rational& x) const;
  /// Laurent form when the denominator is a monomial c x^k with c | num.
  bool is_laurent() const;
  Laurent to_laurent() const;

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  friend bool operator==(const RatFun& a, const RatFun& b) = default;

  std::string to_string(const std::string& var = "q") const;

 private:
  struct Raw {};
  RatFun(Poly n, Poly d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_;
  Poly den_;
};

/// a / b in Z[q, q^-1]; throws if b does not divide a.
Laurent laurent_exact_quotient(const Laurent& a, const Laurent& b);

/// Normalized fraction n/d (see RatFun for the canonical form).
RatFun ratfun_normalize(const Poly& n, const Poly& d);

}  // namespace affhecke
