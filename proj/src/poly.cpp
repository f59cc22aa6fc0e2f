#include "affhecke/poly.hpp"

#include <sstream>
#include <utility>

#include "affhecke/error.hpp"

namespace affhecke {

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x_pow(int k, const BigInt& c) {
  Poly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, BigInt(0));
  p.c_.back() = c;
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(k)];
}

BigInt Poly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  BigInt g = content();
  if (lead() < 0) g = -g;
  return divexact(g);
}

Poly Poly::reversed() const {
  Poly r;
  r.c_.assign(c_.rbegin(), c_.rend());
  r.trim();
  return r;
}

int Poly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

Rational Poly::eval(const Rational& x) const {
  Rational s = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + Rational(*it);
  return s;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Poly Poly::divexact(const BigInt& s) const {
  Poly r = *this;
  for (auto& c : r.c_) {
    if (!mpz_divisible_p(c.get_mpz_t(), s.get_mpz_t()))
      throw InternalError("Poly::divexact: inexact division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

void Poly::pseudo_divide(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  rem = a;
  quo = Poly();
  const int db = b.degree();
  if (a.degree() < db) return;
  const BigInt& lb = b.lead();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    BigInt lr = rem.lead();
    // rem <- lb*rem - lr x^shift b
    rem *= lb;
    quo *= lb;
    Poly t = Poly::x_pow(shift, lr);
    quo += t;
    rem -= t * b;
  }
}

Poly Poly::exact_quotient(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  const int db = b.degree();
  Poly rem = a;
  std::vector<BigInt> q(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), BigInt(0));
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    if (!mpz_divisible_p(rem.lead().get_mpz_t(), b.lead().get_mpz_t()))
      throw InternalError("Poly::exact_quotient: inexact division");
    BigInt c;
    mpz_divexact(c.get_mpz_t(), rem.lead().get_mpz_t(), b.lead().get_mpz_t());
    q[static_cast<std::size_t>(shift)] = c;
    rem -= Poly::x_pow(shift, c) * b;
  }
  if (!rem.is_zero()) throw InternalError("Poly::exact_quotient: nonzero remainder");
  return Poly(std::move(q));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  Poly r0 = a.primitive_part();
  Poly r1 = b.primitive_part();
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    if (r1.degree() == 0) return Poly(1);
    Poly q, r;
    pseudo_divide(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = r.primitive_part();
  }
  return r0.primitive_part();
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = c_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (c < 0) c = -c;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str();
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

RatFun ratfun_normalize(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw DomainError("rational function with zero denominator");
  if (n.is_zero()) return RatFun();
  return RatFun(n, d);
}

RatFun::RatFun(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {
  if (num_.is_zero()) den_ = Poly(1);
}

RatFun::RatFun(const Laurent& l) {
  if (l.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  const int lo = l.min_exponent();
  const int shift = lo < 0 ? -lo : 0;
  std::vector<BigInt> c(static_cast<std::size_t>(l.max_exponent() + shift + 1), BigInt(0));
  for (const auto& [k, v] : l.terms()) c[static_cast<std::size_t>(k + shift)] = v;
  num_ = Poly(std::move(c));
  // canonical as built: the numerator has a nonzero constant term whenever shift > 0
  den_ = Poly::x_pow(shift);
}

RatFun::RatFun(Poly n, Poly d) {
  if (d.is_zero()) throw DomainError("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = Poly();
    den_ = Poly(1);
    return;
  }
  if (d.degree() > 0 && n.degree() >= 0) {
    Poly g = Poly::gcd(n, d);
    if (g.degree() > 0) {
      n = Poly::exact_quotient(n, g);
      d = Poly::exact_quotient(d, g);
    }
  }
  BigInt c = n.content();
  BigInt cd = d.content();
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (d.lead() < 0) c = -c;
  if (c != 1) {
    n = n.divexact(c);
    d = d.divexact(c);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFun RatFun::bar() const {
  if (is_zero()) return *this;
  const int nd = num_.degree();
  const int dd = den_.degree();
  Poly n = num_.reversed();
  Poly d = den_.reversed();
  if (dd >= nd)
    n = n * Poly::x_pow(dd - nd);
  else
    d = d * Poly::x_pow(nd - dd);
  return RatFun(std::move(n), std::move(d));
}

Rational RatFun::eval(const Rational& x) const {
  Rational dv = den_.eval(x);
  if (dv == 0) throw DomainError("RatFun::eval: pole at evaluation point");
  return num_.eval(x) / dv;
}

bool RatFun::is_laurent() const {
  const int lo = den_.low_order();
  if (lo != den_.degree()) return false;
  const BigInt& c = den_.lead();
  for (const auto& a : num_.coeffs())
    if (!mpz_divisible_p(a.get_mpz_t(), c.get_mpz_t())) return false;
  return true;
}

Laurent RatFun::to_laurent() const {
  if (!is_laurent()) throw DomainError("rational function is not a Laurent polynomial: " + to_string());
  const int shift = den_.degree();
  const BigInt& c = den_.lead();
  Laurent r;
  for (int k = 0; k <= num_.degree(); ++k) {
    const BigInt& a = num_.coeffs()[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    r += Laurent::monomial(k - shift, q);
  }
  return r;
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  if (a.den_ == Poly(1) && b.den_ == Poly(1) && a.num_.degree() == 0 && b.num_.degree() == 0)
    return RatFun(a.num_ * b.num_, Poly(1), RatFun::Raw{});
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DomainError("RatFun division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string(const std::string& var) const {
  if (den_ == Poly(1)) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace affhecke

namespace affhecke {

namespace {
Poly shifted_poly(const Laurent& l) {
  std::vector<BigInt> c(static_cast<std::size_t>(l.max_exponent() - l.min_exponent() + 1), BigInt(0));
  for (const auto& [k, v] : l.terms()) c[static_cast<std::size_t>(k - l.min_exponent())] = v;
  return Poly(std::move(c));
}
}  // namespace

Laurent laurent_exact_quotient(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw DomainError("Laurent division by zero");
  if (a.is_zero()) return Laurent();
  const Poly q = Poly::exact_quotient(shifted_poly(a), shifted_poly(b));
  const int shift = a.min_exponent() - b.min_exponent();
  Laurent r;
  for (int k = 0; k <= q.degree(); ++k)
    if (q.coeffs()[static_cast<std::size_t>(k)] != 0) r += Laurent::monomial(k + shift, q.coeffs()[static_cast<std::size_t>(k)]);
  return r;
}

}  // namespace affhecke
