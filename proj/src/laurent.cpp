#include "affhecke/laurent.hpp"

#include <cctype>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

Laurent::Laurent(long c) { add_term(0, BigInt(c)); }
Laurent::Laurent(const BigInt& c) { add_term(0, c); }

Laurent Laurent::monomial(int k, const BigInt& c) {
  Laurent r;
  r.add_term(k, c);
  return r;
}

Laurent Laurent::qint(int n) {
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}; [-n] = -[n]
  Laurent r;
  int sign = n < 0 ? -1 : 1;
  int m = n < 0 ? -n : n;
  for (int k = m - 1; k >= 1 - m; k -= 2) r.add_term(k, sign);
  return r;
}

Laurent Laurent::qfactorial(int n) {
  Laurent r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

BigInt Laurent::coeff(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void Laurent::add_term(int k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

Rational Laurent::eval_q1() const {
  BigInt s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return Rational(s);
}

Rational Laurent::eval(const Rational& q) const {
  if (q == 0 && !terms_.empty() && min_exponent() < 0)
    throw DomainError("Laurent::eval: negative power at q = 0");
  Rational s = 0;
  for (const auto& [k, c] : terms_) {
    Rational p = 1;
    if (k >= 0) {
      mpz_pow_ui(p.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
      mpz_pow_ui(p.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
    } else {
      mpz_pow_ui(p.get_num_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(-k));
      mpz_pow_ui(p.get_den_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(-k));
    }
    p.canonicalize();
    s += p * c;
  }
  return s;
}

bool Laurent::nonnegative() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

bool Laurent::in_q_nat_q() const { return nonnegative() && (terms_.empty() || min_exponent() >= 1); }

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int k = it->first;
    BigInt c = it->second;
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
    os << "q";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

Laurent Laurent::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw DomainError("empty Laurent polynomial");
  Laurent r;
  std::size_t pos = 0;
  auto fail = [&]() { throw DomainError("cannot parse Laurent polynomial: " + text); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail();
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    BigInt c = 1;
    bool have_digits = pos > start;
    if (have_digits) c = BigInt(s.substr(start, pos - start));
    int k = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      k = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es || (pos == es + 1 && s[es] == '-')) fail();
        k = std::stoi(s.substr(es, pos - es));
      }
    } else if (!have_digits) {
      fail();
    }
    r.add_term(k, sign * c);
  }
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace affhecke
