#include <doctest.h>

#include <random>

#include "affhecke/laurent.hpp"
#include "affhecke/poly.hpp"
#include "affhecke/reconstruct.hpp"

using namespace affhecke;

namespace {

Poly P(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return Poly(std::move(b));
}

Laurent random_laurent(std::mt19937& g) {
  std::uniform_int_distribution<int> nterms(0, 4), exp(-4, 4), coef(-5, 5);
  Laurent x;
  for (int t = nterms(g); t > 0; --t) x += Laurent::monomial(exp(g), coef(g));
  return x;
}

Poly random_poly(std::mt19937& g, int maxdeg) {
  std::uniform_int_distribution<int> deg(0, maxdeg), coef(-6, 6);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(g)) + 1);
  for (auto& x : c) x = coef(g);
  return Poly(c);
}

}  // namespace

TEST_SUITE("exact_arith") {

TEST_CASE("ratfun_normalize examples") {
  CHECK(ratfun_normalize(P({-1, 0, 1}), P({-1, 1})) == RatFun(P({1, 1}), P({1})));
  const RatFun z = ratfun_normalize(P({0}), P({0, 0, 0, 1}));
  CHECK(z.is_zero());
  CHECK(z.den() == P({1}));
  const RatFun c = ratfun_normalize(P({0, 2}), P({4}));
  CHECK(c.num() == P({0, 1}));
  CHECK(c.den() == P({2}));
  CHECK_THROWS(ratfun_normalize(P({1}), P({0})));
}

TEST_CASE("normalization is scale invariant and idempotent") {
  std::mt19937 g(7);
  for (int t = 0; t < 200; ++t) {
    const Poly n = random_poly(g, 4);
    Poly d = random_poly(g, 4);
    if (d.is_zero()) continue;
    const RatFun r = ratfun_normalize(n, d);
    CHECK(ratfun_normalize(r.num(), r.den()) == r);
    CHECK(ratfun_normalize(n * P({-3}), d * P({-3})) == r);
    CHECK(ratfun_normalize(n * P({2, 1}), d * P({2, 1})) == r);
    CHECK(r.den().lead() > 0);
  }
}

TEST_CASE("bar and eval_q1 examples") {
  const Laurent q = Laurent::monomial(1), qi = Laurent::monomial(-1);
  CHECK((q + qi).bar() == q + qi);
  CHECK(Laurent::monomial(2).bar() == Laurent::monomial(-2));
  CHECK((Laurent(1) + q).bar() == Laurent(1) + qi);
  CHECK((q + qi).eval_q1() == 2);
  CHECK(Laurent().eval_q1() == 0);
  CHECK((Laurent(1) - q).eval_q1() == 0);
}

TEST_CASE("Laurent ring axioms on random triples") {
  std::mt19937 g(11);
  for (int t = 0; t < 1000; ++t) {
    const Laurent a = random_laurent(g), b = random_laurent(g), c = random_laurent(g);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).eval_q1() == a.eval_q1() * b.eval_q1());
  }
}

TEST_CASE("quantum integers") {
  const Laurent q = Laurent::monomial(1), qi = Laurent::monomial(-1);
  CHECK(Laurent::qint(2) == q + qi);
  CHECK(Laurent::qfactorial(3) == Laurent::qint(2) * Laurent::qint(3));
  CHECK(Laurent::qint(3).eval_q1() == 3);
}

TEST_CASE("rational_reconstruct examples") {
  auto sample = [](auto f, int count) {
    std::vector<Sample> s;
    for (int k = 0; k < count; ++k) {
      const Rational x = make_rational(2 * k + 5, k + 3);
      s.push_back({x, f(x)});
    }
    return s;
  };
  const RatFun a = rational_reconstruct(sample([](const Rational& z) -> Rational { return Rational(1) / (z - 2); }, 6), 2);
  CHECK(a == RatFun(P({1}), P({-2, 1})));
  const RatFun b = rational_reconstruct(sample([](const Rational& z) -> Rational { return z; }, 6), 2);
  CHECK(b == RatFun(P({0, 1}), P({1})));
  // (z^2 - 1)/(z - 3) evaluated directly at 8 points.
  const RatFun c =
      rational_reconstruct(sample([](const Rational& z) -> Rational { return Rational((z * z - 1) / (z - 3)); }, 8), 3);
  CHECK(c == RatFun(P({-1, 0, 1}), P({-3, 1})));
}

TEST_CASE("reconstruction reports inconsistent data") {
  std::vector<Sample> s;
  for (int k = 0; k < 6; ++k) s.push_back({Rational(k + 1), Rational(k * k * k * k)});
  CHECK_THROWS_AS(rational_reconstruct(s, 1), ReconstructionError);
  CHECK_THROWS(rational_reconstruct({{1, 1}, {2, 2}}, 2));
}

TEST_CASE("reconstruct after sampling is the identity") {
  std::mt19937 g(3);
  for (int t = 0; t < 60; ++t) {
    const Poly n = random_poly(g, 6);
    Poly d = random_poly(g, 6);
    if (d.is_zero()) continue;
    const RatFun f = ratfun_normalize(n, d);
    std::vector<Sample> s;
    for (int k = 0; s.size() < 16; ++k) {
      const Rational x = make_rational(3 * k + 7, 2 * k + 5);
      if (f.den().eval(x) == 0) continue;
      s.push_back({x, f.eval(x)});
    }
    CHECK(rational_reconstruct(s, 6) == f);
  }
}

TEST_CASE("RatFun field operations") {
  const RatFun x(P({0, 1}), P({1}));
  const RatFun f = (x * x - 1) / (x - 1);
  CHECK(f == x + 1);
  CHECK((f / f).is_one());
  CHECK(f.eval(Rational(5)) == 6);
  CHECK_THROWS(RatFun(1) / RatFun(0));
}

}  // TEST_SUITE
