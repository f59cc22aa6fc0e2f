#include <doctest.h>

#include "affhecke/grothendieck.hpp"
#include "affhecke/hecke.hpp"

using namespace affhecke;

namespace {

Multisegment M(const char* s) { return Multisegment::parse(s); }

QMatrix scalar(std::size_t n, const Rational& c) { return QMatrix::identity(n).scaled(c); }

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("hecke_oracle") {

TEST_CASE("parameter guard") {
  CHECK_THROWS(check_parameter(Rational(0)));
  CHECK_THROWS(check_parameter(Rational(1)));
  CHECK_THROWS(check_parameter(Rational(-1)));
  CHECK_NOTHROW(check_parameter(Rational(3)));
  CHECK_NOTHROW(check_parameter(make_rational(2, 3)));
}

TEST_CASE("seminormal_rep examples") {
  const Rational u = 3;
  const FiniteModule a = seminormal_rep(Partition({2}), u);
  CHECK(a.dim == 1);
  CHECK(a.T[0](0, 0) == u);
  const FiniteModule b = seminormal_rep(Partition({1, 1}), u);
  CHECK(b.dim == 1);
  CHECK(b.T[0](0, 0) == -1);
  const FiniteModule c = seminormal_rep(Partition({2, 1}), u);
  CHECK(c.dim == 2);
  const QMatrix& T = c.T[0];
  CHECK((T - scalar(2, u)) * (T + scalar(2, 1)) == QMatrix(2, 2));
  CHECK(T(0, 0) + T(1, 1) == u - 1);
  CHECK(T != scalar(2, u));
  CHECK(T != scalar(2, -1));
}

TEST_CASE("seminormal representations satisfy the finite Hecke relations") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : Partition::all_of(n)) {
      const FiniteModule S = seminormal_rep(lambda, make_rational(5, 2));
      CHECK(S.dim == standard_tableaux(lambda).size());
      CHECK_FALSE(S.relation_failure().has_value());
    }
}

TEST_CASE("evaluation_module spectra") {
  const Rational u = 3, z = 7;
  const FiniteModule a = evaluation_module(Partition({1}), z, u);
  CHECK(a.y[0](0, 0) == z);
  const FiniteModule b = evaluation_module(Partition({2}), z, u);
  CHECK(b.y[0](0, 0) == z);
  CHECK(b.y[1](0, 0) == z * u);
  const FiniteModule c = evaluation_module(Partition({1, 1}), z, u);
  CHECK(c.y[1](0, 0) == z / u);
  CHECK_THROWS(evaluation_module(Partition({1}), Rational(0), u));
}

TEST_CASE("evaluation modules satisfy all relations with contents on the diagonal") {
  const Rational u = 3;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : Partition::all_of(n)) {
      const FiniteModule S = evaluation_module(lambda, make_rational(2, 5), u);
      CHECK_FALSE(S.relation_failure().has_value());
      const auto tabs = standard_tableaux(lambda);
      for (std::size_t b = 0; b < S.dim; ++b)
        for (int k = 0; k < n; ++k) {
          const Cell c = tabs[b][static_cast<std::size_t>(k)];
          CHECK(S.y[static_cast<std::size_t>(k)](b, b) == make_rational(2, 5) * upower(u, c.second - c.first));
        }
    }
}

TEST_CASE("induce dimensions and spectra") {
  const Rational u = 3;
  const FiniteModule a = induce(evaluation_module(Partition({1}), 2, u), evaluation_module(Partition({1}), 5, u));
  CHECK(a.dim == 2);
  CHECK(a.character == Character{{{2, 5}, 1}, {{5, 2}, 1}});
  const FiniteModule b = induce(evaluation_module(Partition({2}), 2, u), evaluation_module(Partition({2}), 5, u));
  CHECK(b.dim == 6);
  for (const auto& p : {Partition({1}), Partition({2}), Partition({1, 1}), Partition({2, 1})})
    for (const auto& q : {Partition({1}), Partition({2}), Partition({2, 1})}) {
      const FiniteModule x = evaluation_module(p, 2, u), y = evaluation_module(q, 7, u);
      const FiniteModule m = induce(x, y);
      CHECK(static_cast<long>(m.dim) == binom(p.size() + q.size(), p.size()) * static_cast<long>(x.dim * y.dim));
      CHECK_FALSE(m.relation_failure().has_value());
    }
}

TEST_CASE("derived cross relations hold on induced modules") {
  const Rational u = 3;
  const FiniteModule m = induce_all({evaluation_module(Partition({1}), 2, u), evaluation_module(Partition({1}), 11, u),
                                     evaluation_module(Partition({1}), 5, u)});
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(m.n); ++i) {
    const QMatrix &T = m.T[i], &a = m.y[i], &b = m.y[i + 1];
    CHECK(b * T == T * a + b.scaled(u - 1));
    CHECK(a * T == T * b - b.scaled(u - 1));
    CHECK(T * a * T == b.scaled(u));
  }
  CHECK(m.T[0] * m.T[1] * m.T[0] == m.T[1] * m.T[0] * m.T[1]);
}

TEST_CASE("relation_failure notices a broken module") {
  FiniteModule m = induce(evaluation_module(Partition({1}), 2, 3), evaluation_module(Partition({1}), 5, 3));
  m.y[0](0, 1) += 1;
  CHECK(m.relation_failure().has_value());
  CHECK_THROWS(m.verify());
}

TEST_CASE("burnside examples") {
  const Rational u = 3;
  auto pair = [&](const Rational& z1, const Rational& z2) {
    return induce(evaluation_module(Partition({1}), z1, u), evaluation_module(Partition({1}), z2, u));
  };
  CHECK_FALSE(burnside_is_simple(pair(1, 3)));
  CHECK(burnside_is_simple(pair(1, 9)));
  CHECK(burnside_span_dimension(pair(1, 9)) == 4);
  CHECK(burnside_span_dimension(pair(1, 3)) < 4);
  CHECK(burnside_is_simple(evaluation_module(Partition({2}), 5, u)));
}

TEST_CASE("evaluation modules are simple") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : Partition::all_of(n)) CHECK(burnside_is_simple(evaluation_module(lambda, 2, 3)));
}

TEST_CASE("simplicity on mid-size products") {
  const Rational u = 3;
  for (int a = 0; a <= 4; ++a) {
    const FiniteModule m =
        induce(evaluation_module(Partition({2, 1}), 1, u), evaluation_module(Partition({1}), upower(u, a), u));
    SimplicityMethod how{};
    const bool simple = burnside_is_simple(m, &how);
    CHECK(m.dim == 8);
    CHECK(how == SimplicityMethod::burnside);
    CHECK(simple == (burnside_span_dimension(m) == 64));
  }
  const FiniteModule big =
      induce(evaluation_module(Partition({3}), 1, u), evaluation_module(Partition({2}), upower(u, 2), u));
  SimplicityMethod how{};
  const bool simple = burnside_is_simple(big, &how);
  CHECK(big.dim == 10);
  CHECK(simple == (burnside_span_dimension(big) == 100));
  const FiniteModule bigger =
      induce(evaluation_module(Partition({2, 1}), 1, u), evaluation_module(Partition({2, 1}), upower(u, 3), u));
  CHECK(bigger.dim == 80);
  // dim 80 is past the span limit, so the joint-eigenspace test decides.
  CHECK_FALSE(burnside_is_simple(bigger, &how));
  CHECK(how == SimplicityMethod::norton);
  const FiniteModule generic =
      induce(evaluation_module(Partition({2, 1}), 1, u), evaluation_module(Partition({2, 1}), upower(u, 2), u));
  CHECK(burnside_is_simple(generic, &how));
  CHECK(how == SimplicityMethod::norton);
}

TEST_CASE("composition_factors examples") {
  const Rational u = 3;
  const FiniteModule m = induce(evaluation_module(Partition({1}), 1, u), evaluation_module(Partition({1}), 3, u));
  CHECK(composition_factors(m) == std::map<Multisegment, int>{{M("[0,1]"), 1}, {M("[0,0]+[1,1]"), 1}});
  const FiniteModule s = evaluation_module(Partition({2, 1}), 9, u);
  CHECK(composition_factors(s) == std::map<Multisegment, int>{{evaluation_multisegment(Partition({2, 1}), 2), 1}});
  const DualCanonical dc;
  for (const auto& std_m : {M("[0,0]+[1,1]"), M("[0,0]+[1,1]+[2,2]"), M("[0,1]+[1,2]"), M("2[0,0]+[1,1]")}) {
    std::map<Multisegment, int> expect;
    for (const auto& [n, c] : dc.expand_standard(std_m)) expect[n] = static_cast<int>(c.get_num().get_si());
    CHECK(composition_factors(standard_module(std_m, u)) == expect);
  }
}

TEST_CASE("simple modules") {
  const Rational u = 3;
  CHECK(simple_module(M("[0,1]"), u).dim == 1);
  CHECK(simple_module(M("[0,0]+[1,1]"), u).dim == 1);
  CHECK(simple_module(M("[0,0]+[2,2]"), u).dim == 2);
  CHECK(simple_module(M("[0,1]+[1,1]"), u).dim == 3);  // nested segments are not linked
  for (const auto& m : {M("[0,1]+[1,2]"), M("[0,0]+[1,1]+[2,2]"), M("[0,2]+[1,1]"), M("[0,1]+[-1,-1]")}) {
    const FiniteModule L = simple_module(m, u);
    CHECK_FALSE(L.relation_failure().has_value());
    CHECK(burnside_is_simple(L));
    CHECK(composition_factors(L) == std::map<Multisegment, int>{{m, 1}});
  }
}

}  // TEST_SUITE
