#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "affhecke/grothendieck.hpp"

using namespace affhecke;

namespace {

Multisegment M(const char* s) { return Multisegment::parse(s); }

const DualCanonical& dc() {
  static const DualCanonical d;
  return d;
}

// Entry (a,b) of the lower unitriangular matrix with t_{a,b} below the
// diagonal; t_{j+1,i} is the variable of the segment [i,j].
PolyA entry(int a, int b) {
  if (a == b) return {{Multisegment(), Rational(1)}};
  if (a > b) return {{Multisegment{Segment(b, a - 1)}, Rational(1)}};
  return {};
}

// Minor on rows J and columns 1..|J| by the Leibniz formula.
PolyA flag_minor(const std::set<int>& J) {
  const std::vector<int> rows(J.begin(), J.end());
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  PolyA det;
  do {
    int inversions = 0;
    for (std::size_t x = 0; x < perm.size(); ++x)
      for (std::size_t y = x + 1; y < perm.size(); ++y)
        if (perm[x] > perm[y]) ++inversions;
    PolyA term{{Multisegment(), Rational(inversions % 2 ? -1 : 1)}};
    for (std::size_t c = 0; c < perm.size(); ++c)
      term = poly_mul(term, entry(rows[static_cast<std::size_t>(perm[c])], static_cast<int>(c) + 1));
    det = poly_add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_SUITE("grothendieck") {

TEST_CASE("phi_standard examples") {
  CHECK(phi_standard(M("[1,2]")) == PolyA{{M("[1,2]"), 1}});
  CHECK(phi_standard(M("[1,1]+[2,2]")) == PolyA{{M("[1,1]+[2,2]"), 1}});
  CHECK(phi_standard(Multisegment()) == PolyA{{Multisegment(), 1}});
  CHECK(poly_mul(phi_standard(M("[1,1]")), phi_standard(M("[2,2]"))) == phi_standard(M("[1,1]+[2,2]")));
}

TEST_CASE("dual_poly examples") {
  CHECK(dc().dual_poly(M("[0,1]")) == PolyA{{M("[0,1]"), 1}});
  CHECK(dc().dual_poly(M("[0,0]+[1,1]")) == PolyA{{M("[0,0]+[1,1]"), 1}, {M("[0,1]"), -1}});
  CHECK(dc().dual_poly(M("[0,0]")) == PolyA{{M("[0,0]"), 1}});
}

TEST_CASE("dual_poly is translation invariant and unitriangular") {
  for (const auto& m : multisegments_in_window(1, 3, 4)) {
    if (m.empty()) continue;
    const PolyA p = dc().dual_poly(m);
    REQUIRE(p.count(m));
    CHECK(p.at(m) == 1);
    for (const auto& [n, c] : p) CHECK(zel_leq(m, n));
    PolyA shifted;
    for (const auto& [n, c] : dc().dual_poly(m.shifted(5))) shifted[n.shifted(-5)] = c;
    CHECK(shifted == p);
  }
}

TEST_CASE("flag minors are dual canonical elements") {
  for (int N = 2; N <= 5; ++N)
    for (const auto& J : all_flag_minor_sets(N)) {
      CAPTURE(J.to_string());
      CHECK(dc().dual_poly(flag_minor_multisegment(J)) == flag_minor(J.elements));
    }
}

TEST_CASE("expand_standard examples") {
  CHECK(dc().expand_standard(M("[2,4]")) == DualExpansion{{M("[2,4]"), 1}});
  CHECK(dc().expand_standard(M("[0,0]+[1,1]")) == DualExpansion{{M("[0,0]+[1,1]"), 1}, {M("[0,1]"), 1}});
  for (const auto& m : multisegments_in_window(0, 2, 4)) {
    if (m.empty()) continue;
    for (const auto& [n, c] : dc().expand_standard(m)) {
      CHECK(zel_leq(m, n));
      CHECK(c > 0);
    }
  }
}

TEST_CASE("product_expand examples") {
  CHECK(dc().product_expand({M("[0,0]"), M("[1,1]")}) == DualExpansion{{M("[0,0]+[1,1]"), 1}, {M("[0,1]"), 1}});
  CHECK(dc().product_expand({M("[0,0]"), M("[2,2]")}) == DualExpansion{{M("[0,0]+[2,2]"), 1}});
  CHECK(dc().product_expand({M("[1,3]+[2,2]")}) == DualExpansion{{M("[1,3]+[2,2]"), 1}});
  CHECK_FALSE(dc().is_simple_product({M("[0,0]"), M("[1,1]")}).simple);
  CHECK(dc().is_simple_product({M("[0,0]"), M("[2,2]")}).simple);
}

TEST_CASE("two segments give a simple product iff they are not linked") {
  std::vector<Segment> segs;
  for (int i = 0; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) segs.emplace_back(i, j);
  for (const auto& s : segs)
    for (const auto& t : segs) {
      CAPTURE(s.to_string());
      CAPTURE(t.to_string());
      CHECK(dc().is_simple_product({Multisegment{s}, Multisegment{t}}).simple == !linked(s, t));
    }
}

TEST_CASE("product_expand is commutative with nonnegative integer coefficients") {
  const std::vector<Multisegment> ms = {M("[0,1]"), M("[1,1]"), M("[0,0]+[2,2]"), M("[1,2]"), M("[2,2]")};
  for (const auto& a : ms)
    for (const auto& b : ms) {
      const auto ab = dc().product_expand({a, b});
      CHECK(ab == dc().product_expand({b, a}));
      for (const auto& [p, c] : ab) {
        CHECK(c > 0);
        CHECK(c.get_den() == 1);
      }
      for (const auto& c : ms) {
        const auto abc = dc().product_expand({a, b, c});
        CHECK(abc == dc().product_expand({c, a, b}));
        CHECK(abc == dc().product_expand({b, c, a}));
      }
    }
}

TEST_CASE("bialgebra examples") {
  const auto entries = dc().bialgebra_check(3);
  REQUIRE(entries.size() == 3);
  for (const auto& e : entries) CHECK(e.pass);
  const Tensor d = delta(phi_standard(M("[1,2]")));
  CHECK(d.count({M("[2,2]"), M("[1,1]")}));
  CHECK(d.count({M("[1,2]"), Multisegment()}));
  CHECK(d.count({Multisegment(), M("[1,2]")}));
  CHECK(d.size() == 3);
  const Tensor one = delta(phi_standard(M("[1,1]")));
  CHECK(one == Tensor{{{M("[1,1]"), Multisegment()}, 1}, {{Multisegment(), M("[1,1]")}, 1}});
  for (const auto& e : dc().bialgebra_check(5)) CHECK(e.pass);
}

}  // TEST_SUITE
