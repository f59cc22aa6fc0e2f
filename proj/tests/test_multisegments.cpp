#include <doctest.h>

#include "affhecke/hecke.hpp"
#include "affhecke/multisegment.hpp"

using namespace affhecke;

namespace {

Multisegment M(const char* s) { return Multisegment::parse(s); }

ColumnSet cols(std::set<int> e, int N) {
  ColumnSet c;
  c.elements = std::move(e);
  c.rank = N;
  return c;
}

// Every element of `outer` lies outside the open interval spanned by `inner`.
bool outside_span(const std::set<int>& outer, const std::set<int>& inner) {
  if (inner.empty() || outer.empty()) return true;
  const int lo = *inner.begin(), hi = *inner.rbegin();
  for (int x : outer)
    if (x > lo && x < hi) return false;
  return true;
}

// For |I| <= |J| the leftover of the smaller set must avoid the span of the
// larger one's leftover. With rows J and initial columns this is the
// orientation in which {2} and {1,3} are not separated, matching the exchange
// relation Delta_2 Delta_13 = Delta_3 + Delta_23 in C[N] for SL_3.
bool weakly_separated_oracle(const std::set<int>& I, const std::set<int>& J) {
  std::set<int> ImJ, JmI;
  for (int x : I)
    if (!J.count(x)) ImJ.insert(x);
  for (int x : J)
    if (!I.count(x)) JmI.insert(x);
  if (I.size() < J.size()) return outside_span(ImJ, JmI);
  if (J.size() < I.size()) return outside_span(JmI, ImJ);
  return outside_span(ImJ, JmI) || outside_span(JmI, ImJ);
}

}  // namespace

TEST_SUITE("multisegments") {

TEST_CASE("parse and print") {
  CHECK(M("[1,1]+[2,2]") == Multisegment{Segment(1, 1), Segment(2, 2)});
  CHECK(M("2[0]").mult(Segment(0, 0)) == 2);
  CHECK(M("[2,3]+[1,1]+[1,3]").to_string() == "[1,1]+[1,3]+[2,3]");
  CHECK(M("0").empty());
  CHECK_THROWS(M("[2,1]"));
  CHECK_THROWS(M("[1,2"));
}

TEST_CASE("degree_and_dimvector examples") {
  auto a = degree_and_dimvector(M("[1,2]"));
  CHECK(a.degree == 2);
  CHECK(a.dimvector == std::map<int, int>{{1, 1}, {2, 1}});
  auto b = degree_and_dimvector(M("[1,1]+[2,2]"));
  CHECK(b.degree == 2);
  CHECK(b.dimvector == a.dimvector);
  auto c = degree_and_dimvector(M("2[0,0]"));
  CHECK(c.degree == 2);
  CHECK(c.dimvector == std::map<int, int>{{0, 2}});
}

TEST_CASE("segment_less examples") {
  CHECK(segment_less(Segment(1, 2), Segment(3, 3)));
  CHECK(segment_less(Segment(1, 3), Segment(2, 3)));
  CHECK_FALSE(segment_less(Segment(1, 2), Segment(1, 2)));
}

TEST_CASE("elementary_moves examples") {
  CHECK(elementary_moves(M("[1,1]+[2,2]")) == std::set<Multisegment>{M("[1,2]")});
  CHECK(elementary_moves(M("[1,2]+[2,3]")) == std::set<Multisegment>{M("[1,3]+[2,2]")});
  CHECK(elementary_moves(M("[0,0]+[2,2]")).empty());
}

TEST_CASE("elementary moves preserve the dimension vector") {
  for (const auto& m : multisegments_in_window(1, 4, 5))
    for (const auto& n : elementary_moves(m)) {
      CHECK(n.degree() == m.degree());
      CHECK(n.dimension_vector() == m.dimension_vector());
      CHECK(n.rank_key() > m.rank_key());
    }
}

TEST_CASE("zel_leq examples") {
  CHECK(zel_leq(M("[1,2]"), M("[1,2]")));
  CHECK(zel_leq(M("[1,1]+[2,2]"), M("[1,2]")));
  CHECK_FALSE(zel_leq(M("[1,2]"), M("[1,1]+[2,2]")));
  CHECK_FALSE(zel_leq(M("[1,1]"), M("[2,2]")));
}

TEST_CASE("zel_leq is a partial order on each weight class up to degree 5") {
  std::map<std::map<int, int>, std::vector<Multisegment>> classes;
  for (const auto& m : multisegments_in_window(1, 3, 5))
    if (!m.empty()) classes[m.dimension_vector()].push_back(m);
  for (const auto& [dv, ms] : classes) {
    CHECK(multisegments_of_weight(dv).size() == ms.size());
    for (const auto& a : ms) {
      CHECK(zel_leq(a, a));
      for (const auto& b : ms) {
        if (a != b && zel_leq(a, b)) CHECK_FALSE(zel_leq(b, a));
        if (!zel_leq(a, b)) continue;
        for (const auto& c : ms)
          if (zel_leq(b, c)) CHECK(zel_leq(a, c));
      }
    }
  }
}

TEST_CASE("evaluation_multisegment examples") {
  CHECK(evaluation_multisegment(Partition({1}), 0) == M("[0,0]"));
  CHECK(evaluation_multisegment(Partition({2, 1}), 0) == M("[0,1]+[-1,-1]"));
  CHECK(evaluation_multisegment(Partition({3}), 5) == M("[5,7]"));
  CHECK(evaluation_multisegment(Partition({1, 1, 1}), 2) == M("[2]+[1]+[0]"));
}

TEST_CASE("evaluation multisegments match the y-spectrum of S_lambda(u^a)") {
  const Rational u = 3;
  for (int n = 1; n <= 4; ++n)
    for (const auto& lambda : Partition::all_of(n))
      for (int a : {-1, 0, 2}) {
        const FiniteModule S = evaluation_module(lambda, upower(u, a), u);
        const auto dv = evaluation_multisegment(lambda, a).dimension_vector();
        for (std::size_t b = 0; b < S.dim; ++b) {
          std::map<int, int> seen;
          for (const auto& y : S.y) {
            auto e = ulog(u, y(b, b));
            REQUIRE(e.has_value());
            ++seen[*e];
          }
          CHECK(seen == dv);
        }
      }
}

TEST_CASE("as_evaluation_point inverts evaluation_multisegment") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : Partition::all_of(n)) {
      EvaluationPoint p;
      REQUIRE(as_evaluation_point(evaluation_multisegment(lambda, 3), p));
      CHECK(p.lambda == lambda);
      CHECK(p.a == 3);
    }
  EvaluationPoint p;
  CHECK_FALSE(as_evaluation_point(M("[0,0]+[2,2]"), p));
}

TEST_CASE("weakly_separated examples") {
  CHECK(weakly_separated(cols({1, 2}, 4), cols({1, 3}, 4)));
  CHECK_FALSE(weakly_separated(cols({1, 3}, 4), cols({2, 4}, 4)));
  CHECK(weakly_separated(cols({2, 4}, 4), cols({2, 4}, 4)));
  CHECK_FALSE(weakly_separated(cols({2}, 3), cols({1, 3}, 3)));
  CHECK(weakly_separated(cols({2}, 4), cols({2, 3}, 4)));
}

TEST_CASE("weakly_separated matches the splitting definition on subsets of {1..6}") {
  for (unsigned x = 0; x < 64; ++x)
    for (unsigned y = 0; y < 64; ++y) {
      std::set<int> I, J;
      for (int k = 0; k < 6; ++k) {
        if (x & (1u << k)) I.insert(k + 1);
        if (y & (1u << k)) J.insert(k + 1);
      }
      const bool ws = weakly_separated(cols(I, 6), cols(J, 6));
      CHECK(ws == weakly_separated_oracle(I, J));
      CHECK(ws == weakly_separated(cols(J, 6), cols(I, 6)));
    }
}

TEST_CASE("flag minor index sets") {
  CHECK(all_flag_minor_sets(3).size() == 4);  // {2},{3},{1,3},{2,3}
  for (int N = 2; N <= 5; ++N)
    for (const auto& J : all_flag_minor_sets(N)) {
      const Multisegment m = flag_minor_multisegment(J);
      CHECK(flag_minor_set(m, N) == J);
      CHECK(m.min_point() >= 1);
      CHECK(m.max_point() <= N - 1);
      EvaluationPoint p;
      CHECK(as_evaluation_point(m, p));
    }
}

TEST_CASE("hook_criterion examples") {
  auto v = hook_criterion(Partition({1}), {0, 1});
  CHECK_FALSE(v.simple);
  REQUIRE(v.violations.size() == 1);
  CHECK(v.violations[0].first == 0);
  CHECK(v.violations[0].second == 1);
  CHECK(v.violations[0].hook == 1);
  CHECK(hook_criterion(Partition({1}), {0, 2}).simple);
  CHECK(hook_criterion(Partition({2, 1}), {0, 2}).simple);
  CHECK_FALSE(hook_criterion(Partition({2, 1}), {0, 3}).simple);
  for (int a = -5; a <= 5; ++a) CHECK(hook_criterion(Partition({3, 2}), {a}).simple);
}

}  // TEST_SUITE
