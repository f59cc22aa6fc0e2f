#include <doctest.h>

#include <algorithm>

#include "affhecke/laurent.hpp"
#include "affhecke/partition.hpp"

using namespace affhecke;

namespace {

// Hook of (i,j) counted cell by cell: cells to the right plus cells below plus one.
std::vector<int> hooks_by_counting(const Partition& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j) {
      int arm = 0, leg = 0;
      for (int jj = j + 1; jj <= p.part(i); ++jj) ++arm;
      for (int ii = i + 1; ii <= p.length() && p.part(ii) >= j; ++ii) ++leg;
      out.push_back(arm + leg + 1);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("conjugate examples") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("conjugation is an involution up to size 12") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : Partition::all_of(n)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("parse and print") {
  CHECK(Partition::parse("3,1") == Partition({3, 1}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({3, 1}).to_string() == "3,1");
  CHECK_THROWS(Partition::parse("1,x"));
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("hook_multiset examples") {
  CHECK(sorted(hook_multiset(Partition({2, 1}))) == std::vector<int>{1, 1, 3});
  CHECK(hook_multiset(Partition({1})) == std::vector<int>{1});
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> expect;
    for (int k = 1; k <= m; ++k) expect.push_back(k);
    CHECK(sorted(hook_multiset(Partition({m}))) == expect);
  }
}

TEST_CASE("hooks agree with cell counting and the hook-length formula") {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : Partition::all_of(n)) {
      const auto h = hook_multiset(p);
      CHECK(sorted(h) == hooks_by_counting(p));
      CHECK(static_cast<int>(h.size()) == n);
      BigInt prod = 1, fact = 1;
      for (int x : h) prod *= x;
      for (int k = 2; k <= n; ++k) fact *= k;
      CHECK(fact % prod == 0);
      CHECK(fact / prod == static_cast<long>(standard_tableaux(p).size()));
    }
}

TEST_CASE("hook_exponent_set examples") {
  CHECK(hook_exponent_set(Partition({2, 1}), HookMode::literal).exponents == std::set<int>{3, 1, -1});
  CHECK(hook_exponent_set(Partition({2, 1}), HookMode::positive).exponents == std::set<int>{3, 1});
  CHECK(hook_exponent_set(Partition({1}), HookMode::literal).exponents == std::set<int>{1});
  CHECK(hook_exponent_set(Partition({1}), HookMode::positive).exponents == std::set<int>{1});
  CHECK(hook_exponent_set(Partition()).exponents.empty());
  CHECK(hook_exponent_set(Partition({2, 1})).symmetric() == std::set<int>{-3, -1, 1, 3});
}

TEST_CASE("the literal grid can exceed the diagram hooks") {
  // Cell (2,3) lies outside (3,1,1): 1 + 1 - 2 - 3 + 1 = -3, and 3 is not a hook length.
  const Partition p({3, 1, 1});
  CHECK(hook_exponent_set(p, HookMode::literal).contains(-3));
  CHECK_FALSE(hook_exponent_set(p, HookMode::positive).symmetric().count(3));
}

TEST_CASE("positive hooks are the positive part of the literal set") {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : Partition::all_of(n)) {
      const auto lit = hook_exponent_set(p, HookMode::literal).exponents;
      std::set<int> pos;
      for (int e : lit)
        if (e > 0) pos.insert(e);
      CHECK(pos == hook_exponent_set(p, HookMode::positive).exponents);
    }
}

TEST_CASE("contents examples") {
  CHECK(contents(Partition({1})) == std::map<Cell, int>{{{1, 1}, 0}});
  CHECK(contents(Partition({2, 1})) == std::map<Cell, int>{{{1, 1}, 0}, {{1, 2}, 1}, {{2, 1}, -1}});
  CHECK(contents(Partition({3})) == std::map<Cell, int>{{{1, 1}, 0}, {{1, 2}, 1}, {{1, 3}, 2}});
}

TEST_CASE("standard tableaux are standard") {
  for (const auto& t : standard_tableaux(Partition({3, 2}))) {
    std::map<Cell, int> entry;
    for (std::size_t k = 0; k < t.size(); ++k) entry[t[k]] = static_cast<int>(k);
    for (const auto& [c, k] : entry) {
      if (entry.count({c.first, c.second + 1})) CHECK(entry[{c.first, c.second + 1}] > k);
      if (entry.count({c.first + 1, c.second})) CHECK(entry[{c.first + 1, c.second}] > k);
    }
  }
  CHECK(standard_tableaux(Partition({3, 2})).size() == 5);
}

}  // TEST_SUITE
