#include "affhecke/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad partition: " + text);
    }
    if (used != item.size()) throw DomainError("bad partition: " + text);
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::vector<Partition> Partition::all_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int len = 0;
    for (int p : parts_)
      if (p >= j) ++len;
    c.push_back(len);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<int> hook_multiset(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<int> hooks;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks.push_back(lambda.part(i) - j + conj.part(j) - i + 1);
  return hooks;
}

std::map<Cell, int> contents(const Partition& lambda) {
  std::map<Cell, int> c;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) c[{i, j}] = j - i;
  return c;
}

std::set<int> HookExponentSet::symmetric() const {
  std::set<int> s;
  for (int e : exponents) {
    s.insert(e);
    s.insert(-e);
  }
  return s;
}

HookExponentSet hook_exponent_set(const Partition& lambda, HookMode mode) {
  HookExponentSet h;
  h.mode = mode;
  if (mode == HookMode::positive) {
    for (int e : hook_multiset(lambda)) h.exponents.insert(e);
    return h;
  }
  const Partition conj = lambda.conjugate();
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= conj.length(); ++j) h.exponents.insert(lambda.part(i) + conj.part(j) - i - j + 1);
  return h;
}

std::vector<std::vector<Cell>> standard_tableaux(const Partition& lambda) {
  std::vector<std::vector<Cell>> out;
  const int n = lambda.size();
  std::vector<int> filled(static_cast<std::size_t>(lambda.length()), 0);
  std::vector<Cell> cur;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < lambda.length(); ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (filled[ui] >= lambda.parts()[ui]) continue;
      if (i > 0 && filled[ui - 1] <= filled[ui]) continue;
      ++filled[ui];
      cur.emplace_back(i + 1, filled[ui]);
      rec(k + 1);
      cur.pop_back();
      --filled[ui];
    }
  };
  rec(1);
  return out;
}

}  // namespace affhecke
