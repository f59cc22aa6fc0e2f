#include "affhecke/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

Segment::Segment(int start, int end) : i(start), j(end) {
  if (start > end) throw DomainError("segment [" + std::to_string(start) + "," + std::to_string(end) + "] is empty");
}

std::string Segment::to_string() const { return "[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

bool segment_less(const Segment& s, const Segment& t) { return s.j < t.j || (s.j == t.j && s.i < t.i); }

bool precedes(const Segment& s, const Segment& t) { return s.i < t.i && s.j < t.j && t.i <= s.j + 1; }

Multisegment::Multisegment(std::initializer_list<Segment> segs) {
  for (const auto& s : segs) add(s);
}

Multisegment::Multisegment(const std::vector<Segment>& segs) {
  for (const auto& s : segs) add(s);
}

void Multisegment::add(const Segment& s, int mult) {
  if (mult < 0) throw DomainError("negative multiplicity");
  if (mult == 0) return;
  m_[s] += mult;
}

void Multisegment::remove(const Segment& s) {
  auto it = m_.find(s);
  if (it == m_.end()) throw DomainError("segment not present: " + s.to_string());
  if (--it->second == 0) m_.erase(it);
}

int Multisegment::mult(const Segment& s) const {
  auto it = m_.find(s);
  return it == m_.end() ? 0 : it->second;
}

int Multisegment::degree() const {
  int d = 0;
  for (const auto& [s, k] : m_) d += k * s.length();
  return d;
}

int Multisegment::count() const {
  int c = 0;
  for (const auto& [s, k] : m_) c += k;
  return c;
}

std::vector<Segment> Multisegment::pbw_sequence() const {
  std::vector<Segment> out;
  for (const auto& [s, k] : m_)
    for (int r = 0; r < k; ++r) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), segment_less);
  return out;
}

std::map<int, int> Multisegment::dimension_vector() const {
  std::map<int, int> d;
  for (const auto& [s, k] : m_)
    for (int p = s.i; p <= s.j; ++p) d[p] += k;
  return d;
}

int Multisegment::min_point() const {
  if (m_.empty()) throw DomainError("empty multisegment has no support");
  int lo = m_.begin()->first.i;
  for (const auto& [s, k] : m_) lo = std::min(lo, s.i);
  return lo;
}

int Multisegment::max_point() const {
  if (m_.empty()) throw DomainError("empty multisegment has no support");
  int hi = m_.begin()->first.j;
  for (const auto& [s, k] : m_) hi = std::max(hi, s.j);
  return hi;
}

Multisegment Multisegment::shifted(int by) const {
  Multisegment r;
  for (const auto& [s, k] : m_) r.add(Segment(s.i + by, s.j + by), k);
  return r;
}

int Multisegment::rank_key() const {
  int key = 0;
  for (const auto& [s, k] : m_) key += k * s.length() * s.length();
  return key;
}

std::string Multisegment::to_string() const {
  if (m_.empty()) return "0";
  std::vector<std::pair<Segment, int>> v(m_.begin(), m_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return segment_less(a.first, b.first); });
  std::ostringstream os;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) os << "+";
    if (v[t].second != 1) os << v[t].second;
    os << v[t].first.to_string();
  }
  return os.str();
}

Multisegment Multisegment::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Multisegment m;
  if (s.empty() || s == "0") return m;
  std::size_t pos = 0;
  auto fail = [&]() -> void { throw DomainError("cannot parse multisegment: " + text); };
  auto read_int = [&]() -> int {
    std::size_t st = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == st || (pos == st + 1 && s[st] == '-')) fail();
    return std::stoi(s.substr(st, pos - st));
  };
  while (true) {
    int mult = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) mult = read_int();
    if (pos >= s.size() || s[pos] != '[') fail();
    ++pos;
    int i = read_int();
    int j = i;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      j = read_int();
    }
    if (pos >= s.size() || s[pos] != ']') fail();
    ++pos;
    if (mult <= 0) fail();
    m.add(Segment(i, j), mult);
    if (pos == s.size()) break;
    if (s[pos] != '+') fail();
    ++pos;
  }
  return m;
}

Multisegment operator+(const Multisegment& a, const Multisegment& b) {
  Multisegment r = a;
  for (const auto& [s, k] : b.m_) r.add(s, k);
  return r;
}

DegreeInfo degree_and_dimvector(const Multisegment& m) { return {m.degree(), m.dimension_vector()}; }

std::set<Multisegment> elementary_moves(const Multisegment& m) {
  std::set<Multisegment> out;
  for (const auto& [s, ks] : m.mults())
    for (const auto& [t, kt] : m.mults()) {
      if (!precedes(s, t)) continue;
      Multisegment r = m;
      r.remove(s);
      r.remove(t);
      r.add(Segment(s.i, t.j));
      if (t.i <= s.j) r.add(Segment(t.i, s.j));
      out.insert(std::move(r));
    }
  return out;
}

std::set<Multisegment> zel_upper_set(const Multisegment& m) {
  std::set<Multisegment> seen{m};
  std::deque<Multisegment> queue{m};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto& n : elementary_moves(cur))
      if (seen.insert(n).second) queue.push_back(n);
  }
  return seen;
}

bool zel_leq(const Multisegment& m, const Multisegment& n) {
  if (m == n) return true;
  if (m.dimension_vector() != n.dimension_vector()) return false;
  // Moves strictly increase rank_key, so prune anything already past n.
  const int target = n.rank_key();
  std::set<Multisegment> seen{m};
  std::deque<Multisegment> queue{m};
  while (!queue.empty()) {
    Multisegment cur = std::move(queue.front());
    queue.pop_front();
    for (auto& x : elementary_moves(cur)) {
      if (x == n) return true;
      if (x.rank_key() >= target) continue;
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return false;
}

std::vector<Multisegment> multisegments_of_weight(const std::map<int, int>& dimvector) {
  std::vector<Multisegment> out;
  int lo = 0, hi = -1;
  for (const auto& [p, k] : dimvector) {
    if (k < 0) throw DomainError("negative dimension vector entry");
    if (k == 0) continue;
    if (hi < lo) lo = hi = p;
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  if (hi < lo) return {Multisegment()};
  std::vector<int> d(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [p, k] : dimvector)
    if (k > 0) d[static_cast<std::size_t>(p - lo)] = k;
  auto at = [&](int p) -> int& { return d[static_cast<std::size_t>(p - lo)]; };

  Multisegment cur;
  // The lowest occupied point p must be the start of d[p] segments.
  std::function<void(int)> rec;
  std::function<void(int, int, int)> choose = [&](int p, int left, int min_end) {
    if (left == 0) {
      rec(p + 1);
      return;
    }
    // ends are nondecreasing; every point of [p,e] must still be available
    for (int e = p; e <= hi && at(e) > 0; ++e) {
      if (e < min_end) continue;
      for (int x = p; x <= e; ++x) --at(x);
      cur.add(Segment(p, e));
      choose(p, left - 1, e);
      cur.remove(Segment(p, e));
      for (int x = p; x <= e; ++x) ++at(x);
    }
  };
  rec = [&](int from) {
    int p = from;
    while (p <= hi && at(p) == 0) ++p;
    if (p > hi) {
      out.push_back(cur);
      return;
    }
    choose(p, at(p), p);
  };
  rec(lo);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Multisegment> multisegments_in_window(int lo, int hi, int max_degree) {
  std::vector<Segment> segs;
  for (int i = lo; i <= hi; ++i)
    for (int j = i; j <= hi; ++j) segs.emplace_back(i, j);
  std::vector<Multisegment> out;
  Multisegment cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int deg) {
    if (idx == segs.size()) {
      out.push_back(cur);
      return;
    }
    const int len = segs[idx].length();
    for (int k = 0; deg + k * len <= max_degree; ++k) {
      if (k) cur.add(segs[idx]);
      rec(idx + 1, deg + k * len);
    }
    for (int k = cur.mult(segs[idx]); k > 0; --k) cur.remove(segs[idx]);
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Multisegment evaluation_multisegment(const Partition& lambda, int a) {
  Multisegment m;
  for (int i = 1; i <= lambda.length(); ++i) m.add(Segment(a - i + 1, a - i + lambda.part(i)));
  return m;
}

bool as_evaluation_point(const Multisegment& m, EvaluationPoint& out) {
  if (m.empty()) return false;
  std::vector<Segment> segs;
  for (const auto& [s, k] : m.mults()) {
    if (k != 1) return false;
    segs.push_back(s);
  }
  std::sort(segs.begin(), segs.end(), [](const Segment& x, const Segment& y) { return x.i > y.i; });
  const int a = segs.front().i;
  std::vector<int> parts;
  for (std::size_t r = 0; r < segs.size(); ++r) {
    if (segs[r].i != a - static_cast<int>(r)) return false;
    parts.push_back(segs[r].length());
    if (r > 0 && parts[r] > parts[r - 1]) return false;
  }
  out.lambda = Partition(parts);
  out.a = a;
  return true;
}

std::string ColumnSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int e : elements) {
    os << (first ? "" : ",") << e;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

// The elements of `outer` not in `inner` must all lie outside the open
// interval spanned by `inner`.
bool surrounds(const std::set<int>& outer, const std::set<int>& inner) {
  if (inner.empty()) return true;
  const int lo = *inner.begin();
  const int hi = *inner.rbegin();
  for (int x : outer)
    if (lo < x && x < hi) return false;
  return true;
}

}  // namespace

bool weakly_separated(const ColumnSet& a, const ColumnSet& b) {
  if (a.rank != b.rank) throw DomainError("weakly_separated: ambient ranks differ");
  std::set<int> amb, bma;
  std::set_difference(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                      std::inserter(amb, amb.end()));
  std::set_difference(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end(),
                      std::inserter(bma, bma.end()));
  // The smaller set's leftover must split around the larger set's leftover.
  const std::size_t na = a.elements.size();
  const std::size_t nb = b.elements.size();
  if (na < nb) return surrounds(amb, bma);
  if (nb < na) return surrounds(bma, amb);
  return surrounds(amb, bma) || surrounds(bma, amb);
}

ColumnSet flag_minor_set(const Multisegment& m, int N) {
  EvaluationPoint ep;
  if (!as_evaluation_point(m, ep)) throw DomainError("not a flag-minor multisegment: " + m.to_string());
  if (m.min_point() < 1 || m.max_point() > N - 1)
    throw DomainError("multisegment " + m.to_string() + " outside window N=" + std::to_string(N));
  ColumnSet J;
  J.rank = N;
  const int r = ep.lambda.length();
  const int c = ep.a - r;  // columns of the minor are c+1..c+r
  for (int x = 1; x <= c; ++x) J.elements.insert(x);
  for (const auto& [s, k] : m.mults()) J.elements.insert(s.j + 1);
  return J;
}

Multisegment flag_minor_multisegment(const ColumnSet& J) {
  int c = 0;
  while (J.elements.count(c + 1)) ++c;
  std::vector<int> rows;
  for (int x : J.elements)
    if (x > c) rows.push_back(x);
  if (rows.empty()) throw DomainError("initial interval is the trivial flag minor");
  std::sort(rows.rbegin(), rows.rend());
  const int r = static_cast<int>(rows.size());
  Multisegment m;
  for (int t = 0; t < r; ++t) m.add(Segment(c + r - t, rows[static_cast<std::size_t>(t)] - 1));
  return m;
}

std::vector<ColumnSet> all_flag_minor_sets(int N) {
  std::vector<ColumnSet> out;
  for (unsigned mask = 1; mask < (1u << N); ++mask) {
    ColumnSet J;
    J.rank = N;
    for (int x = 1; x <= N; ++x)
      if (mask & (1u << (x - 1))) J.elements.insert(x);
    const int k = static_cast<int>(J.elements.size());
    if (*J.elements.rbegin() == k) continue;  // initial interval
    out.push_back(std::move(J));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HookVerdict hook_criterion(const Partition& lambda, const std::vector<int>& exps, HookMode mode) {
  const HookExponentSet hooks = hook_exponent_set(lambda, mode);
  HookVerdict v;
  for (std::size_t x = 0; x < exps.size(); ++x)
    for (std::size_t y = x + 1; y < exps.size(); ++y) {
      const int d = std::abs(exps[x] - exps[y]);
      const bool bad = mode == HookMode::positive ? hooks.contains(d) : hooks.symmetric().count(d) > 0;
      if (bad) v.violations.push_back({x, y, exps[x], exps[y], d});
    }
  v.simple = v.violations.empty();
  return v;
}

}  // namespace affhecke
