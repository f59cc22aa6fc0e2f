#include "affhecke/grothendieck.hpp"

#include <algorithm>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {
void add_term(PolyA& p, const Multisegment& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) p.erase(it);
}

std::string monomial_string(const Multisegment& m) { return m.empty() ? "1" : "t" + m.to_string(); }
}  // namespace

PolyA poly_mul(const PolyA& a, const PolyA& b) {
  PolyA r;
  for (const auto& [m, c] : a)
    for (const auto& [n, d] : b) add_term(r, m + n, c * d);
  return r;
}

PolyA poly_add(const PolyA& a, const PolyA& b, const Rational& scale) {
  PolyA r = a;
  for (const auto& [m, c] : b) add_term(r, m, c * scale);
  return r;
}

std::string poly_to_string(const PolyA& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const Rational a = abs(c);
    if (a != 1) s += to_string(a) + "*";
    s += monomial_string(m);
  }
  return s;
}

std::string expansion_to_string(const DualExpansion& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : e) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += to_string(c) + "*";
    s += "G*(" + m.to_string() + ")";
  }
  return s;
}

PolyA phi_standard(const Multisegment& m) { return {{m, Rational(1)}}; }

Tensor delta(const PolyA& p) {
  Tensor out;
  for (const auto& [m, c] : p) {
    Tensor acc{{{Multisegment(), Multisegment()}, c}};
    for (const Segment& s : m.pbw_sequence()) {
      // t_{j+1,i} -> sum over k in [i, j+1] of t_{j+1,k} x t_{k,i}
      Tensor next;
      for (const auto& [key, v] : acc)
        for (int k = s.i; k <= s.j + 1; ++k) {
          Multisegment left = key.first;
          Multisegment right = key.second;
          if (k <= s.j) left.add(Segment(k, s.j));
          if (k > s.i) right.add(Segment(s.i, k - 1));
          next[{left, right}] += v;
        }
      acc = std::move(next);
    }
    for (const auto& [key, v] : acc) {
      out[key] += v;
      if (out[key] == 0) out.erase(key);
    }
  }
  return out;
}

namespace {
std::string tensor_to_string(const Tensor& t) {
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [key, c] : t) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += to_string(c) + "*";
    s += monomial_string(key.first) + " x " + monomial_string(key.second);
  }
  return s;
}

Weight normalize(const Weight& nu, int& shift) {
  shift = nu.empty() ? 0 : 1 - nu.begin()->first;
  Weight r;
  for (const auto& [p, c] : nu)
    if (c != 0) r[p + shift] = c;
  return r;
}
}  // namespace

DualCanonical::DualCanonical(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 1) throw DomainError("max degree must be positive");
}

const DualCanonical::Entry& DualCanonical::entry(const Weight& normalized) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(normalized);
    if (it != cache_.end()) return *it->second;
  }
  const int top = normalized.empty() ? 1 : normalized.rbegin()->first;
  auto e = std::make_unique<Entry>();
  e->K = std::make_shared<const KMatrix>(canonical_K(Window(std::max(top + 1, 2), max_degree_), normalized));
  const auto inv = dual_coeffs(*e->K);
  e->dual_q1.assign(inv.size(), std::vector<Rational>(inv.size()));
  for (std::size_t a = 0; a < inv.size(); ++a)
    for (std::size_t b = 0; b < inv.size(); ++b) e->dual_q1[a][b] = inv[a][b].eval_q1();
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = cache_.emplace(normalized, std::move(e));
  return *it->second;
}

std::shared_ptr<const KMatrix> DualCanonical::k_matrix(const Weight& nu) const {
  int shift = 0;
  return entry(normalize(nu, shift)).K;
}

PolyA DualCanonical::dual_poly(const Multisegment& m) const {
  if (m.empty()) return {{m, Rational(1)}};
  int shift = 0;
  const Entry& e = entry(normalize(m.dimension_vector(), shift));
  const std::size_t row = e.K->position(m.shifted(shift));
  PolyA p;
  for (std::size_t n = 0; n < e.K->size(); ++n) add_term(p, e.K->index[n].shifted(-shift), e.dual_q1[row][n]);
  return p;
}

DualExpansion DualCanonical::expand_standard(const Multisegment& m) const {
  if (m.empty()) return {{m, Rational(1)}};
  int shift = 0;
  const Entry& e = entry(normalize(m.dimension_vector(), shift));
  const std::size_t row = e.K->position(m.shifted(shift));
  DualExpansion out;
  for (std::size_t n = 0; n < e.K->size(); ++n) {
    const Rational v = e.K->entries[row][n].eval_q1();
    if (v != 0) out[e.K->index[n].shifted(-shift)] = v;
  }
  return out;
}

DualExpansion DualCanonical::product_expand(const std::vector<Multisegment>& ms) const {
  PolyA p{{Multisegment(), Rational(1)}};
  for (const auto& m : ms) p = poly_mul(p, dual_poly(m));
  // G*(n) = t_n + (terms t_k with n ◁ k): peel off a monomial of least rank_key.
  DualExpansion out;
  while (!p.empty()) {
    auto lead = std::min_element(p.begin(), p.end(), [](const auto& a, const auto& b) {
      return a.first.rank_key() < b.first.rank_key();
    });
    const Multisegment n = lead->first;
    const Rational c = lead->second;
    if (c < 0 || c.get_den() != 1)
      throw InternalError("product expansion has coefficient " + to_string(c) + " on G*(" + n.to_string() + ")");
    out[n] = c;
    p = poly_add(p, dual_poly(n), -c);
    if (p.count(n)) throw InternalError("dual canonical element G*(" + n.to_string() + ") is not monic");
  }
  return out;
}

SimpleVerdict DualCanonical::is_simple_product(const std::vector<Multisegment>& ms) const {
  SimpleVerdict v;
  v.expansion = product_expand(ms);
  v.simple = v.expansion.size() == 1 && v.expansion.begin()->second == 1;
  return v;
}

std::vector<BialgebraEntry> DualCanonical::bialgebra_check(int N) const {
  std::vector<BialgebraEntry> out;
  for (int i = 1; i <= N - 1; ++i)
    for (int j = i; j <= N - 1; ++j) {
      // c[L_[i,j]] = L_[i,j] x 1 + sum_k L_[i,k] x L_[k+1,j] + 1 x L_[i,j]; the swap
      // puts the upper segment in the left factor, matching delta.
      Tensor lhs;
      auto put = [&](const PolyA& a, const PolyA& b) {
        for (const auto& [m, c] : a)
          for (const auto& [n, d] : b) {
            auto& slot = lhs[{n, m}];
            slot += c * d;
            if (slot == 0) lhs.erase({n, m});
          }
      };
      const PolyA one{{Multisegment(), Rational(1)}};
      const PolyA full = dual_poly(Multisegment{Segment(i, j)});
      put(full, one);
      put(one, full);
      for (int k = i; k < j; ++k)
        put(dual_poly(Multisegment{Segment(i, k)}), dual_poly(Multisegment{Segment(k + 1, j)}));
      const Tensor rhs = delta(full);
      BialgebraEntry e;
      e.segment = Segment(i, j);
      e.pass = lhs == rhs;
      e.coproduct_side = tensor_to_string(lhs);
      e.delta_side = tensor_to_string(rhs);
      out.push_back(std::move(e));
    }
  return out;
}

}  // namespace affhecke
