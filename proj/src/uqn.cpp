#include "affhecke/uqn.hpp"

#include <algorithm>
#include <cstdlib>

#include "affhecke/error.hpp"

namespace affhecke {

Window::Window(int n, int d) : N(n), max_degree(d) {
  if (n < 2) throw DomainError("window: N must be at least 2");
  if (d < 1) throw DomainError("window: max degree must be at least 1");
}

bool Window::contains(const Multisegment& m) const {
  if (m.empty()) return true;
  return m.min_point() >= 1 && m.max_point() <= N - 1 && m.degree() <= max_degree;
}

int weight_degree(const Weight& w) {
  int d = 0;
  for (const auto& [p, c] : w) d += c;
  return d;
}

std::string weight_to_string(const Weight& w) {
  std::string s;
  for (const auto& [p, c] : w) {
    if (!s.empty()) s += ",";
    s += std::to_string(p) + ":" + std::to_string(c);
  }
  return s;
}

// ---------------------------------------------------------------------------

FreeElement FreeElement::word(const Word& w, const Laurent& c) {
  FreeElement x;
  if (!c.is_zero()) x.terms_[w] = c;
  return x;
}

RatFun FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  if (it == terms_.end()) return RatFun();
  return RatFun(it->second) / RatFun(den_);
}

namespace {
void add_into(std::map<Word, Laurent>& dst, const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = dst.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) dst.erase(it);
}
}  // namespace

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  if (o.terms_.empty()) return *this;
  if (den_ == o.den_) {
    for (const auto& [w, c] : o.terms_) add_into(terms_, w, c);
    return *this;
  }
  std::map<Word, Laurent> t;
  for (const auto& [w, c] : terms_) add_into(t, w, c * o.den_);
  for (const auto& [w, c] : o.terms_) add_into(t, w, c * den_);
  terms_ = std::move(t);
  den_ = den_ * o.den_;
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) { return *this += o.scaled(Laurent(-1)); }

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      add_into(r.terms_, w, c * d);
    }
  r.den_ = a.den_ * b.den_;
  return r;
}

FreeElement FreeElement::scaled(const Laurent& c) const {
  FreeElement r;
  r.den_ = den_;
  if (c.is_zero()) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

FreeElement FreeElement::divided(const Laurent& d) const {
  if (d.is_zero()) throw DomainError("free element divided by zero");
  FreeElement r = *this;
  r.den_ = den_ * d;
  return r;
}

bool FreeElement::equals(const FreeElement& o) const {
  std::map<Word, Laurent> diff;
  for (const auto& [w, c] : terms_) add_into(diff, w, c * o.den_);
  for (const auto& [w, c] : o.terms_) add_into(diff, w, -(c * den_));
  return diff.empty();
}

FreeElement bar_element(const FreeElement& x) {
  FreeElement r;
  for (const auto& [w, c] : x.terms()) r += FreeElement::word(w, c.bar());
  return r.divided(x.denominator().bar());
}

std::vector<FreeElement> serre_relators(int N) {
  std::vector<FreeElement> out;
  for (int a = 1; a <= N - 1; ++a)
    for (int b = 1; b <= N - 1; ++b) {
      if (std::abs(a - b) == 1) {
        FreeElement s = FreeElement::word({a, a, b});
        s -= FreeElement::word({a, b, a}, Laurent::qint(2));
        s += FreeElement::word({b, a, a});
        out.push_back(s);
      } else if (b - a >= 2) {
        out.push_back(FreeElement::word({a, b}) - FreeElement::word({b, a}));
      }
    }
  return out;
}

std::vector<Word> words_of_weight(const Weight& w) {
  Word letters;
  for (const auto& [p, c] : w)
    for (int k = 0; k < c; ++k) letters.push_back(p);
  std::vector<Word> out;
  do {
    out.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

FreeElement root_vector(const Segment& s) {
  const FreeElement top = FreeElement::word({s.j});
  if (s.i == s.j) return top;
  const FreeElement rest = root_vector(Segment(s.i, s.j - 1));
  return top * rest - (rest * top).scaled(Laurent::monomial(1));
}

FreeElement pbw_expand(const Multisegment& m, const Window& w) {
  if (!w.contains(m)) throw DomainError("multisegment " + m.to_string() + " lies outside the window");
  FreeElement r = FreeElement::word({});
  const auto seq = m.pbw_sequence();
  for (std::size_t k = 0; k < seq.size();) {
    std::size_t e = k;
    while (e < seq.size() && seq[e] == seq[k]) ++e;
    const FreeElement root = root_vector(seq[k]);
    FreeElement power = FreeElement::word({});
    for (std::size_t t = k; t < e; ++t) power = power * root;
    r = r * power.divided(Laurent::qfactorial(static_cast<int>(e - k)));
    k = e;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

void check_weight(const Window& w, const Weight& nu) {
  for (const auto& [p, c] : nu) {
    if (p < 1 || p > w.N - 1) throw DomainError("weight letter " + std::to_string(p) + " outside the window");
    if (c < 0) throw DomainError("weight with negative multiplicity");
  }
  if (weight_degree(nu) > w.max_degree)
    throw ResourceError("weight of degree " + std::to_string(weight_degree(nu)) + " exceeds the window bound " +
                        std::to_string(w.max_degree));
}

Weight weight_of(const Word& w) {
  Weight nu;
  for (int a : w) ++nu[a];
  return nu;
}

bool sub_weight(const Weight& a, const Weight& b) {
  for (const auto& [p, c] : a) {
    auto it = b.find(p);
    if (it == b.end() || it->second < c) return false;
  }
  return true;
}

int pairing(int a, int b) {
  if (a == b) return 2;
  return std::abs(a - b) == 1 ? -1 : 0;
}

}  // namespace

WeightBasis weight_basis(const Window& w, const Weight& nu) {
  check_weight(w, nu);
  WeightBasis out;
  out.weight = nu;
  out.words = words_of_weight(nu);
  std::map<Word, std::size_t> idx;
  for (std::size_t k = 0; k < out.words.size(); ++k) idx[out.words[k]] = k;

  // Rank of the Serre-ideal weight subspace at the specialization q = 2.
  const Rational q0(2);
  Echelon<Rational> ideal(out.words.size());
  for (const FreeElement& s : serre_relators(w.N)) {
    const Word& sw = s.terms().begin()->first;
    Weight sigma = weight_of(sw);
    if (!sub_weight(sigma, nu)) continue;
    Weight rest = nu;
    for (const auto& [p, c] : sigma) rest[p] -= c;
    std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
    std::vector<std::pair<Word, Rational>> svals;
    for (const auto& [u, c] : s.terms()) svals.emplace_back(u, c.eval(q0));
    for (const Word& z : words_of_weight(rest))
      for (std::size_t cut = 0; cut <= z.size(); ++cut) {
        std::vector<Rational> v(out.words.size(), Rational(0));
        for (const auto& [u, c] : svals) {
          Word full(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(cut));
          full.insert(full.end(), u.begin(), u.end());
          full.insert(full.end(), z.begin() + static_cast<std::ptrdiff_t>(cut), z.end());
          v[idx.at(full)] += c;
        }
        ideal.add(std::move(v));
      }
  }
  out.ideal_rank = ideal.dim();
  std::vector<bool> pivot(out.words.size(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  for (std::size_t k = 0; k < out.words.size(); ++k)
    if (!pivot[k]) out.basis_words.push_back(out.words[k]);
  return out;
}

// ---------------------------------------------------------------------------

ShuffleCoordinates::ShuffleCoordinates(const Weight& nu) : words_(words_of_weight(nu)) {
  for (std::size_t k = 0; k < words_.size(); ++k) idx_[words_[k]] = k;
}

std::size_t ShuffleCoordinates::index(const Word& w) const {
  auto it = idx_.find(w);
  if (it == idx_.end()) throw DomainError("word outside the weight space");
  return it->second;
}

// Sum over letter-preserving bijections sigma from positions of w to
// positions of v of q^{-sum (w_s, w_t)} over pairs s < t that sigma inverts.
Laurent ShuffleCoordinates::entry(const Word& w, const Word& v) const {
  const std::size_t n = w.size();
  std::map<int, long> acc;
  std::vector<std::size_t> sigma(n);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t t, int expo) -> void {
    if (t == n) {
      ++acc[-expo];
      return;
    }
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (used[pos] || v[pos] != w[t]) continue;
      int add = 0;
      for (std::size_t s = 0; s < t; ++s)
        if (sigma[s] > pos) add += pairing(w[s], w[t]);
      used[pos] = true;
      sigma[t] = pos;
      self(self, t + 1, expo + add);
      used[pos] = false;
    }
  };
  rec(rec, 0, 0);
  Laurent r;
  for (const auto& [k, c] : acc) r += Laurent::monomial(k, BigInt(c));
  return r;
}

const std::vector<Laurent>& ShuffleCoordinates::row(const Word& w) {
  auto it = rows_.find(w);
  if (it != rows_.end()) return it->second;
  std::vector<Laurent> r(words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) r[k] = entry(w, words_[k]);
  return rows_.emplace(w, std::move(r)).first->second;
}

std::vector<Laurent> ShuffleCoordinates::image_numerator(const FreeElement& x) {
  std::vector<Laurent> out(words_.size());
  for (const auto& [w, c] : x.terms()) {
    index(w);
    const auto& r = row(w);
    for (std::size_t k = 0; k < r.size(); ++k)
      if (!r[k].is_zero()) out[k] += c * r[k];
  }
  return out;
}

bool equal_in_uqn(const FreeElement& a, const FreeElement& b, const Weight& nu) {
  ShuffleCoordinates sc(nu);
  const auto ia = sc.image_numerator(a);
  const auto ib = sc.image_numerator(b);
  for (std::size_t k = 0; k < ia.size(); ++k)
    if (ia[k] * b.denominator() != ib[k] * a.denominator()) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::size_t KMatrix::position(const Multisegment& m) const {
  auto it = std::lower_bound(index.begin(), index.end(), m);
  if (it == index.end() || *it != m) throw DomainError(m.to_string() + " is not in the K-matrix index");
  return static_cast<std::size_t>(it - index.begin());
}

const Laurent& KMatrix::at(const Multisegment& m, const Multisegment& n) const {
  return entries[position(m)][position(n)];
}

namespace {

// order[k] lists indices by decreasing rank_key; every strict ⊴-successor of
// an index comes before it.
std::vector<std::size_t> decreasing_rank(const std::vector<Multisegment>& index) {
  std::vector<std::size_t> order(index.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return index[a].rank_key() > index[b].rank_key(); });
  return order;
}

std::vector<std::vector<bool>> zel_relation(const std::vector<Multisegment>& index) {
  std::vector<std::vector<bool>> leq(index.size(), std::vector<bool>(index.size(), false));
  for (std::size_t m = 0; m < index.size(); ++m)
    for (const auto& n : zel_upper_set(index[m])) {
      auto it = std::lower_bound(index.begin(), index.end(), n);
      if (it != index.end() && *it == n) leq[m][static_cast<std::size_t>(it - index.begin())] = true;
    }
  return leq;
}

}  // namespace

KMatrix canonical_K(const Window& w, const Weight& nu) {
  check_weight(w, nu);
  KMatrix K;
  K.weight = nu;
  K.index = multisegments_of_weight(nu);
  std::sort(K.index.begin(), K.index.end());
  const std::size_t d = K.index.size();

  std::vector<FreeElement> E;
  E.reserve(d);
  for (const auto& m : K.index) E.push_back(pbw_expand(m, w));

  ShuffleCoordinates sc(nu);
  const std::size_t W = sc.size();
  std::vector<std::vector<Laurent>> P(d);
  for (std::size_t m = 0; m < d; ++m) P[m] = sc.image_numerator(E[m]);

  // Choose d words on which the images of the E_m are independent.
  std::vector<std::size_t> pivots;
  for (const Rational& q0 : {Rational(2), Rational(3), make_rational(5, 2), make_rational(-7, 3)}) {
    QMatrix at_q0(d, W);
    for (std::size_t m = 0; m < d; ++m) {
      const Rational dv = E[m].denominator().eval(q0);
      for (std::size_t k = 0; k < W; ++k)
        if (!P[m][k].is_zero()) at_q0(m, k) = P[m][k].eval(q0) / dv;
    }
    pivots = rref(at_q0);
    if (pivots.size() == d) break;
  }
  if (pivots.size() != d)
    throw InternalError("PBW monomials of weight " + weight_to_string(nu) + " are not independent");

  Matrix<RatFun> B(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t m = 0; m < d; ++m)
      if (!P[m][pivots[i]].is_zero()) B(i, m) = RatFun(P[m][pivots[i]]) / RatFun(E[m].denominator());
  const Matrix<RatFun> Binv = inverse(B);

  // Common multiple of all denominators, for the exact check on every word.
  Laurent L(1);
  std::vector<Laurent> dens;
  for (const auto& e : E)
    if (std::find(dens.begin(), dens.end(), e.denominator()) == dens.end()) {
      dens.push_back(e.denominator());
      L *= e.denominator();
    }
  std::vector<Laurent> Q(d);
  for (std::size_t m = 0; m < d; ++m) Q[m] = laurent_exact_quotient(L, E[m].denominator());

  K.bar_matrix.assign(d, std::vector<Laurent>(d));
  for (std::size_t n = 0; n < d; ++n) {
    const FreeElement Y = bar_element(E[n]);
    const auto y = sc.image_numerator(Y);
    // den(Y) = bar(den(E_n)) = den(E_n) since q-factorials are bar-invariant
    const Laurent Yscale = laurent_exact_quotient(L, Y.denominator());
    std::vector<RatFun> ysub(d);
    for (std::size_t i = 0; i < d; ++i)
      if (!y[pivots[i]].is_zero()) ysub[i] = RatFun(y[pivots[i]]) / RatFun(Y.denominator());
    const auto c = Binv.apply(ysub);
    for (std::size_t m = 0; m < d; ++m) {
      if (!c[m].is_laurent())
        throw InternalError("bar(E_" + K.index[n].to_string() + ") has a non-Laurent PBW coefficient");
      K.bar_matrix[m][n] = c[m].to_laurent();
    }
    for (std::size_t k = 0; k < W; ++k) {
      Laurent lhs;
      for (std::size_t m = 0; m < d; ++m)
        if (!K.bar_matrix[m][n].is_zero() && !P[m][k].is_zero()) lhs += K.bar_matrix[m][n] * Q[m] * P[m][k];
      if (lhs != Yscale * y[k])
        throw InternalError("PBW re-expansion of bar(E_" + K.index[n].to_string() + ") fails on a word");
    }
  }

  const auto leq = zel_relation(K.index);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      const Laurent& a = K.bar_matrix[m][n];
      if (m == n ? a != Laurent(1) : (!a.is_zero() && !leq[m][n]))
        throw InternalError("bar matrix is not unitriangular at (" + K.index[m].to_string() + ", " +
                            K.index[n].to_string() + ")");
    }

  // K_pn - bar(K_pn) = sum_{m != p} A_pm bar(K_mn), solved with K_pn in q Z[q].
  const auto order = decreasing_rank(K.index);
  K.entries.assign(d, std::vector<Laurent>(d));
  for (std::size_t n = 0; n < d; ++n) {
    K.entries[n][n] = Laurent(1);
    for (std::size_t p : order) {
      if (p == n) continue;
      Laurent r;
      for (std::size_t m = 0; m < d; ++m)
        if (m != p && !K.bar_matrix[p][m].is_zero() && !K.entries[m][n].is_zero())
          r += K.bar_matrix[p][m] * K.entries[m][n].bar();
      if (r.is_zero()) continue;
      if (r.bar() != -r)
        throw InternalError("bar-invariance defect is not antisymmetric at (" + K.index[p].to_string() + ", " +
                            K.index[n].to_string() + ")");
      Laurent kpn;
      for (const auto& [e, c] : r.terms())
        if (e > 0) kpn += Laurent::monomial(e, c);
      if (!leq[p][n])
        throw InternalError("K has an entry outside the ⊴ order at (" + K.index[p].to_string() + ", " +
                            K.index[n].to_string() + ")");
      K.entries[p][n] = kpn;
    }
  }
  return K;
}

std::vector<std::vector<Laurent>> dual_coeffs(const KMatrix& K) {
  const std::size_t d = K.size();
  const auto order = decreasing_rank(K.index);
  std::vector<std::vector<Laurent>> X(d, std::vector<Laurent>(d));
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t p : order) {
      Laurent v = p == n ? Laurent(1) : Laurent();
      for (std::size_t m = 0; m < d; ++m)
        if (m != p && !K.entries[p][m].is_zero() && !X[m][n].is_zero()) v -= K.entries[p][m] * X[m][n];
      X[p][n] = v;
    }
  return X;
}

FreeElement canonical_element(const KMatrix& K, const Multisegment& n, const Window& w) {
  const std::size_t col = K.position(n);
  FreeElement g;
  for (std::size_t m = 0; m < K.size(); ++m)
    if (!K.entries[m][col].is_zero()) g += pbw_expand(K.index[m], w).scaled(K.entries[m][col]);
  return g;
}

}  // namespace affhecke
