#include "affhecke/hecke.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>

#include "affhecke/error.hpp"

namespace affhecke {

void check_parameter(const Rational& u) {
  if (u == 0 || u == 1 || u == -1) throw DomainError("u must be a nonzero rational other than 1 and -1");
}

Rational upower(const Rational& u, int a) {
  Rational r = 1;
  const Rational base = a >= 0 ? u : Rational(1) / u;
  for (int k = 0; k < std::abs(a); ++k) r *= base;
  return r;
}

std::optional<int> ulog(const Rational& u, const Rational& x) {
  if (x == 0) return std::nullopt;
  Rational up = 1, down = 1;
  const Rational uinv = Rational(1) / u;
  for (int e = 0; e <= 256; ++e) {
    if (up == x) return e;
    if (down == x) return -e;
    up *= u;
    down *= uinv;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sparse helpers

namespace {

using SparseCol = std::vector<std::pair<std::size_t, Rational>>;

struct Sparse {
  std::vector<SparseCol> cols;

  explicit Sparse(const QMatrix& m, bool transposed = false) : cols(m.rows()) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& x = m(i, j);
        if (x == 0) continue;
        if (transposed)
          cols[i].emplace_back(j, x);
        else
          cols[j].emplace_back(i, x);
      }
  }

  QVector apply(const QVector& v) const {
    QVector r(v.size(), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      for (const auto& [i, x] : cols[k]) r[i] += x * v[k];
    }
    return r;
  }
};

std::vector<Sparse> sparse_generators(const FiniteModule& m, bool transposed) {
  std::vector<Sparse> g;
  for (const auto& t : m.T) g.emplace_back(t, transposed);
  for (const auto& y : m.y) g.emplace_back(y, transposed);
  return g;
}

// Same over Z/p, p = 2^31 - 1; used only to certify full rank.
constexpr std::uint64_t kP = 2147483647ULL;

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  a %= kP;
  while (e) {
    if (e & 1) r = r * a % kP;
    a = a * a % kP;
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> modp(const Rational& x) {
  const std::uint64_t d = mpz_fdiv_ui(x.get_den_mpz_t(), kP);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = mpz_fdiv_ui(x.get_num_mpz_t(), kP);
  return n * powmod(d, kP - 2) % kP;
}

struct SparseModp {
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> cols;
};

std::optional<std::vector<SparseModp>> modp_generators(const FiniteModule& m, bool transposed) {
  std::vector<SparseModp> out;
  auto convert = [&](const QMatrix& a) -> bool {
    SparseModp s;
    s.cols.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        auto v = modp(a(i, j));
        if (!v) return false;
        if (*v == 0) continue;
        if (transposed)
          s.cols[i].emplace_back(j, *v);
        else
          s.cols[j].emplace_back(i, *v);
      }
    out.push_back(std::move(s));
    return true;
  };
  for (const auto& t : m.T)
    if (!convert(t)) return std::nullopt;
  for (const auto& y : m.y)
    if (!convert(y)) return std::nullopt;
  return out;
}

// Whether the cyclic submodule of v is everything modulo p. A full span mod p
// implies a full span over Q; anything else is inconclusive.
bool full_spin_modp(const FiniteModule& m, const QVector& v, bool transposed) {
  const auto gens = modp_generators(m, transposed);
  if (!gens) return false;
  const std::size_t d = m.dim;
  std::vector<std::uint64_t> start(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto x = modp(v[k]);
    if (!x) return false;
    start[k] = *x;
  }
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
  auto add = [&](std::vector<std::uint64_t> w) -> bool {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t f = w[pivots[r]];
      if (!f) continue;
      const auto& row = rows[r];
      for (std::size_t j = 0; j < d; ++j)
        if (row[j]) w[j] = (w[j] + (kP - f) * row[j]) % kP;
    }
    std::size_t p = 0;
    while (p < d && !w[p]) ++p;
    if (p == d) return false;
    const std::uint64_t inv = powmod(w[p], kP - 2);
    for (auto& x : w) x = x * inv % kP;
    rows.push_back(std::move(w));
    pivots.push_back(p);
    return true;
  };
  if (!add(start)) return false;
  for (std::size_t next = 0; next < rows.size() && rows.size() < d; ++next)
    for (const auto& g : *gens) {
      std::vector<std::uint64_t> w(d, 0);
      const auto& src = rows[next];
      for (std::size_t k = 0; k < d; ++k) {
        if (!src[k]) continue;
        for (const auto& [i, x] : g.cols[k]) w[i] = (w[i] + x * src[k]) % kP;
      }
      add(std::move(w));
      if (rows.size() == d) break;
    }
  return rows.size() == d;
}

QMatrix scalar(std::size_t d, const Rational& c) { return QMatrix::identity(d).scaled(c); }

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::string> FiniteModule::relation_failure() const {
  const std::size_t d = dim;
  const QMatrix I = QMatrix::identity(d);
  if (static_cast<int>(T.size()) != std::max(n - 1, 0)) return "wrong number of T generators";
  if (!y.empty() && static_cast<int>(y.size()) != n) return "wrong number of y generators";
  for (std::size_t i = 0; i < T.size(); ++i) {
    if ((T[i] - scalar(d, u)) * (T[i] + I) != QMatrix(d, d)) return "quadratic relation fails for T_" + std::to_string(i + 1);
    for (std::size_t k = i + 1; k < T.size(); ++k) {
      if (k == i + 1) {
        if (T[i] * T[k] * T[i] != T[k] * T[i] * T[k]) return "braid relation fails for T_" + std::to_string(i + 1);
      } else if (T[i] * T[k] != T[k] * T[i]) {
        return "T_" + std::to_string(i + 1) + " and T_" + std::to_string(k + 1) + " do not commute";
      }
    }
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (rank(y[j]) != d) return "y_" + std::to_string(j + 1) + " is not invertible";
    for (std::size_t k = j + 1; k < y.size(); ++k)
      if (y[j] * y[k] != y[k] * y[j]) return "y_" + std::to_string(j + 1) + " and y_" + std::to_string(k + 1) + " do not commute";
  }
  for (std::size_t i = 0; i < T.size() && !y.empty(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (j == i || j == i + 1) continue;
      if (T[i] * y[j] != y[j] * T[i])
        return "T_" + std::to_string(i + 1) + " and y_" + std::to_string(j + 1) + " do not commute";
    }
    if (T[i] * y[i] * T[i] != y[i + 1].scaled(u)) return "T_i y_i T_i = u y_{i+1} fails for i = " + std::to_string(i + 1);
  }
  return std::nullopt;
}

void FiniteModule::verify() const {
  if (auto f = relation_failure()) throw InternalError("module relation check: " + *f);
}

FiniteModule seminormal_rep(const Partition& lambda, const Rational& u) {
  check_parameter(u);
  if (lambda.size() == 0) throw DomainError("seminormal form needs a nonempty partition");
  const auto tabs = standard_tableaux(lambda);
  std::map<std::vector<Cell>, std::size_t> index;
  for (std::size_t k = 0; k < tabs.size(); ++k) index[tabs[k]] = k;
  FiniteModule m;
  m.n = lambda.size();
  m.u = u;
  m.dim = tabs.size();
  auto content = [](const Cell& c) { return c.second - c.first; };
  for (int i = 0; i + 1 < m.n; ++i) {
    QMatrix t(m.dim, m.dim);
    for (std::size_t k = 0; k < tabs.size(); ++k) {
      const Cell a = tabs[k][static_cast<std::size_t>(i)];
      const Cell b = tabs[k][static_cast<std::size_t>(i + 1)];
      if (a.first == b.first) {
        t(k, k) = u;
      } else if (a.second == b.second) {
        t(k, k) = -1;
      } else {
        const int r = content(b) - content(a);
        const Rational alpha = (u - 1) / (1 - upower(u, -r));
        const Rational gamma = (u - 1) / (1 - upower(u, r));
        auto swapped = tabs[k];
        std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
        const std::size_t k2 = index.at(swapped);
        t(k, k) = alpha;
        t(k2, k) = a.first < b.first ? Rational(1) : alpha * gamma + u;
      }
    }
    m.T.push_back(std::move(t));
  }
  m.verify();
  return m;
}

FiniteModule evaluation_module(const Partition& lambda, const Rational& z, const Rational& u) {
  if (z == 0) throw DomainError("evaluation at z = 0");
  FiniteModule m = seminormal_rep(lambda, u);
  m.y.push_back(scalar(m.dim, z));
  const Rational uinv = Rational(1) / u;
  for (int i = 0; i + 1 < m.n; ++i) m.y.push_back((m.T[static_cast<std::size_t>(i)] * m.y.back() * m.T[static_cast<std::size_t>(i)]).scaled(uinv));
  const auto tabs = standard_tableaux(lambda);
  for (std::size_t k = 0; k < tabs.size(); ++k) {
    YWeight w;
    for (int j = 0; j < m.n; ++j) {
      const Cell c = tabs[k][static_cast<std::size_t>(j)];
      w.push_back(z * upower(u, c.second - c.first));
      for (std::size_t r = 0; r < m.dim; ++r)
        if (m.y[static_cast<std::size_t>(j)](r, k) != (r == k ? w.back() : Rational(0)))
          throw InternalError("evaluation module: y_" + std::to_string(j + 1) + " is not diagonal with content weights");
    }
    ++m.character[w];
  }
  m.verify();
  return m;
}

FiniteModule segment_module(const Segment& s, const Rational& u) {
  return evaluation_module(Partition({s.length()}), upower(u, s.i), u);
}

FiniteModule induce(const FiniteModule& a, const FiniteModule& b) {
  if (a.u != b.u) throw DomainError("induction of modules with different parameters");
  if (a.y.size() != static_cast<std::size_t>(a.n) || b.y.size() != static_cast<std::size_t>(b.n))
    throw DomainError("induction needs modules over the affine Hecke algebra");
  const int n1 = a.n, n2 = b.n, n = n1 + n2;
  const std::size_t d1 = a.dim, d2 = b.dim, dd = d1 * d2;
  const Rational u = a.u;

  // Minimal coset representatives: x increasing on {0..n1-1} and on {n1..n-1}.
  std::vector<std::vector<int>> reps;
  {
    std::vector<int> sel(static_cast<std::size_t>(n), 0);
    std::fill(sel.begin(), sel.begin() + n1, 1);
    do {
      std::vector<int> x(static_cast<std::size_t>(n));
      int p1 = 0, p2 = n1;
      for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(sel[static_cast<std::size_t>(v)] ? p1++ : p2++)] = v;
      reps.push_back(std::move(x));
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  auto length = [](const std::vector<int>& x) {
    int l = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t q = p + 1; q < x.size(); ++q) l += x[p] > x[q];
    return l;
  };
  std::stable_sort(reps.begin(), reps.end(), [&](const auto& x, const auto& z) { return length(x) < length(z); });
  std::map<std::vector<int>, std::size_t> rindex;
  for (std::size_t k = 0; k < reps.size(); ++k) rindex[reps[k]] = k;
  auto inverse_of = [&](const std::vector<int>& x) {
    std::vector<int> inv(x.size());
    for (std::size_t p = 0; p < x.size(); ++p) inv[static_cast<std::size_t>(x[p])] = static_cast<int>(p);
    return inv;
  };
  auto swap_values = [](std::vector<int> x, int i) {
    for (auto& v : x) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
    return x;
  };

  FiniteModule m;
  m.n = n;
  m.u = u;
  m.dim = reps.size() * dd;
  const std::size_t D = m.dim;

  // Local generator on M1 ⊗ M2 at position p (0-based), acting on the index k = k1*d2 + k2.
  auto local = [&](const QMatrix& g, bool first, std::size_t k, std::vector<std::pair<std::size_t, Rational>>& out) {
    const std::size_t k1 = k / d2, k2 = k % d2;
    if (first) {
      for (std::size_t r = 0; r < d1; ++r)
        if (g(r, k1) != 0) out.emplace_back(r * d2 + k2, g(r, k1));
    } else {
      for (std::size_t r = 0; r < d2; ++r)
        if (g(r, k2) != 0) out.emplace_back(k1 * d2 + r, g(r, k2));
    }
  };

  for (int i = 0; i + 1 < n; ++i) {
    QMatrix t(D, D);
    for (std::size_t xi = 0; xi < reps.size(); ++xi) {
      const auto inv = inverse_of(reps[xi]);
      const int p = inv[static_cast<std::size_t>(i)], p2 = inv[static_cast<std::size_t>(i + 1)];
      const bool same_block = (p < n1) == (p2 < n1);
      for (std::size_t k = 0; k < dd; ++k) {
        const std::size_t col = xi * dd + k;
        if (p < p2 && same_block) {
          std::vector<std::pair<std::size_t, Rational>> out;
          if (p < n1)
            local(a.T[static_cast<std::size_t>(p)], true, k, out);
          else
            local(b.T[static_cast<std::size_t>(p - n1)], false, k, out);
          for (const auto& [r, c] : out) t(xi * dd + r, col) += c;
        } else if (p < p2) {
          t(rindex.at(swap_values(reps[xi], i)) * dd + k, col) = 1;
        } else {
          t(col, col) = u - 1;
          t(rindex.at(swap_values(reps[xi], i)) * dd + k, col) = u;
        }
      }
    }
    m.T.push_back(std::move(t));
  }

  // y_j columns by induction on the length of x, through
  //   y_j T_i = T_i y_j (j != i, i+1),
  //   y_{i+1} T_i = T_i y_i + (u-1) y_{i+1},   y_i T_i = T_i y_{i+1} - (u-1) y_{i+1}.
  std::vector<Sparse> Ts;
  for (const auto& t : m.T) Ts.emplace_back(t);
  std::vector<std::vector<QVector>> ycols(static_cast<std::size_t>(n), std::vector<QVector>(D));
  for (std::size_t xi = 0; xi < reps.size(); ++xi) {
    const auto inv = inverse_of(reps[xi]);
    int desc = -1;
    for (int i = 0; i + 1 < n && desc < 0; ++i)
      if (inv[static_cast<std::size_t>(i)] > inv[static_cast<std::size_t>(i + 1)]) desc = i;
    for (std::size_t k = 0; k < dd; ++k) {
      const std::size_t col = xi * dd + k;
      for (int j = 0; j < n; ++j) {
        QVector v(D, Rational(0));
        if (desc < 0) {
          std::vector<std::pair<std::size_t, Rational>> out;
          if (j < n1)
            local(a.y[static_cast<std::size_t>(j)], true, k, out);
          else
            local(b.y[static_cast<std::size_t>(j - n1)], false, k, out);
          for (const auto& [r, c] : out) v[xi * dd + r] += c;
        } else {
          const std::size_t prev = rindex.at(swap_values(reps[xi], desc)) * dd + k;
          const auto& Ti = Ts[static_cast<std::size_t>(desc)];
          if (j != desc && j != desc + 1) {
            v = Ti.apply(ycols[static_cast<std::size_t>(j)][prev]);
          } else {
            const auto& ynext = ycols[static_cast<std::size_t>(desc + 1)][prev];
            const Rational sgn = j == desc ? Rational(-1) : Rational(1);
            v = Ti.apply(j == desc ? ynext : ycols[static_cast<std::size_t>(desc)][prev]);
            for (std::size_t r = 0; r < D; ++r)
              if (ynext[r] != 0) v[r] += sgn * (u - 1) * ynext[r];
          }
        }
        ycols[static_cast<std::size_t>(j)][col] = std::move(v);
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    QMatrix y(D, D);
    for (std::size_t c = 0; c < D; ++c) y.set_col(c, ycols[static_cast<std::size_t>(j)][c]);
    m.y.push_back(std::move(y));
  }

  for (const auto& [w1, c1] : a.character)
    for (const auto& [w2, c2] : b.character) {
      YWeight cat = w1;
      cat.insert(cat.end(), w2.begin(), w2.end());
      for (const auto& x : reps) {
        YWeight w(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p) w[static_cast<std::size_t>(x[static_cast<std::size_t>(p)])] = cat[static_cast<std::size_t>(p)];
        m.character[w] += c1 * c2;
      }
    }
  m.verify();
  return m;
}

FiniteModule induce_all(const std::vector<FiniteModule>& factors) {
  if (factors.empty()) throw DomainError("induction of an empty list of modules");
  FiniteModule m = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) m = induce(m, factors[k]);
  return m;
}

// ---------------------------------------------------------------------------

namespace {
std::vector<QVector> spin_impl(const FiniteModule& m, const QVector& v, bool transposed) {
  const auto gens = sparse_generators(m, transposed);
  Echelon<Rational> e(m.dim);
  std::vector<QVector> raw;
  if (!e.add(v)) return {};
  raw.push_back(v);
  for (std::size_t next = 0; next < raw.size() && e.dim() < m.dim; ++next)
    for (const auto& g : gens) {
      QVector w = g.apply(raw[next]);
      if (e.add(w)) raw.push_back(std::move(w));
      if (e.dim() == m.dim) break;
    }
  return e.rows();
}

// Vectors orthogonal to every vector of s.
std::vector<QVector> annihilator(const std::vector<QVector>& s, std::size_t d) {
  QMatrix a(s.size(), d);
  for (std::size_t r = 0; r < s.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) a(r, c) = s[r][c];
  return nullspace(a);
}

// Joint kernel of (y_j - w_j) (or of the transposes).
std::vector<QVector> joint_eigenspace(const FiniteModule& m, const YWeight& w, bool transposed) {
  const std::size_t d = m.dim;
  std::vector<QVector> basis;
  for (std::size_t j = 0; j < m.y.size(); ++j) {
    QMatrix a = m.y[j] - scalar(d, w[j]);
    if (transposed) a = a.transpose();
    if (j == 0) {
      basis = nullspace(a);
    } else {
      QMatrix img(d, basis.size());
      for (std::size_t c = 0; c < basis.size(); ++c) img.set_col(c, a.apply(basis[c]));
      std::vector<QVector> next;
      for (const auto& coef : nullspace(img)) {
        QVector v(d, Rational(0));
        for (std::size_t c = 0; c < basis.size(); ++c)
          if (coef[c] != 0)
            for (std::size_t r = 0; r < d; ++r) v[r] += coef[c] * basis[c][r];
        next.push_back(std::move(v));
      }
      basis = std::move(next);
    }
    if (basis.empty()) break;
  }
  return basis;
}

bool spin_is_full(const FiniteModule& m, const QVector& v, bool transposed, std::vector<QVector>* span) {
  if (full_spin_modp(m, v, transposed)) return true;
  auto s = spin_impl(m, v, transposed);
  const bool full = s.size() == m.dim;
  if (span) *span = std::move(s);
  return full;
}

// A proper nonzero submodule, or nullopt when Norton's test proves simplicity.
// Norton: if the joint weight-w eigenspaces of M and of its dual are both
// lines, spanned by v and v', then M is simple iff v generates M and v'
// generates the dual. Any submodule either has a weight-w vector (so contains
// v) or its annihilator in the dual does (so contains v').
std::optional<std::vector<QVector>> find_submodule(const FiniteModule& m) {
  if (m.dim <= 1) return std::nullopt;
  if (m.y.empty()) throw DomainError("submodule search needs the y generators");
  if (m.character.empty()) throw DomainError("submodule search needs the module character");
  std::vector<std::pair<int, YWeight>> order;
  for (const auto& [w, c] : m.character) order.emplace_back(c, w);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [mult, w] : order) {
    const auto E = joint_eigenspace(m, w, false);
    for (const auto& v : E) {
      std::vector<QVector> s;
      if (!spin_is_full(m, v, false, &s)) return s;
    }
    const auto Et = joint_eigenspace(m, w, true);
    for (const auto& v : Et) {
      std::vector<QVector> s;
      if (!spin_is_full(m, v, true, &s)) return annihilator(s, m.dim);
    }
    if (E.size() == 1 && Et.size() == 1) return std::nullopt;
  }
  throw ResourceError("simplicity undecided: no weight has one-dimensional joint eigenspaces (dimension " +
                      std::to_string(m.dim) + ")");
}

}  // namespace

std::vector<QVector> spin(const FiniteModule& m, const QVector& v) { return spin_impl(m, v, false); }
std::vector<QVector> spin_transposed(const FiniteModule& m, const QVector& v) { return spin_impl(m, v, true); }

namespace {
// Full algebra span modulo p certifies the full span over Q.
bool full_algebra_modp(const FiniteModule& m) {
  const auto gens = modp_generators(m, false);
  if (!gens) return false;
  const std::size_t d = m.dim, dd = d * d;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<std::uint64_t>> found;
  auto add = [&](std::vector<std::uint64_t> w) -> bool {
    auto orig = w;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t f = w[pivots[r]];
      if (!f) continue;
      const auto& row = rows[r];
      for (std::size_t j = 0; j < dd; ++j)
        if (row[j]) w[j] = (w[j] + (kP - f) * row[j]) % kP;
    }
    std::size_t p = 0;
    while (p < dd && !w[p]) ++p;
    if (p == dd) return false;
    const std::uint64_t inv = powmod(w[p], kP - 2);
    for (auto& x : w) x = x * inv % kP;
    rows.push_back(std::move(w));
    pivots.push_back(p);
    found.push_back(std::move(orig));
    return true;
  };
  std::vector<std::uint64_t> id(dd, 0);
  for (std::size_t i = 0; i < d; ++i) id[i * d + i] = 1;
  add(id);
  for (std::size_t next = 0; next < found.size() && rows.size() < dd; ++next)
    for (const auto& g : *gens) {
      // (g * a)(i, j) = sum_k g(i, k) a(k, j)
      std::vector<std::uint64_t> prod(dd, 0);
      const auto& a = found[next];
      for (std::size_t k = 0; k < d; ++k)
        for (const auto& [i, x] : g.cols[k])
          for (std::size_t j = 0; j < d; ++j)
            if (a[k * d + j]) prod[i * d + j] = (prod[i * d + j] + x * a[k * d + j]) % kP;
      add(std::move(prod));
      if (rows.size() == dd) break;
    }
  return rows.size() == dd;
}
}  // namespace

std::size_t burnside_span_dimension(const FiniteModule& m) {
  const std::size_t d = m.dim;
  if (full_algebra_modp(m)) return d * d;
  std::vector<QMatrix> gens = m.T;
  gens.insert(gens.end(), m.y.begin(), m.y.end());
  auto flat = [d](const QMatrix& a) {
    QVector v(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) v[i * d + j] = a(i, j);
    return v;
  };
  Echelon<Rational> span(d * d);
  std::vector<QMatrix> found{QMatrix::identity(d)};
  span.add(flat(found[0]));
  for (std::size_t next = 0; next < found.size() && span.dim() < d * d; ++next)
    for (const auto& g : gens) {
      QMatrix p = g * found[next];
      if (span.add(flat(p))) found.push_back(std::move(p));
    }
  return span.dim();
}

bool burnside_is_simple(const FiniteModule& m, SimplicityMethod* used) {
  if (m.dim <= kBurnsideSpanLimit || m.y.empty()) {
    if (used) *used = SimplicityMethod::burnside;
    return burnside_span_dimension(m) == m.dim * m.dim;
  }
  if (used) *used = SimplicityMethod::norton;
  return !find_submodule(m).has_value();
}

// ---------------------------------------------------------------------------

namespace {

// Row-reduced basis; rows() of the result are the RREF rows.
QMatrix rref_rows(const std::vector<QVector>& basis, std::size_t d, std::vector<std::size_t>& pivots) {
  QMatrix a(basis.size(), d);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) a(r, c) = basis[r][c];
  pivots = rref(a);
  return a;
}

}  // namespace

FiniteModule submodule(const FiniteModule& m, const std::vector<QVector>& basis) {
  std::vector<std::size_t> piv;
  const QMatrix R = rref_rows(basis, m.dim, piv);
  const std::size_t k = piv.size();
  FiniteModule s;
  s.n = m.n;
  s.u = m.u;
  s.dim = k;
  auto restrict_gen = [&](const QMatrix& g) {
    QMatrix out(k, k);
    for (std::size_t c = 0; c < k; ++c) {
      const QVector img = g.apply(R.row(c));
      QVector check(m.dim, Rational(0));
      for (std::size_t r = 0; r < k; ++r) {
        out(r, c) = img[piv[r]];
        if (out(r, c) != 0)
          for (std::size_t t = 0; t < m.dim; ++t) check[t] += out(r, c) * R(r, t);
      }
      if (check != img) throw InternalError("submodule: subspace is not invariant");
    }
    return out;
  };
  for (const auto& t : m.T) s.T.push_back(restrict_gen(t));
  for (const auto& y : m.y) s.y.push_back(restrict_gen(y));
  if (!m.character.empty()) {
    std::vector<YWeight> cand;
    for (const auto& [w, c] : m.character) cand.push_back(w);
    s.character = character_of(s, cand);
  }
  return s;
}

FiniteModule quotient(const FiniteModule& m, const std::vector<QVector>& basis) {
  std::vector<std::size_t> piv;
  const QMatrix R = rref_rows(basis, m.dim, piv);
  std::vector<bool> is_piv(m.dim, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < m.dim; ++c)
    if (!is_piv[c]) rest.push_back(c);
  FiniteModule q;
  q.n = m.n;
  q.u = m.u;
  q.dim = rest.size();
  auto act = [&](const QMatrix& g) {
    QMatrix out(rest.size(), rest.size());
    for (std::size_t c = 0; c < rest.size(); ++c) {
      QVector img = g.col(rest[c]);
      for (std::size_t r = 0; r < piv.size(); ++r) {
        const Rational f = img[piv[r]];
        if (f == 0) continue;
        for (std::size_t t = 0; t < m.dim; ++t)
          if (R(r, t) != 0) img[t] -= f * R(r, t);
      }
      for (std::size_t r = 0; r < rest.size(); ++r) out(r, c) = img[rest[r]];
    }
    return out;
  };
  for (const auto& t : m.T) q.T.push_back(act(t));
  for (const auto& y : m.y) q.y.push_back(act(y));
  if (!m.character.empty()) {
    std::vector<YWeight> cand;
    for (const auto& [w, c] : m.character) cand.push_back(w);
    q.character = character_of(q, cand);
  }
  return q;
}

// ---------------------------------------------------------------------------

namespace {

// Characteristic polynomial (low degree first) by Hessenberg reduction.
std::vector<Rational> charpoly(QMatrix h) {
  const std::size_t n = h.rows();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, piv), h(i, m));
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const Rational t = h(i, m - 1) / h(m, m - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (h(m, j) != 0) h(i, j) -= t * h(m, j);
      for (std::size_t r = 0; r < n; ++r)
        if (h(r, i) != 0) h(r, m) += t * h(r, i);
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<j<=k} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> r(k + 1, Rational(0));
    for (std::size_t t = 0; t < p[k - 1].size(); ++t) {
      r[t + 1] += p[k - 1][t];
      r[t] -= h(k - 1, k - 1) * p[k - 1][t];
    }
    Rational prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      const Rational c = h(i - 1, k - 1) * prod;
      if (c != 0)
        for (std::size_t t = 0; t < p[i - 1].size(); ++t) r[t] -= c * p[i - 1][t];
    }
    p[k] = std::move(r);
  }
  return p[n];
}

int root_multiplicity(std::vector<Rational> poly, const Rational& c) {
  int mult = 0;
  while (poly.size() > 1) {
    // synthetic division by (x - c)
    std::vector<Rational> q(poly.size() - 1);
    Rational acc = 0;
    for (std::size_t k = poly.size(); k-- > 0;) {
      acc = acc * c + poly[k];
      if (k > 0) q[k - 1] = acc;
    }
    if (acc != 0) break;
    ++mult;
    poly = std::move(q);
  }
  return mult;
}

}  // namespace

Character character_of(const FiniteModule& m, const std::vector<YWeight>& candidates) {
  Character out;
  if (m.dim == 0) return out;
  std::vector<YWeight> cand = candidates;
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  // A combination sum r_j y_j separating all candidate weights.
  for (long seed = 1; seed < 64; ++seed) {
    std::vector<Rational> r;
    long c = 1;
    for (std::size_t j = 0; j < m.y.size(); ++j) {
      r.emplace_back(c);
      c = c * (7 + seed) + seed;
    }
    std::vector<Rational> vals;
    for (const auto& w : cand) {
      Rational v = 0;
      for (std::size_t j = 0; j < w.size(); ++j) v += r[j] * w[j];
      vals.push_back(v);
    }
    auto sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    QMatrix Y(m.dim, m.dim);
    for (std::size_t j = 0; j < m.y.size(); ++j) Y = Y + m.y[j].scaled(r[j]);
    const auto cp = charpoly(Y);
    std::size_t total = 0;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const int mult = root_multiplicity(cp, vals[k]);
      if (mult > 0) {
        out[cand[k]] = mult;
        total += static_cast<std::size_t>(mult);
      }
    }
    if (total != m.dim) throw InternalError("character: candidate weights do not exhaust the module");
    return out;
  }
  throw InternalError("character: could not separate candidate weights");
}

std::map<int, int> exponent_content(const Character& c, const Rational& u) {
  if (c.empty()) return {};
  std::map<int, int> out;
  for (const auto& x : c.begin()->first) {
    auto e = ulog(u, x);
    if (!e) throw DomainError("weight " + to_string(x) + " is not an integral power of u");
    ++out[*e];
  }
  return out;
}

// ---------------------------------------------------------------------------

FiniteModule standard_module(const Multisegment& m, const Rational& u) {
  if (m.empty()) throw DomainError("standard module of the empty multisegment");
  std::vector<FiniteModule> f;
  for (const auto& s : m.pbw_sequence()) f.push_back(segment_module(s, u));
  return induce_all(f);
}

FiniteModule simple_module(const Multisegment& m, const Rational& u) {
  check_parameter(u);
  static std::mutex mu;
  static std::map<std::pair<Multisegment, Rational>, std::shared_ptr<const FiniteModule>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({m, u});
    if (it != cache.end()) return *it->second;
  }
  const FiniteModule inc = standard_module(m, u);
  auto desc = m.pbw_sequence();
  std::reverse(desc.begin(), desc.end());

  // Vectors of inc on which the parabolic subalgebra of the decreasing
  // product acts through its one-dimensional module: T_i = u inside each
  // segment block and y_p = u^{letter}.
  std::vector<QMatrix> ops;
  int pos = 0;
  for (const auto& s : desc) {
    for (int k = 0; k < s.length(); ++k) {
      ops.push_back(inc.y[static_cast<std::size_t>(pos + k)] - scalar(inc.dim, upower(u, s.i + k)));
      if (k + 1 < s.length()) ops.push_back(inc.T[static_cast<std::size_t>(pos + k)] - scalar(inc.dim, u));
    }
    pos += s.length();
  }
  QMatrix stacked(ops.size() * inc.dim, inc.dim);
  for (std::size_t o = 0; o < ops.size(); ++o)
    for (std::size_t i = 0; i < inc.dim; ++i)
      for (std::size_t j = 0; j < inc.dim; ++j) stacked(o * inc.dim + i, j) = ops[o](i, j);
  const auto hom = nullspace(stacked);
  if (hom.size() != 1)
    throw InternalError("intertwiner space for " + m.to_string() + " has dimension " + std::to_string(hom.size()));
  FiniteModule L = submodule(inc, spin(inc, hom[0]));
  if (!burnside_is_simple(L)) throw InternalError("image of the intertwiner for " + m.to_string() + " is not simple");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(m, u), std::make_shared<const FiniteModule>(L));
  return L;
}

namespace {
void collect_factors(const FiniteModule& m, std::vector<FiniteModule>& out) {
  if (m.dim == 0) return;
  auto sub = find_submodule(m);
  if (!sub) {
    out.push_back(m);
    return;
  }
  collect_factors(submodule(m, *sub), out);
  collect_factors(quotient(m, *sub), out);
}
}  // namespace

std::map<Multisegment, int> composition_factors(const FiniteModule& m, std::size_t max_dim) {
  if (m.dim > max_dim)
    throw ResourceError("module of dimension " + std::to_string(m.dim) + " exceeds the bound " + std::to_string(max_dim));
  std::vector<FiniteModule> simples;
  collect_factors(m, simples);
  std::map<Multisegment, int> out;
  std::map<std::map<int, int>, std::vector<std::pair<Multisegment, Character>>> known;
  for (const auto& s : simples) {
    const auto content = exponent_content(s.character, s.u);
    auto& cands = known[content];
    if (cands.empty())
      for (const auto& n : multisegments_of_weight(content)) cands.emplace_back(n, simple_module(n, s.u).character);
    std::vector<Multisegment> hits;
    for (const auto& [n, ch] : cands)
      if (ch == s.character) hits.push_back(n);
    if (hits.size() != 1) {
      std::string names;
      for (const auto& [n, ch] : cands) names += " " + n.to_string();
      throw DomainError("cannot identify a composition factor of dimension " + std::to_string(s.dim) +
                        " (candidates:" + names + ")");
    }
    ++out[hits[0]];
  }
  return out;
}

}  // namespace affhecke
