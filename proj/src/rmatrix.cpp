#include "affhecke/rmatrix.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "affhecke/reconstruct.hpp"

namespace affhecke {

QAffineParams::QAffineParams(int n, Rational vv) : N(n), v(std::move(vv)) {
  if (N < 2) throw DomainError("sl_N needs N >= 2");
  if (v == 0 || v == 1 || v == -1) throw DomainError("v must be a nonzero rational other than 1 and -1");
}

namespace {

Rational vpow(const Rational& v, int a) {
  Rational r = 1;
  const Rational b = a >= 0 ? v : Rational(1) / v;
  for (int k = 0; k < std::abs(a); ++k) r *= b;
  return r;
}

Rational vint(const Rational& v, int n) { return (vpow(v, n) - vpow(v, -n)) / (v - Rational(1) / v); }

Rational vbinom(const Rational& v, int n, int r) {
  Rational num = 1, den = 1;
  for (int t = 0; t < r; ++t) {
    num *= vint(v, n - t);
    den *= vint(v, t + 1);
  }
  return num / den;
}

QMatrix unit(std::size_t n, std::size_t i, std::size_t j, const Rational& c) {
  QMatrix m(n, n);
  m(i, j) = c;
  return m;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

int cartan(int N, int i, int j) {
  if (i == j) return 2;
  if (N == 2) return -2;
  const int d = ((i - j) % N + N) % N;
  return (d == 1 || d == N - 1) ? -1 : 0;
}

QMatrix power(const QMatrix& a, int n) {
  QMatrix r = QMatrix::identity(a.rows());
  for (int t = 0; t < n; ++t) r = r * a;
  return r;
}

bool serre_holds(const QMatrix& x, const QMatrix& y, int a, const Rational& v) {
  const int n = 1 - a;
  QMatrix s(x.rows(), x.cols());
  for (int r = 0; r <= n; ++r) {
    QMatrix term = power(x, n - r) * y * power(x, r);
    term = term.scaled(vbinom(v, n, r) * (r % 2 ? -1 : 1));
    s = s + term;
  }
  return s.is_zero_matrix();
}

std::vector<QVector> spin_all(const EvalModule& m, const QVector& start) {
  std::vector<const QMatrix*> gens;
  for (const auto* list : {&m.e, &m.f, &m.k})
    for (const auto& g : *list) gens.push_back(&g);
  Echelon<Rational> e(m.dim);
  std::vector<QVector> raw;
  if (!e.add(start)) return {};
  raw.push_back(start);
  for (std::size_t next = 0; next < raw.size(); ++next)
    for (const auto* g : gens) {
      QVector w = g->apply(raw[next]);
      if (e.add(w)) raw.push_back(std::move(w));
    }
  return e.rows();
}

}  // namespace

std::optional<std::string> EvalModule::relation_failure() const {
  const int N = params.N;
  const Rational& v = params.v;
  const std::size_t d = dim;
  const QMatrix I = QMatrix::identity(d);
  QMatrix prod = I;
  for (int i = 0; i < N; ++i) {
    const auto si = std::to_string(i);
    if (k[i] * kinv[i] != I) return "k_" + si + " k_" + si + "^-1 != 1";
    prod = prod * k[i];
    for (int j = 0; j < N; ++j) {
      const auto sj = std::to_string(j);
      const int a = cartan(N, i, j);
      if (k[i] * k[j] != k[j] * k[i]) return "k_" + si + " and k_" + sj + " do not commute";
      if (k[i] * e[j] * kinv[i] != e[j].scaled(vpow(v, a))) return "k_" + si + " e_" + sj + " k_" + si + "^-1 != v^a e_" + sj;
      if (k[i] * f[j] * kinv[i] != f[j].scaled(vpow(v, -a))) return "k_" + si + " f_" + sj + " k_" + si + "^-1 != v^-a f_" + sj;
      const QMatrix comm = e[i] * f[j] - f[j] * e[i];
      const QMatrix want = i == j ? (k[i] - kinv[i]).scaled(Rational(1) / (v - Rational(1) / v)) : QMatrix(d, d);
      if (comm != want) return "[e_" + si + ", f_" + sj + "] relation fails";
      if (i != j) {
        if (!serre_holds(e[i], e[j], a, v)) return "Serre relation fails for e_" + si + ", e_" + sj;
        if (!serre_holds(f[i], f[j], a, v)) return "Serre relation fails for f_" + si + ", f_" + sj;
      }
    }
  }
  if (prod != I) return "k_0 k_1 ... k_{N-1} != 1";
  return std::nullopt;
}

void EvalModule::verify() const {
  if (auto f = relation_failure()) throw InternalError("quantum affine relation check: " + *f);
}

EvalModule fundamental_eval_module(const QAffineParams& p, const Rational& z) {
  if (z == 0) throw DomainError("evaluation at z = 0");
  const int N = p.N;
  const std::size_t n = static_cast<std::size_t>(N);
  EvalModule m;
  m.params = p;
  m.dim = n;
  auto kdiag = [&](int a, int b, bool inv) {
    QMatrix k = QMatrix::identity(n);
    k(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = vpow(p.v, inv ? -1 : 1);
    k(static_cast<std::size_t>(b), static_cast<std::size_t>(b)) = vpow(p.v, inv ? 1 : -1);
    return k;
  };
  m.e.push_back(unit(n, n - 1, 0, z));
  m.f.push_back(unit(n, 0, n - 1, Rational(1) / z));
  m.k.push_back(kdiag(N - 1, 0, false));
  m.kinv.push_back(kdiag(N - 1, 0, true));
  for (int i = 1; i < N; ++i) {
    m.e.push_back(unit(n, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i), 1));
    m.f.push_back(unit(n, static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1), 1));
    m.k.push_back(kdiag(i - 1, i, false));
    m.kinv.push_back(kdiag(i - 1, i, true));
  }
  m.verify();
  return m;
}

EvalModule tensor(const EvalModule& a, const EvalModule& b) {
  if (a.params.N != b.params.N || a.params.v != b.params.v) throw DomainError("tensor product of modules with different parameters");
  EvalModule m;
  m.params = a.params;
  m.dim = a.dim * b.dim;
  const QMatrix Ia = QMatrix::identity(a.dim), Ib = QMatrix::identity(b.dim);
  for (int i = 0; i < a.params.N; ++i) {
    m.e.push_back(kron(a.e[i], Ib) + kron(a.k[i], b.e[i]));
    m.f.push_back(kron(a.f[i], b.kinv[i]) + kron(Ia, b.f[i]));
    m.k.push_back(kron(a.k[i], b.k[i]));
    m.kinv.push_back(kron(a.kinv[i], b.kinv[i]));
  }
  return m;
}

EvalModule restrict_module(const EvalModule& m, const std::vector<QVector>& basis) {
  QMatrix R(basis.size(), m.dim);
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < m.dim; ++c) R(r, c) = basis[r][c];
  const auto piv = rref(R);
  const std::size_t k = piv.size();
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
      if (check != img) throw InternalError("restrict_module: subspace is not invariant");
    }
    return out;
  };
  EvalModule s;
  s.params = m.params;
  s.dim = k;
  for (int i = 0; i < m.params.N; ++i) {
    s.e.push_back(restrict_gen(m.e[i]));
    s.f.push_back(restrict_gen(m.f[i]));
    s.k.push_back(restrict_gen(m.k[i]));
    s.kinv.push_back(restrict_gen(m.kinv[i]));
  }
  return s;
}

std::size_t weyl_dimension(const Partition& lambda, int N) {
  if (lambda.length() > N) return 0;
  Rational r = 1;
  const auto hooks = hook_multiset(lambda);
  std::size_t idx = 0;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) r *= make_rational(N + j - i, hooks[idx++]);
  return static_cast<std::size_t>(r.get_num().get_ui());
}

FusedModule fused_module(const Partition& lambda, const QAffineParams& p, const Rational& z) {
  const int n = lambda.size();
  if (n == 0) throw DomainError("fusion needs a nonempty partition");
  if (lambda.length() > p.N) throw DomainError("partition " + lambda.to_string() + " has more than N rows");
  if (n > 6) throw ResourceError("fusion is limited to |lambda| <= 6");
  const std::size_t target = weyl_dimension(lambda, p.N);
  for (const auto& tab : standard_tableaux(lambda))
  for (int sign : {1, -1}) {
    std::vector<int> cont;
    for (const Cell& c : tab) cont.push_back(c.second - c.first);
    EvalModule t = fundamental_eval_module(p, z * vpow(p.v, 2 * sign * cont[0]));
    for (int c = 1; c < n; ++c) t = tensor(t, fundamental_eval_module(p, z * vpow(p.v, 2 * sign * cont[static_cast<std::size_t>(c)])));
    // tensor basis index -> letters; keep the vectors of gl_N weight lambda
    std::vector<std::size_t> wsp;
    for (std::size_t idx = 0; idx < t.dim; ++idx) {
      std::vector<int> count(static_cast<std::size_t>(p.N), 0);
      std::size_t r = idx;
      for (int c = 0; c < n; ++c) {
        ++count[r % static_cast<std::size_t>(p.N)];
        r /= static_cast<std::size_t>(p.N);
      }
      bool ok = true;
      for (int a = 0; a < p.N; ++a) ok = ok && count[static_cast<std::size_t>(a)] == (a < lambda.length() ? lambda.part(a + 1) : 0);
      if (ok) wsp.push_back(idx);
    }
    QMatrix A(static_cast<std::size_t>(p.N - 1) * t.dim, wsp.size());
    for (int i = 1; i < p.N; ++i)
      for (std::size_t c = 0; c < wsp.size(); ++c)
        for (std::size_t r = 0; r < t.dim; ++r) A(static_cast<std::size_t>(i - 1) * t.dim + r, c) = t.e[static_cast<std::size_t>(i)](r, wsp[c]);
    std::vector<QVector> hw;
    for (const auto& coef : nullspace(A)) {
      QVector w(t.dim, Rational(0));
      for (std::size_t c = 0; c < wsp.size(); ++c) w[wsp[c]] = coef[c];
      hw.push_back(std::move(w));
    }
    // The fused line inside the highest weight space is searched among small
    // integer combinations of a basis (enough for |lambda| <= 3).
    std::vector<QVector> cands = hw;
    for (std::size_t a = 0; a < hw.size(); ++a)
      for (std::size_t b = a + 1; b < hw.size(); ++b)
        for (int x = 1; x <= 4; ++x)
          for (int y = -4; y <= 4; ++y) {
            if (y == 0 || std::gcd(x, std::abs(y)) != 1) continue;
            QVector w(t.dim, Rational(0));
            for (std::size_t r = 0; r < t.dim; ++r) w[r] = x * hw[a][r] + y * hw[b][r];
            cands.push_back(std::move(w));
          }
    for (const auto& w : cands) {
      auto span = spin_all(t, w);
      if (span.size() != target) continue;
      FusedModule out;
      out.module = restrict_module(t, span);
      out.module.verify();
      out.content_sign = sign;
      out.contents = cont;
      const std::size_t d = out.module.dim;
      bool found = false;
      for (std::size_t h = 0; h < d && !found; ++h) {
        bool ok = true;
        for (int i = 1; i < p.N; ++i) {
          const int a = (i <= lambda.length() ? lambda.part(i) : 0) - (i + 1 <= lambda.length() ? lambda.part(i + 1) : 0);
          ok = ok && out.module.k[static_cast<std::size_t>(i)](h, h) == vpow(p.v, a);
        }
        if (ok) {
          out.highest = h;
          found = true;
        }
      }
      if (!found) throw InternalError("fused module has no highest weight vector");
      return out;
    }
  }
  throw DomainError("no fused submodule of dimension " + std::to_string(target) + " for " + lambda.to_string());
}

QMatrix rcheck_solve(const Partition& lambda, const QAffineParams& p, const Rational& x) {
  const FusedModule A = fused_module(lambda, p, x);
  const FusedModule B = fused_module(lambda, p, Rational(1));
  const EvalModule src = tensor(A.module, B.module);
  const EvalModule dst = tensor(B.module, A.module);
  const std::size_t d = A.module.dim, D = src.dim;
  auto weight = [&](const EvalModule& m, std::size_t a) {
    std::vector<Rational> w;
    for (int i = 1; i < p.N; ++i) w.push_back(m.k[static_cast<std::size_t>(i)](a, a));
    return w;
  };
  // Unknowns R(a, b) between equal weights.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b)
      if (weight(dst, a) == weight(src, b)) var.emplace(std::make_pair(a, b), var.size());
  std::vector<QVector> rows;
  for (int i = 0; i < p.N; ++i)
    for (const auto* pair : {&src.e, &src.f}) {
      const QMatrix& X = (*pair)[static_cast<std::size_t>(i)];
      const QMatrix& Y = (pair == &src.e ? dst.e : dst.f)[static_cast<std::size_t>(i)];
      // (R X - Y R)(a, c) = 0
      for (std::size_t a = 0; a < D; ++a)
        for (std::size_t c = 0; c < D; ++c) {
          QVector row(var.size(), Rational(0));
          bool any = false;
          for (std::size_t b = 0; b < D; ++b) {
            if (X(b, c) != 0) {
              auto it = var.find({a, b});
              if (it != var.end()) {
                row[it->second] += X(b, c);
                any = true;
              }
            }
            if (Y(a, b) != 0) {
              auto it = var.find({b, c});
              if (it != var.end()) {
                row[it->second] -= Y(a, b);
                any = true;
              }
            }
          }
          if (any) rows.push_back(std::move(row));
        }
    }
  QMatrix M(rows.size(), var.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < var.size(); ++c) M(r, c) = rows[r][c];
  const auto ns = nullspace(M);
  if (ns.size() != 1)
    throw DegenerateError("intertwiner space at x = " + to_string(x) + " has dimension " + std::to_string(ns.size()), ns.size());
  QMatrix R(D, D);
  for (const auto& [ab, idx] : var) R(ab.first, ab.second) = ns[0][idx];
  const std::size_t hh = A.highest * d + B.highest;
  if (R(hh, hh) == 0) throw DegenerateError("intertwiner kills highest (x) highest at x = " + to_string(x), 1);
  return R.scaled(Rational(1) / R(hh, hh));
}

bool yang_baxter_holds(const Partition& lambda, const QAffineParams& p, const Rational& z1, const Rational& z2,
                       const Rational& z3) {
  const QMatrix a = rcheck_solve(lambda, p, z1 / z2);
  const QMatrix b = rcheck_solve(lambda, p, z1 / z3);
  const QMatrix c = rcheck_solve(lambda, p, z2 / z3);
  std::size_t d = 1;
  while (d * d < a.rows()) ++d;
  const QMatrix I = QMatrix::identity(d);
  auto r12 = [&](const QMatrix& r) { return kron(r, I); };
  auto r23 = [&](const QMatrix& r) { return kron(I, r); };
  return r12(c) * r23(b) * r12(a) == r23(a) * r12(b) * r23(c);
}

// ---------------------------------------------------------------------------

namespace {

Rational sample_point(std::size_t k) { return make_rational(static_cast<long>(3 * k + 7), static_cast<long>(2 * k + 5)); }

RatFun determinant(Matrix<RatFun> m) {
  const std::size_t n = m.rows();
  RatFun det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return RatFun();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const RatFun inv = RatFun(1) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const RatFun f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Splits off the roots of p that are powers v^j (|j| <= J); the rest is returned.
Poly strip_vpowers(Poly p, const Rational& v, int J, std::vector<int>& found) {
  p = Poly::exact_quotient(p, Poly::x_pow(p.low_order()));
  for (int j = -J; j <= J && p.degree() > 0; ++j) {
    const Rational r = vpow(v, j);
    while (p.degree() > 0 && p.eval(r) == 0) {
      p = Poly::exact_quotient(p * Poly(r.get_den()), Poly(std::vector<BigInt>{-r.get_num(), r.get_den()}));
      p = p.primitive_part();
      found.push_back(j);
    }
  }
  return p;
}

}  // namespace

SingularityReport singularity_scan(const Partition& lambda, const QAffineParams& p, unsigned workers,
                                   std::size_t held_out) {
  SingularityReport rep;
  rep.lambda = lambda;
  rep.params = p;
  const int n = lambda.size();
  const int max_bound = n * n + 2;

  std::vector<std::pair<Rational, QMatrix>> samples;
  std::size_t next_index = 0;
  std::mutex mu;
  auto ensure = [&](std::size_t want) {
    while (samples.size() < want) {
      const std::size_t batch = want - samples.size();
      std::vector<std::optional<QMatrix>> got(batch);
      std::vector<Rational> pts(batch);
      for (std::size_t b = 0; b < batch; ++b) pts[b] = sample_point(next_index + b);
      next_index += batch;
      std::atomic<std::size_t> cursor{0};
      std::vector<Rational> degenerate;
      auto work = [&] {
        for (std::size_t b; (b = cursor.fetch_add(1)) < batch;) {
          try {
            got[b] = rcheck_solve(lambda, p, pts[b]);
          } catch (const DegenerateError&) {
            std::lock_guard<std::mutex> lock(mu);
            degenerate.push_back(pts[b]);
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 1; w < std::max(1u, workers); ++w) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();
      for (std::size_t b = 0; b < batch; ++b)
        if (got[b]) samples.emplace_back(pts[b], std::move(*got[b]));
      rep.degenerate_samples.insert(rep.degenerate_samples.end(), degenerate.begin(), degenerate.end());
      if (rep.degenerate_samples.size() > 32) throw DomainError("too many degenerate sample points");
    }
  };

  for (int B = 1; B <= max_bound; ++B) {
    const std::size_t fit = static_cast<std::size_t>(2 * B + 2);
    ensure(fit + held_out);
    const std::size_t D = samples.front().second.rows();
    Matrix<RatFun> R(D, D);
    bool ok = true;
    for (std::size_t i = 0; i < D && ok; ++i)
      for (std::size_t j = 0; j < D && ok; ++j) {
        std::vector<Sample> s;
        for (std::size_t t = 0; t < fit; ++t) s.push_back({samples[t].first, samples[t].second(i, j)});
        try {
          R(i, j) = rational_reconstruct(s, B);
        } catch (const ReconstructionError&) {
          ok = false;
          break;
        }
        for (std::size_t t = fit; t < fit + held_out && ok; ++t) {
          const Rational& x = samples[t].first;
          if (R(i, j).den().eval(x) == 0 || R(i, j).eval(x) != samples[t].second(i, j)) ok = false;
        }
      }
    if (!ok) continue;
    rep.degree_bound = B;
    rep.fit_points = fit;
    rep.held_out_points = held_out;
    rep.held_out_ok = true;
    rep.R = R;
    rep.det = determinant(R);
    break;
  }
  if (!rep.held_out_ok) {
    rep.contained = false;
    rep.unmatched.push_back("no rational function of degree <= " + std::to_string(max_bound) + " fits the samples");
    return rep;
  }

  const auto allowed = hook_exponent_set(lambda, HookMode::positive).symmetric();
  const int J = 4 * (n + p.N) + 8;
  std::map<int, std::string> pole_witness, zero_witness;
  auto scan = [&](const Poly& poly, std::map<int, std::string>& into, const std::string& where) {
    std::vector<int> js;
    const Poly rest = strip_vpowers(poly, p.v, J, js);
    for (int j : js) into.emplace(j, where);
    if (rest.degree() > 0) rep.unmatched.push_back(where + ": factor " + rest.to_string("z") + " has roots that are not powers of v");
  };
  const std::size_t D = rep.R.rows();
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      if (!rep.R(i, j).is_zero())
        scan(rep.R(i, j).den(), pole_witness, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + rep.R(i, j).to_string("z"));
  scan(rep.det.den(), pole_witness, "det denominator");
  scan(rep.det.num(), zero_witness, "det numerator");

  rep.contained = rep.unmatched.empty();
  auto emit = [&](const std::map<int, std::string>& js, std::vector<Singularity>& out) {
    for (const auto& [j, w] : js) {
      Singularity s;
      s.value = vpow(p.v, j);
      s.u_exponent = make_rational(j, 2);
      out.push_back(s);
      if (j % 2 != 0 || !allowed.count(j / 2)) {
        rep.contained = false;
        rep.unmatched.push_back("u^" + to_string(make_rational(j, 2)) + " outside the hook set (" + w + ")");
      }
    }
  };
  emit(pole_witness, rep.poles);
  emit(zero_witness, rep.zeros);
  return rep;
}

}  // namespace affhecke
