#include "affhecke/reconstruct.hpp"

#include <set>

#include "affhecke/error.hpp"
#include "affhecke/linalg.hpp"

namespace affhecke {

namespace {

// Linearized Cauchy interpolation: sum a_i x^i - y sum b_j x^j = 0 per sample.
std::optional<RatFun> fit(const std::vector<Sample>& samples, std::size_t count, int bound) {
  const std::size_t nb = static_cast<std::size_t>(bound) + 1;
  QMatrix m(count, 2 * nb);
  for (std::size_t r = 0; r < count; ++r) {
    Rational p = 1;
    for (std::size_t i = 0; i < nb; ++i) {
      m(r, i) = p;
      m(r, nb + i) = -samples[r].value * p;
      p *= samples[r].point;
    }
  }
  auto kernel = nullspace(m);
  if (kernel.empty()) return std::nullopt;
  // Any kernel vector represents the same function; clear denominators.
  const auto& v = kernel.front();
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> nc(nb), dc(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    Rational a = v[i] * l;
    Rational b = v[nb + i] * l;
    nc[i] = a.get_num();
    dc[i] = b.get_num();
  }
  Poly den(std::move(dc));
  if (den.is_zero()) return std::nullopt;
  return RatFun(Poly(std::move(nc)), std::move(den));
}

}  // namespace

RatFun rational_reconstruct(const std::vector<Sample>& samples, int degree_bound) {
  if (degree_bound < 0) throw DomainError("rational_reconstruct: negative degree bound");
  const std::size_t need = 2 * static_cast<std::size_t>(degree_bound) + 2;
  if (samples.size() < need)
    throw DomainError("rational_reconstruct: need at least " + std::to_string(need) + " samples");
  std::set<Rational> seen;
  for (const auto& s : samples)
    if (!seen.insert(s.point).second) throw DomainError("rational_reconstruct: repeated sample point");

  auto f = fit(samples, samples.size(), degree_bound);
  if (!f) {
    // Report the first sample the minimal fit misses.
    auto g = fit(samples, need - 1, degree_bound);
    if (g) {
      for (const auto& s : samples) {
        Rational dv = g->den().eval(s.point);
        Rational res = dv == 0 ? s.value : g->eval(s.point) - s.value;
        if (res != 0 || dv == 0)
          throw ReconstructionError("rational_reconstruct: samples inconsistent with degree bound", s.point,
                                    res);
      }
    }
    throw ReconstructionError("rational_reconstruct: samples inconsistent with degree bound",
                              samples.front().point, samples.front().value);
  }
  for (const auto& s : samples) {
    Rational dv = f->den().eval(s.point);
    if (dv == 0)
      throw ReconstructionError("rational_reconstruct: reconstructed pole at a sample point", s.point, s.value);
    Rational res = f->eval(s.point) - s.value;
    if (res != 0) throw ReconstructionError("rational_reconstruct: residual at sample", s.point, res);
  }
  return *f;
}

}  // namespace affhecke
