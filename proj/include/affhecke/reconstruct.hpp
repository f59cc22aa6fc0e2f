#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "affhecke/poly.hpp"

namespace affhecke {

struct Sample {
  Rational point;
  Rational value;
};

/// Raised when no rational function of the requested degree fits the data.
class ReconstructionError : public std::runtime_error {
 public:
  ReconstructionError(const std::string& what, Rational point, Rational residual)
      : std::runtime_error(what), point_(std::move(point)), residual_(std::move(residual)) {}
  const Rational& point() const { return point_; }
  const Rational& residual() const { return residual_; }

 private:
  Rational point_;
  Rational residual_;
};

/// Finds n/d with deg n, deg d <= degree_bound matching every sample exactly.
/// Needs at least 2*degree_bound + 2 samples at distinct points.
RatFun rational_reconstruct(const std::vector<Sample>& samples, int degree_bound);

}  // namespace affhecke
