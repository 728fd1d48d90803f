#pragma once

#include <vector>

#include "ineqlab/scalar_function.hpp"

namespace ineqlab {

/// B_n(f)(x) = Σ_i C(n,i) t^i (1−t)^{n−i} f(a + i(b−a)/n), t = (x−a)/(b−a).
class BernsteinApproximant {
 public:
  BernsteinApproximant(const ScalarFunction& f, int degree, Interval interval);

  int degree() const { return degree_; }
  Interval interval() const { return interval_; }
  const std::vector<double>& samples() const { return samples_; }

  /// de Casteljau evaluation; exact at both end points.
  double operator()(double x) const;

  ScalarFunction as_function() const;

 private:
  int degree_;
  Interval interval_;
  std::vector<double> samples_;
  std::string source_id_;
};

BernsteinApproximant bernstein(const ScalarFunction& f, int degree, Interval interval);

}  // namespace ineqlab
