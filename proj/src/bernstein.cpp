#include "ineqlab/bernstein.hpp"

#include <sstream>

#include "ineqlab/error.hpp"

namespace ineqlab {

BernsteinApproximant::BernsteinApproximant(const ScalarFunction& f, int degree, Interval interval)
    : degree_(degree), interval_(interval), source_id_(f.id()) {
  if (degree < 1) throw Error(ErrorCode::OutOfRange, "Bernstein degree must be at least 1");
  if (!(interval.span() >= 1e-12)) throw Error(ErrorCode::DegenerateInterval, "interval narrower than 1e-12");
  samples_.resize(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i <= degree; ++i) {
    // end points hit exactly
    const double x = i == degree ? interval.hi : interval.lo + interval.span() * i / degree;
    samples_[static_cast<std::size_t>(i)] = f(x);
  }
}

double BernsteinApproximant::operator()(double x) const {
  const double t = (x - interval_.lo) / interval_.span();
  if (t == 0.0) return samples_.front();
  if (t == 1.0) return samples_.back();
  std::vector<double> b = samples_;
  for (int r = 1; r <= degree_; ++r)
    for (int i = 0; i <= degree_ - r; ++i)
      b[static_cast<std::size_t>(i)] =
          (1.0 - t) * b[static_cast<std::size_t>(i)] + t * b[static_cast<std::size_t>(i) + 1];
  return b.front();
}

ScalarFunction BernsteinApproximant::as_function() const {
  std::ostringstream id;
  id << "B" << degree_ << "(" << source_id_ << ")";
  return ScalarFunction(id.str(), [self = *this](double x) { return self(x); }, ShapeFlags{}, interval_,
                        {{"degree", static_cast<double>(degree_)}});
}

BernsteinApproximant bernstein(const ScalarFunction& f, int degree, Interval interval) {
  return BernsteinApproximant(f, degree, interval);
}

}  // namespace ineqlab
