#include "ineqlab/divided_difference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ineqlab/error.hpp"

namespace ineqlab {
namespace {

void check_nodes(std::span<const double> nodes) {
  if (nodes.empty()) throw Error(ErrorCode::PreconditionFailed, "divided difference needs at least one node");
  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  const double span = sorted.back() - sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] <= kMinNodeGap * span || sorted[i] == sorted[i - 1]) {
      std::ostringstream msg;
      msg << "nodes " << sorted[i - 1] << " and " << sorted[i] << " coincide";
      throw Error(ErrorCode::DuplicateNodes, msg.str());
    }
  }
}

}  // namespace

DividedDifferenceTable::DividedDifferenceTable(std::span<const double> nodes, std::span<const double> values)
    : nodes_(nodes.begin(), nodes.end()) {
  if (nodes.size() != values.size()) throw Error(ErrorCode::LengthMismatch, "nodes and values differ in length");
  check_nodes(nodes);
  levels_.emplace_back(values.begin(), values.end());
  for (std::size_t k = 1; k < nodes_.size(); ++k) {
    const auto& prev = levels_.back();
    std::vector<double> next(prev.size() - 1);
    for (std::size_t j = 0; j < next.size(); ++j)
      next[j] = (prev[j + 1] - prev[j]) / (nodes_[j + k] - nodes_[j]);
    levels_.push_back(std::move(next));
  }
}

double divided_difference(std::span<const double> nodes, std::span<const double> values) {
  return DividedDifferenceTable(nodes, values).top();
}

double divided_difference(std::span<const double> nodes, const ScalarFunction& f) {
  std::vector<double> values(nodes.size());
  std::transform(nodes.begin(), nodes.end(), values.begin(), [&](double x) { return f(x); });
  return divided_difference(nodes, values);
}

double divided_difference_symmetric(std::span<const double> nodes, std::span<const double> values) {
  if (nodes.size() != values.size()) throw Error(ErrorCode::LengthMismatch, "nodes and values differ in length");
  check_nodes(nodes);
  double sum = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    double denom = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      if (k != j) denom *= nodes[j] - nodes[k];
    sum += values[j] / denom;
  }
  return sum;
}

double iterated_difference(const ScalarFunction& f, double x, double h, int n) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "difference order must be nonnegative");
  if (!(h > 0.0) && n > 0) throw Error(ErrorCode::OutOfRange, "step must be positive");
  const Interval dom = f.domain();
  if (x < dom.lo || x + n * h > dom.hi) {
    std::ostringstream msg;
    msg << "[" << x << ", " << x + n * h << "] leaves [" << dom.lo << ", " << dom.hi << "]";
    throw Error(ErrorCode::DomainExceeded, msg.str());
  }
  double sum = 0.0;
  double binom = 1.0;  // C(n, k)
  for (int k = 0; k <= n; ++k) {
    const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom * f(x + k * h);
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

}  // namespace ineqlab
