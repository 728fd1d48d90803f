#pragma once

#include <span>
#include <vector>

#include "ineqlab/scalar_function.hpp"

namespace ineqlab {

/// Relative gap (in units of the node span) below which two nodes count as
/// coincident.
inline constexpr double kMinNodeGap = 1e-10;

/// Triangular table of divided differences: entry(k, j) = [x_j, ..., x_{j+k}; f].
class DividedDifferenceTable {
 public:
  DividedDifferenceTable(std::span<const double> nodes, std::span<const double> values);

  std::size_t size() const { return nodes_.size(); }
  std::size_t max_order() const { return nodes_.size() - 1; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return levels_.front(); }

  double entry(std::size_t order, std::size_t first) const { return levels_.at(order).at(first); }
  /// [x_0, ..., x_n; f]
  double top() const { return levels_.back().front(); }

 private:
  std::vector<double> nodes_;
  std::vector<std::vector<double>> levels_;
};

/// Top-order divided difference by the Newton recursion. Nodes may come in
/// any order but must be pairwise distinct (gap > kMinNodeGap × span).
double divided_difference(std::span<const double> nodes, std::span<const double> values);
double divided_difference(std::span<const double> nodes, const ScalarFunction& f);

/// Σ_j f(x_j) / Π_{k≠j}(x_j − x_k). Cross-check only; worse conditioned than
/// the recursion.
double divided_difference_symmetric(std::span<const double> nodes, std::span<const double> values);

/// (Δ_h)^n f(x) = Σ_k (−1)^{n−k} C(n,k) f(x + k h).
double iterated_difference(const ScalarFunction& f, double x, double h, int n);

}  // namespace ineqlab
