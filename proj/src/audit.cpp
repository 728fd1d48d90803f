#include "ineqlab/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqlab/divided_difference.hpp"
#include "ineqlab/error.hpp"
#include "ineqlab/rng.hpp"

namespace ineqlab {

std::vector<double> audit_grid(Interval domain, const AuditOptions& options) {
  if (!(domain.span() > 0.0)) throw Error(ErrorCode::DegenerateInterval, "audit domain has no width");
  const std::size_t n = std::max<std::size_t>(options.grid_points, 4);
  const std::size_t n_uniform = n - n / 2;
  const std::size_t n_geometric = n / 2;

  std::vector<double> grid;
  grid.reserve(n + 2);
  for (std::size_t i = 0; i < n_uniform; ++i)
    grid.push_back(domain.lo + domain.span() * static_cast<double>(i) / static_cast<double>(n_uniform - 1));

  const double g0 = std::min(options.grid_start, domain.span() / 4.0);
  const double ratio = std::pow(domain.span() / g0, 1.0 / static_cast<double>(n_geometric));
  double offset = g0;
  for (std::size_t i = 0; i < n_geometric; ++i, offset *= ratio)
    if (offset < domain.span()) grid.push_back(domain.lo + offset);

  std::sort(grid.begin(), grid.end());
  const double min_gap = 1e-9 * domain.span();
  std::vector<double> out;
  out.reserve(grid.size());
  for (double x : grid)
    if (out.empty() || x - out.back() > min_gap) out.push_back(x);
  out.back() = domain.hi;
  return out;
}

namespace {

// Extremes of the sampled divided differences of one order, each widened
// by its floating-point error bound so rounding noise never flips a flag.
struct Extremes {
  double min = HUGE_VAL;
  double max = -HUGE_VAL;
  void add(double v, double err) {
    min = std::min(min, v + err);
    max = std::max(max, v - err);
  }
};

// eps-scaled Σ |y_j| / Π_{k≠j} |x_j − x_k|
double rounding_bound(const std::vector<double>& xs, const std::vector<double>& ys) {
  double s = 0.0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    double den = 1.0;
    for (std::size_t k = 0; k < xs.size(); ++k)
      if (k != j) den *= std::abs(xs[j] - xs[k]);
    s += std::abs(ys[j]) / den;
  }
  return 64.0 * std::numeric_limits<double>::epsilon() * s;
}

Extremes sample_order(const std::vector<double>& grid, const std::vector<double>& values, std::size_t order,
                      std::size_t draws, Rng& rng) {
  Extremes ex;
  const std::size_t k = order + 1;
  std::vector<double> xs(k), ys(k);
  for (std::size_t start = 0; start + k <= grid.size(); ++start) {
    std::copy_n(grid.begin() + static_cast<std::ptrdiff_t>(start), k, xs.begin());
    std::copy_n(values.begin() + static_cast<std::ptrdiff_t>(start), k, ys.begin());
    ex.add(divided_difference(xs, ys), rounding_bound(xs, ys));
  }
  std::vector<std::size_t> idx(k);
  for (std::size_t d = 0; d < draws; ++d) {
    // k distinct indices, sorted
    for (std::size_t i = 0; i < k;) {
      const std::size_t candidate = rng.below(grid.size());
      if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(i), candidate) ==
          idx.begin() + static_cast<std::ptrdiff_t>(i))
        idx[i++] = candidate;
    }
    std::sort(idx.begin(), idx.end());
    for (std::size_t i = 0; i < k; ++i) {
      xs[i] = grid[idx[i]];
      ys[i] = values[idx[i]];
    }
    ex.add(divided_difference(xs, ys), rounding_bound(xs, ys));
  }
  return ex;
}

}  // namespace

ShapeFlags audit_shape(const ScalarFunction& f, const AuditOptions& options) {
  const auto grid = audit_grid(f.domain(), options);
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), [&](double x) { return f(x); });
  const double tol = options.tol;

  Rng rng(options.seed);
  const std::size_t draws = std::max<std::size_t>(options.quad_draws, 1);
  const Extremes first = sample_order(grid, values, 1, draws, rng);
  const Extremes second = sample_order(grid, values, 2, draws, rng);
  const Extremes third = sample_order(grid, values, 3, draws, rng);

  ShapeFlags s;
  s.nonnegative = std::all_of(values.begin(), values.end(), [&](double v) { return v >= -tol; });
  // Pairwise comparisons reduce to consecutive ones on a sorted grid, but
  // the random draws above also cover non-adjacent pairs.
  bool monotone = first.min >= -tol;
  for (std::size_t i = 1; i < values.size() && monotone; ++i) monotone = values[i] >= values[i - 1] - tol;
  s.nondecreasing = monotone;
  s.convex = second.min >= -tol;
  s.concave = second.max <= tol;
  s.three_convex = third.min >= -tol;
  s.three_concave = third.max <= tol;
  s.vanishes_at_zero = f.domain().lo <= 0.0 && std::abs(f(0.0)) <= tol;
  return s;
}

bool is_in_S0(const ShapeFlags& m) { return m.nondecreasing && m.convex && m.three_concave && m.vanishes_at_zero; }

bool is_in_S0(const ScalarFunction& f, const AuditOptions& options) { return is_in_S0(audit_shape(f, options)); }

}  // namespace ineqlab
