#pragma once

#include <vector>

#include "ineqlab/scalar_function.hpp"

namespace ineqlab {

/// Audit nodes for `domain`: half uniform, half geometric from
/// lo + grid_start, plus both end points. Sorted and gap-guarded.
std::vector<double> audit_grid(Interval domain, const AuditOptions& options);

/// Empirical shape flags. Order-k convexity holds iff every sampled
/// (k+1)-node divided difference is ≥ −tol, after adding back its rounding
/// error bound 64·eps·Σ|f(x_j)|/Π|x_j − x_k|. Samples are all consecutive
/// windows of the grid plus `quad_draws` random node subsets per order.
/// Declared flags are never consulted.
ShapeFlags audit_shape(const ScalarFunction& f, const AuditOptions& options = {});

/// Nondecreasing, convex, 3-concave and vanishing at zero.
bool is_in_S0(const ScalarFunction& f, const AuditOptions& options = {});
bool is_in_S0(const ShapeFlags& measured);

}  // namespace ineqlab
