#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ineqlab {

/// Shape properties of a real function on an interval. Used both for the
/// flags a catalog entry declares and for the flags a grid audit measures.
struct ShapeFlags {
  bool nonnegative = false;
  bool nondecreasing = false;
  bool convex = false;
  bool concave = false;
  bool three_convex = false;
  bool three_concave = false;
  bool vanishes_at_zero = false;

  friend bool operator==(const ShapeFlags&, const ShapeFlags&) = default;
};

std::string describe(const ShapeFlags& flags);

/// Names of the flags that `declared` sets but `measured` does not.
std::vector<std::string> unconfirmed_flags(const ShapeFlags& declared, const ShapeFlags& measured);

struct Interval {
  double lo = 0.0;
  double hi = 100.0;

  double span() const { return hi - lo; }
  bool contains(double x) const { return x >= lo && x <= hi; }
};

struct NamedParam {
  std::string name;
  double value;
};

/// Sampling plan for shape audits.
struct AuditOptions {
  std::size_t grid_points = 64;
  std::size_t quad_draws = 256;
  double tol = 1e-8;         // absolute, on divided-difference values
  double grid_start = 1e-6;  // first geometric node offset from the left end
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// A real function on [lo, hi] ⊂ [0, ∞) with declared shape properties.
///
/// Copies share the evaluator and the memo of measured audits, so a function
/// can be handed to many checkers (and threads) while its audits run once.
class ScalarFunction {
 public:
  using Eval = std::function<double(double)>;

  ScalarFunction(std::string id, Eval eval, ShapeFlags declared, Interval domain,
                 std::vector<NamedParam> params = {}, Eval derivative = {});

  double operator()(double x) const { return (*eval_)(x); }

  const std::string& id() const { return id_; }
  const ShapeFlags& declared() const { return declared_; }
  Interval domain() const { return domain_; }
  const std::vector<NamedParam>& params() const { return params_; }
  bool has_derivative() const { return static_cast<bool>(derivative_); }

  /// Closed-form derivative when the catalog supplies one, otherwise a
  /// one-sided (left end) or central difference.
  double slope_at(double x) const;

  /// Measured flags of this function under default AuditOptions (memoized).
  ShapeFlags measured() const;

  /// Measured flags of x ↦ f(x^alpha) under default AuditOptions (memoized).
  ShapeFlags measured_composite(double alpha) const;

 private:
  struct Memo;

  std::string id_;
  std::shared_ptr<const Eval> eval_;
  ShapeFlags declared_;
  Interval domain_;
  std::vector<NamedParam> params_;
  Eval derivative_;
  std::shared_ptr<Memo> memo_;
};

/// Builds a catalog member from its string id, e.g. "pow:1.5", "xlog1p".
/// Throws Error(UnknownFunction) for unrecognized ids or bad parameters.
ScalarFunction make_function(const std::string& id);

/// Every id form the catalog accepts (parametrized ones shown with a
/// placeholder, e.g. "pow:<alpha>").
std::vector<std::string> catalog_ids();

/// True for catalog entries that are completely monotone on [0, ∞).
bool is_completely_monotone(const ScalarFunction& f);

/// g(x) = f(x^alpha). Declared flags follow the composition rules:
/// f nondecreasing and 3-concave with alpha ≤ 1/2 gives {nondecreasing, concave};
/// f convex and 3-convex with f'(0) ≤ 0 and alpha ≤ 1/2 gives {convex}.
/// Anything else is left to the audit.
ScalarFunction compose_power(const ScalarFunction& f, double alpha);

/// h(x) = f(x)^alpha. For f nonnegative, nondecreasing, concave and 3-convex and
/// alpha in (0, 1], h is declared with the same four properties.
ScalarFunction raise_power(const ScalarFunction& f, double alpha);

/// f(x) + slope·x on [0, right_end] for a completely monotone f. The slope
/// must reach −inf f' on the interval (grid estimate), else SlopeTooSmall.
ScalarFunction completely_monotone_shift(const ScalarFunction& f, double right_end, double slope);

}  // namespace ineqlab
