#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ineqlab/report.hpp"
#include "ineqlab/scalar_function.hpp"

namespace ineqlab {

/// A finite string of nonnegative reals with a cached descending copy.
class Str {
 public:
  explicit Str(std::vector<double> values);
  Str(std::initializer_list<double> values) : Str(std::vector<double>(values)) {}

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& sorted_desc() const { return sorted_; }

  /// Sum of the k largest entries (k may exceed size()).
  double top_sum(std::size_t k) const;
  double total() const { return top_sum(values_.size()); }

  /// Copy padded with zeros up to length n.
  Str padded(std::size_t n) const;

 private:
  std::vector<double> values_;
  std::vector<double> sorted_;
};

enum class MajorizationKind { hlp, weak, truncated_convex, truncated_concave };

std::string_view to_string(MajorizationKind kind);

struct PartialSums {
  std::size_t k = 0;
  double x = 0.0;  // sum of the k largest x
  double y = 0.0;  // sum of the k largest y
};

struct MajorizationVerdict {
  MajorizationKind kind = MajorizationKind::hlp;
  bool holds = false;
  std::vector<PartialSums> ledger;
  double total_x = 0.0;
  double total_y = 0.0;
};

/// a ≤ b up to relative 1e−12 (absolute floor 1e−300).
bool approx_leq(double a, double b);
/// |a − b| ≤ 1e−12 · max(|a|, |b|) + 1e−300.
bool approx_equal(double a, double b);

/// y majorizes x: top-k sums of x ≤ those of y for k < n, equal totals.
MajorizationVerdict hlp_majorizes(const Str& x, const Str& y);
/// y weakly majorizes x: as above with Σx ≤ Σy.
MajorizationVerdict weak_majorizes(const Str& x, const Str& y);

/// |x| = n ≥ |y| = m ≥ 2; top-k sums of x ≤ those of y for k ≤ m−1 and Σx ≤ Σy.
MajorizationVerdict truncated_convex_applicable(const Str& x, const Str& y);
/// Same partial-sum conditions, but Σx ≥ Σy.
MajorizationVerdict truncated_concave_applicable(const Str& x, const Str& y);

/// Σ f(y_j) + (n−m) f(0) ≥ Σ f(x_i) for nondecreasing convex f.
/// PreconditionFailed when the applicability verdict fails.
InequalityReport truncated_convex_inequality(const ScalarFunction& f, const Str& x, const Str& y);
/// Σ f(x_i) ≥ Σ f(y_j) + (n−m) f(0) for nondecreasing concave f.
InequalityReport truncated_concave_inequality(const ScalarFunction& f, const Str& x, const Str& y);

/// r_5^p + r_6^p ≥ r_1^p + … + r_4^p given max(r_1..r_4) ≤ max(r_5, r_6),
/// equal q-power sums and p ≥ q > 0.
InequalityReport enflo_check(std::span<const double> r, double p, double q);

enum class TruncatedCase { convex, concave };

/// Largest sum over k distinct indices, by explicit subset enumeration.
double max_subset_sum(std::span<const double> values, std::size_t k);

/// Independent route for the truncated theorems (n ≤ 8): pads y with zeros,
/// checks the partial-sum conditions by subset enumeration and sums both
/// sides directly. TooLarge when n > 8.
InequalityReport brute_force_oracle(const ScalarFunction& f, const Str& x, const Str& y, TruncatedCase which);

}  // namespace ineqlab
