#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ineqlab/report.hpp"
#include "ineqlab/rng.hpp"
#include "ineqlab/scalar_function.hpp"
#include "ineqlab/spaces.hpp"

namespace ineqlab {

/// Operand set of one evaluation: vectors, row-major matrices, or strings.
using Operands = std::vector<std::vector<double>>;
using Params = std::map<std::string, double>;

struct ProbeConfig {
  std::string check_id;
  std::string space;  // empty: the check's default
  std::string f_id;   // empty: the check's default (ignored by f-free checks)
  Params params;
};

/// A registered check bound to a space, a function and parameters.
struct BoundCheck {
  std::string check_id;
  Space space;
  std::optional<ScalarFunction> f;
  Params params;
  /// Probes of an open problem: outcomes are evidence, not violations.
  bool open_problem = false;
  /// > 0 when every operand is an m×m symmetric matrix; refinement then
  /// perturbs entry pairs so operands stay symmetric.
  std::size_t symmetric_order = 0;
  std::function<Operands(Rng&)> draw;
  std::function<InequalityReport(const Operands&)> evaluate;

  std::string f_spec() const { return f ? f->id() : std::string(); }
};

/// Resolves aliases ("hanner", "zhang") and defaults. UnknownCheck for
/// unregistered ids; space and function errors propagate.
BoundCheck bind_check(const ProbeConfig& config);

std::vector<std::string> registered_checks();
bool is_open_problem(const std::string& check_id);

struct SearchResult {
  std::string check_id;
  std::string space;
  std::string f_id;
  std::uint64_t seed = 0;
  std::uint64_t probes = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::uint64_t worst_index = 0;
  Operands witness;
  std::optional<InequalityReport> worst_report;
  std::uint64_t violations = 0;
  std::uint64_t inconclusive = 0;
  std::uint64_t errors = 0;
  std::string first_error;
  bool open_problem = false;
  bool refined = false;
  std::uint64_t refine_evaluations = 0;

  bool holds_all() const { return violations == 0 && inconclusive == 0 && errors == 0; }
};

/// Operands of probe `index` (seeded by probe_seed(seed, index)).
Operands probe_operands(const BoundCheck& check, std::uint64_t seed, std::uint64_t index);

/// Single-threaded reference sweep.
SearchResult probe_serial(const BoundCheck& check, std::uint64_t trials, std::uint64_t seed);
/// OpenMP sweep over the same operand sets; the min-reduction breaks ties by
/// lowest probe index, so the result equals probe_serial's.
SearchResult probe_parallel(const BoundCheck& check, std::uint64_t trials, std::uint64_t seed);

SearchResult probe(const ProbeConfig& config, std::uint64_t trials, std::uint64_t seed, bool reference = true);

/// Pattern search on the witness coordinates: start step 0.1 × operand
/// scale, halve when no coordinate move improves, stop below 1e−6 or after
/// `budget` evaluations. Only improvements are accepted; evaluations that
/// throw or come back inconclusive count as +∞.
SearchResult refine(const BoundCheck& check, const SearchResult& result, std::uint64_t budget);

struct ZhangFalsifier {
  InequalityReport strengthened;  // expected to fail
  InequalityReport original;      // expected to hold
};

/// Averaged Zhang variant with f(x) = x² on A = I₂, B = diag(1,2), C = [[1,1],[1,2]].
ZhangFalsifier falsify_strengthened_zhang();

/// f(x) = x², p = 3, x = (1,0), y = (0,1): the p ≥ 2 functional 2-uniform
/// convexity inequality with coefficient 2·C̃(p) fails here.
InequalityReport falsify_two_unif_p_ge_2();

/// Signed (cone-lifted) probes: "frechet_functional_signed",
/// "popoviciu_vec_signed" or "revhh_signed" (the f = √ case), in ℝ².
/// trials = 0 gives an empty result.
SearchResult probe_open_problem(const std::string& which, std::uint64_t trials, std::uint64_t seed,
                                bool reference = true);

struct SuiteRow {
  std::string label;
  ProbeConfig config;
  std::uint64_t trials = 10000;
};

/// The full battery of theorem-backed sweeps.
std::vector<SuiteRow> acceptance_suite(std::uint64_t trials = 10000);

struct SuiteRowResult {
  SuiteRow row;
  SearchResult result;
  double runtime_ms = 0.0;
};

/// Rows run in order; each row is seeded from `seed` and its label. In
/// reference mode probes are serial and runtimes are reported as 0.
std::vector<SuiteRowResult> run_suite(const std::vector<SuiteRow>& rows, std::uint64_t seed, bool reference);

}  // namespace ineqlab
