#pragma once

#include <string>
#include <vector>

namespace ineqlab {

struct HypothesisCheck {
  std::string condition;
  bool pass = false;
};

/// One link of a chained (two-sided) inequality.
struct Slack {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct NamedOperand {
  std::string name;
  std::vector<double> values;
};

/// One evaluation of an inequality. `lhs` is the side the inequality claims
/// is the larger one, so margin = lhs − rhs and the inequality holds on
/// these operands iff margin ≥ −tolerance. Equality checks use
/// margin = −|lhs − rhs|.
struct InequalityReport {
  std::string check_id;
  std::vector<NamedOperand> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool holds = false;
  /// Some hypothesis failed; `holds` is then forced to false.
  bool inconclusive = false;
  std::vector<HypothesisCheck> hypothesis_audit;
  std::vector<Slack> links;
  std::vector<std::string> notes;
};

/// τ = 1e−9 · (1 + max(|lhs|, |rhs|)).
double report_tolerance(double lhs, double rhs);

/// Fills margin/tolerance/holds/inconclusive from lhs, rhs and the audit.
InequalityReport make_report(std::string check_id, double lhs, double rhs, std::vector<HypothesisCheck> audit = {});

/// Report for a chain of links; the binding (smallest-margin) link supplies
/// lhs/rhs/margin, and the tolerance uses the largest side over all links.
InequalityReport make_chain_report(std::string check_id, std::vector<Slack> links,
                                   std::vector<HypothesisCheck> audit = {});

bool all_pass(const std::vector<HypothesisCheck>& audit);

}  // namespace ineqlab
