#include "ineqlab/report.hpp"

#include <algorithm>
#include <cmath>

namespace ineqlab {

double report_tolerance(double lhs, double rhs) { return 1e-9 * (1.0 + std::max(std::abs(lhs), std::abs(rhs))); }

bool all_pass(const std::vector<HypothesisCheck>& audit) {
  return std::all_of(audit.begin(), audit.end(), [](const HypothesisCheck& h) { return h.pass; });
}

namespace {

void settle(InequalityReport& r) {
  r.inconclusive = !all_pass(r.hypothesis_audit);
  // NaN margins never count as holding.
  r.holds = !r.inconclusive && r.margin >= -r.tolerance;
}

}  // namespace

InequalityReport make_report(std::string check_id, double lhs, double rhs, std::vector<HypothesisCheck> audit) {
  InequalityReport r;
  r.check_id = std::move(check_id);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.tolerance = report_tolerance(lhs, rhs);
  r.hypothesis_audit = std::move(audit);
  settle(r);
  return r;
}

InequalityReport make_chain_report(std::string check_id, std::vector<Slack> links, std::vector<HypothesisCheck> audit) {
  InequalityReport r;
  r.check_id = std::move(check_id);
  double scale = 0.0;
  const Slack* binding = nullptr;
  for (auto& link : links) {
    link.margin = link.lhs - link.rhs;
    scale = std::max({scale, std::abs(link.lhs), std::abs(link.rhs)});
    if (binding == nullptr || link.margin < binding->margin) binding = &link;
  }
  if (binding != nullptr) {
    r.lhs = binding->lhs;
    r.rhs = binding->rhs;
    r.margin = binding->margin;
  }
  r.tolerance = 1e-9 * (1.0 + scale);
  r.links = std::move(links);
  r.hypothesis_audit = std::move(audit);
  settle(r);
  return r;
}

}  // namespace ineqlab
