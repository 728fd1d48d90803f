#include "ineqlab/json_io.hpp"

#include <cmath>

namespace ineqlab {
namespace {

Json numbers(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

Json operands(const Operands& ops) {
  Json a = Json::array();
  for (const auto& v : ops) a.push_back(numbers(v));
  return a;
}

}  // namespace

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const InequalityReport& r, std::optional<std::uint64_t> seed) {
  Json j;
  j["check_id"] = r.check_id;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["margin"] = number(r.margin);
  j["tolerance"] = number(r.tolerance);
  j["holds"] = r.holds;
  j["inconclusive"] = r.inconclusive;
  Json inputs = Json::array();
  for (const auto& in : r.inputs) inputs.push_back({{"name", in.name}, {"values", numbers(in.values)}});
  j["inputs"] = std::move(inputs);
  Json audit = Json::array();
  for (const auto& h : r.hypothesis_audit) audit.push_back({{"condition", h.condition}, {"pass", h.pass}});
  j["hypothesis_audit"] = std::move(audit);
  if (!r.links.empty()) {
    Json links = Json::array();
    for (const auto& l : r.links)
      links.push_back({{"name", l.name}, {"lhs", number(l.lhs)}, {"rhs", number(l.rhs)}, {"margin", number(l.margin)}});
    j["links"] = std::move(links);
  }
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const ShapeFlags& f) {
  return {{"nonnegative", f.nonnegative},   {"nondecreasing", f.nondecreasing}, {"convex", f.convex},
          {"concave", f.concave},           {"three_convex", f.three_convex},   {"three_concave", f.three_concave},
          {"vanishes_at_zero", f.vanishes_at_zero}};
}

Json to_json(const MajorizationVerdict& v) {
  Json ledger = Json::array();
  for (const auto& row : v.ledger) ledger.push_back({{"k", row.k}, {"x", number(row.x)}, {"y", number(row.y)}});
  return {{"kind", std::string(to_string(v.kind))},
          {"holds", v.holds},
          {"total_x", number(v.total_x)},
          {"total_y", number(v.total_y)},
          {"ledger", std::move(ledger)}};
}

Json to_json(const SearchResult& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["space"] = r.space;
  j["f"] = r.f_id;
  j["seed"] = r.seed;
  j["probes"] = r.probes;
  j["worst_margin"] = number(r.worst_margin);
  j["open_problem"] = r.open_problem;
  j["violations"] = r.violations;
  j["inconclusive"] = r.inconclusive;
  j["errors"] = r.errors;
  if (!r.first_error.empty()) j["first_error"] = r.first_error;
  j["refined"] = r.refined;
  if (r.refined) j["refine_evaluations"] = r.refine_evaluations;
  if (r.worst_report) {
    j["witness"] = {{"probe_index", r.worst_index}, {"operands", operands(r.witness)}};
    j["worst_report"] = to_json(*r.worst_report);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const std::vector<SuiteRowResult>& rows, std::uint64_t seed, bool reference) {
  Json out;
  out["seed"] = seed;
  out["reference"] = reference;
  bool all = true;
  Json arr = Json::array();
  for (const auto& row : rows) {
    const SearchResult& r = row.result;
    all = all && r.holds_all();
    Json j;
    j["label"] = row.row.label;
    j["check_id"] = r.check_id;
    j["space"] = r.space;
    j["f"] = r.f_id;
    Json params = Json::object();
    for (const auto& [k, v] : row.row.config.params) params[k] = number(v);
    j["params"] = std::move(params);
    j["trials"] = r.probes;
    j["min_margin"] = number(r.worst_margin);
    j["holds_all"] = r.holds_all();
    j["violations"] = r.violations;
    j["inconclusive_count"] = r.inconclusive;
    j["errors"] = r.errors;
    j["runtime_ms"] = row.runtime_ms;
    if (r.worst_report)
      j["worst_witness"] = {{"probe_index", r.worst_index}, {"operands", operands(r.witness)}};
    else
      j["worst_witness"] = nullptr;
    arr.push_back(std::move(j));
  }
  out["holds_all"] = all;
  out["rows"] = std::move(arr);
  return out;
}

}  // namespace ineqlab
