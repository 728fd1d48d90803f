#include "ineqlab/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "ineqlab/error.hpp"

namespace ineqlab {

Str::Str(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v)) {
      std::ostringstream msg;
      msg << "string entries must be finite and nonnegative, got " << v;
      throw Error(ErrorCode::OutOfRange, msg.str());
    }
  sorted_ = values_;
  std::sort(sorted_.begin(), sorted_.end(), std::greater<>());
}

double Str::top_sum(std::size_t k) const {
  k = std::min(k, sorted_.size());
  return std::accumulate(sorted_.begin(), sorted_.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

Str Str::padded(std::size_t n) const {
  std::vector<double> v = values_;
  if (v.size() < n) v.resize(n, 0.0);
  return Str(std::move(v));
}

std::string_view to_string(MajorizationKind kind) {
  switch (kind) {
    case MajorizationKind::hlp: return "hlp";
    case MajorizationKind::weak: return "weak";
    case MajorizationKind::truncated_convex: return "truncated_convex";
    case MajorizationKind::truncated_concave: return "truncated_concave";
  }
  return "?";
}

bool approx_leq(double a, double b) { return a <= b + 1e-12 * std::max(std::abs(a), std::abs(b)) + 1e-300; }

bool approx_equal(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)) + 1e-300; }

namespace {

MajorizationVerdict partial_sum_verdict(MajorizationKind kind, const Str& x, const Str& y, std::size_t last_k) {
  MajorizationVerdict v;
  v.kind = kind;
  v.total_x = x.total();
  v.total_y = y.total();
  bool ok = true;
  for (std::size_t k = 1; k <= last_k; ++k) {
    const PartialSums row{k, x.top_sum(k), y.top_sum(k)};
    ok = ok && approx_leq(row.x, row.y);
    v.ledger.push_back(row);
  }
  v.holds = ok;
  return v;
}

void require_same_length(const Str& x, const Str& y) {
  if (x.size() != y.size() || x.size() == 0) {
    std::ostringstream msg;
    msg << "lengths " << x.size() << " and " << y.size();
    throw Error(ErrorCode::LengthMismatch, msg.str());
  }
}

void require_truncated_sizes(const Str& x, const Str& y) {
  if (y.size() < 2 || y.size() > x.size()) {
    std::ostringstream msg;
    msg << "need 2 <= m <= n, got n=" << x.size() << " m=" << y.size();
    throw Error(ErrorCode::SizeOrder, msg.str());
  }
}

double sum_f(const ScalarFunction& f, const std::vector<double>& v) {
  double s = 0.0;
  for (double t : v) s += f(t);
  return s;
}

NamedOperand operand(std::string name, const Str& s) { return {std::move(name), s.values()}; }

}  // namespace

MajorizationVerdict hlp_majorizes(const Str& x, const Str& y) {
  require_same_length(x, y);
  auto v = partial_sum_verdict(MajorizationKind::hlp, x, y, x.size() - 1);
  v.holds = v.holds && approx_equal(v.total_x, v.total_y);
  return v;
}

MajorizationVerdict weak_majorizes(const Str& x, const Str& y) {
  require_same_length(x, y);
  auto v = partial_sum_verdict(MajorizationKind::weak, x, y, x.size() - 1);
  v.holds = v.holds && approx_leq(v.total_x, v.total_y);
  return v;
}

// The maximum over k-subsets of distinct indices of x is the top-k sum, so
// condition (TW1) reduces to sorted partial sums.
MajorizationVerdict truncated_convex_applicable(const Str& x, const Str& y) {
  require_truncated_sizes(x, y);
  auto v = partial_sum_verdict(MajorizationKind::truncated_convex, x, y, y.size() - 1);
  v.holds = v.holds && approx_leq(v.total_x, v.total_y);
  return v;
}

MajorizationVerdict truncated_concave_applicable(const Str& x, const Str& y) {
  require_truncated_sizes(x, y);
  auto v = partial_sum_verdict(MajorizationKind::truncated_concave, x, y, y.size() - 1);
  v.holds = v.holds && approx_leq(v.total_y, v.total_x);
  return v;
}

InequalityReport truncated_convex_inequality(const ScalarFunction& f, const Str& x, const Str& y) {
  if (!truncated_convex_applicable(x, y).holds)
    throw Error(ErrorCode::PreconditionFailed, "strings fail the truncated (convex) majorization conditions");
  const ShapeFlags m = f.measured();
  const double pad = static_cast<double>(x.size() - y.size()) * f(0.0);
  auto r = make_report("truncated_convex", sum_f(f, y.values()) + pad, sum_f(f, x.values()),
                       {{"f nondecreasing", m.nondecreasing}, {"f convex", m.convex}});
  r.inputs = {operand("x", x), operand("y", y)};
  return r;
}

InequalityReport truncated_concave_inequality(const ScalarFunction& f, const Str& x, const Str& y) {
  if (!truncated_concave_applicable(x, y).holds)
    throw Error(ErrorCode::PreconditionFailed, "strings fail the truncated (concave) majorization conditions");
  const ShapeFlags m = f.measured();
  const double pad = static_cast<double>(x.size() - y.size()) * f(0.0);
  auto r = make_report("truncated_concave", sum_f(f, x.values()), sum_f(f, y.values()) + pad,
                       {{"f nondecreasing", m.nondecreasing}, {"f concave", m.concave}});
  r.inputs = {operand("x", x), operand("y", y)};
  return r;
}

InequalityReport enflo_check(std::span<const double> r, double p, double q) {
  if (r.size() != 6) throw Error(ErrorCode::LengthMismatch, "Enflo's inequality takes six numbers");
  if (!(q > 0.0) || !(p >= q)) throw Error(ErrorCode::PreconditionFailed, "need p >= q > 0");
  for (double v : r)
    if (!(v > 0.0)) throw Error(ErrorCode::PreconditionFailed, "entries must be positive");
  const double max_small = *std::max_element(r.begin(), r.begin() + 4);
  if (max_small > std::max(r[4], r[5])) throw Error(ErrorCode::PreconditionFailed, "max(r1..r4) > max(r5, r6)");
  double small_q = 0.0, small_p = 0.0;
  for (int i = 0; i < 4; ++i) {
    small_q += std::pow(r[i], q);
    small_p += std::pow(r[i], p);
  }
  const double big_q = std::pow(r[4], q) + std::pow(r[5], q);
  if (std::abs(small_q - big_q) > 1e-9 * std::max(small_q, big_q))
    throw Error(ErrorCode::PreconditionFailed, "q-power sums differ");
  auto rep = make_report("enflo", std::pow(r[4], p) + std::pow(r[5], p), small_p);
  rep.inputs = {{"r", {r.begin(), r.end()}}, {"p,q", {p, q}}};
  return rep;
}

double max_subset_sum(std::span<const double> values, std::size_t k) {
  const std::size_t n = values.size();
  if (n > 20) throw Error(ErrorCode::TooLarge, "subset enumeration limited to 20 entries");
  if (k == 0) return 0.0;
  if (k > n) k = n;
  double best = -HUGE_VAL;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s += values[i];
    best = std::max(best, s);
  }
  return best;
}

InequalityReport brute_force_oracle(const ScalarFunction& f, const Str& x, const Str& y, TruncatedCase which) {
  const std::size_t n = x.size();
  if (n > 8) throw Error(ErrorCode::TooLarge, "oracle limited to n <= 8");
  require_truncated_sizes(x, y);
  const std::size_t m = y.size();

  std::vector<double> ypad = y.values();
  ypad.resize(n, 0.0);

  bool partial_ok = true;
  for (std::size_t k = 1; k < m; ++k)
    partial_ok = partial_ok && approx_leq(max_subset_sum(x.values(), k), max_subset_sum(ypad, k));
  double sx = 0.0, sy = 0.0, fx = 0.0, fy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x.values()[i];
    sy += ypad[i];
    fx += f(x.values()[i]);
    fy += f(ypad[i]);
  }
  const bool totals_ok = which == TruncatedCase::convex ? approx_leq(sx, sy) : approx_leq(sy, sx);
  const ShapeFlags meas = f.measured();
  std::vector<HypothesisCheck> audit{{"partial sums (subset enumeration)", partial_ok},
                                     {"totals", totals_ok},
                                     {"f nondecreasing", meas.nondecreasing}};
  if (which == TruncatedCase::convex) {
    audit.push_back({"f convex", meas.convex});
    auto r = make_report("brute_force_oracle:convex", fy, fx, std::move(audit));
    r.inputs = {operand("x", x), {"y_padded", ypad}};
    return r;
  }
  audit.push_back({"f concave", meas.concave});
  auto r = make_report("brute_force_oracle:concave", fx, fy, std::move(audit));
  r.inputs = {operand("x", x), {"y_padded", ypad}};
  return r;
}

}  // namespace ineqlab
