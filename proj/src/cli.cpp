#include "ineqlab/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ineqlab/audit.hpp"
#include "ineqlab/error.hpp"
#include "ineqlab/json_io.hpp"
#include "ineqlab/majorization.hpp"
#include "ineqlab/search.hpp"
#include "ineqlab/spaces.hpp"

namespace ineqlab {
namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& flag) {
  if (text == "inf" || text == "infinity") return kInfinity;
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError(flag + ": not a number: '" + text + "'");
  return v;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_double(item, flag));
  }
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& raw : items) {
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--params: expected key=value, got '" + item + "'");
      p[item.substr(0, eq)] = parse_double(item.substr(eq + 1), "--params");
    }
  }
  return p;
}

// Writes to the --out file when one is given, otherwise to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("--out: cannot open '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void apply_tolerance(InequalityReport& r, double tol) {
  r.tolerance = tol;
  r.holds = !r.inconclusive && r.margin >= -tol;
}

void print_table(const std::vector<SuiteRowResult>& rows, std::ostream& os) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.row.label.size());
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::right << std::setw(7) << "trials"
     << "  " << std::setw(14) << "min_margin" << "  " << std::setw(9) << "holds_all" << "  " << std::setw(12)
     << "inconclusive" << "  " << std::setw(10) << "runtime_ms" << "\n";
  for (const auto& r : rows) {
    std::ostringstream margin;
    margin << std::scientific << std::setprecision(6) << r.result.worst_margin;
    os << std::left << std::setw(static_cast<int>(width)) << r.row.label << "  " << std::right << std::setw(7)
       << r.result.probes << "  " << std::setw(14) << margin.str() << "  " << std::setw(9)
       << (r.result.holds_all() ? "true" : "false") << "  " << std::setw(12) << r.result.inconclusive << "  "
       << std::setw(10) << std::fixed << std::setprecision(1) << r.runtime_ms << "\n";
    os.unsetf(std::ios::floatfield);
  }
}

struct Options {
  std::string check_id;
  std::string space;
  std::string f;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t trials = 0;
  std::vector<std::string> params;
  std::optional<double> tol;
  std::string out;
  std::uint64_t refine = 0;
  bool reference = false;
  bool all = false;
  std::string p;
  bool sampled = false;
  std::size_t dim = 2;
  std::string kind;
  std::string x, y;
  std::size_t grid_points = 64;
  std::size_t quad_draws = 256;
};

int cmd_check(Options& o, std::ostream& out) {
  const ProbeConfig cfg{o.check_id, o.space, o.f, parse_params(o.params)};
  const BoundCheck check = bind_check(cfg);
  Sink sink(o.out, out);
  bool ok = true;
  const std::uint64_t trials = o.trials == 0 ? 1 : o.trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    InequalityReport r = check.evaluate(probe_operands(check, o.seed, i));
    if (o.tol) apply_tolerance(r, *o.tol);
    ok = ok && r.holds;
    Json j = to_json(r, o.seed);
    j["probe_index"] = i;
    j["space"] = check.space.spec();
    if (check.f) j["f"] = check.f->id();
    *sink << j.dump() << "\n";
  }
  return ok || check.open_problem ? kOk : kViolation;
}

int cmd_suite(Options& o, std::ostream& out, std::ostream& err) {
  if (!o.all) throw UsageError("suite run: pass --all");
  auto rows = acceptance_suite(o.trials == 0 ? 10000 : o.trials);
  auto results = run_suite(rows, o.seed, o.reference);
  if (o.tol)
    for (auto& r : results)
      if (r.result.worst_report && r.result.worst_margin < -*o.tol) ++r.result.violations;
  Sink sink(o.out, out);
  *sink << to_json(results, o.seed, o.reference).dump(2) << "\n";
  print_table(results, sink.to_file() ? out : err);
  for (const auto& r : results)
    if (!r.result.holds_all()) return kViolation;
  return kOk;
}

int cmd_constants(Options& o, std::ostream& out) {
  if (o.p.empty()) throw UsageError("constants: --p is required");
  const double p = parse_double(o.p, "--p");
  if (!(p >= 1.0)) throw Error(ErrorCode::BadP, "p must be >= 1");
  Json j;
  j["p"] = number(p);
  j["cnj_analytic"] = cnj_analytic(p);
  j["N"] = n_constant(cnj_analytic(p));
  j["C"] = std::isfinite(p) ? Json(c_constant(p)) : Json(nullptr);
  j["C_tilde"] = p >= 2.0 && std::isfinite(p) ? Json(c_tilde(p)) : Json(nullptr);
  j["floor_two_p_minus_one"] = p > 1.0 && p <= 2.0 ? Json(floor_two_p_minus_one(p)) : Json(nullptr);
  if (o.sampled) {
    const Space s = Space::lp(p, o.dim);
    const std::uint64_t trials = o.trials == 0 ? 10000 : o.trials;
    std::vector<std::pair<std::vector<double>, std::vector<double>>> injected;
    if (o.dim >= 2) {
      std::vector<double> e1(o.dim, 0.0), e2(o.dim, 0.0);
      e1[0] = 1.0;
      e2[1] = 1.0;
      injected.emplace_back(e1, e2);
    }
    const CnjSample cs = cnj_sampled(s, trials, o.seed, injected);
    j["cnj_sampled"] = {{"space", s.spec()},
                        {"trials", cs.trials},
                        {"seed", o.seed},
                        {"max_ratio", cs.max_ratio},
                        {"u", cs.u},
                        {"v", cs.v}};
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_majorize(Options& o, std::ostream& out) {
  const Str x(parse_list(o.x, "--x")), y(parse_list(o.y, "--y"));
  MajorizationVerdict v;
  if (o.kind == "hlp")
    v = hlp_majorizes(x, y);
  else if (o.kind == "weak")
    v = weak_majorizes(x, y);
  else if (o.kind == "tconvex")
    v = truncated_convex_applicable(x, y);
  else if (o.kind == "tconcave")
    v = truncated_concave_applicable(x, y);
  else
    throw UsageError("--kind must be hlp, weak, tconvex or tconcave");
  Json j = to_json(v);
  int code = kOk;
  if (!o.f.empty() && (o.kind == "tconvex" || o.kind == "tconcave") && v.holds) {
    const ScalarFunction f = make_function(o.f);
    const InequalityReport r =
        o.kind == "tconvex" ? truncated_convex_inequality(f, x, y) : truncated_concave_inequality(f, x, y);
    j["inequality"] = to_json(r);
    if (!r.holds) code = kViolation;
  }
  out << j.dump(2) << "\n";
  return code;
}

int cmd_function_audit(Options& o, std::ostream& out) {
  if (o.f.empty()) throw UsageError("function-audit: --f is required");
  const ScalarFunction f = make_function(o.f);
  AuditOptions opt;
  opt.grid_points = o.grid_points;
  opt.quad_draws = o.quad_draws;
  if (o.tol) opt.tol = *o.tol;
  opt.seed = o.seed;
  const ShapeFlags measured = audit_shape(f, opt);
  const auto missing = unconfirmed_flags(f.declared(), measured);
  Json params = Json::object();
  for (const auto& p : f.params()) params[p.name] = p.value;
  Json j{{"id", f.id()},
         {"domain", {f.domain().lo, f.domain().hi}},
         {"params", params},
         {"declared", to_json(f.declared())},
         {"measured", to_json(measured)},
         {"in_S0", is_in_S0(measured)},
         {"unconfirmed", missing}};
  out << j.dump(2) << "\n";
  return missing.empty() ? kOk : kViolation;
}

int cmd_search(Options& o, std::ostream& out) {
  Sink sink(o.out, out);
  if (o.check_id == "zhang-falsifier") {
    const ZhangFalsifier z = falsify_strengthened_zhang();
    Json s = to_json(z.strengthened);
    s["expected"] = "fails";
    Json orig = to_json(z.original);
    orig["expected"] = "holds";
    *sink << Json{{"strengthened", s}, {"original", orig}}.dump(2) << "\n";
    return !z.strengthened.holds && z.original.holds ? kOk : kViolation;
  }
  if (o.check_id == "two-unif-falsifier") {
    const InequalityReport r = falsify_two_unif_p_ge_2();
    Json j = to_json(r);
    j["expected"] = "fails";
    *sink << j.dump(2) << "\n";
    return !r.holds && !r.inconclusive ? kOk : kViolation;
  }
  const ProbeConfig cfg{o.check_id, o.space, o.f, parse_params(o.params)};
  const BoundCheck check = bind_check(cfg);
  if (check.f) check.f->measured();
  const std::uint64_t trials = o.trials == 0 ? 10000 : o.trials;
  SearchResult r = o.reference ? probe_serial(check, trials, o.seed) : probe_parallel(check, trials, o.seed);
  if (o.refine > 0) r = refine(check, r, o.refine);
  *sink << to_json(r).dump(2) << "\n";
  if (check.open_problem) return kOk;
  bool ok = r.holds_all();
  if (r.worst_report) ok = ok && r.worst_report->holds;
  return ok ? kOk : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for functional inequalities", "ineqlab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--trials", o.trials, "number of operand sets");
    sub->add_option("--out", o.out, "write JSON to this file");
  };

  auto* check = app.add_subcommand("check", "evaluate one check on seeded operands (JSON lines)");
  check->add_option("check_id", o.check_id, "check id")->required();
  check->add_option("--space", o.space, "lp:p:dim | schatten:p:m | euclid:dim");
  check->add_option("--f", o.f, "catalog function id");
  check->add_option("--params", o.params, "key=value parameters");
  check->add_option("--tol", o.tol, "absolute tolerance override");
  common(check);

  auto* suite = app.add_subcommand("suite", "run the full battery");
  auto* suite_run = suite->add_subcommand("run", "run the battery");
  suite->require_subcommand(1);
  suite_run->add_flag("--all", o.all, "every row");
  suite_run->add_flag("--reference", o.reference, "single-threaded, runtime-free output");
  suite_run->add_option("--tol", o.tol, "absolute tolerance override");
  common(suite_run);

  auto* constants = app.add_subcommand("constants", "geometric constants of l^p");
  constants->add_option("--p", o.p, "index p (may be inf)")->required();
  constants->add_flag("--sampled", o.sampled, "also estimate C_NJ by sampling");
  constants->add_option("--dim", o.dim, "dimension for sampling");
  constants->add_option("--trials", o.trials, "sampling trials");
  constants->add_option("--seed", o.seed, "RNG seed");

  auto* majorize = app.add_subcommand("majorize", "majorization verdicts");
  majorize->add_option("--kind", o.kind, "hlp | weak | tconvex | tconcave")->required();
  majorize->add_option("--x", o.x, "comma-separated string x")->required();
  majorize->add_option("--y", o.y, "comma-separated string y")->required();
  majorize->add_option("--f", o.f, "also evaluate the truncated inequality for f");

  auto* audit = app.add_subcommand("function-audit", "measure the shape of a catalog function");
  audit->add_option("--f", o.f, "catalog function id")->required();
  audit->add_option("--grid-points", o.grid_points, "grid size");
  audit->add_option("--quad-draws", o.quad_draws, "random node draws per order");
  audit->add_option("--tol", o.tol, "absolute tolerance on divided differences");
  audit->add_option("--seed", o.seed, "RNG seed");

  auto* search = app.add_subcommand("search", "seeded counterexample search");
  search->add_option("check_id", o.check_id, "check id, zhang-falsifier or two-unif-falsifier")->required();
  search->add_option("--space", o.space, "space spec");
  search->add_option("--f", o.f, "catalog function id");
  search->add_option("--params", o.params, "key=value parameters");
  search->add_option("--refine", o.refine, "pattern-search evaluation budget");
  search->add_flag("--reference", o.reference, "single-threaded sweep");
  common(search);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(o, out);
    if (suite_run->parsed()) return cmd_suite(o, out, err);
    if (constants->parsed()) return cmd_constants(o, out);
    if (majorize->parsed()) return cmd_majorize(o, out);
    if (audit->parsed()) return cmd_function_audit(o, out);
    if (search->parsed()) return cmd_search(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ineqlab
