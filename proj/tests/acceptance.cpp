// Acceptance battery: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ineqlab/audit.hpp"
#include "ineqlab/bernstein.hpp"
#include "ineqlab/cli.hpp"
#include "ineqlab/divided_difference.hpp"
#include "ineqlab/inequalities.hpp"
#include "ineqlab/majorization.hpp"
#include "ineqlab/rng.hpp"
#include "ineqlab/search.hpp"
#include "ineqlab/spaces.hpp"

using namespace ineqlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool rel_close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)); }

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* id : {"sqshift:1", "pow:1", "pow:1.5", "pow:2", "xlog1p", "logcosh"})
    o.require(is_in_S0(audit_shape(make_function(id))), std::string(id) + " not in S0");
  for (const char* id : {"pow:0.5", "pow:2", "pow:3", "xfrac:1", "log1p", "sinh", "cosh"})
    o.require(audit_shape(make_function(id)).three_convex, std::string(id) + " not 3-convex");
  const double t = seconds_since(t0);
  o.require(t < 10.0, "runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "6 S0 members, 7 3-convex members, " + fmt(t) + " s";
  return o;
}

Outcome ac2() {
  Outcome o;
  Rng rng(2024);
  const char* ids[] = {"exp", "log1p", "sqrt", "sinh", "xlog1p"};
  double worst_sym = 0.0, worst_iter = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = make_function(ids[trial % 5]);
    const std::size_t n = 2 + rng.below(6);
    std::vector<double> nodes(n), values(n);
    for (std::size_t i = 0; i < n; ++i) {
      nodes[i] = 0.1 + 0.5 * static_cast<double>(i) + rng.uniform(0.0, 0.4);
      values[i] = f(nodes[i]);
    }
    const double a = divided_difference(nodes, values);
    const double b = divided_difference_symmetric(nodes, values);
    worst_sym = std::max(worst_sym, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));

    const int k = 1 + static_cast<int>(rng.below(5));
    const double x = rng.uniform(0.0, 3.0), h = rng.uniform(0.25, 1.0);
    std::vector<double> eq(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) eq[static_cast<std::size_t>(i)] = x + i * h;
    const double lhs = iterated_difference(f, x, h, k);
    const double rhs = std::tgamma(k + 1.0) * std::pow(h, k) * divided_difference(eq, f);
    worst_iter = std::max(worst_iter, std::abs(lhs - rhs) / std::max(std::abs(lhs), std::abs(rhs)));
  }
  o.require(worst_sym <= 1e-9, "symmetric vs recursion " + fmt(worst_sym));
  o.require(worst_iter <= 1e-9, "n! h^n identity " + fmt(worst_iter));
  Rng r2(5);
  const ScalarFunction cube("cube", [](double x) { return x * x * x - 2.0 * x * x + 0.5; }, ShapeFlags{}, {-10.0, 10.0});
  double worst_cube = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> nodes{r2.uniform(-3, -1.5), r2.uniform(-1, 0.5), r2.uniform(1, 2), r2.uniform(2.5, 5)};
    worst_cube = std::max(worst_cube, std::abs(divided_difference(nodes, cube) - 1.0));
  }
  o.require(worst_cube <= 1e-10, "monic cubic " + fmt(worst_cube));
  if (o.pass)
    o.detail = "max rel " + fmt(worst_sym) + " / " + fmt(worst_iter) + ", cubic " + fmt(worst_cube) +
               " (iterated differences carry the n! factor)";
  return o;
}

Outcome ac3() {
  Outcome o;
  const ScalarFunction cube("cube", [](double x) { return x * x * x; }, ShapeFlags{}, {0.0, 1.0});
  const auto e = make_function("exp");
  for (const ScalarFunction* f : {&e, &cube})
    for (int n : {5, 10, 20}) {
      const ShapeFlags m = bernstein(*f, n, {0.0, 1.0}).as_function().measured();
      o.require(m.convex && m.three_convex, "B_" + std::to_string(n) + "(" + f->id() + ")");
    }
  const ScalarFunction affine("affine", [](double x) { return 2.5 - 4.0 * x; }, ShapeFlags{}, {0.0, 1.0});
  double worst = 0.0;
  for (int n : {1, 5, 10, 20}) {
    const auto b = bernstein(affine, n, {0.0, 1.0});
    for (int i = 0; i <= 100; ++i) worst = std::max(worst, std::abs(b(i / 100.0) - affine(i / 100.0)));
  }
  o.require(worst <= 1e-12, "affine reproduction " + fmt(worst));
  if (o.pass) o.detail = "exp and x^3 for n in {5,10,20}, affine error " + fmt(worst);
  return o;
}

Outcome ac4() {
  Outcome o;
  const char* catalog[] = {"identity", "sqrt",   "pow:0.5", "pow:1.5",         "pow:2",         "pow:3",
                           "log1p",    "xlog1p", "logcosh", "sqshift:1",       "exp_neg",       "inv1p",
                           "xfrac:1",  "one_minus_exp:1",   "neg_xlogx",       "pow_shift:1.5", "expm1",
                           "expm1_minus_x", "sinh", "cosh"};
  double worst_gap = 0.0, worst_margin = HUGE_VAL;
  int audited = 0;
  for (const auto& [check_id, which] : {std::pair{"truncated_convex", TruncatedCase::convex},
                                        std::pair{"truncated_concave", TruncatedCase::concave}}) {
    const auto bound = bind_check({check_id, "euclid:6", "", {}});
    std::vector<Operands> pairs;
    for (std::uint64_t i = 0; i < 10000; ++i) pairs.push_back(probe_operands(bound, 4, i));
    const auto ref = *bound.f;
    for (const auto& p : pairs) {
      const Str x(p[0]), y(p[1]);
      const auto engine = bound.evaluate(p);
      const auto oracle = brute_force_oracle(ref, x, y, which);
      worst_gap = std::max(worst_gap, std::abs(engine.margin - oracle.margin));
      o.require(engine.inconclusive == oracle.inconclusive, "verdict mismatch");
      if (!o.pass) return o;
    }
    for (const char* id : catalog) {
      const auto f = make_function(id);
      const Str probe_x(pairs[0][0]), probe_y(pairs[0][1]);
      const auto first = which == TruncatedCase::convex ? truncated_convex_inequality(f, probe_x, probe_y)
                                                        : truncated_concave_inequality(f, probe_x, probe_y);
      if (first.inconclusive) continue;
      ++audited;
      for (const auto& p : pairs) {
        const Str x(p[0]), y(p[1]);
        const auto r = which == TruncatedCase::convex ? truncated_convex_inequality(f, x, y)
                                                      : truncated_concave_inequality(f, x, y);
        worst_margin = std::min(worst_margin, r.margin);
        o.require(!r.inconclusive, std::string(id) + " inconclusive");
        if (!o.pass) return o;
      }
    }
  }
  o.require(worst_gap <= 1e-12, "engine vs oracle " + fmt(worst_gap));
  o.require(worst_margin >= -1e-9, "min margin " + fmt(worst_margin));
  if (o.pass)
    o.detail = "2 x 10^4 pairs, oracle gap " + fmt(worst_gap) + ", " + std::to_string(audited) +
               " function/case combinations, min margin " + fmt(worst_margin);
  return o;
}

Outcome ac5() {
  Outcome o;
  o.require(std::abs(cnj_analytic(2.0) - 1.0) <= 1e-12, "cnj(2)");
  o.require(std::abs(cnj_analytic(1.5) - std::cbrt(2.0)) <= 1e-12, "cnj(1.5)");
  const auto l2 = cnj_sampled(Space::lp(2.0, 8), 10000, 42);
  o.require(l2.max_ratio <= 1.0 + 1e-12, "sampled l2 " + fmt(l2.max_ratio));
  const auto l1 = cnj_sampled(Space::lp(1.0, 2), 10000, 42, {{{1.0, 0.0}, {0.0, 1.0}}});
  o.require(l1.max_ratio == 2.0, "sampled l1 " + fmt(l1.max_ratio));
  o.require(n_constant(1.0) == 2, "N(1)");
  o.require(n_constant(cnj_analytic(2.0 * std::log(2.0) / std::log(3.0))) == 3, "N(3/2)");
  o.require(n_constant(std::cbrt(2.0)) == 4, "N(2^(1/3))");
  o.require(c_constant(2.5) == 3.0, "C(2.5)");
  o.require(c_tilde(2.0) == 1.0, "C~(2)");
  if (o.pass) o.detail = "analytic, sampled and integer constants";
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = HUGE_VAL;
  for (const char* space : {"lp:1:8", "lp:1.5:8", "lp:2:8", "lp:3:8", "lp:inf:8"}) {
    const auto r = probe({"gen_parallelogram", space, "", {}}, 10000, 6, false);
    worst = std::min(worst, r.worst_margin);
    o.require(r.worst_margin >= -1e-9 && r.errors == 0 && r.inconclusive == 0, std::string(space) + " " + fmt(r.worst_margin));
  }
  const double t = seconds_since(t0);
  o.require(t < 30.0, "runtime " + fmt(t) + " s");
  if (o.pass) o.detail = "5 x 10^4 pairs, min margin " + fmt(worst) + ", " + fmt(t) + " s";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_suite(acceptance_suite(10000), kDefaultSeed, false);
  double worst = HUGE_VAL;
  for (const auto& row : rows) {
    worst = std::min(worst, row.result.worst_margin);
    o.require(row.result.worst_margin >= -1e-9 && row.result.holds_all(),
              row.row.label + " min " + fmt(row.result.worst_margin));
  }
  const double t = seconds_since(t0);
  o.require(t < 300.0, "runtime " + fmt(t) + " s");
  if (o.pass)
    o.detail = std::to_string(rows.size()) + " rows x 10^4, min margin " + fmt(worst) + ", " + fmt(t) + " s";
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto z = falsify_strengthened_zhang();
  o.require(std::abs(z.strengthened.lhs - (2.0 + 196.0 / 81.0)) <= 1e-12, "lhs " + fmt(z.strengthened.lhs));
  o.require(std::abs(z.strengthened.rhs - 55.0 / 12.0) <= 1e-12, "rhs " + fmt(z.strengthened.rhs));
  o.require(std::abs(z.strengthened.margin + 53.0 / 324.0) <= 1e-9, "margin " + fmt(z.strengthened.margin));
  o.require(!z.strengthened.holds, "strengthened form holds");
  o.require(std::abs(z.original.margin - 123.0) <= 1e-12 * 123.0, "original margin " + fmt(z.original.margin));
  o.require(z.original.holds, "original fails");
  if (o.pass) o.detail = "margin -53/324 = " + fmt(z.strengthened.margin) + ", original +123";
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto r = probe_open_problem("revhh_signed", 100000, kDefaultSeed, false);
  o.require(r.worst_margin <= -0.1, "worst margin " + fmt(r.worst_margin));
  const std::vector<double> x{1, 0}, y{-1, 0}, z{0.6, 0};
  const auto w = frechet_functional(make_function("sqrt"), x, y, z, ConeMode::lifted);
  o.require(std::abs(w.margin + 0.1362) <= 1e-4, "analytic witness " + fmt(w.margin));
  if (o.pass) o.detail = "sampled " + fmt(r.worst_margin) + ", analytic " + fmt(w.margin);
  return o;
}

Outcome ac10() {
  Outcome o;
  const std::vector<std::string> args{"suite", "run", "--all", "--seed", "42", "--reference"};
  std::ostringstream a, b, err;
  const int ca = run_cli(args, a, err), cb = run_cli(args, b, err);
  o.require(ca == 0 && cb == 0, "exit codes " + std::to_string(ca) + "/" + std::to_string(cb));
  o.require(!a.str().empty() && a.str() == b.str(), "outputs differ");
  if (o.pass) o.detail = std::to_string(a.str().size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("[%s] AC%zu %s\n", o.pass ? "PASS" : "FAIL", i + 1, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
