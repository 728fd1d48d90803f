#include <cmath>
#include <numeric>

#include "doctest.h"

#include "ineqlab/audit.hpp"
#include "ineqlab/bernstein.hpp"
#include "ineqlab/divided_difference.hpp"
#include "ineqlab/error.hpp"
#include "ineqlab/rng.hpp"

using namespace ineqlab;

namespace {

ScalarFunction lambda_fn(const char* id, std::function<double(double)> f, Interval dom = {0.0, 10.0}) {
  return ScalarFunction(id, std::move(f), ShapeFlags{}, dom);
}

}  // namespace

TEST_CASE("divided differences of polynomials") {
  const std::vector<double> two{0.0, 1.0};
  CHECK(divided_difference(two, lambda_fn("five", [](double) { return 5.0; })) == doctest::Approx(0.0));
  const std::vector<double> three{0.0, 1.0, 2.0};
  CHECK(divided_difference(three, lambda_fn("sq", [](double x) { return x * x; })) == doctest::Approx(1.0));
  const std::vector<double> four{0.3, 1.1, 2.7, 4.0};
  const auto cube = lambda_fn("cube", [](double x) { return x * x * x; });
  CHECK(std::abs(divided_difference(four, cube) - 1.0) <= 1e-10);
  const std::vector<double> shuffled{2.7, 0.3, 4.0, 1.1};
  CHECK(std::abs(divided_difference(shuffled, cube) - 1.0) <= 1e-10);
}

TEST_CASE("divided difference table entries") {
  const std::vector<double> x{0.0, 1.0, 3.0};
  const std::vector<double> y{1.0, 2.0, 10.0};
  DividedDifferenceTable t(x, y);
  CHECK(t.entry(1, 0) == doctest::Approx(1.0));
  CHECK(t.entry(1, 1) == doctest::Approx(4.0));
  CHECK(t.top() == doctest::Approx(1.0));
  CHECK(t.max_order() == 2);
}

TEST_CASE("divided difference errors") {
  const std::vector<double> dup{1.0, 1.0};
  const std::vector<double> vals{2.0, 3.0};
  CHECK_THROWS_AS(divided_difference(dup, vals), Error);
  try {
    divided_difference(dup, vals);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateNodes);
  }
  const std::vector<double> short_vals{1.0};
  CHECK_THROWS_AS(divided_difference(dup, short_vals), Error);
}

TEST_CASE("symmetric formula agrees with the recursion") {
  Rng rng(7);
  const auto f = make_function("exp");
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(4);
    std::vector<double> nodes(n), values(n);
    for (std::size_t i = 0; i < n; ++i) {
      nodes[i] = 0.5 * static_cast<double>(i) + rng.uniform(0.0, 0.4);
      values[i] = f(nodes[i]);
    }
    const double a = divided_difference(nodes, values);
    const double b = divided_difference_symmetric(nodes, values);
    CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("iterated differences") {
  const auto id = lambda_fn("id", [](double x) { return x; });
  CHECK(iterated_difference(id, 0.0, 1.0, 2) == doctest::Approx(0.0));
  const auto cube = lambda_fn("cube", [](double x) { return x * x * x; });
  CHECK(iterated_difference(cube, 0.0, 1.0, 3) == doctest::Approx(6.0));
  CHECK(iterated_difference(make_function("exp"), 0.0, 0.5, 3) > 0.0);
  CHECK_THROWS_AS(iterated_difference(cube, 9.0, 1.0, 3), Error);
  // n! h^n [x, ..., x + nh; f]
  const auto f = make_function("log1p");
  const std::vector<double> nodes{1.0, 1.25, 1.5, 1.75};
  const double dd = divided_difference(nodes, f);
  CHECK(iterated_difference(f, 1.0, 0.25, 3) == doctest::Approx(6.0 * std::pow(0.25, 3) * dd).epsilon(1e-9));
}

TEST_CASE("catalog audits") {
  const auto sqshift = make_function("sqshift:1");
  CHECK(is_in_S0(sqshift));
  for (const char* id : {"pow:1", "pow:1.5", "pow:2", "xlog1p", "logcosh"}) {
    INFO(std::string(id));
    CHECK(is_in_S0(make_function(id)));
  }
  for (const char* id : {"pow:0.5", "pow:2", "pow:3", "xfrac:1", "log1p", "sinh", "cosh"}) {
    INFO(std::string(id));
    CHECK(make_function(id).measured().three_convex);
  }
  const ShapeFlags m = make_function("pow:1.5").measured();
  CHECK(m.nonnegative);
  CHECK(m.nondecreasing);
  CHECK(m.convex);
  CHECK_FALSE(m.concave);
  CHECK(m.three_concave);
  CHECK(m.vanishes_at_zero);
  // degree ≤ 2 polynomials are both 3-convex and 3-concave
  const ShapeFlags sq = make_function("pow:2").measured();
  CHECK(sq.three_convex);
  CHECK(sq.three_concave);
  CHECK_FALSE(is_in_S0(make_function("pow:3")));
  CHECK_FALSE(is_in_S0(make_function("sqrt")));
}

TEST_CASE("declared flags are confirmed by the audit") {
  for (const char* id : {"identity", "sqrt", "pow:1.3", "log1p", "xlog1p", "logcosh", "sqshift:2", "exp_neg", "inv1p",
                         "xfrac:2", "one_minus_exp:1", "pow_shift:1.5", "exp", "expm1", "sinh", "cosh"}) {
    const auto f = make_function(id);
    INFO(std::string(id));
    CHECK(unconfirmed_flags(f.declared(), f.measured()).empty());
  }
  CHECK_THROWS_AS(make_function("no_such_fn"), Error);
  CHECK_THROWS_AS(make_function("pow:abc"), Error);
}

TEST_CASE("audit grid") {
  AuditOptions opt;
  const auto grid = audit_grid(Interval{0.0, 10.0}, opt);
  CHECK(grid.size() >= 50);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 10.0);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK_THROWS_AS(audit_grid(Interval{1.0, 1.0}, opt), Error);
}

TEST_CASE("composition and powers") {
  // x log(1+x) is 3-concave and nondecreasing: x ↦ f(√x) comes out concave
  const auto g = compose_power(make_function("xlog1p"), 0.5);
  CHECK(g.declared().concave);
  CHECK(g.measured().concave);
  const auto h = raise_power(make_function("log1p"), 0.5);
  CHECK(h.measured().concave);
  CHECK(h(3.0) == doctest::Approx(std::sqrt(std::log1p(3.0))));
}

TEST_CASE("completely monotone shift") {
  const auto f = make_function("exp_neg");
  const auto g = completely_monotone_shift(f, 5.0, 1.0);
  CHECK(g(2.0) == doctest::Approx(std::exp(-2.0) + 2.0));
  CHECK(unconfirmed_flags(g.declared(), g.measured()).empty());
  CHECK_THROWS_AS(completely_monotone_shift(f, 5.0, 0.5), Error);
  CHECK_THROWS_AS(completely_monotone_shift(make_function("pow:2"), 5.0, 1.0), Error);
}

TEST_CASE("Bernstein polynomials") {
  const auto absdev = lambda_fn("absdev", [](double x) { return std::abs(x - 0.5); }, {0.0, 1.0});
  CHECK(bernstein(absdev, 4, {0.0, 1.0})(0.5) == doctest::Approx(0.1875));
  const auto affine = lambda_fn("affine", [](double x) { return 3.0 * x - 2.0; }, {0.0, 1.0});
  const auto b = bernstein(affine, 7, {0.0, 1.0});
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) CHECK(std::abs(b(x) - affine(x)) <= 1e-12);
  const auto e = make_function("exp");
  const auto be = bernstein(e, 10, {0.0, 1.0});
  CHECK(be(0.0) == e(0.0));
  CHECK(be(1.0) == e(1.0));
  const ShapeFlags m = be.as_function().measured();
  CHECK(m.convex);
  CHECK(m.three_convex);
  CHECK_THROWS_AS(bernstein(e, 3, {0.5, 0.5}), Error);
}
