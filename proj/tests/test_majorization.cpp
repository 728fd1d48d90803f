#include <cmath>

#include "doctest.h"

#include "ineqlab/error.hpp"
#include "ineqlab/majorization.hpp"
#include "ineqlab/search.hpp"

using namespace ineqlab;

TEST_CASE("HLP and weak majorization") {
  CHECK(hlp_majorizes(Str{1, 1, 1}, Str{3, 0, 0}).holds);
  CHECK_FALSE(hlp_majorizes(Str{3, 0, 0}, Str{1, 1, 1}).holds);
  CHECK(hlp_majorizes(Str{2, 1, 0}, Str{0, 1, 2}).holds);
  CHECK_FALSE(hlp_majorizes(Str{1, 1, 1}, Str{4, 0, 0}).holds);
  CHECK(weak_majorizes(Str{1, 1, 1}, Str{4, 0, 0}).holds);
  CHECK_FALSE(weak_majorizes(Str{2, 2, 2}, Str{4, 1, 0}).holds);
  const auto v = hlp_majorizes(Str{1, 2, 3}, Str{0, 6, 0});
  REQUIRE(v.ledger.size() == 2);
  CHECK(v.ledger[0].x == 3.0);
  CHECK(v.ledger[0].y == 6.0);
  CHECK(v.ledger[1].x == 5.0);
  CHECK_THROWS_AS(hlp_majorizes(Str{1, 2}, Str{1, 2, 3}), Error);
  CHECK_THROWS_AS(Str({1.0, -1.0}), Error);
}

TEST_CASE("truncated majorization") {
  // x of length 4, y of length 2: max x_i ≤ max y_j and Σx ≤ Σy
  const Str x{1, 1, 1, 1}, y{2, 3};
  CHECK(truncated_convex_applicable(x, y).holds);
  CHECK_FALSE(truncated_concave_applicable(x, y).holds);
  const Str big{1, 1, 1, 2};
  CHECK(truncated_concave_applicable(big, Str{2, 2}).holds);
  CHECK_THROWS_AS(truncated_convex_applicable(Str{1, 2}, Str{1, 2, 3}), Error);
  CHECK_THROWS_AS(truncated_convex_applicable(Str{1, 2}, Str{1}), Error);

  const auto sq = make_function("pow:2");
  const auto r = truncated_convex_inequality(sq, x, y);
  CHECK(r.lhs == doctest::Approx(13.0));
  CHECK(r.rhs == doctest::Approx(4.0));
  CHECK(r.holds);
  CHECK_THROWS_AS(truncated_convex_inequality(sq, Str{3, 3}, Str{1, 1}), Error);
  const auto c = truncated_concave_inequality(make_function("sqrt"), big, Str{2, 2});
  CHECK(c.margin == doctest::Approx(3.0 + std::sqrt(2.0) - 2.0 * std::sqrt(2.0)));
  CHECK(c.holds);
  // hypothesis gate: sqrt is not convex
  const auto bad = truncated_convex_inequality(make_function("sqrt"), x, y);
  CHECK(bad.inconclusive);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("subset sums and the brute-force oracle") {
  const std::vector<double> v{0.5, 3.0, 1.0, 2.0};
  CHECK(max_subset_sum(v, 1) == 3.0);
  CHECK(max_subset_sum(v, 2) == 5.0);
  CHECK(max_subset_sum(v, 4) == 6.5);
  const Str x{1, 1, 1, 1}, y{2, 3};
  const auto sq = make_function("pow:2");
  const auto oracle = brute_force_oracle(sq, x, y, TruncatedCase::convex);
  const auto engine = truncated_convex_inequality(sq, x, y);
  CHECK(std::abs(oracle.margin - engine.margin) <= 1e-12);
  CHECK(oracle.holds);
  CHECK_THROWS_AS(brute_force_oracle(sq, Str(std::vector<double>(9, 1.0)), y, TruncatedCase::convex), Error);
}

TEST_CASE("Enflo six numbers") {
  // q = 1: 1+1+1+1 = 2+2, p = 2: 4+4 ≥ 4
  const std::vector<double> r{1, 1, 1, 1, 2, 2};
  const auto rep = enflo_check(r, 2.0, 1.0);
  CHECK(rep.margin == doctest::Approx(4.0));
  CHECK(rep.holds);
  const std::vector<double> unequal{1, 1, 1, 1, 2, 3};
  CHECK_THROWS_AS(enflo_check(unequal, 2.0, 1.0), Error);
}
