#include <cmath>

#include "doctest.h"

#include "ineqlab/error.hpp"
#include "ineqlab/spaces.hpp"

using namespace ineqlab;

TEST_CASE("lp norms") {
  const std::vector<double> v{3.0, -4.0};
  CHECK(lp_norm(v, 2.0) == doctest::Approx(5.0));
  CHECK(lp_norm(v, 1.0) == doctest::Approx(7.0));
  CHECK(lp_norm(v, kInfinity) == doctest::Approx(4.0));
  CHECK(lp_norm(v, 3.0) == doctest::Approx(std::cbrt(91.0)));
  const std::vector<double> huge{1e200, 1e200};
  CHECK(lp_norm(huge, 4.0) == doctest::Approx(1e200 * std::pow(2.0, 0.25)));
  const std::vector<double> zero{0.0, 0.0};
  CHECK(lp_norm(zero, 1.5) == 0.0);
}

TEST_CASE("space specs") {
  const Space s = Space::parse("lp:1.5:4");
  CHECK(s.kind() == SpaceKind::lp);
  CHECK(s.p() == 1.5);
  CHECK(s.dim() == 4);
  CHECK(Space::parse("lp:inf:3").p() == kInfinity);
  CHECK(Space::parse("schatten:3:2").coords() == 4);
  CHECK(Space::parse("euclid:5").is_inner_product());
  CHECK_THROWS_AS(Space::parse("lp:0.5:4"), Error);
  CHECK_THROWS_AS(Space::parse("banana"), Error);
  CHECK_THROWS_AS(Space::parse("lp:2"), Error);
  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(Space::lp(2.0, 2).norm(three), Error);
}

TEST_CASE("Schatten norms") {
  Matrix d(2, 2);
  d << 3, 0, 0, 4;
  CHECK(schatten_norm(d, 2.0) == doctest::Approx(5.0));
  CHECK(schatten_norm(d, 1.0) == doctest::Approx(7.0));
  CHECK(schatten_norm(d, kInfinity) == doctest::Approx(4.0));
  // Frobenius norm oracle
  Matrix m(2, 2);
  m << 1, 2, -3, 0.5;
  CHECK(schatten_norm(m, 2.0) == doctest::Approx(std::sqrt(1 + 4 + 9 + 0.25)));
  const std::vector<double> flat = flatten(m);
  CHECK(flat[1] == 2.0);
  CHECK(as_matrix(flat, 2)(1, 0) == -3.0);
  Matrix bad(1, 1);
  bad << std::nan("");
  CHECK_THROWS_AS(singular_values(bad), Error);
}

TEST_CASE("PSD matrices") {
  Matrix a(2, 2);
  a << 2, 1, 1, 2;
  CHECK_NOTHROW(PsdMatrix{a});
  Matrix n(2, 2);
  n << 1, 0, 0, -1;
  CHECK_THROWS_AS(PsdMatrix{n}, Error);
  const PsdMatrix p = psd_project(n);
  CHECK(p.entries()(0, 0) == doctest::Approx(1.0));
  CHECK(std::abs(p.entries()(1, 1)) <= 1e-15);
  Matrix asym(2, 2);
  asym << 1, 2, 0, 1;
  CHECK_THROWS_AS(psd_project(asym), Error);
  CHECK(psd_det(a) == doctest::Approx(3.0));
  Matrix singular(2, 2);
  singular << 1, 1, 1, 1;
  CHECK(psd_det(singular) >= 0.0);
}

TEST_CASE("geometric constants") {
  CHECK(cnj_analytic(2.0) == 1.0);
  CHECK(std::abs(cnj_analytic(1.5) - std::cbrt(2.0)) <= 1e-12);
  CHECK(std::abs(cnj_analytic(3.0) - std::cbrt(2.0)) <= 1e-12);
  CHECK(cnj_analytic(1.0) == 2.0);
  CHECK(cnj_analytic(kInfinity) == 2.0);
  CHECK(n_constant(1.0) == 2);
  CHECK(n_constant(cnj_analytic(2.0 * std::log(2.0) / std::log(3.0))) == 3);
  CHECK(n_constant(std::cbrt(2.0)) == 4);
  CHECK(n_constant(2.0) == 4);
  CHECK_THROWS_AS(n_constant(2.5), Error);
  CHECK(c_constant(2.5) == 3.0);
  CHECK(c_constant(3.0) == 4.0);
  CHECK(c_tilde(2.0) == 1.0);
  CHECK(c_tilde(3.0) == 1.0);
  CHECK(c_tilde(4.0) == 2.0);
  CHECK_THROWS_AS(c_tilde(1.5), Error);
  CHECK(floor_two_p_minus_one(1.2) == 0);
  CHECK(floor_two_p_minus_one(1.5) == 1);
  CHECK(floor_two_p_minus_one(2.0) == 2);
  CHECK(n_constant(Space::euclid(3)) == 2);
  CHECK(n_constant(Space::lp(1.5, 3)) == 4);
}

TEST_CASE("sampled von Neumann-Jordan constant") {
  const auto l2 = cnj_sampled(Space::lp(2.0, 8), 2000, 1);
  CHECK(l2.max_ratio <= 1.0 + 1e-12);
  CHECK(l2.max_ratio >= 1.0);
  const std::vector<std::pair<std::vector<double>, std::vector<double>>> basis{{{1.0, 0.0}, {0.0, 1.0}}};
  const auto l1 = cnj_sampled(Space::lp(1.0, 2), 100, 1, basis);
  CHECK(l1.max_ratio == 2.0);
  const auto l3 = cnj_sampled(Space::lp(3.0, 4), 2000, 3);
  CHECK(l3.max_ratio <= cnj_analytic(3.0) + 1e-12);
}
