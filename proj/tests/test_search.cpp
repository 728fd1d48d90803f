#include <cmath>

#include "doctest.h"

#include "ineqlab/error.hpp"
#include "ineqlab/search.hpp"

using namespace ineqlab;

TEST_CASE("registry and binding") {
  const auto ids = registered_checks();
  CHECK(ids.size() >= 25);
  CHECK(is_open_problem("revhh_signed"));
  CHECK(is_open_problem("zhang_strengthened"));
  CHECK_FALSE(is_open_problem("hanner_classic"));
  const auto b = bind_check({"hanner", "lp:3:4", "", {}});
  CHECK(b.check_id == "hanner_classic");
  CHECK(b.space.p() == 3.0);
  try {
    bind_check({"no_such_check", "", "", {}});
    FAIL("expected UnknownCheck");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownCheck);
  }
  const auto bad = probe({"schotz_inner", "lp:3:3", "", {}}, 10, 1);
  CHECK(bad.errors == 10);
  CHECK(bad.first_error.find("NotInnerProduct") != std::string::npos);
}

TEST_CASE("serial and parallel probes agree") {
  for (const char* id : {"hanner_classic", "zhang_functional", "popoviciu_vec", "truncated_convex"}) {
    INFO(std::string(id));
    const auto check = bind_check({id, "", "", {}});
    const auto a = probe_serial(check, 2000, 7);
    const auto b = probe_parallel(check, 2000, 7);
    CHECK(a.worst_margin == b.worst_margin);
    CHECK(a.worst_index == b.worst_index);
    CHECK(a.violations == b.violations);
    CHECK(a.inconclusive == b.inconclusive);
    CHECK(a.errors == b.errors);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("probes are deterministic and witnesses replay") {
  const ProbeConfig cfg{"schotz_banach", "", "", {}};
  const auto a = probe(cfg, 3000, 99);
  const auto b = probe(cfg, 3000, 99);
  CHECK(a.worst_margin == b.worst_margin);
  CHECK(a.witness == b.witness);
  const auto check = bind_check(cfg);
  CHECK(probe_operands(check, 99, a.worst_index) == a.witness);
  const auto replay = check.evaluate(a.witness);
  CHECK(std::abs(replay.margin - a.worst_margin) <= 1e-12);
  CHECK(a.holds_all());
  CHECK(a.probes == 3000);
  const auto c = probe(cfg, 3000, 100);
  CHECK(c.witness != a.witness);
}

TEST_CASE("refinement never worsens and respects the budget") {
  const auto check = bind_check({"revhh_signed", "", "", {}});
  const auto base = probe_serial(check, 500, 3);
  const auto same = refine(check, base, 0);
  CHECK(same.worst_margin == base.worst_margin);
  CHECK(same.witness == base.witness);
  const auto better = refine(check, base, 500);
  CHECK(better.refined);
  CHECK(better.refine_evaluations <= 500);
  CHECK(better.worst_margin <= base.worst_margin);
  CHECK(std::abs(check.evaluate(better.witness).margin - better.worst_margin) <= 1e-12);

  const auto hanner = bind_check({"hanner_classic", "", "", {}});
  const auto h = refine(hanner, probe_serial(hanner, 500, 3), 1000);
  CHECK(h.worst_margin >= -1e-9);
}

TEST_CASE("symmetric operands stay symmetric under refinement") {
  const auto check = bind_check({"zhang_strengthened", "", "", {}});
  const auto r = refine(check, probe_serial(check, 200, 5), 400);
  REQUIRE(check.symmetric_order == 2);
  for (const auto& m : r.witness) CHECK(m[1] == m[2]);
}

TEST_CASE("falsifiers") {
  const auto z = falsify_strengthened_zhang();
  CHECK(std::abs(z.strengthened.margin + 53.0 / 324.0) <= 1e-9);
  CHECK_FALSE(z.strengthened.holds);
  CHECK(z.original.margin == doctest::Approx(123.0));
  CHECK(z.original.holds);
  const auto t = falsify_two_unif_p_ge_2();
  CHECK(t.margin < -0.4);
  CHECK_FALSE(t.holds);
}

TEST_CASE("open problems") {
  const auto empty = probe_open_problem("revhh_signed", 0, 1);
  CHECK(empty.probes == 0);
  CHECK(std::isinf(empty.worst_margin));
  const auto r = probe_open_problem("revhh_signed", 20000, 42);
  CHECK(r.open_problem);
  CHECK(r.worst_margin <= -0.1);
  CHECK_THROWS_AS(probe_open_problem("hanner_classic", 10, 1), Error);
}

TEST_CASE("suite rows are seeded by label") {
  auto rows = acceptance_suite(200);
  CHECK(rows.size() >= 40);
  rows.resize(6);
  const auto a = run_suite(rows, 42, true);
  const auto b = run_suite(rows, 42, true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(a[i].result.worst_margin == b[i].result.worst_margin);
    CHECK(a[i].runtime_ms == 0.0);
    CHECK(a[i].result.holds_all());
  }
}
