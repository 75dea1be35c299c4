#include <doctest.h>

#include "proccat/laws.hpp"

using namespace proccat;

TEST_CASE("a one-node identity diagram commutes") {
  auto s = TimeScale::range(2);
  auto flag = TemporalObj::flag(s, 2);
  Diagram d;
  d.node("X", flag);
  d.edge("id", "X", "X", TemporalMor::identity(flag));
  d.equation("X", "X", {"id"}, {});
  CHECK(check_diagram(d, "t", "i").passed());
}

TEST_CASE("a square with a constant edge fails with a witness") {
  auto s = TimeScale::range(2);
  auto flag = TemporalObj::flag(s, 2);
  auto id = TemporalMor::identity(flag);
  auto swap = TemporalMor::from_rule(flag, flag, [](const IndexPair&, const Value& v) {
    return Value::atom(v == Value::atom("0") ? "1" : "0");
  });
  auto constant = TemporalMor::from_rule(flag, flag, [](const IndexPair&, const Value&) { return Value::atom("0"); });
  Diagram d;
  d.node("X", flag);
  d.node("Y", flag);
  d.node("Z", flag);
  d.edge("swap", "X", "Y", swap);
  d.edge("id", "Y", "Z", id);
  d.edge("id2", "X", "Y", id);
  d.edge("swap2", "Y", "Z", swap);
  d.equation("X", "Z", {"swap", "id"}, {"id2", "swap2"});
  CHECK(check_diagram(d, "t", "i").passed());
  Diagram e;
  e.node("X", flag);
  e.node("Y", flag);
  e.node("Z", flag);
  e.edge("swap", "X", "Y", swap);
  e.edge("id", "Y", "Z", id);
  e.edge("id2", "X", "Y", id);
  e.edge("const", "Y", "Z", constant);
  e.equation("X", "Z", {"swap", "id"}, {"id2", "const"});
  auto r = check_diagram(e, "t", "i");
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(r.witness);
  CHECK(r.witness->lhs != r.witness->rhs);
}

TEST_CASE("ill-typed diagrams are construction errors") {
  auto s = TimeScale::range(2);
  auto flag = TemporalObj::flag(s, 2);
  auto one = TemporalObj::terminal(s);
  Diagram d;
  d.node("X", flag);
  d.node("Y", one);
  CHECK_THROWS_AS(d.edge("id", "X", "Y", TemporalMor::identity(flag)), std::invalid_argument);
  d.edge("bang", "X", "Y", bang_to(flag, one));
  CHECK_THROWS_AS(d.equation("X", "X", {"bang"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(d.equation("Y", "Y", {"bang"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(d.node("X", one), std::invalid_argument);
}

TEST_CASE("coherence suites pass on a small instance") {
  auto s = TimeScale::range(2);
  auto one = TemporalObj::terminal(s);
  ApcInstance in{WBound::infinity(), one, one};
  CHECK(suite_fig1(in).passed());
  CHECK(suite_fig2(in).passed());
  CHECK(suite_fig3(in).passed());
  CHECK(suite_monad(in).passed());
  CHECK(suite_naturality(in, 1000000).passed());
  CHECK(suite_chi(in, in).passed());
  CHECK(suite_bang(s).passed());
}

TEST_CASE("trivial instances cannot fail even under mutation") {
  auto s = TimeScale::range(1);
  auto one = TemporalObj::terminal(s);
  ApcInstance in{WBound::infinity(), one, one};
  CHECK(suite_fig1(in, Mutation::Theta).passed());
  CHECK(suite_fig2(in, Mutation::Vartheta).passed());
}

TEST_CASE("every targeted mutation is detected with a witness") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto one = TemporalObj::terminal(s);
  ApcInstance in{WBound::infinity(), one, flag};
  auto expect_caught = [](const LawReport& r) {
    CAPTURE(r.suite);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.witness.has_value());
  };
  expect_caught(suite_fig1(in, Mutation::Theta));
  expect_caught(suite_fig3(in, Mutation::Theta));
  expect_caught(suite_fig2(in, Mutation::Vartheta));
  expect_caught(suite_fig3(in, Mutation::Vartheta));
  expect_caught(suite_chi(in, in, Mutation::Chi));
  expect_caught(suite_bang(s, Mutation::Bang));
  auto set = curated_problems(s);
  bool mu_caught = false;
  for (const auto& p : set.coiter) {
    if (nat_trans_search_space(p.c, p.target()) > kExhaustiveLimit) continue;
    auto r = suite_uniqueness(p, kExhaustiveLimit, Mutation::Mu);
    if (!r.passed()) mu_caught = true;
  }
  CHECK(mu_caught);
  expect_caught(suite_milius_equations(set.milius[1], kExhaustiveLimit, Mutation::Mu));
}

TEST_CASE("uniqueness finds exactly one solution") {
  auto set = curated_problems(TimeScale::range(3));
  int searched = 0;
  for (const auto& p : set.coiter) {
    if (nat_trans_search_space(p.c, p.target()) > kExhaustiveLimit) continue;
    auto r = suite_uniqueness(p, kExhaustiveLimit);
    CAPTURE(r.instance);
    CHECK(r.passed());
    CHECK(r.detail.find("solutions=1") != std::string::npos);
    ++searched;
  }
  for (const auto& p : set.recur) {
    auto r = suite_uniqueness(p, kExhaustiveLimit);
    CHECK(r.passed());
    ++searched;
  }
  CHECK(searched >= 3);
  CHECK_THROWS_AS(suite_uniqueness(set.coiter[2], 1), CapExceeded);
}

TEST_CASE("run_suites is ordered, deterministic and reports caps") {
  RunOptions o;
  o.grid.scales = {TimeScale::range(2)};
  auto a = run_suites(o);
  auto b = run_suites(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].suite == b[i].suite);
    CHECK(a[i].instance == b[i].instance);
    CHECK(a[i].verdict == b[i].verdict);
    CHECK(a[i].passed());
    CHECK_FALSE(a[i].millis);
    if (i) CHECK(std::tie(a[i - 1].suite, a[i - 1].instance) <= std::tie(a[i].suite, a[i].instance));
  }
  o.suites = {"uniqueness"};
  o.cap = 1;
  bool capped = false;
  for (const auto& r : run_suites(o)) capped |= r.verdict == Verdict::CapExceeded;
  CHECK(capped);
  o.suites = {"bogus"};
  CHECK_THROWS_AS(run_suites(o), std::invalid_argument);
}

TEST_CASE("grid file") {
  auto g = load_grid(PROCCAT_TEST_GRID);
  CHECK(g.scales.size() == 3);
  CHECK(g.scales.back() == TimeScale::range(3));
  CHECK(grid_instances(g, TimeScale::range(1)).size() == 18);
  CHECK(grid_instances(g, TimeScale::range(3)).size() == 27);
  CHECK_THROWS_AS(load_grid("/nonexistent/grid.json"), std::invalid_argument);
  CHECK(parse_mutation("mu") == Mutation::Mu);
  CHECK_THROWS_AS(parse_mutation("nope"), std::invalid_argument);
}
