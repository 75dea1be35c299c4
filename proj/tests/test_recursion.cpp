#include <doctest.h>

#include "oracles.hpp"
#include "proccat/curated.hpp"

using namespace proccat;

namespace {

template <class Problem, class Solve, class Oracle>
void agree_with_oracle(const Problem& p, const TObj& dom, Solve solve, Oracle oracle_fn) {
  auto f = solve(p);
  const auto& s = dom->scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    auto at = s.index_pair(id);
    for (const auto& z : dom->carrier_at(id)->elements()) CHECK(f.apply(at, z) == oracle_fn(p, at, z));
  }
}

}  // namespace

TEST_CASE("coiter agrees with direct unfolding on every curated problem") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    CHECK(set.coiter.size() >= 6);
    for (const auto& p : set.coiter) {
      CAPTURE(p.name);
      agree_with_oracle(p, p.c, [](const auto& q) { return coiter(q); }, oracle::unfold_coiter);
      auto f = coiter(p);
      CHECK(mor_equal(f, coiter_rhs(p, f)));
      CHECK(satisfies_pointwise(f, coiter_rhs_rule(p, f)));
    }
  }
}

TEST_CASE("recur agrees with direct recursion on every curated problem") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    for (const auto& p : set.recur) {
      CAPTURE(p.name);
      agree_with_oracle(p, p.source(), [](const auto& q) { return recur(q); }, oracle::unfold_recur);
      auto f = recur(p);
      CHECK(mor_equal(f, recur_rhs(p, f)));
      CHECK(satisfies_pointwise(f, recur_rhs_rule(p, f)));
    }
  }
}

TEST_CASE("known solutions") {
  auto s = TimeScale::range(3);
  auto set = curated_problems(s);
  auto find_c = [&](const std::string& n) {
    for (const auto& p : set.coiter)
      if (p.name == n) return p;
    FAIL("no problem " << n);
    return set.coiter.front();
  };
  auto loop = coiter(find_c("loop"));
  CHECK(loop.apply({0, 2}, Value()).dump() == "(•, ongoing(1→•, 2→•))");
  auto imm = coiter(find_c("immediate"));
  CHECK(imm.apply({0, 2}, Value()).dump() == "(•, term(1; ; •))");
  auto mixed = coiter(find_c("mixed"));
  CHECK(mixed.apply({0, 2}, Value::atom("0")).dump() == "(0, term(2; 1→1; •))");
  auto bounded = coiter(find_c("bounded"));
  CHECK(bounded.apply({0, 2}, Value()).dump() == "(•, term(2; 1→•; •))");
  auto events = coiter(find_c("events"));
  CHECK(events.apply({0, 2}, Value()).dump() == "(0, ongoing(1→1, 2→1))");

  RecurProblem parity = set.recur[2];
  REQUIRE(parity.name == "parity");
  auto f = recur(parity);
  std::vector<std::string> got;
  for (const auto& v : parity.source()->carrier({0, 2})->elements()) got.push_back(f.apply({0, 2}, v).dump());
  CHECK(got == std::vector<std::string>{"term(1; ; 1)", "term(2; 1→•; 0)", "ongoing(1→•, 2→•)"});
  auto forget = set.recur[1];
  CHECK(mor_equal(recur(forget), TemporalMor::identity(forget.source())));
}

TEST_CASE("the memo schedule only reads strictly later entries") {
  auto set = curated_problems(TimeScale::range(3));
  for (const auto& p : set.coiter) {
    MemoTrace t;
    coiter(p, &t);
    CHECK_FALSE(guardedness_violation(t));
  }
  for (const auto& p : set.recur) {
    MemoTrace t;
    recur(p, &t);
    CHECK_FALSE(guardedness_violation(t));
  }
  MemoTrace bad;
  bad.events.push_back({false, {1, 2}, {0, 2}});
  CHECK(guardedness_violation(bad));
  MemoTrace same;
  same.events.push_back({true, {0, 2}, {0, 2}});
  same.events.push_back({false, {0, 2}, {0, 2}});
  CHECK(guardedness_violation(same));
}

TEST_CASE("derived operators satisfy their unfoldings") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    for (const auto& p : set.coiter_tri) {
      auto f = coiter_tri(p);
      CHECK(mor_equal(f, coiter_tri_unfold(p, f)));
    }
    for (const auto& p : set.coiter_dtri) {
      auto f = coiter_dtri(p);
      CHECK(mor_equal(f, coiter_dtri_unfold(p, f)));
    }
    for (const auto& p : set.recur_tri) {
      auto f = recur_tri(p);
      CHECK(mor_equal(f, recur_tri_unfold(p, f)));
    }
  }
}

TEST_CASE("a wrong candidate does not satisfy the equation") {
  auto set = curated_problems(TimeScale::range(3));
  const auto& p = set.coiter[2];  // loop
  auto f = coiter(p);
  auto g = mutate_transpose(f);
  REQUIRE_FALSE(mor_equal(f, g));
  CHECK_FALSE(mor_equal(g, coiter_rhs(p, g)));
  CHECK_FALSE(satisfies_pointwise(g, coiter_rhs_rule(p, g)));
}

TEST_CASE("ill-typed problems are rejected") {
  auto s = TimeScale::range(2);
  auto set = curated_problems(s);
  auto p = set.coiter[0];
  p.b = TemporalObj::flag(s, 2);
  CHECK_THROWS_AS(coiter(p), std::invalid_argument);
}
