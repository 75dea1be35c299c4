#include <doctest.h>

#include "oracles.hpp"
#include "proccat/curated.hpp"

using namespace proccat;

TEST_CASE("g† from f∞ satisfies its equation") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    CHECK(set.milius.size() >= 3);
    for (const auto& m : set.milius) {
      CAPTURE(m.given_g.name);
      auto gd = dagger_from_infty(m.given_g);
      CHECK(mor_equal(gd, dagger_rhs(m.given_g, gd)));
      // The equation morphism's f∞ matches direct unfolding too.
      auto eq = milius_equation(m.given_g);
      auto finf = coiter(eq);
      const auto& s = eq.c->scale();
      for (std::size_t id = 0; id < s.index_count(); ++id)
        for (const auto& z : eq.c->carrier_at(id)->elements())
          CHECK(finf.apply(s.index_pair(id), z) == oracle::unfold_coiter(eq, s.index_pair(id), z));
    }
  }
}

TEST_CASE("f∞ recovered from a searched g† equals coiter") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    for (const auto& m : set.milius) {
      auto r = infty_from_dagger(m.given_f, 1000000);
      CHECK(r.solutions == 1);
      CHECK(r.candidates >= 1);
      CHECK(mor_equal(r.infty, coiter(m.given_f)));
    }
  }
}

TEST_CASE("round trips pass with uniqueness in both directions") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto set = curated_problems(TimeScale::range(n));
    for (const auto& m : set.milius) {
      auto r = check_roundtrips(m.given_g, m.given_f, 1000000);
      CAPTURE(r.instance);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("a broken join is caught by the round trips") {
  auto set = curated_problems(TimeScale::range(3));
  const auto& m = set.milius[1];  // loop
  auto mu = mutate_transpose(vartheta1({m.given_g.w, m.given_g.a, m.given_g.b}));
  auto r = check_roundtrips(m.given_g, m.given_f, 1000000, mu);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.witness.has_value());
}

TEST_CASE("searches respect the cap") {
  auto set = curated_problems(TimeScale::range(3));
  CHECK_THROWS_AS(infty_from_dagger(set.milius[1].given_f, 2), CapExceeded);
}
