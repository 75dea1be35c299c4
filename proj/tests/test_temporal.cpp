#include <doctest.h>

#include "oracles.hpp"
#include "proccat/temporal.hpp"

using namespace proccat;

namespace {

// Carrier {0..t} at (t, t0), restricted by identity: natural and nonconstant.
TObj growing(const TimeScale& s) {
  return TemporalObj::from_functions(
      s, "growing",
      [](const IndexPair& i) {
        std::vector<Value> v;
        for (int k = 0; k <= boost::rational_cast<int>(i.t); ++k) v.push_back(Value::atom(std::to_string(k)));
        return v;
      },
      [](const IndexMorphism&, const Value& v) { return v; });
}

}  // namespace

TEST_CASE("constant objects are functors") {
  auto s = TimeScale::range(3);
  for (std::size_t n = 0; n < 4; ++n) CHECK(check_functor(TemporalObj::flag(s, n)).passed());
  CHECK(TemporalObj::flag(s, 1)->carrier({0, 2})->size() == 1);
  CHECK(TemporalObj::flag(s, 0)->total_size() == 0);
}

TEST_CASE("a broken restriction is reported with a witness") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto c = flag->carrier({0, 2});
  auto broken = TemporalObj::with_restriction(flag, {0, 1, 2}, FinMor(c, c, {1, 0}));
  auto r = check_functor(broken);
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(r.witness);
  CHECK_FALSE(r.witness->location.empty());
}

TEST_CASE("pointwise limits") {
  auto s = TimeScale::range(2);
  auto two = TemporalObj::flag(s, 2), three = TemporalObj::flag(s, 3);
  auto p = pointwise_product({two, three});
  auto c = pointwise_coproduct({two, three});
  CHECK(p->carrier({0, 1})->size() == 6);
  CHECK(c->carrier({0, 1})->size() == 5);
  CHECK(check_functor(p).passed());
  CHECK(check_functor(c).passed());
  auto swap = pair(pointwise_product({three, two}), {proj(p, 1), proj(p, 0)});
  CHECK(compose(proj(pointwise_product({three, two}), 0), swap).components() == proj(p, 1).components());
  auto both = copair(c, {inj(c, 0), inj(c, 1)});
  CHECK(mor_equal(both, TemporalMor::identity(c)));
}

TEST_CASE("natural transformations match the closed-form and brute-force counts") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = TimeScale::range(n);
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b) {
        auto A = TemporalObj::flag(s, a), B = TemporalObj::flag(s, b);
        auto got = enumerate_nat_trans(A, B, 1000000).size();
        CHECK(got == oracle::constant_nat_count(a, b, n));
        CHECK(got == oracle::brute_nat_count(A, B));
      }
  }
  auto s = TimeScale::range(3);
  CHECK(enumerate_nat_trans(TemporalObj::terminal(s), TemporalObj::flag(s, 2), 100).size() == 8);
  auto g = growing(s);
  CHECK(check_functor(g).passed());
  CHECK(enumerate_nat_trans(g, g, 1000000).size() == oracle::brute_nat_count(g, g));
  CHECK(enumerate_nat_trans(TemporalObj::flag(s, 2), g, 1000000).size() ==
        oracle::brute_nat_count(TemporalObj::flag(s, 2), g));
}

TEST_CASE("enumeration refuses oversized spaces") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  CHECK(nat_trans_search_space(flag, flag) == 4096);
  CHECK_THROWS_AS(enumerate_nat_trans(flag, flag, 4095), CapExceeded);
  CHECK(enumerate_nat_trans(flag, flag, 4096).size() == 64);
}

TEST_CASE("every enumerated transformation is natural and they are distinct") {
  auto s = TimeScale::range(3);
  auto g = growing(s);
  auto all = enumerate_nat_trans(TemporalObj::flag(s, 2), g, 1000000);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK_FALSE(naturality_witness(all[i]));
    if (i) CHECK_FALSE(mor_equal(all[i - 1], all[i]));
  }
}

TEST_CASE("from_rule rejects unnatural rules") {
  auto s = TimeScale::range(2);
  auto flag = TemporalObj::flag(s, 2);
  // Depends on t0, which a constant object cannot see.
  auto rule = [](const IndexPair& i, const Value& v) { return i.t0 == Time(1) ? Value::atom("0") : v; };
  CHECK_THROWS_AS(TemporalMor::from_rule(flag, flag, rule), NaturalityError);
  CHECK_NOTHROW(TemporalMor::from_rule_unchecked(flag, flag, rule));
}

TEST_CASE("the end exponential of constant objects") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto e = exponential_end(flag, flag, 1000000);
  CHECK(e->carrier({0, 2})->size() == 4);
  CHECK(e->carrier({2, 2})->size() == 4);
  CHECK(check_functor(e).passed());
  auto e3 = exponential_end(TemporalObj::flag(s, 3), flag, 1000000);
  CHECK(e3->carrier({0, 1})->size() == 8);
  CHECK_THROWS_AS(exponential_end(flag, flag, 3), CapExceeded);
}

TEST_CASE("the end exponential internalises a nonconstant object") {
  auto s = TimeScale::range(2);
  auto g = growing(s);
  auto one = TemporalObj::terminal(s);
  // Elements of g^1 at (t, t0) are global sections of g over [t, t0].
  auto e = exponential_end(one, g, 1000000);
  CHECK(check_functor(e).passed());
  CHECK(e->carrier({0, 1})->size() == g->carrier({0, 1})->size());
}

TEST_CASE("mutations change a morphism") {
  auto s = TimeScale::range(2);
  auto flag = TemporalObj::flag(s, 2);
  auto id = TemporalMor::identity(flag);
  CHECK_FALSE(mor_equal(mutate_transpose(id), id));
  CHECK_FALSE(mor_equal(mutate_collapse(id), id));
  auto one = TemporalObj::terminal(s);
  auto id1 = TemporalMor::identity(one);
  CHECK(mor_equal(mutate_transpose(id1), id1));
}

TEST_CASE("before(tb) is inhabited strictly before tb") {
  auto s = TimeScale::range(3);
  auto b = before(s, 2);
  CHECK(b->carrier({1, 2})->size() == 1);
  CHECK(b->carrier({2, 2})->size() == 0);
  CHECK(check_functor(b).passed());
}
