#include <doctest.h>

#include "oracles.hpp"
#include "proccat/apc_ops.hpp"

using namespace proccat;

namespace {

Value term(Time t, std::vector<ContEntry> c, Value y) {
  return Value::process(ProcessValue::make_terminated(t, std::move(c), std::move(y)));
}
Value ongoing(std::vector<ContEntry> c) { return Value::process(ProcessValue::make_ongoing(std::move(c))); }
Value atom(const char* s) { return Value::atom(s); }

}  // namespace

TEST_CASE("expansion pairs each entry with the rest of the process") {
  auto p = term(3, {{1, atom("a")}, {2, atom("b")}}, atom("y"));
  auto e = expand_process(p);
  const auto& q = e.proc();
  REQUIRE(q.cont.size() == 2);
  CHECK(q.cont[0].value == Value::pair(atom("a"), term(3, {{2, atom("b")}}, atom("y"))));
  CHECK(q.cont[1].value == Value::pair(atom("b"), term(3, {}, atom("y"))));
  CHECK(*q.y == atom("y"));
  auto o = expand_process(ongoing({{1, atom("a")}}));
  CHECK(o.proc().cont[0].value == Value::pair(atom("a"), ongoing({})));
}

TEST_CASE("joining concatenates the carried process") {
  auto inner = Value::pair(atom("x"), term(4, {{3, atom("c")}}, atom("z")));
  auto p = term(2, {{1, atom("a")}}, Value::inj(1, inner));
  CHECK(join_process(p) == term(4, {{1, atom("a")}, {2, atom("x")}, {3, atom("c")}}, atom("z")));
  auto stop = term(2, {{1, atom("a")}}, Value::inj(0, atom("b")));
  CHECK(join_process(stop) == term(2, {{1, atom("a")}}, atom("b")));
  auto forever = Value::pair(atom("x"), ongoing({{3, atom("c")}}));
  CHECK(join_process(term(2, {}, Value::inj(1, forever))) == ongoing({{2, atom("x")}, {3, atom("c")}}));
  CHECK(join_process(ongoing({{1, atom("a")}})) == ongoing({{1, atom("a")}}));
}

TEST_CASE("expansion and joining are natural on every index") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto one = TemporalObj::terminal(s);
  for (auto w : {WBound::infinity(), WBound::bound(1), WBound::bound(0)})
    for (const auto& a : {one, flag})
      for (const auto& b : {one, flag}) {
        ApcInstance in{w, a, b};
        CHECK_FALSE(naturality_witness(theta2(in)));
        CHECK_FALSE(naturality_witness(vartheta2(in)));
        CHECK_FALSE(naturality_witness(theta0(in)));
        CHECK_FALSE(naturality_witness(vartheta0(in)));
      }
}

TEST_CASE("merging is a bijection with the expected sizes") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto one = TemporalObj::terminal(s);
  ApcInstance l{WBound::infinity(), flag, one};
  ApcInstance r{WBound::bound(1), one, flag};
  auto c = chi(l, r);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i; j < 3; ++j) {
      auto id = s.index_id(i, j);
      auto left = oracle::triangle_size(2, 1, i, j, std::nullopt);
      auto right = oracle::triangle_size(1, 2, i, j, 1);
      CHECK(c.pair_obj->carrier_at(id)->size() == left * right);
      CHECK(c.merged->carrier_at(id)->size() == left * right);
    }
  CHECK(mor_equal(compose(c.merge_inverse, c.pairing), TemporalMor::identity(c.merged)));
  CHECK(mor_equal(compose(c.pairing, c.merge_inverse), TemporalMor::identity(c.pair_obj)));
}

TEST_CASE("merge summands record which side stopped first") {
  auto l = term(1, {}, atom("b1"));
  auto r = term(2, {{1, atom("a2")}}, atom("b2"));
  auto m = merge_processes(l, r);
  CHECK(m.proc().t_term == Time(1));
  CHECK(m.proc().y->tag() == 1);
  CHECK(m.proc().y->payload() == Value::pair(atom("b1"), Value::pair(atom("a2"), term(2, {}, atom("b2")))));
  auto both = merge_processes(l, term(1, {}, atom("b2")));
  CHECK(both.proc().y->tag() == 0);
  auto right_first = merge_processes(ongoing({{1, atom("a1")}, {2, atom("a1")}}), term(1, {}, atom("b2")));
  CHECK(right_first.proc().y->tag() == 2);
}

TEST_CASE("the canonical nonterminating process") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = TimeScale::range(n);
    auto obj = canonical_nonterminating_obj(s);
    CHECK(check_singleton_carriers(obj, "bang").passed());
    CHECK(obj->carrier({0, s.max()})->at(0) == canonical_nonterminating(s, {0, s.max()}));
  }
  auto s = TimeScale::range(2);
  auto bounded = triangle_prime_obj(WBound::bound(1), TemporalObj::terminal(s), TemporalObj::initial(s));
  CHECK_FALSE(check_singleton_carriers(bounded, "bang").passed());
}
