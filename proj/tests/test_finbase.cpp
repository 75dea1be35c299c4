#include <doctest.h>

#include "proccat/finbase.hpp"

using namespace proccat;

TEST_CASE("products and coproducts have the expected sizes") {
  auto two = FinObj::flag(2), three = FinObj::flag(3);
  std::vector<FinObjPtr> fs{two, three};
  auto p = product(fs);
  auto c = coproduct(fs);
  CHECK(p.object->size() == 6);
  CHECK(c.object->size() == 5);
  CHECK(product(std::vector<FinObjPtr>{}).object->size() == 1);
  CHECK(coproduct(std::vector<FinObjPtr>{}).object->size() == 0);
  auto id = pairing(p, p.projections);
  CHECK(id.is_identity());
  auto id2 = copairing(c, c.injections);
  CHECK(id2.is_identity());
}

TEST_CASE("exponential and curry round trip") {
  auto two = FinObj::flag(2), three = FinObj::flag(3);
  CHECK(exponential(three, two)->size() == 9);
  CHECK(exponential(two, FinObj::empty())->size() == 1);
  CHECK(exponential(FinObj::empty(), two)->size() == 0);
  std::vector<FinObjPtr> fs{two, three};
  auto p = product(fs);
  auto f = FinMor::from_fn(p.object, two, [](const Value& v) {
    return Value::atom(v.item(0) == v.item(1) ? "1" : "0");
  });
  auto g = curry(p, two, f);
  CHECK(g.cod()->size() == 8);
  CHECK(uncurry(p, two, g) == f);
}

TEST_CASE("enumeration counts total maps and respects the cap") {
  auto two = FinObj::flag(2), three = FinObj::flag(3);
  CHECK(enumerate_mors(two, three, 100).size() == 9);
  CHECK(mor_count(*two, *three) == 9);
  CHECK(enumerate_mors(FinObj::empty(), three, 1).size() == 1);
  CHECK_THROWS_AS(enumerate_mors(three, three, 26), CapExceeded);
}

TEST_CASE("morphism tables are validated") {
  auto two = FinObj::flag(2);
  CHECK_THROWS_AS(FinMor(two, two, {0}), std::invalid_argument);
  CHECK_THROWS_AS(FinMor(two, two, {0, 2}), std::invalid_argument);
  FinMor swap(two, two, {1, 0});
  CHECK(compose(swap, swap).is_identity());
  CHECK(swap.apply(Value::atom("0")) == Value::atom("1"));
}

TEST_CASE("values order and dump canonically") {
  auto p = Value::process(ProcessValue::make_terminated(2, {{1, Value()}}, Value()));
  CHECK(p.dump() == "term(2; 1→•; •)");
  CHECK(Value::process(ProcessValue::make_ongoing({})).dump() == "ongoing()");
  CHECK(Value::pair(Value::atom("a"), Value::inj(1, Value())).dump() == "(a, in1(•))");
  CHECK(Value::atom("a") < Value::atom("b"));
  CHECK(FinObj::make({Value::atom("b"), Value::atom("a")})->at(0) == Value::atom("a"));
}
