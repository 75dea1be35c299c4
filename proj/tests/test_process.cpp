#include <doctest.h>

#include "oracles.hpp"
#include "proccat/process.hpp"

using namespace proccat;

namespace {

std::vector<std::string> dumps(const TObj& o, const IndexPair& at) {
  std::vector<std::string> out;
  for (const auto& v : o->carrier(at)->elements()) out.push_back(v.dump());
  return out;
}

}  // namespace

TEST_CASE("carrier sizes agree with the closed form on the whole grid") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = TimeScale::range(n);
    std::vector<std::optional<std::size_t>> bps = {std::nullopt};
    for (std::size_t k = 0; k < n; ++k) bps.push_back(k);
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (const auto& bp : bps) {
          auto w = bp ? WBound::bound(s.at(*bp)) : WBound::infinity();
          auto t = triangle_obj(w, TemporalObj::flag(s, a), TemporalObj::flag(s, b));
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
              CHECK(t->carrier_at(s.index_id(i, j))->size() == oracle::triangle_size(a, b, i, j, bp));
        }
  }
}

TEST_CASE("regression carriers on {0,1,2}") {
  auto s = TimeScale::range(3);
  auto one = TemporalObj::terminal(s);
  auto t = triangle_obj(WBound::infinity(), one, one);
  CHECK(t->carrier({0, 2})->size() == 3);
  CHECK(t->carrier({2, 2})->size() == 1);
  CHECK(box_prime(one)->carrier({0, 2})->size() == 1);
  CHECK(dia_prime(one)->carrier({0, 2})->size() == 2);
  CHECK(triangle_obj(WBound::bound(1), one, one)->carrier({2, 2})->size() == 0);
  CHECK(dumps(t, {0, 2}) ==
        std::vector<std::string>{"term(1; ; •)", "term(2; 1→•; •)", "ongoing(1→•, 2→•)"});
}

TEST_CASE("restriction truncates late terminations") {
  auto s = TimeScale::range(3);
  auto one = TemporalObj::terminal(s);
  auto t = triangle_obj(WBound::infinity(), one, one);
  IndexMorphism m{0, 1, 2};
  auto late = Value::process(ProcessValue::make_terminated(2, {{1, Value()}}, Value()));
  auto early = Value::process(ProcessValue::make_terminated(1, {}, Value()));
  CHECK(t->restrict(m, late).dump() == "ongoing(1→•)");
  CHECK(t->restrict(m, early) == early);
}

TEST_CASE("bounded processes") {
  auto s = TimeScale::range(3);
  auto one = TemporalObj::terminal(s);
  auto b1 = triangle_obj(WBound::bound(1), one, one);
  // Once the bound is observed, only terminated values remain.
  CHECK(dumps(b1, {0, 2}) == std::vector<std::string>{"term(1; ; •)"});
  CHECK(dumps(b1, {0, 1}) == std::vector<std::string>{"term(1; ; •)"});
  CHECK(dumps(b1, {0, 0}) == std::vector<std::string>{"ongoing()"});
  CHECK(check_functor(b1).passed());
}

TEST_CASE("triangle objects are functors on a rational scale") {
  TimeScale s({Time(0), Time(1, 3), Time(1, 2), Time(2)});
  auto flag = TemporalObj::flag(s, 2);
  for (auto w : {WBound::infinity(), WBound::bound(Time(1, 2)), WBound::bound(0)}) {
    CHECK(check_functor(triangle_obj(w, flag, flag)).passed());
    CHECK(check_functor(triangle_full_obj(w, flag, flag)).passed());
  }
}

TEST_CASE("functor applications are interned") {
  auto s = TimeScale::range(2);
  auto one = TemporalObj::terminal(s);
  auto a = triangle_obj(WBound::infinity(), one, one);
  CHECK(a == triangle_obj(WBound::infinity(), one, TemporalObj::terminal(s)));
  CHECK(prod2(one, a) == triangle_prime_obj(WBound::infinity(), one, one));
  CHECK(a != triangle_obj(WBound::bound(1), one, one));
}

TEST_CASE("action on morphisms preserves identities and composition") {
  auto s = TimeScale::range(3);
  auto flag = TemporalObj::flag(s, 2);
  auto w = WBound::infinity();
  auto id = TemporalMor::identity(flag);
  CHECK(mor_equal(triangle_map_obj(w, id, id), TemporalMor::identity(triangle_obj(w, flag, flag))));
  auto endos = enumerate_nat_trans(flag, flag, 10000);
  for (std::size_t i = 0; i < endos.size(); i += 7)
    for (std::size_t j = 0; j < endos.size(); j += 11) {
      const auto& f = endos[i];
      const auto& g = endos[j];
      CHECK(mor_equal(triangle_map_obj(w, compose(g, f), compose(f, g)),
                      compose(triangle_map_obj(w, g, f), triangle_map_obj(w, f, g))));
    }
}

TEST_CASE("changing the bound only goes up") {
  auto s = TimeScale::range(3);
  auto one = TemporalObj::terminal(s);
  auto up = triangle_map_w(WBound::bound(1), WBound::infinity(), one, one);
  CHECK_FALSE(naturality_witness(up));
  CHECK_THROWS_AS(triangle_map_w(WBound::infinity(), WBound::bound(1), one, one), std::invalid_argument);
  CHECK_THROWS_AS(triangle_obj(WBound::bound(5), one, one), std::invalid_argument);
}

TEST_CASE("derived functors") {
  auto s = TimeScale::range(3);
  auto one = TemporalObj::terminal(s);
  auto d = derived_functors({WBound::infinity(), one, one});
  CHECK(d.full->carrier({0, 2})->size() == 4);
  CHECK(d.box->carrier({0, 2})->size() == 1);
  CHECK(d.dia->carrier({0, 2})->size() == 3);
  CHECK(strong_bound(s) == WBound::bound(2));
  CHECK(bound_label(WBound::bound(Time(1, 2))) == "1/2");
}
