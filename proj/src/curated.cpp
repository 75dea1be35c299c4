#include "proccat/curated.hpp"

namespace proccat {

std::optional<Time> next_point(const TimeScale& scale, const Time& t) {
  for (const auto& p : scale.points())
    if (p > t) return p;
  return std::nullopt;
}

namespace {

const Value kUnit{};

Value flag_value(int k) { return Value::atom(std::to_string(k)); }

// A process at `at` that terminates at the next point with `y`, or the empty
// ongoing process when there is no room.
Value next_step(const TimeScale& s, const IndexPair& at, const Value& y) {
  auto p = next_point(s, at.t);
  if (p && *p <= at.t0) return Value::process(ProcessValue::make_terminated(*p, {}, y));
  return Value::process(ProcessValue::make_ongoing({}));
}

Value forever(const TimeScale& s, const IndexPair& at, const Value& x) {
  std::vector<ContEntry> cont;
  for (const auto& p : s.points())
    if (p > at.t && p <= at.t0) cont.push_back({p, x});
  return Value::process(ProcessValue::make_ongoing(std::move(cont)));
}

// Terminal flag of a parity process: 1 after an even number of steps.
Value parity_of(const ProcessValue& p, const std::function<const Value&(const Value&)>& carried) {
  std::vector<ContEntry> cont;
  for (const auto& e : p.cont) cont.push_back({e.at, kUnit});
  if (!p.terminated) return Value::process(ProcessValue::make_ongoing(std::move(cont)));
  Value y = flag_value(1);
  if (!p.cont.empty()) {
    const auto& c = carried(p.cont.front().value).proc();
    // A later termination is not yet visible, so it must not affect y.
    bool seen = c.terminated && c.t_term <= p.t_term;
    y = flag_value(seen && *c.y == flag_value(0) ? 1 : 0);
  }
  return Value::process(ProcessValue::make_terminated(p.t_term, std::move(cont), y));
}

}  // namespace

CuratedSet curated_problems(const TimeScale& s) {
  CuratedSet out;
  const auto inf = WBound::infinity();
  const auto strong = strong_bound(s);
  auto one = TemporalObj::terminal(s);
  auto flag = TemporalObj::flag(s, 2);

  auto coiter_problem = [&](std::string name, WBound w, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto f = TemporalMor::from_rule(c, triangle_prime_obj(w, a, sum2(b, c)), rule);
    return CoiterProblem{std::move(name), w, a, b, c, f};
  };

  out.coiter.push_back(coiter_problem("immediate", inf, one, one, one, [&](const IndexPair& at, const Value&) {
    return Value::pair(kUnit, next_step(s, at, Value::inj(0, kUnit)));
  }));
  out.coiter.push_back(coiter_problem("never", inf, one, one, one, [&](const IndexPair& at, const Value&) {
    return Value::pair(kUnit, forever(s, at, kUnit));
  }));
  out.coiter.push_back(coiter_problem("loop", inf, one, one, one, [&](const IndexPair& at, const Value&) {
    return Value::pair(kUnit, next_step(s, at, Value::inj(1, kUnit)));
  }));
  out.coiter.push_back(coiter_problem("mixed", inf, flag, one, flag, [&](const IndexPair& at, const Value& z) {
    if (z == flag_value(0)) return Value::pair(z, next_step(s, at, Value::inj(1, flag_value(1))));
    return Value::pair(z, next_step(s, at, Value::inj(0, kUnit)));
  }));
  out.coiter.push_back(coiter_problem("countdown", inf, one, one, flag, [&](const IndexPair& at, const Value& z) {
    if (z == flag_value(0)) return Value::pair(kUnit, next_step(s, at, Value::inj(1, flag_value(1))));
    return Value::pair(kUnit, next_step(s, at, Value::inj(0, kUnit)));
  }));
  auto pre = before(s, s.max());
  out.coiter.push_back(coiter_problem("bounded", strong, one, one, pre, [&](const IndexPair& at, const Value&) {
    auto p = next_point(s, at.t);
    bool again = p && *p < s.max();
    return Value::pair(kUnit, next_step(s, at, again ? Value::inj(1, kUnit) : Value::inj(0, kUnit)));
  }));
  out.coiter.push_back(coiter_problem("events", inf, flag, one, one, [&](const IndexPair& at, const Value&) {
    return Value::pair(flag_value(at.t == s.min() ? 0 : 1), next_step(s, at, Value::inj(1, kUnit)));
  }));

  auto recur_problem = [&](std::string name, WBound w, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto f = TemporalMor::from_rule(triangle_obj(w, prod2(a, c), b), c, rule);
    return RecurProblem{std::move(name), w, a, b, c, f};
  };
  auto second = [](const Value& v) -> const Value& { return v.item(1); };

  out.recur.push_back(recur_problem("constant", inf, one, one, one,
                                    [](const IndexPair&, const Value&) { return kUnit; }));
  {
    auto c = triangle_obj(inf, one, one);
    auto f = triangle_map_obj(inf, proj(prod2(one, c), 0), TemporalMor::identity(one));
    out.recur.push_back({"forget", inf, one, one, c, f});
  }
  out.recur.push_back(recur_problem("parity", inf, one, one, triangle_obj(inf, one, flag),
                                    [&](const IndexPair&, const Value& v) { return parity_of(v.proc(), second); }));
  out.recur.push_back(recur_problem("bounded parity", strong, one, one, triangle_obj(strong, one, flag),
                                    [&](const IndexPair&, const Value& v) { return parity_of(v.proc(), second); }));

  auto coiter_tri_problem = [&](std::string name, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto f = TemporalMor::from_rule(c, sum2(b, triangle_prime_obj(inf, a, c)), rule);
    return CoiterTriProblem{std::move(name), inf, a, b, c, f};
  };
  out.coiter_tri.push_back(coiter_tri_problem("countdown", flag, one, flag, [&](const IndexPair& at, const Value& z) {
    if (z == flag_value(1)) return Value::inj(0, kUnit);
    return Value::inj(1, Value::pair(z, next_step(s, at, flag_value(1))));
  }));
  out.coiter_tri.push_back(coiter_tri_problem("loop", one, one, one, [&](const IndexPair& at, const Value&) {
    return Value::inj(1, Value::pair(kUnit, next_step(s, at, kUnit)));
  }));

  auto coiter_dtri_problem = [&](std::string name, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto f = TemporalMor::from_rule(c, triangle_obj(inf, a, sum2(b, prod2(a, c))), rule);
    return CoiterDtriProblem{std::move(name), inf, a, b, c, f};
  };
  out.coiter_dtri.push_back(coiter_dtri_problem("mixed", flag, one, flag, [&](const IndexPair& at, const Value& z) {
    if (z == flag_value(0)) return next_step(s, at, Value::inj(1, Value::pair(flag_value(1), flag_value(1))));
    return next_step(s, at, Value::inj(0, kUnit));
  }));
  out.coiter_dtri.push_back(coiter_dtri_problem("loop", one, one, one, [&](const IndexPair& at, const Value&) {
    return next_step(s, at, Value::inj(1, Value::pair(kUnit, kUnit)));
  }));

  auto recur_tri_problem = [&](std::string name, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto f = TemporalMor::from_rule(prod2(a, triangle_obj(inf, c, b)), c, rule);
    return RecurTriProblem{std::move(name), inf, a, b, c, f};
  };
  out.recur_tri.push_back(recur_tri_problem("constant", one, one, one,
                                            [](const IndexPair&, const Value&) { return kUnit; }));
  auto itself = [](const Value& v) -> const Value& { return v; };
  out.recur_tri.push_back(recur_tri_problem("parity", one, one, triangle_obj(inf, one, flag),
                                            [&](const IndexPair&, const Value& v) {
                                              return parity_of(v.item(1).proc(), itself);
                                            }));

  auto milius_problem = [&](std::string name, TObj a, TObj b, TObj c, TemporalMor::Rule rule) {
    auto g = TemporalMor::from_rule(c, sum2(b, triangle_prime_obj(inf, a, sum2(b, c))), rule);
    return MiliusProblem{std::move(name), inf, a, b, c, g};
  };
  out.milius.push_back({milius_problem("immediate", one, one, one,
                                       [](const IndexPair&, const Value&) { return Value::inj(0, kUnit); }),
                        out.coiter[0]});
  out.milius.push_back({milius_problem("loop", one, one, one,
                                       [&](const IndexPair& at, const Value&) {
                                         return Value::inj(1, Value::pair(kUnit, next_step(s, at, Value::inj(1, kUnit))));
                                       }),
                        out.coiter[2]});
  out.milius.push_back({milius_problem("countdown", one, one, flag,
                                       [&](const IndexPair& at, const Value& z) {
                                         if (z == flag_value(1)) return Value::inj(0, kUnit);
                                         return Value::inj(1, Value::pair(kUnit, next_step(s, at, Value::inj(1, flag_value(1)))));
                                       }),
                        out.coiter[4]});
  return out;
}

}  // namespace proccat
