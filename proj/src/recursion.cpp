#include "proccat/recursion.hpp"

#include <set>

namespace proccat {

std::optional<std::string> guardedness_violation(const MemoTrace& trace) {
  std::set<std::pair<Time, Time>> written;
  for (const auto& e : trace.events) {
    auto key = std::make_pair(e.at.t, e.at.t0);
    if (e.write) {
      if (!written.insert(key).second) return "entry " + to_string(e.at) + " written twice";
      continue;
    }
    if (!written.count(key))
      return "read of " + to_string(e.at) + " before it was written, while computing " + to_string(e.for_);
    if (!(e.at.t > e.for_.t) || e.at.t0 != e.for_.t0)
      return "read of " + to_string(e.at) + " is not strictly later than " + to_string(e.for_);
  }
  return std::nullopt;
}

namespace {

// Tabulates per-index results into a morphism.
TemporalMor tabulate(const TObj& dom, const TObj& cod, const std::vector<std::vector<Value>>& memo) {
  std::vector<FinMor> comps;
  for (std::size_t id = 0; id < memo.size(); ++id) {
    std::vector<std::uint32_t> t;
    t.reserve(memo[id].size());
    for (const auto& v : memo[id]) t.push_back(static_cast<std::uint32_t>(cod->carrier_at(id)->require_index(v)));
    comps.emplace_back(dom->carrier_at(id), cod->carrier_at(id), std::move(t));
  }
  return TemporalMor(dom, cod, std::move(comps));
}

void require_same(const TObj& got, const TObj& want, const std::string& what) {
  if (!same_tobj(got, want))
    throw std::invalid_argument(what + ": expected " + want->label() + ", got " + got->label());
}

}  // namespace

TemporalMor coiter(const CoiterProblem& p, MemoTrace* trace) {
  require_same(p.f.dom(), p.c, "coiter domain");
  require_same(p.f.cod(), triangle_prime_obj(p.w, p.a, p.bc()), "coiter codomain");
  const auto& s = p.c->scale();
  const auto n = s.size();
  std::vector<std::vector<Value>> memo(s.index_count());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i-- > 0;) {
      auto id = s.index_id(i, j);
      IndexPair here = s.index_pair(id);
      for (const auto& z : p.c->carrier_at(id)->elements()) {
        const auto& fz = p.f.apply(here, z);
        const auto& a = fz.item(0);
        const auto& q = fz.item(1).proc();
        if (!q.terminated) {
          memo[id].push_back(Value::pair(a, fz.item(1)));
          continue;
        }
        const auto& y = *q.y;
        Value carried;  // element of A ▷_W B at (t′, t0)
        if (y.tag() == 0) {
          carried = Value::inj(0, y.payload());
        } else {
          IndexPair later{q.t_term, here.t0};
          if (trace) trace->events.push_back({false, later, here});
          auto lid = s.index_id(later);
          auto pos = p.c->carrier_at(lid)->require_index(y.payload());
          carried = Value::inj(1, memo[lid].at(pos));
        }
        auto outer = Value::process(ProcessValue::make_terminated(q.t_term, q.cont, carried));
        memo[id].push_back(Value::pair(a, join_process(outer)));
      }
      if (trace) trace->events.push_back({true, here, here});
    }
  }
  return tabulate(p.c, p.target(), memo);
}

TemporalMor coiter_rhs(const CoiterProblem& p, const TemporalMor& x, const std::optional<TemporalMor>& mu) {
  ApcInstance in{p.w, p.a, p.b};
  auto full = triangle_full_obj(p.w, p.a, p.b);
  auto sum = coprod_map(p.bc(), full, {TemporalMor::identity(p.b), x});
  auto lift = triangle_prime_map(p.w, TemporalMor::identity(p.a), sum);
  return compose_all({mu ? *mu : vartheta1(in), lift, p.f});
}

bool satisfies_pointwise(const TemporalMor& x, const PointRule& rhs) {
  const auto& s = x.dom()->scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    auto ip = s.index_pair(id);
    const auto& comp = x.at_id(id);
    const auto& dom = comp.dom()->elements();
    for (std::size_t k = 0; k < dom.size(); ++k) {
      if (!(comp.cod()->at(comp.image_index(k)) == rhs(ip, dom[k]))) return false;
    }
  }
  return true;
}

Value join_after_at(const IndexPair& at, const Value& v, const TemporalMor& k, const TemporalMor* mu) {
  const auto& q = v.item(1).proc();
  Value inner = v.item(1);
  if (q.terminated && q.y->tag() == 1) {
    auto carried = k.apply({q.t_term, at.t0}, q.y->payload());
    inner = Value::process(ProcessValue::make_terminated(q.t_term, q.cont, carried));
  }
  auto lifted = Value::pair(v.item(0), inner);
  if (mu) return mu->apply(at, lifted);
  return Value::pair(v.item(0), join_process(inner));
}

PointRule coiter_rhs_rule(const CoiterProblem& p, const TemporalMor& x, const TemporalMor* mu) {
  // id_B + x lands in A ▷_W B; only the ι₂ branch changes anything.
  auto k = compose(inj(triangle_full_obj(p.w, p.a, p.b), 1), x);
  return [&p, k, mu](const IndexPair& at, const Value& z) {
    return join_after_at(at, p.f.apply(at, z), k, mu);
  };
}

// ---------------------------------------------------------------------------

CoiterProblem coiter_tri_inner(const CoiterTriProblem& p) {
  auto c2 = triangle_prime_obj(p.w, p.a, p.c);
  require_same(p.f.cod(), sum2(p.b, c2), "coiter_tri codomain");
  return {p.name + "/inner", p.w, p.a, p.b, c2, triangle_prime_map(p.w, TemporalMor::identity(p.a), p.f)};
}

TemporalMor coiter_tri(const CoiterTriProblem& p) {
  auto inner = coiter(coiter_tri_inner(p));
  auto full = triangle_full_obj(p.w, p.a, p.b);
  return compose(coprod_map(p.f.cod(), full, {TemporalMor::identity(p.b), inner}), p.f);
}

TemporalMor coiter_tri_unfold(const CoiterTriProblem& p, const TemporalMor& x) {
  ApcInstance in{p.w, p.a, p.b};
  auto full = triangle_full_obj(p.w, p.a, p.b);
  auto cont = compose_all({inj(full, 1), vartheta1(in), triangle_prime_map(p.w, TemporalMor::identity(p.a), x)});
  return compose(copair(p.f.cod(), {inj(full, 0), cont}), p.f);
}

CoiterProblem coiter_dtri_inner(const CoiterDtriProblem& p) {
  auto c2 = prod2(p.a, p.c);
  require_same(p.f.cod(), triangle_obj(p.w, p.a, sum2(p.b, c2)), "coiter_dtri codomain");
  auto f2 = prod_map(c2, triangle_prime_obj(p.w, p.a, sum2(p.b, c2)), {TemporalMor::identity(p.a), p.f});
  return {p.name + "/inner", p.w, p.a, p.b, c2, f2};
}

TemporalMor coiter_dtri(const CoiterDtriProblem& p) {
  auto inner = coiter(coiter_dtri_inner(p));
  ApcInstance in{p.w, p.a, p.b};
  auto full = triangle_full_obj(p.w, p.a, p.b);
  auto sum = coprod_map(sum2(p.b, prod2(p.a, p.c)), full, {TemporalMor::identity(p.b), inner});
  return compose_all({vartheta2(in), triangle_map_obj(p.w, TemporalMor::identity(p.a), sum), p.f});
}

TemporalMor coiter_dtri_unfold(const CoiterDtriProblem& p, const TemporalMor& x) {
  ApcInstance in{p.w, p.a, p.b};
  auto full = triangle_full_obj(p.w, p.a, p.b);
  auto c2 = prod2(p.a, p.c);
  auto ax = prod_map(c2, triangle_prime_obj(p.w, p.a, p.b), {TemporalMor::identity(p.a), x});
  auto sum = copair(sum2(p.b, c2), {inj(full, 0), compose(inj(full, 1), ax)});
  return compose_all({vartheta2(in), triangle_map_obj(p.w, TemporalMor::identity(p.a), sum), p.f});
}

// ---------------------------------------------------------------------------

TemporalMor recur(const RecurProblem& p, MemoTrace* trace) {
  auto src = p.source();
  require_same(p.f.dom(), triangle_obj(p.w, prod2(p.a, p.c), p.b), "recur domain");
  require_same(p.f.cod(), p.c, "recur codomain");
  const auto& s = src->scale();
  const auto n = s.size();
  std::vector<std::vector<Value>> memo(s.index_count());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j + 1; i-- > 0;) {
      auto id = s.index_id(i, j);
      IndexPair here = s.index_pair(id);
      for (const auto& v : src->carrier_at(id)->elements()) {
        const auto& pv = v.proc();
        ProcessValue dag = pv;
        for (auto& e : dag.cont) {
          IndexPair later{e.at, here.t0};
          if (trace) trace->events.push_back({false, later, here});
          auto lid = s.index_id(later);
          auto pos = src->carrier_at(lid)->require_index(Value::process(pv.suffix_after(e.at)));
          e.value = Value::pair(e.value, memo[lid].at(pos));
        }
        memo[id].push_back(p.f.apply(here, Value::process(std::move(dag))));
      }
      if (trace) trace->events.push_back({true, here, here});
    }
  }
  return tabulate(src, p.c, memo);
}

TemporalMor recur_rhs(const RecurProblem& p, const TemporalMor& x, const std::optional<TemporalMor>& theta) {
  ApcInstance in{p.w, p.a, p.b};
  auto ax = prod_map(triangle_prime_obj(p.w, p.a, p.b), prod2(p.a, p.c), {TemporalMor::identity(p.a), x});
  return compose_all({p.f, triangle_map_obj(p.w, ax, TemporalMor::identity(p.b)), theta ? *theta : theta2(in)});
}

PointRule recur_rhs_rule(const RecurProblem& p, const TemporalMor& x, const TemporalMor* theta) {
  return [&p, x, theta](const IndexPair& at, const Value& v) {
    auto expanded = theta ? theta->apply(at, v) : expand_process(v);
    ProcessValue dag = expanded.proc();
    for (auto& e : dag.cont)
      e.value = Value::pair(e.value.item(0), x.apply({e.at, at.t0}, e.value.item(1)));
    return p.f.apply(at, Value::process(std::move(dag)));
  };
}

RecurProblem recur_tri_inner(const RecurTriProblem& p) {
  auto c2 = triangle_obj(p.w, p.c, p.b);
  require_same(p.f.dom(), prod2(p.a, c2), "recur_tri domain");
  return {p.name + "/inner", p.w, p.a, p.b, c2, triangle_map_obj(p.w, p.f, TemporalMor::identity(p.b))};
}

TemporalMor recur_tri(const RecurTriProblem& p) {
  auto inner = recur(recur_tri_inner(p));
  auto c2 = triangle_obj(p.w, p.c, p.b);
  return compose(p.f, prod_map(triangle_prime_obj(p.w, p.a, p.b), prod2(p.a, c2), {TemporalMor::identity(p.a), inner}));
}

TemporalMor recur_tri_unfold(const RecurTriProblem& p, const TemporalMor& x) {
  ApcInstance in{p.w, p.a, p.b};
  auto c2 = triangle_obj(p.w, p.c, p.b);
  auto g = compose(triangle_map_obj(p.w, x, TemporalMor::identity(p.b)), theta2(in));
  return compose(p.f, prod_map(triangle_prime_obj(p.w, p.a, p.b), prod2(p.a, c2), {TemporalMor::identity(p.a), g}));
}

}  // namespace proccat
