#include "proccat/apc_ops.hpp"

namespace proccat {

std::string ApcInstance::describe() const {
  return "scale=" + a->scale().to_string() + " A=" + a->label() + " B=" + b->label() +
         " W=" + w.to_string();
}

Value expand_process(const Value& v) {
  const auto& p = v.proc();
  ProcessValue out = p;
  for (auto& e : out.cont) e.value = Value::pair(e.value, Value::process(p.suffix_after(e.at)));
  return Value::process(std::move(out));
}

Value join_process(const Value& v) {
  const auto& p = v.proc();
  if (!p.terminated) return v;
  const auto& y = *p.y;
  if (y.tag() == 0) return Value::process(ProcessValue::make_terminated(p.t_term, p.cont, y.payload()));
  const auto& x = y.payload().item(0);
  const auto& q = y.payload().item(1).proc();
  auto cont = p.cont;
  cont.push_back({p.t_term, x});
  cont.insert(cont.end(), q.cont.begin(), q.cont.end());
  if (q.terminated) return Value::process(ProcessValue::make_terminated(q.t_term, std::move(cont), *q.y));
  return Value::process(ProcessValue::make_ongoing(std::move(cont)));
}

TemporalMor theta2(const ApcInstance& in) {
  return TemporalMor::from_rule_unchecked(
      triangle_obj(in.w, in.a, in.b), triangle_obj(in.w, triangle_prime_obj(in.w, in.a, in.b), in.b),
      [](const IndexPair&, const Value& v) { return expand_process(v); });
}

TemporalMor theta1(const ApcInstance& in) {
  auto p = triangle_prime_obj(in.w, in.a, in.b);
  auto target = triangle_prime_obj(in.w, p, in.b);
  return pair(target, {TemporalMor::identity(p), compose(theta2(in), proj(p, 1))});
}

TemporalMor theta0(const ApcInstance& in) {
  auto p = triangle_prime_obj(in.w, in.a, in.b);
  return coprod_map(triangle_full_obj(in.w, in.a, in.b), triangle_full_obj(in.w, p, in.b),
                    {TemporalMor::identity(in.b), theta1(in)});
}

TemporalMor vartheta2(const ApcInstance& in) {
  auto full = triangle_full_obj(in.w, in.a, in.b);
  return TemporalMor::from_rule_unchecked(triangle_obj(in.w, in.a, full), triangle_obj(in.w, in.a, in.b),
                                          [](const IndexPair&, const Value& v) { return join_process(v); });
}

TemporalMor vartheta1(const ApcInstance& in) {
  auto full = triangle_full_obj(in.w, in.a, in.b);
  return prod_map(triangle_prime_obj(in.w, in.a, full), triangle_prime_obj(in.w, in.a, in.b),
                  {TemporalMor::identity(in.a), vartheta2(in)});
}

TemporalMor vartheta0(const ApcInstance& in) {
  auto full = triangle_full_obj(in.w, in.a, in.b);
  auto dom = triangle_full_obj(in.w, in.a, full);
  return copair(dom, {TemporalMor::identity(full), compose(inj(full, 1), vartheta1(in))});
}

// ---------------------------------------------------------------------------

Value merge_processes(const Value& left, const Value& right) {
  const auto& l = left.proc();
  const auto& r = right.proc();
  auto zip_before = [&](const std::optional<Time>& end) {
    std::vector<ContEntry> cont;
    for (std::size_t k = 0; k < l.cont.size() && k < r.cont.size(); ++k) {
      if (end && l.cont[k].at >= *end) break;
      if (l.cont[k].at != r.cont[k].at) throw std::logic_error("merge: misaligned continuous parts");
      cont.push_back({l.cont[k].at, Value::pair(l.cont[k].value, r.cont[k].value)});
    }
    return cont;
  };
  if (!l.terminated && !r.terminated) return Value::process(ProcessValue::make_ongoing(zip_before(std::nullopt)));
  bool left_first = l.terminated && (!r.terminated || l.t_term < r.t_term);
  bool right_first = r.terminated && (!l.terminated || r.t_term < l.t_term);
  if (!left_first && !right_first) {
    return Value::process(ProcessValue::make_terminated(l.t_term, zip_before(l.t_term),
                                                        Value::inj(0, Value::pair(*l.y, *r.y))));
  }
  if (left_first) {
    const Value* x = r.cont_at(l.t_term);
    if (!x) throw std::logic_error("merge: right process has no entry at the left termination");
    auto rest = Value::pair(*x, Value::process(r.suffix_after(l.t_term)));
    return Value::process(ProcessValue::make_terminated(l.t_term, zip_before(l.t_term),
                                                        Value::inj(1, Value::pair(*l.y, rest))));
  }
  const Value* x = l.cont_at(r.t_term);
  if (!x) throw std::logic_error("merge: left process has no entry at the right termination");
  auto rest = Value::pair(*x, Value::process(l.suffix_after(r.t_term)));
  return Value::process(ProcessValue::make_terminated(r.t_term, zip_before(r.t_term),
                                                      Value::inj(2, Value::pair(rest, *r.y))));
}

namespace {

TemporalMor chi_component(const ApcInstance& mine, bool first, const TObj& a12, const TObj& middle,
                          const WBound& meet) {
  auto full = triangle_full_obj(mine.w, mine.a, mine.b);
  std::size_t side = first ? 0 : 1;
  const auto& s = middle->parts();
  // [ι₁∘π_i, ι_i∘π_i, ι_{3−i}∘π_i] with ι₁ ↦ summand 0 of A ▷ B, ι₂ ↦ summand 1.
  std::vector<TemporalMor> legs = {
      compose(inj(full, 0), proj(s[0], side)),
      compose(inj(full, first ? 0 : 1), proj(s[1], side)),
      compose(inj(full, first ? 1 : 0), proj(s[2], side)),
  };
  auto lift = triangle_map_obj(meet, proj(a12, side), copair(middle, legs));
  auto weaken = triangle_map_w(meet, mine.w, mine.a, full);
  return compose_all({vartheta2(mine), weaken, lift});
}

}  // namespace

ChiResult chi(const ApcInstance& first, const ApcInstance& second) {
  ChiResult r;
  auto meet = w_meet(first.w, second.w);
  auto p1 = triangle_prime_obj(first.w, first.a, first.b);
  auto p2 = triangle_prime_obj(second.w, second.a, second.b);
  r.middle = pointwise_coproduct({prod2(first.b, second.b), prod2(first.b, p2), prod2(p1, second.b)});
  auto a12 = prod2(first.a, second.a);
  r.merged = triangle_obj(meet, a12, r.middle);
  r.left = triangle_obj(first.w, first.a, first.b);
  r.right = triangle_obj(second.w, second.a, second.b);
  r.pair_obj = prod2(r.left, r.right);
  r.chi1 = chi_component(first, true, a12, r.middle, meet);
  r.chi2 = chi_component(second, false, a12, r.middle, meet);
  r.pairing = pair(r.pair_obj, {r.chi1, r.chi2});
  r.merge_inverse = TemporalMor::from_rule_unchecked(
      r.pair_obj, r.merged,
      [](const IndexPair&, const Value& v) { return merge_processes(v.item(0), v.item(1)); });
  return r;
}

TObj canonical_nonterminating_obj(const TimeScale& scale) {
  return triangle_prime_obj(WBound::infinity(), TemporalObj::terminal(scale), TemporalObj::initial(scale));
}

Value canonical_nonterminating(const TimeScale& scale, const IndexPair& at) {
  std::vector<ContEntry> cont;
  for (const auto& t : scale.points()) {
    if (t > at.t && t <= at.t0) cont.push_back({t, Value()});
  }
  return Value::pair(Value(), Value::process(ProcessValue::make_ongoing(std::move(cont))));
}

LawReport check_singleton_carriers(const TObj& obj, const std::string& suite) {
  const auto& s = obj->scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    const auto& c = obj->carrier_at(id);
    if (c->size() != 1) {
      Witness w{to_string(s.index_pair(id)), c->size() ? c->at(0).dump() : "(none)",
                std::to_string(c->size()), "1", "carrier is not a singleton"};
      return fail_report(suite, obj->label(), w);
    }
  }
  return pass_report(suite, obj->label());
}

}  // namespace proccat
