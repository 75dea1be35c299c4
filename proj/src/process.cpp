#include "proccat/process.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace proccat {

namespace {

using CacheKey = std::tuple<int, std::string, const TemporalObj*, const TemporalObj*>;

struct Interned {
  std::mutex mu;
  // Holding the argument objects keeps their addresses unique for the key.
  std::map<CacheKey, std::tuple<TObj, TObj, TObj>> objs;
};

Interned& interned() {
  static Interned cache;
  return cache;
}

template <class Build>
TObj intern(int op, const WBound* w, const TObj& a, const TObj& b, Build build) {
  auto& c = interned();
  CacheKey key{op, w ? w->to_string() : std::string(), a.get(), b.get()};
  {
    std::lock_guard lock(c.mu);
    auto it = c.objs.find(key);
    if (it != c.objs.end()) return std::get<2>(it->second);
  }
  TObj made = build();
  std::lock_guard lock(c.mu);
  auto [it, inserted] = c.objs.emplace(key, std::make_tuple(a, b, made));
  return std::get<2>(it->second);
}

void check_bound(const WBound& w, const TimeScale& s) {
  if (!w.is_infinite() && !s.contains(w.value()))
    throw std::invalid_argument("bound " + w.to_string() + " is not a point of the scale " + s.to_string());
}

// Position of the bound, or nullopt for ∞.
std::optional<std::size_t> bound_pos(const WBound& w, const TimeScale& s) {
  if (w.is_infinite()) return std::nullopt;
  return s.require_position(w.value());
}

std::vector<Value> triangle_carrier(const WBound& w, const TObj& a, const TObj& b, std::size_t i,
                                    std::size_t j) {
  const auto& s = a->scale();
  auto bp = bound_pos(w, s);
  std::vector<Value> out;
  if (bp && *bp < i) return out;
  // Terminated values with termination position in (i, last].
  std::size_t last = (bp && *bp <= j) ? *bp : j;
  bool ongoing = !(bp && *bp <= j);

  std::vector<FinObjPtr> cont_factors;
  for (std::size_t p = i + 1; p <= last; ++p) {
    std::vector<FinObjPtr> factors = cont_factors;
    factors.push_back(b->carrier_at(s.index_id(p, j)));
    for_each_tuple(factors, [&](const std::vector<Value>& vals) {
      std::vector<ContEntry> cont;
      for (std::size_t q = i + 1; q < p; ++q) cont.push_back({s.at(q), vals[q - i - 1]});
      out.push_back(Value::process(ProcessValue::make_terminated(s.at(p), std::move(cont), vals.back())));
    });
    cont_factors.push_back(a->carrier_at(s.index_id(p, j)));
  }
  if (ongoing) {
    std::vector<FinObjPtr> factors;
    for (std::size_t q = i + 1; q <= j; ++q) factors.push_back(a->carrier_at(s.index_id(q, j)));
    for_each_tuple(factors, [&](const std::vector<Value>& vals) {
      std::vector<ContEntry> cont;
      for (std::size_t q = i + 1; q <= j; ++q) cont.push_back({s.at(q), vals[q - i - 1]});
      out.push_back(Value::process(ProcessValue::make_ongoing(std::move(cont))));
    });
  }
  return out;
}

Value triangle_restrict(const TObj& a, const TObj& b, const IndexMorphism& m, const Value& v) {
  const auto& s = a->scale();
  const auto& p = v.proc();
  auto restrict_entries = [&](const Time& upto, bool inclusive) {
    std::vector<ContEntry> cont;
    for (const auto& e : p.cont) {
      if (inclusive ? e.at > upto : e.at >= upto) break;
      cont.push_back({e.at, a->restrict(IndexMorphism{e.at, m.t0, m.t0prime}, e.value)});
    }
    return cont;
  };
  (void)s;
  if (p.terminated && p.t_term <= m.t0) {
    return Value::process(ProcessValue::make_terminated(
        p.t_term, restrict_entries(p.t_term, false),
        b->restrict(IndexMorphism{p.t_term, m.t0, m.t0prime}, *p.y)));
  }
  // The termination, if any, lies after t0 and is not yet observable.
  return Value::process(ProcessValue::make_ongoing(restrict_entries(m.t0, true)));
}

}  // namespace

TObj triangle_obj(const WBound& w, const TObj& a, const TObj& b) {
  if (!(a->scale() == b->scale())) throw std::invalid_argument("triangle: objects on different scales");
  check_bound(w, a->scale());
  return intern(0, &w, a, b, [&] {
    const auto& s = a->scale();
    return TemporalObj::from_functions(
        s, "(" + a->label() + " |>''[" + w.to_string() + "] " + b->label() + ")",
        [&](const IndexPair& ip) {
          return triangle_carrier(w, a, b, s.require_position(ip.t), s.require_position(ip.t0));
        },
        [&](const IndexMorphism& m, const Value& v) { return triangle_restrict(a, b, m, v); });
  });
}

TObj prod2(const TObj& a, const TObj& b) {
  return intern(1, nullptr, a, b, [&] { return pointwise_product({a, b}); });
}

TObj sum2(const TObj& a, const TObj& b) {
  return intern(2, nullptr, a, b, [&] { return pointwise_coproduct({a, b}); });
}

TObj triangle_prime_obj(const WBound& w, const TObj& a, const TObj& b) {
  return prod2(a, triangle_obj(w, a, b));
}

TObj triangle_full_obj(const WBound& w, const TObj& a, const TObj& b) {
  return sum2(b, triangle_prime_obj(w, a, b));
}

TemporalMor triangle_map_obj(const WBound& w, const TemporalMor& f, const TemporalMor& g) {
  auto dom = triangle_obj(w, f.dom(), g.dom());
  auto cod = triangle_obj(w, f.cod(), g.cod());
  return TemporalMor::from_rule_unchecked(dom, cod, [&](const IndexPair& ip, const Value& v) {
    const auto& p = v.proc();
    ProcessValue out = p;
    for (auto& e : out.cont) e.value = f.apply({e.at, ip.t0}, e.value);
    if (p.terminated) out.y = g.apply({p.t_term, ip.t0}, *p.y);
    return Value::process(std::move(out));
  });
}

TemporalMor triangle_prime_map(const WBound& w, const TemporalMor& f, const TemporalMor& g) {
  auto inner = triangle_map_obj(w, f, g);
  return prod_map(prod2(f.dom(), inner.dom()), prod2(f.cod(), inner.cod()), {f, inner});
}

TemporalMor triangle_full_map(const WBound& w, const TemporalMor& f, const TemporalMor& g) {
  auto prime = triangle_prime_map(w, f, g);
  return coprod_map(sum2(g.dom(), prime.dom()), sum2(g.cod(), prime.cod()), {g, prime});
}

TemporalMor triangle_map_w(const WBound& from, const WBound& to, const TObj& a, const TObj& b) {
  if (!w_leq(from, to))
    throw std::invalid_argument("no 𝒲-morphism from " + from.to_string() + " to " + to.to_string());
  return TemporalMor::from_rule_unchecked(triangle_obj(from, a, b), triangle_obj(to, a, b),
                                          [](const IndexPair&, const Value& v) { return v; });
}

WBound strong_bound(const TimeScale& scale) { return WBound::bound(scale.max()); }

TObj box_prime(const TObj& a) {
  return triangle_obj(WBound::infinity(), a, TemporalObj::initial(a->scale()));
}

TObj box(const TObj& a) {
  return triangle_prime_obj(WBound::infinity(), a, TemporalObj::initial(a->scale()));
}

TObj dia_prime(const TObj& b) {
  return triangle_prime_obj(strong_bound(b->scale()), TemporalObj::terminal(b->scale()), b);
}

TObj dia(const TObj& b) {
  return triangle_full_obj(strong_bound(b->scale()), TemporalObj::terminal(b->scale()), b);
}

DerivedFunctors derived_functors(const ProcDescriptor& d) {
  DerivedFunctors out;
  out.prime = triangle_prime_obj(d.w, d.a, d.b);
  out.full = triangle_full_obj(d.w, d.a, d.b);
  out.box_prime = triangle_obj(WBound::infinity(), d.a, TemporalObj::initial(d.a->scale()));
  out.box = box(d.a);
  out.dia_prime = dia_prime(d.b);
  out.dia = dia(d.b);
  return out;
}

std::string bound_label(const WBound& w) { return w.to_string(); }

}  // namespace proccat
