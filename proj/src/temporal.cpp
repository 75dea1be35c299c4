#include "proccat/temporal.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace proccat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::CapExceeded: return "cap_exceeded";
    case Verdict::Error: return "error";
  }
  return "error";
}

LawReport pass_report(std::string suite, std::string instance, std::string detail) {
  LawReport r;
  r.suite = std::move(suite);
  r.instance = std::move(instance);
  r.detail = std::move(detail);
  return r;
}

LawReport fail_report(std::string suite, std::string instance, Witness w) {
  LawReport r;
  r.suite = std::move(suite);
  r.instance = std::move(instance);
  r.verdict = Verdict::Fail;
  r.witness = std::move(w);
  return r;
}

// ---------------------------------------------------------------------------

void TemporalObj::tabulate(const CarrierFn& carrier, const RestrictFn& restrict) {
  n_ = scale_.size();
  carriers_.resize(scale_.index_count());
  for (std::size_t id = 0; id < carriers_.size(); ++id) {
    carriers_[id] = FinObj::make(carrier(scale_.index_pair(id)));
  }
  restrictions_.assign(n_ * n_ * n_, FinMor());
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      for (std::size_t k = j; k < n_; ++k) {
        IndexMorphism m{scale_.at(i), scale_.at(j), scale_.at(k)};
        restrictions_[(i * n_ + j) * n_ + k] =
            FinMor::from_fn(carriers_[scale_.index_id(i, k)], carriers_[scale_.index_id(i, j)],
                            [&](const Value& v) { return restrict(m, v); });
      }
    }
  }
}

TObj TemporalObj::from_functions(TimeScale scale, std::string label, const CarrierFn& carrier,
                                 const RestrictFn& restrict) {
  auto obj = std::shared_ptr<TemporalObj>(new TemporalObj(std::move(scale), std::move(label)));
  obj->tabulate(carrier, restrict);
  return obj;
}

TObj TemporalObj::constant(TimeScale scale, std::string label, FinObjPtr carrier) {
  const auto& els = carrier->elements();
  return from_functions(
      std::move(scale), std::move(label), [&](const IndexPair&) { return els; },
      [](const IndexMorphism&, const Value& v) { return v; });
}

namespace {

// Named constants are shared per scale so that functor applications on them intern.
TObj shared_constant(const TimeScale& scale, std::size_t kind) {
  static std::mutex mu;
  static std::map<std::pair<std::string, std::size_t>, TObj> objs;
  std::lock_guard lock(mu);
  auto key = std::make_pair(scale.to_string(), kind);
  if (auto it = objs.find(key); it != objs.end()) return it->second;
  TObj o;
  if (kind == 0) o = TemporalObj::constant(scale, "0", FinObj::empty());
  else if (kind == 1) o = TemporalObj::constant(scale, "1", FinObj::unit());
  else o = TemporalObj::constant(scale, "flag(" + std::to_string(kind) + ")", FinObj::flag(kind));
  objs.emplace(key, o);
  return o;
}

}  // namespace

TObj TemporalObj::terminal(const TimeScale& scale) { return shared_constant(scale, 1); }

TObj TemporalObj::initial(const TimeScale& scale) { return shared_constant(scale, 0); }

TObj TemporalObj::flag(const TimeScale& scale, std::size_t n) {
  return shared_constant(scale, n);
}

TObj TemporalObj::with_restriction(const TObj& base, const IndexMorphism& m, FinMor replacement) {
  auto obj = std::shared_ptr<TemporalObj>(new TemporalObj(*base));
  const auto& s = obj->scale_;
  auto i = s.require_position(m.t), j = s.require_position(m.t0), k = s.require_position(m.t0prime);
  obj->restrictions_[(i * obj->n_ + j) * obj->n_ + k] = std::move(replacement);
  obj->label_ += "~";
  return obj;
}

const FinMor& TemporalObj::restriction(const IndexMorphism& m) const {
  if (!scale_.valid(m)) throw std::out_of_range("index morphism " + to_string(m) + " not in scale");
  return restriction_pos(scale_.require_position(m.t), scale_.require_position(m.t0),
                         scale_.require_position(m.t0prime));
}

std::size_t TemporalObj::total_size() const {
  std::size_t n = 0;
  for (const auto& c : carriers_) n += c->size();
  return n;
}

bool same_tobj(const TObj& a, const TObj& b) {
  if (a == b) return true;
  if (!(a->scale() == b->scale())) return false;
  const auto& s = a->scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    if (!same_object(a->carrier_at(id), b->carrier_at(id))) return false;
  }
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        auto x = a->restriction_pos(i, j, k).table();
        auto y = b->restriction_pos(i, j, k).table();
        if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
      }
  return true;
}

LawReport check_functor(const TObj& a) {
  const auto& s = a->scale();
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& id = a->restriction_pos(i, j, j);
      const auto& car = a->carrier_at(s.index_id(i, j));
      for (std::size_t x = 0; x < car->size(); ++x) {
        if (id.image_index(x) != x) {
          return fail_report("functor", a->label(),
                             {to_string(IndexMorphism{s.at(i), s.at(j), s.at(j)}),
                              car->at(x).dump(), car->at(id.image_index(x)).dump(),
                              car->at(x).dump(), "identity restriction moves an element"});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
          // (i,j,k) ∘ (i,k,l) = (i,j,l)
          const auto& outer = a->restriction_pos(i, j, k);
          const auto& inner = a->restriction_pos(i, k, l);
          const auto& direct = a->restriction_pos(i, j, l);
          const auto& car = a->carrier_at(s.index_id(i, l));
          for (std::size_t x = 0; x < car->size(); ++x) {
            auto lhs = outer.image_index(inner.image_index(x));
            auto rhs = direct.image_index(x);
            if (lhs != rhs) {
              const auto& cod = a->carrier_at(s.index_id(i, j));
              return fail_report(
                  "functor", a->label(),
                  {to_string(IndexMorphism{s.at(i), s.at(j), s.at(k)}) + " ∘ " +
                       to_string(IndexMorphism{s.at(i), s.at(k), s.at(l)}),
                   car->at(x).dump(), cod->at(lhs).dump(), cod->at(rhs).dump(),
                   "restriction does not respect composition"});
            }
          }
        }
  return pass_report("functor", a->label());
}

namespace {

std::string join_labels(const std::vector<TObj>& parts, const char* sep, const char* empty) {
  if (parts.empty()) return empty;
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i]->label();
  }
  return s + ")";
}

void require_same_scale(const std::vector<TObj>& objs, const TimeScale* scale) {
  for (const auto& o : objs) {
    if (!(o->scale() == *scale)) throw std::invalid_argument("objects live on different scales");
  }
}

}  // namespace

TObj pointwise_product(const std::vector<TObj>& factors) {
  if (factors.empty()) throw std::invalid_argument("pointwise_product needs a scale; use terminal()");
  require_same_scale(factors, &factors.front()->scale());
  auto obj = std::shared_ptr<TemporalObj>(
      new TemporalObj(factors.front()->scale(), join_labels(factors, " × ", "1")));
  obj->shape_ = TemporalObj::Shape::Product;
  obj->parts_ = factors;
  obj->tabulate(
      [&](const IndexPair& i) {
        std::vector<FinObjPtr> cs;
        for (const auto& f : factors) cs.push_back(f->carrier(i));
        std::vector<Value> els;
        for_each_tuple(cs, [&](const std::vector<Value>& t) { els.push_back(Value::tuple(t)); });
        return els;
      },
      [&](const IndexMorphism& m, const Value& v) {
        std::vector<Value> items;
        for (std::size_t k = 0; k < factors.size(); ++k)
          items.push_back(factors[k]->restrict(m, v.item(k)));
        return Value::tuple(std::move(items));
      });
  return obj;
}

TObj pointwise_coproduct(const std::vector<TObj>& summands) {
  if (summands.empty()) throw std::invalid_argument("pointwise_coproduct needs a scale; use initial()");
  require_same_scale(summands, &summands.front()->scale());
  auto obj = std::shared_ptr<TemporalObj>(
      new TemporalObj(summands.front()->scale(), join_labels(summands, " + ", "0")));
  obj->shape_ = TemporalObj::Shape::Coproduct;
  obj->parts_ = summands;
  obj->tabulate(
      [&](const IndexPair& i) {
        std::vector<Value> els;
        for (std::size_t k = 0; k < summands.size(); ++k)
          for (const auto& x : summands[k]->carrier(i)->elements()) els.push_back(Value::inj(k, x));
        return els;
      },
      [&](const IndexMorphism& m, const Value& v) {
        return Value::inj(v.tag(), summands[v.tag()]->restrict(m, v.payload()));
      });
  return obj;
}

namespace {

const Value& table_lookup(const Value& table, const Value& x) {
  const auto& es = table.entries();
  auto it = std::lower_bound(es.begin(), es.end(), x,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it == es.end() || !(it->first == x)) throw std::logic_error("function table misses an input");
  return it->second;
}

}  // namespace

TObj exponential_end(const TObj& a, const TObj& b, std::uint64_t cap) {
  if (!(a->scale() == b->scale())) throw std::invalid_argument("objects live on different scales");
  const auto& s = a->scale();
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      BigCount space = 1;
      for (std::size_t k = i; k <= j; ++k)
        space *= mor_count(*a->carrier_at(s.index_id(i, k)), *b->carrier_at(s.index_id(i, k)));
      if (space > cap) throw CapExceeded(space, cap);
    }

  auto carrier = [&](const IndexPair& ip) {
    auto i = s.require_position(ip.t), j = s.require_position(ip.t0);
    std::vector<std::vector<Value>> options;  // per t'' in [t, t0]
    for (std::size_t k = i; k <= j; ++k) {
      auto fns = exponential(b->carrier_at(s.index_id(i, k)), a->carrier_at(s.index_id(i, k)));
      options.push_back(fns->elements());
    }
    std::vector<Value> out;
    std::vector<Value> chosen;
    // Wedge: for k1 < k2, B(i,k1,k2) ∘ φ_k2 = φ_k1 ∘ A(i,k1,k2).
    std::function<void(std::size_t)> go = [&](std::size_t depth) {
      if (depth == options.size()) {
        out.push_back(Value::tuple(chosen));
        return;
      }
      std::size_t k2 = i + depth;
      for (const auto& phi : options[depth]) {
        bool ok = true;
        for (std::size_t d1 = 0; d1 < depth && ok; ++d1) {
          std::size_t k1 = i + d1;
          const auto& ra = a->restriction_pos(i, k1, k2);
          const auto& rb = b->restriction_pos(i, k1, k2);
          for (const auto& x : a->carrier_at(s.index_id(i, k2))->elements()) {
            if (!(rb.apply(table_lookup(phi, x)) == table_lookup(chosen[d1], ra.apply(x)))) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        chosen.push_back(phi);
        go(depth + 1);
        chosen.pop_back();
      }
    };
    go(0);
    return out;
  };
  auto restrict = [&](const IndexMorphism& m, const Value& v) {
    auto keep = s.require_position(m.t0) - s.require_position(m.t) + 1;
    std::vector<Value> items(v.items().begin(), v.items().begin() + static_cast<long>(keep));
    return Value::tuple(std::move(items));
  };
  return TemporalObj::from_functions(s, "(" + b->label() + ")^(" + a->label() + ")", carrier, restrict);
}

// ---------------------------------------------------------------------------

TemporalMor::TemporalMor(TObj dom, TObj cod, std::vector<FinMor> comps)
    : dom_(std::move(dom)), cod_(std::move(cod)), comps_(std::move(comps)) {
  if (!(dom_->scale() == cod_->scale()))
    throw std::invalid_argument("morphism between objects on different scales");
  if (comps_.size() != dom_->scale().index_count())
    throw std::invalid_argument("morphism needs one component per index");
}

TemporalMor TemporalMor::from_rule_unchecked(TObj dom, TObj cod, const Rule& rule) {
  const auto& s = dom->scale();
  std::vector<FinMor> comps;
  comps.reserve(s.index_count());
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    auto ip = s.index_pair(id);
    comps.push_back(FinMor::from_fn(dom->carrier_at(id), cod->carrier_at(id),
                                    [&](const Value& v) { return rule(ip, v); }));
  }
  return TemporalMor(std::move(dom), std::move(cod), std::move(comps));
}

TemporalMor TemporalMor::from_rule(TObj dom, TObj cod, const Rule& rule) {
  auto f = from_rule_unchecked(std::move(dom), std::move(cod), rule);
  if (auto w = naturality_witness(f)) {
    throw NaturalityError("rule is not natural at " + w->location + " on " + w->element + ": " +
                          w->lhs + " vs " + w->rhs);
  }
  return f;
}

TemporalMor TemporalMor::identity(const TObj& obj) {
  std::vector<FinMor> comps;
  for (std::size_t id = 0; id < obj->scale().index_count(); ++id)
    comps.push_back(FinMor::identity(obj->carrier_at(id)));
  return TemporalMor(obj, obj, std::move(comps));
}

TemporalMor compose(const TemporalMor& g, const TemporalMor& f) {
  if (!same_tobj(f.cod(), g.dom()))
    throw std::invalid_argument("cannot compose " + g.dom()->label() + " after " + f.cod()->label());
  std::vector<FinMor> comps;
  comps.reserve(f.components().size());
  for (std::size_t id = 0; id < f.components().size(); ++id) {
    const auto& fi = f.at_id(id);
    const auto& gi = g.at_id(id);
    std::vector<std::uint32_t> t(fi.table().size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = gi.image_index(fi.image_index(x));
    comps.emplace_back(fi.dom(), gi.cod(), std::move(t));
  }
  return TemporalMor(f.dom(), g.cod(), std::move(comps));
}

TemporalMor compose_all(const std::vector<TemporalMor>& fs) {
  if (fs.empty()) throw std::invalid_argument("compose_all of nothing");
  TemporalMor acc = fs.back();
  for (std::size_t k = fs.size() - 1; k-- > 0;) acc = compose(fs[k], acc);
  return acc;
}

std::optional<Witness> naturality_witness(const TemporalMor& f) {
  const auto& s = f.dom()->scale();
  const auto n = s.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        // cod.restrict ∘ f_(i,k) = f_(i,j) ∘ dom.restrict
        const auto& rc = f.cod()->restriction_pos(i, j, k);
        const auto& rd = f.dom()->restriction_pos(i, j, k);
        const auto& fk = f.at_id(s.index_id(i, k));
        const auto& fj = f.at_id(s.index_id(i, j));
        const auto& car = f.dom()->carrier_at(s.index_id(i, k));
        for (std::size_t x = 0; x < car->size(); ++x) {
          auto lhs = rc.image_index(fk.image_index(x));
          auto rhs = fj.image_index(rd.image_index(x));
          if (lhs != rhs) {
            const auto& cod = f.cod()->carrier_at(s.index_id(i, j));
            return Witness{to_string(IndexMorphism{s.at(i), s.at(j), s.at(k)}), car->at(x).dump(),
                           cod->at(lhs).dump(), cod->at(rhs).dump(), "naturality square fails"};
          }
        }
      }
  return std::nullopt;
}

std::optional<Witness> mor_difference(const TemporalMor& f, const TemporalMor& g) {
  if (!same_tobj(f.dom(), g.dom()) || !same_tobj(f.cod(), g.cod()))
    throw std::invalid_argument("mor_equal on morphisms with different types");
  const auto& s = f.dom()->scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    const auto& a = f.at_id(id);
    const auto& b = g.at_id(id);
    for (std::size_t x = 0; x < a.table().size(); ++x) {
      if (a.image_index(x) != b.image_index(x)) {
        return Witness{to_string(s.index_pair(id)), a.dom()->at(x).dump(),
                       a.cod()->at(a.image_index(x)).dump(), b.cod()->at(b.image_index(x)).dump(),
                       ""};
      }
    }
  }
  return std::nullopt;
}

bool mor_equal(const TemporalMor& f, const TemporalMor& g) { return !mor_difference(f, g); }

// ---------------------------------------------------------------------------

namespace {

void require_shape(const TObj& o, TemporalObj::Shape shape, const char* what) {
  if (o->shape() != shape) throw std::invalid_argument(std::string(what) + ": wrong object shape for " + o->label());
}

}  // namespace

TemporalMor proj(const TObj& p, std::size_t i) {
  require_shape(p, TemporalObj::Shape::Product, "proj");
  return TemporalMor::from_rule_unchecked(p, p->parts().at(i),
                                          [i](const IndexPair&, const Value& v) { return v.item(i); });
}

TemporalMor pair(const TObj& p, const std::vector<TemporalMor>& legs) {
  require_shape(p, TemporalObj::Shape::Product, "pair");
  if (legs.size() != p->parts().size()) throw std::invalid_argument("pair: one leg per factor");
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!same_tobj(legs[k].cod(), p->parts()[k]) || !same_tobj(legs[k].dom(), legs[0].dom()))
      throw std::invalid_argument("pair: legs do not match " + p->label());
  }
  return TemporalMor::from_rule_unchecked(legs[0].dom(), p, [&](const IndexPair& i, const Value& v) {
    std::vector<Value> items;
    for (const auto& l : legs) items.push_back(l.apply(i, v));
    return Value::tuple(std::move(items));
  });
}

TemporalMor prod_map(const TObj& p_dom, const TObj& p_cod, const std::vector<TemporalMor>& maps) {
  require_shape(p_dom, TemporalObj::Shape::Product, "prod_map");
  require_shape(p_cod, TemporalObj::Shape::Product, "prod_map");
  if (maps.size() != p_dom->parts().size() || maps.size() != p_cod->parts().size())
    throw std::invalid_argument("prod_map: arity mismatch");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!same_tobj(maps[k].dom(), p_dom->parts()[k]) || !same_tobj(maps[k].cod(), p_cod->parts()[k]))
      throw std::invalid_argument("prod_map: factor mismatch at " + std::to_string(k));
  }
  return TemporalMor::from_rule_unchecked(p_dom, p_cod, [&](const IndexPair& i, const Value& v) {
    std::vector<Value> items;
    for (std::size_t k = 0; k < maps.size(); ++k) items.push_back(maps[k].apply(i, v.item(k)));
    return Value::tuple(std::move(items));
  });
}

TemporalMor inj(const TObj& s, std::size_t k) {
  require_shape(s, TemporalObj::Shape::Coproduct, "inj");
  return TemporalMor::from_rule_unchecked(s->parts().at(k), s,
                                          [k](const IndexPair&, const Value& v) { return Value::inj(k, v); });
}

TemporalMor copair(const TObj& s, const std::vector<TemporalMor>& legs) {
  require_shape(s, TemporalObj::Shape::Coproduct, "copair");
  if (legs.size() != s->parts().size()) throw std::invalid_argument("copair: one leg per summand");
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (!same_tobj(legs[k].dom(), s->parts()[k]) || !same_tobj(legs[k].cod(), legs[0].cod()))
      throw std::invalid_argument("copair: legs do not match " + s->label());
  }
  return TemporalMor::from_rule_unchecked(s, legs[0].cod(), [&](const IndexPair& i, const Value& v) {
    return legs[v.tag()].apply(i, v.payload());
  });
}

TemporalMor coprod_map(const TObj& s_dom, const TObj& s_cod, const std::vector<TemporalMor>& maps) {
  require_shape(s_dom, TemporalObj::Shape::Coproduct, "coprod_map");
  require_shape(s_cod, TemporalObj::Shape::Coproduct, "coprod_map");
  if (maps.size() != s_dom->parts().size() || maps.size() != s_cod->parts().size())
    throw std::invalid_argument("coprod_map: arity mismatch");
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!same_tobj(maps[k].dom(), s_dom->parts()[k]) || !same_tobj(maps[k].cod(), s_cod->parts()[k]))
      throw std::invalid_argument("coprod_map: summand mismatch at " + std::to_string(k));
  }
  return TemporalMor::from_rule_unchecked(s_dom, s_cod, [&](const IndexPair& i, const Value& v) {
    return Value::inj(v.tag(), maps[v.tag()].apply(i, v.payload()));
  });
}

TemporalMor bang_to(const TObj& from, const TObj& terminal) {
  return TemporalMor::from_rule(from, terminal, [&](const IndexPair& i, const Value&) {
    const auto& c = terminal->carrier(i);
    if (c->size() != 1) throw std::invalid_argument("bang_to: codomain is not terminal");
    return c->at(0);
  });
}

TemporalMor from_empty(const TObj& empty, const TObj& to) {
  if (empty->total_size() != 0) throw std::invalid_argument("from_empty: domain is inhabited");
  return TemporalMor::from_rule_unchecked(empty, to, [](const IndexPair&, const Value& v) { return v; });
}

// ---------------------------------------------------------------------------

BigCount nat_trans_search_space(const TObj& a, const TObj& b) {
  BigCount n = 1;
  for (std::size_t id = 0; id < a->scale().index_count(); ++id)
    n *= mor_count(*a->carrier_at(id), *b->carrier_at(id));
  return n;
}

namespace {

// All natural families of components for one fixed t (position i), indices
// (i, j) for j = i..n-1, as tables.
std::vector<std::vector<std::vector<std::uint32_t>>> solve_row(const TObj& a, const TObj& b, std::size_t i) {
  const auto& s = a->scale();
  const auto n = s.size();
  std::vector<std::vector<std::vector<std::uint32_t>>> out;
  std::vector<std::vector<std::uint32_t>> tables;
  for (std::size_t j = i; j < n; ++j) tables.emplace_back(a->carrier_at(s.index_id(i, j))->size(), 0);

  // Element-level backtracking; position `slot` walks j ascending, then x.
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t jj, std::size_t x) {
    if (jj == tables.size()) {
      out.push_back(tables);
      return;
    }
    if (x == tables[jj].size()) {
      go(jj + 1, 0);
      return;
    }
    std::size_t j = i + jj;
    auto cod_size = b->carrier_at(s.index_id(i, j))->size();
    for (std::uint32_t y = 0; y < cod_size; ++y) {
      bool ok = true;
      // Squares against every earlier observation time j1 < j.
      for (std::size_t j1 = i; j1 < j && ok; ++j1) {
        auto lhs = b->restriction_pos(i, j1, j).image_index(y);
        auto rhs = tables[j1 - i][a->restriction_pos(i, j1, j).image_index(x)];
        ok = lhs == rhs;
      }
      if (!ok) continue;
      tables[jj][x] = y;
      go(jj, x + 1);
    }
  };
  go(0, 0);
  return out;
}

}  // namespace

std::uint64_t for_each_nat_trans(const TObj& a, const TObj& b, std::uint64_t cap,
                                 const std::function<bool(const TemporalMor&)>& visit) {
  if (!(a->scale() == b->scale())) throw std::invalid_argument("objects live on different scales");
  auto space = nat_trans_search_space(a, b);
  if (space > cap) throw CapExceeded(space, cap);
  const auto& s = a->scale();
  const auto n = s.size();
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(solve_row(a, b, i));
    if (rows.back().empty()) return 0;
  }
  std::vector<std::size_t> digit(n, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<FinMor> comps;
    comps.reserve(s.index_count());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = rows[i][digit[i]];
      for (std::size_t j = i; j < n; ++j) {
        auto id = s.index_id(i, j);
        comps.emplace_back(a->carrier_at(id), b->carrier_at(id), row[j - i]);
      }
    }
    ++count;
    if (!visit(TemporalMor(a, b, std::move(comps)))) return count;
    std::size_t k = n;
    while (true) {
      if (k == 0) return count;
      --k;
      if (++digit[k] < rows[k].size()) break;
      digit[k] = 0;
    }
  }
}

std::vector<TemporalMor> enumerate_nat_trans(const TObj& a, const TObj& b, std::uint64_t cap) {
  std::vector<TemporalMor> out;
  for_each_nat_trans(a, b, cap, [&](const TemporalMor& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

TemporalMor mutate_transpose(const TemporalMor& f) {
  auto comps = f.components();
  for (auto& c : comps) {
    if (c.dom()->size() == 0 || c.cod()->size() < 2) continue;
    auto y = c.image_index(0);
    std::uint32_t other = y == 0 ? 1 : 0;
    std::vector<std::uint32_t> t(c.table().begin(), c.table().end());
    for (auto& v : t) {
      if (v == y) v = other;
      else if (v == other) v = y;
    }
    c = FinMor(c.dom(), c.cod(), std::move(t));
    return TemporalMor(f.dom(), f.cod(), std::move(comps));
  }
  return f;
}

TemporalMor mutate_collapse(const TemporalMor& f) {
  auto comps = f.components();
  for (auto& c : comps) {
    if (c.dom()->size() < 2 || c.cod()->size() < 2) continue;
    std::vector<std::uint32_t> t(c.table().size(), c.image_index(0));
    bool changed = !std::equal(t.begin(), t.end(), c.table().begin());
    if (!changed) continue;
    c = FinMor(c.dom(), c.cod(), std::move(t));
    return TemporalMor(f.dom(), f.cod(), std::move(comps));
  }
  return f;
}

TObj before(const TimeScale& scale, const Time& tb) {
  return TemporalObj::from_functions(
      scale, "before(" + to_string(tb) + ")",
      [tb](const IndexPair& i) { return i.t < tb ? std::vector<Value>{Value()} : std::vector<Value>{}; },
      [](const IndexMorphism&, const Value& v) { return v; });
}

}  // namespace proccat
