#include "proccat/finbase.hpp"

#include <algorithm>

namespace proccat {

CapExceeded::CapExceeded(BigCount count, BigCount cap)
    : std::runtime_error("enumeration space of " + count.str() + " candidates exceeds cap " +
                         cap.str()),
      count_(std::move(count)),
      cap_(std::move(cap)) {}

FinObj::FinObj(std::vector<Value> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

FinObjPtr FinObj::make(std::vector<Value> elements) {
  return std::make_shared<const FinObj>(std::move(elements));
}

FinObjPtr FinObj::empty() {
  static const FinObjPtr e = make({});
  return e;
}

FinObjPtr FinObj::unit() {
  static const FinObjPtr u = make({Value()});
  return u;
}

FinObjPtr FinObj::flag(std::size_t n) {
  std::vector<Value> els;
  for (std::size_t i = 0; i < n; ++i) els.push_back(Value::atom(std::to_string(i)));
  return make(std::move(els));
}

std::optional<std::size_t> FinObj::index_of(const Value& v) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), v);
  if (it == elements_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t FinObj::require_index(const Value& v) const {
  auto i = index_of(v);
  if (!i) throw std::out_of_range("value " + v.dump() + " is not an element of the carrier");
  return *i;
}

bool same_object(const FinObjPtr& a, const FinObjPtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------

FinMor::FinMor(FinObjPtr dom, FinObjPtr cod, std::vector<std::uint32_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_->size())
    throw std::invalid_argument("morphism table is not total on its domain");
  for (auto v : table_) {
    if (v >= cod_->size()) throw std::invalid_argument("morphism image outside codomain");
  }
}

FinMor FinMor::identity(const FinObjPtr& obj) {
  std::vector<std::uint32_t> t(obj->size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return FinMor(obj, obj, std::move(t));
}

FinMor FinMor::from_fn(FinObjPtr dom, FinObjPtr cod, const std::function<Value(const Value&)>& fn) {
  std::vector<std::uint32_t> t;
  t.reserve(dom->size());
  for (const auto& x : dom->elements()) {
    auto y = fn(x);
    auto idx = cod->index_of(y);
    if (!idx)
      throw std::invalid_argument("image " + y.dump() + " of " + x.dump() +
                                  " is not in the codomain");
    t.push_back(static_cast<std::uint32_t>(*idx));
  }
  return FinMor(std::move(dom), std::move(cod), std::move(t));
}

const Value& FinMor::apply(const Value& x) const {
  return cod_->at(table_[dom_->require_index(x)]);
}

bool FinMor::is_identity() const {
  if (!same_object(dom_, cod_)) return false;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

bool operator==(const FinMor& a, const FinMor& b) {
  return a.table_ == b.table_ && same_object(a.dom_, b.dom_) && same_object(a.cod_, b.cod_);
}

FinMor compose(const FinMor& g, const FinMor& f) {
  if (!same_object(f.cod(), g.dom()))
    throw std::invalid_argument("cannot compose: codomain and domain differ");
  std::vector<std::uint32_t> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.image_index(f.image_index(i));
  return FinMor(f.dom(), g.cod(), std::move(t));
}

// ---------------------------------------------------------------------------

void for_each_tuple(std::span<const FinObjPtr> factors,
                    const std::function<void(const std::vector<Value>&)>& visit) {
  for (const auto& f : factors) {
    if (f->is_empty()) return;
  }
  std::vector<std::size_t> digit(factors.size(), 0);
  std::vector<Value> current;
  current.reserve(factors.size());
  for (const auto& f : factors) current.push_back(f->at(0));
  while (true) {
    visit(current);
    // Odometer with the last factor varying fastest.
    std::size_t k = factors.size();
    while (k > 0) {
      --k;
      if (++digit[k] < factors[k]->size()) {
        current[k] = factors[k]->at(digit[k]);
        break;
      }
      digit[k] = 0;
      current[k] = factors[k]->at(0);
      if (k == 0) return;
    }
    if (factors.empty()) return;
  }
}

Product product(std::span<const FinObjPtr> factors) {
  std::vector<Value> els;
  for_each_tuple(factors, [&](const std::vector<Value>& t) { els.push_back(Value::tuple(t)); });
  Product p;
  p.object = FinObj::make(std::move(els));
  p.factors.assign(factors.begin(), factors.end());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    p.projections.push_back(
        FinMor::from_fn(p.object, factors[i], [i](const Value& v) { return v.item(i); }));
  }
  return p;
}

Coproduct coproduct(std::span<const FinObjPtr> summands) {
  std::vector<Value> els;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    for (const auto& x : summands[k]->elements()) els.push_back(Value::inj(k, x));
  }
  Coproduct c;
  c.object = FinObj::make(std::move(els));
  c.summands.assign(summands.begin(), summands.end());
  for (std::size_t k = 0; k < summands.size(); ++k) {
    c.injections.push_back(
        FinMor::from_fn(summands[k], c.object, [k](const Value& v) { return Value::inj(k, v); }));
  }
  return c;
}

FinMor pairing(const Product& p, std::span<const FinMor> legs) {
  if (legs.size() != p.factors.size())
    throw std::invalid_argument("pairing needs one leg per factor");
  if (legs.empty()) throw std::invalid_argument("pairing into the empty product needs a domain");
  const auto& dom = legs.front().dom();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!same_object(legs[i].dom(), dom) || !same_object(legs[i].cod(), p.factors[i]))
      throw std::invalid_argument("pairing legs do not match the product");
  }
  return FinMor::from_fn(dom, p.object, [&](const Value& x) {
    std::vector<Value> items;
    items.reserve(legs.size());
    for (const auto& l : legs) items.push_back(l.apply(x));
    return Value::tuple(std::move(items));
  });
}

FinMor copairing(const Coproduct& c, std::span<const FinMor> legs) {
  if (legs.size() != c.summands.size())
    throw std::invalid_argument("copairing needs one leg per summand");
  if (legs.empty()) throw std::invalid_argument("copairing out of the empty coproduct needs a codomain");
  const auto& cod = legs.front().cod();
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (!same_object(legs[i].cod(), cod) || !same_object(legs[i].dom(), c.summands[i]))
      throw std::invalid_argument("copairing legs do not match the coproduct");
  }
  return FinMor::from_fn(c.object, cod,
                         [&](const Value& x) { return legs[x.tag()].apply(x.payload()); });
}

BigCount mor_count(const FinObj& dom, const FinObj& cod) {
  return boost::multiprecision::pow(BigCount(cod.size()), static_cast<unsigned>(dom.size()));
}

namespace {

void for_each_table(std::size_t dom_size, std::size_t cod_size,
                    const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (dom_size > 0 && cod_size == 0) return;
  std::vector<std::uint32_t> t(dom_size, 0);
  while (true) {
    visit(t);
    std::size_t k = dom_size;
    while (k > 0) {
      --k;
      if (++t[k] < cod_size) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (dom_size == 0) return;
  }
}

}  // namespace

FinObjPtr exponential(const FinObjPtr& base, const FinObjPtr& exp) {
  std::vector<Value> els;
  for_each_table(exp->size(), base->size(), [&](const std::vector<std::uint32_t>& t) {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) entries.emplace_back(exp->at(i), base->at(t[i]));
    els.push_back(Value::fn_table(std::move(entries)));
  });
  return FinObj::make(std::move(els));
}

FinMor curry(const Product& ab, const FinObjPtr& c, const FinMor& f) {
  if (ab.factors.size() != 2) throw std::invalid_argument("curry expects a binary product");
  if (!same_object(f.dom(), ab.object) || !same_object(f.cod(), c))
    throw std::invalid_argument("curry: morphism does not match A × B → C");
  const auto& a = ab.factors[0];
  const auto& b = ab.factors[1];
  auto cb = exponential(c, b);
  return FinMor::from_fn(a, cb, [&](const Value& x) {
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& y : b->elements()) entries.emplace_back(y, f.apply(Value::pair(x, y)));
    return Value::fn_table(std::move(entries));
  });
}

FinMor uncurry(const Product& ab, const FinObjPtr& c, const FinMor& g) {
  if (ab.factors.size() != 2) throw std::invalid_argument("uncurry expects a binary product");
  return FinMor::from_fn(ab.object, c, [&](const Value& xy) {
    const auto& table = g.apply(xy.item(0));
    for (const auto& [in, out] : table.entries()) {
      if (in == xy.item(1)) return out;
    }
    throw std::logic_error("uncurry: function table misses an input");
  });
}

std::vector<FinMor> enumerate_mors(const FinObjPtr& dom, const FinObjPtr& cod, std::uint64_t cap) {
  auto count = mor_count(*dom, *cod);
  if (count > cap) throw CapExceeded(count, cap);
  std::vector<FinMor> out;
  for_each_table(dom->size(), cod->size(), [&](const std::vector<std::uint32_t>& t) {
    out.emplace_back(dom, cod, t);
  });
  return out;
}

}  // namespace proccat
