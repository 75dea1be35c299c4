#include "proccat/value.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <variant>

namespace proccat {

struct Value::Node {
  Kind kind;
  std::string name;
  std::vector<Value> items;
  std::size_t tag = 0;
  std::vector<std::pair<Value, Value>> entries;
  std::optional<ProcessValue> proc;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t time_hash(const Time& t) {
  return mix(std::hash<std::int64_t>{}(t.numerator()), std::hash<std::int64_t>{}(t.denominator()));
}

std::strong_ordering compare_time(const Time& a, const Time& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <class T, class Cmp>
std::strong_ordering compare_seq(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = cmp(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

std::strong_ordering compare_proc(const ProcessValue& a, const ProcessValue& b) {
  // Terminated values sort before ongoing ones.
  if (a.terminated != b.terminated) return b.terminated <=> a.terminated;
  if (a.terminated) {
    if (auto c = compare_time(a.t_term, b.t_term); c != 0) return c;
  }
  auto c = compare_seq(a.cont, b.cont, [](const ContEntry& x, const ContEntry& y) {
    if (auto ct = compare_time(x.at, y.at); ct != 0) return ct;
    return x.value <=> y.value;
  });
  if (c != 0) return c;
  if (a.terminated) return *a.y <=> *b.y;
  return std::strong_ordering::equal;
}

}  // namespace

Value::Value() {
  static const Value unit = tuple({});
  node_ = unit.node_;
}

Value Value::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Value(std::move(n));
}

Value Value::tuple(std::vector<Value> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tuple;
  std::size_t h = mix(2, items.size());
  for (const auto& v : items) h = mix(h, v.hash());
  n->hash = h;
  n->items = std::move(items);
  return Value(std::move(n));
}

Value Value::pair(Value first, Value second) {
  return tuple({std::move(first), std::move(second)});
}

Value Value::inj(std::size_t tag, Value payload) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inj;
  n->tag = tag;
  n->hash = mix(mix(3, tag), payload.hash());
  n->items.push_back(std::move(payload));
  return Value(std::move(n));
}

Value Value::fn_table(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first)
      throw std::invalid_argument("function table has a duplicate input");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::FnTable;
  std::size_t h = mix(4, entries.size());
  for (const auto& [k, v] : entries) h = mix(mix(h, k.hash()), v.hash());
  n->hash = h;
  n->entries = std::move(entries);
  return Value(std::move(n));
}

Value Value::process(ProcessValue p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Process;
  std::size_t h = mix(5, p.terminated ? 1 : 0);
  if (p.terminated) h = mix(mix(h, time_hash(p.t_term)), p.y->hash());
  for (const auto& e : p.cont) h = mix(mix(h, time_hash(e.at)), e.value.hash());
  n->hash = h;
  n->proc = std::move(p);
  return Value(std::move(n));
}

Value::Kind Value::kind() const { return node_->kind; }

const std::string& Value::name() const {
  if (kind() != Kind::Atom) throw std::logic_error("value is not an atom");
  return node_->name;
}

const std::vector<Value>& Value::items() const {
  if (kind() != Kind::Tuple) throw std::logic_error("value is not a tuple: " + dump());
  return node_->items;
}

std::size_t Value::tag() const {
  if (kind() != Kind::Inj) throw std::logic_error("value is not an injection: " + dump());
  return node_->tag;
}

const Value& Value::payload() const {
  if (kind() != Kind::Inj) throw std::logic_error("value is not an injection: " + dump());
  return node_->items.front();
}

const std::vector<std::pair<Value, Value>>& Value::entries() const {
  if (kind() != Kind::FnTable) throw std::logic_error("value is not a function table");
  return node_->entries;
}

const ProcessValue& Value::proc() const {
  if (kind() != Kind::Process) throw std::logic_error("value is not a process: " + dump());
  return *node_->proc;
}

std::size_t Value::hash() const { return node_->hash; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return static_cast<int>(x.kind) <=> static_cast<int>(y.kind);
  switch (x.kind) {
    case Value::Kind::Atom:
      return x.name.compare(y.name) <=> 0;
    case Value::Kind::Tuple:
      return compare_seq(x.items, y.items, [](const Value& l, const Value& r) { return l <=> r; });
    case Value::Kind::Inj:
      if (x.tag != y.tag) return x.tag <=> y.tag;
      return x.items.front() <=> y.items.front();
    case Value::Kind::FnTable:
      return compare_seq(x.entries, y.entries, [](const auto& l, const auto& r) {
        if (auto c = l.first <=> r.first; c != 0) return c;
        return l.second <=> r.second;
      });
    case Value::Kind::Process:
      return compare_proc(*x.proc, *y.proc);
  }
  return std::strong_ordering::equal;
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == 0;
}

std::string Value::dump() const {
  switch (kind()) {
    case Kind::Atom:
      return node_->name;
    case Kind::Tuple: {
      if (node_->items.empty()) return "•";
      std::string s = "(";
      for (std::size_t i = 0; i < node_->items.size(); ++i) {
        if (i) s += ", ";
        s += node_->items[i].dump();
      }
      return s + ")";
    }
    case Kind::Inj:
      return "in" + std::to_string(node_->tag) + "(" + node_->items.front().dump() + ")";
    case Kind::FnTable: {
      std::string s = "{";
      for (std::size_t i = 0; i < node_->entries.size(); ++i) {
        if (i) s += ", ";
        s += node_->entries[i].first.dump() + "↦" + node_->entries[i].second.dump();
      }
      return s + "}";
    }
    case Kind::Process:
      return node_->proc->dump();
  }
  return {};
}

// ---------------------------------------------------------------------------

ProcessValue ProcessValue::make_terminated(Time t_term, std::vector<ContEntry> cont, Value y) {
  ProcessValue p;
  p.terminated = true;
  p.t_term = t_term;
  p.cont = std::move(cont);
  p.y = std::move(y);
  return p;
}

ProcessValue ProcessValue::make_ongoing(std::vector<ContEntry> cont) {
  ProcessValue p;
  p.cont = std::move(cont);
  return p;
}

const Value* ProcessValue::cont_at(const Time& at) const {
  auto it = std::lower_bound(cont.begin(), cont.end(), at,
                             [](const ContEntry& e, const Time& t) { return e.at < t; });
  if (it == cont.end() || it->at != at) return nullptr;
  return &it->value;
}

ProcessValue ProcessValue::suffix_after(const Time& at) const {
  ProcessValue s = *this;
  s.cont.clear();
  for (const auto& e : cont) {
    if (e.at > at) s.cont.push_back(e);
  }
  return s;
}

std::string ProcessValue::dump() const {
  std::string entries;
  for (std::size_t i = 0; i < cont.size(); ++i) {
    if (i) entries += ", ";
    entries += to_string(cont[i].at) + "→" + cont[i].value.dump();
  }
  if (terminated) return "term(" + to_string(t_term) + "; " + entries + "; " + y->dump() + ")";
  return "ongoing(" + entries + ")";
}

}  // namespace proccat
