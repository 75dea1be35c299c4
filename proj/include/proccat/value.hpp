#pragma once

// Canonical element values: immutable tagged trees with a total structural
// order, so that carriers are sorted lists and morphism equality is decidable.

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "proccat/timescale.hpp"

namespace proccat {

struct ProcessValue;

class Value {
 public:
  enum class Kind { Atom, Tuple, Inj, FnTable, Process };

  /// The empty tuple, i.e. the element of the terminal object.
  Value();

  static Value atom(std::string name);
  static Value tuple(std::vector<Value> items);
  static Value pair(Value first, Value second);
  static Value inj(std::size_t tag, Value payload);
  /// Entries are sorted by input; duplicate inputs are rejected.
  static Value fn_table(std::vector<std::pair<Value, Value>> entries);
  static Value process(ProcessValue p);

  Kind kind() const;
  const std::string& name() const;
  const std::vector<Value>& items() const;
  const Value& item(std::size_t i) const { return items().at(i); }
  std::size_t tag() const;
  const Value& payload() const;
  const std::vector<std::pair<Value, Value>>& entries() const;
  const ProcessValue& proc() const;

  std::size_t hash() const;

  /// Canonical dump, e.g. `(a, in1(•))`, `term(2; 1→•; •)`, `ongoing()`.
  std::string dump() const;

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One entry of a continuous part: the value observed at time `at`.
struct ContEntry {
  Time at;
  Value value;

  friend bool operator==(const ContEntry&, const ContEntry&) = default;
};

/// An element of (A ▷″_W B)(t, t0). The base index (t, t0) and the bound W
/// are properties of the carrier, not of the value.
struct ProcessValue {
  bool terminated = false;
  /// Termination time; meaningful only when `terminated`.
  Time t_term;
  /// Ascending by time. For a terminated value the times fill (t, t_term),
  /// for an ongoing one (t, t0].
  std::vector<ContEntry> cont;
  /// Terminal value; present iff `terminated`.
  std::optional<Value> y;

  static ProcessValue make_terminated(Time t_term, std::vector<ContEntry> cont, Value y);
  static ProcessValue make_ongoing(std::vector<ContEntry> cont);

  /// The entry at time `at`, if any.
  const Value* cont_at(const Time& at) const;
  /// The re-based suffix strictly after `at`, with the same terminal event.
  ProcessValue suffix_after(const Time& at) const;

  std::string dump() const;

  friend bool operator==(const ProcessValue&, const ProcessValue&) = default;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace proccat
