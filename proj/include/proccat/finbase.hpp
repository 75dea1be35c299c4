#pragma once

// The base category: finite sets of canonical values and total functions
// between them, with finite (co)products and exponentials.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "proccat/value.hpp"

namespace proccat {

using BigCount = boost::multiprecision::cpp_int;

/// An exhaustive search space is larger than the caller's cap. Never
/// swallowed: uniqueness claims must not rest on a truncated search.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(BigCount count, BigCount cap);
  const BigCount& count() const { return count_; }
  const BigCount& cap() const { return cap_; }

 private:
  BigCount count_;
  BigCount cap_;
};

class FinObj;
using FinObjPtr = std::shared_ptr<const FinObj>;

/// A finite set. Elements are kept sorted and duplicate-free.
class FinObj {
 public:
  FinObj() = default;
  explicit FinObj(std::vector<Value> elements);

  static FinObjPtr make(std::vector<Value> elements);
  static FinObjPtr empty();
  static FinObjPtr unit();
  /// Atoms "0" .. "n-1".
  static FinObjPtr flag(std::size_t n);

  std::size_t size() const { return elements_.size(); }
  bool is_empty() const { return elements_.empty(); }
  const std::vector<Value>& elements() const { return elements_; }
  const Value& at(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const Value& v) const;
  /// Throws std::out_of_range when `v` is not an element.
  std::size_t require_index(const Value& v) const;
  bool contains(const Value& v) const { return index_of(v).has_value(); }

  friend bool operator==(const FinObj& a, const FinObj& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Value> elements_;
};

bool same_object(const FinObjPtr& a, const FinObjPtr& b);

/// A total function, stored as a table of codomain positions.
class FinMor {
 public:
  FinMor() = default;
  /// Throws std::invalid_argument if the table is not total or out of range.
  FinMor(FinObjPtr dom, FinObjPtr cod, std::vector<std::uint32_t> table);

  static FinMor identity(const FinObjPtr& obj);
  static FinMor from_fn(FinObjPtr dom, FinObjPtr cod,
                        const std::function<Value(const Value&)>& fn);

  const FinObjPtr& dom() const { return dom_; }
  const FinObjPtr& cod() const { return cod_; }
  std::span<const std::uint32_t> table() const { return table_; }
  std::uint32_t image_index(std::size_t i) const { return table_[i]; }
  const Value& apply(const Value& x) const;
  bool is_identity() const;

  friend bool operator==(const FinMor& a, const FinMor& b);

 private:
  FinObjPtr dom_;
  FinObjPtr cod_;
  std::vector<std::uint32_t> table_;
};

/// g ∘ f. Throws std::invalid_argument on mismatched objects.
FinMor compose(const FinMor& g, const FinMor& f);

struct Product {
  FinObjPtr object;
  std::vector<FinObjPtr> factors;
  std::vector<FinMor> projections;
};

struct Coproduct {
  FinObjPtr object;
  std::vector<FinObjPtr> summands;
  std::vector<FinMor> injections;
};

/// Carrier: Tuple values. The empty family gives the terminal object.
Product product(std::span<const FinObjPtr> factors);
/// Carrier: Inj(k, x) values. The empty family gives the initial object.
Coproduct coproduct(std::span<const FinObjPtr> summands);

/// The unique map into the product with the given legs.
FinMor pairing(const Product& p, std::span<const FinMor> legs);
/// The unique map out of the coproduct with the given legs.
FinMor copairing(const Coproduct& c, std::span<const FinMor> legs);

/// All function tables exp → base.
FinObjPtr exponential(const FinObjPtr& base, const FinObjPtr& exp);

/// a ↦ (b ↦ f(a, b)) for f : A × B → C, with `ab` the product A × B.
FinMor curry(const Product& ab, const FinObjPtr& c, const FinMor& f);
/// Inverse of curry; `ab` must be the product A × B.
FinMor uncurry(const Product& ab, const FinObjPtr& c, const FinMor& g);

/// |cod|^|dom|.
BigCount mor_count(const FinObj& dom, const FinObj& cod);

/// All total maps dom → cod in lexicographic table order.
/// Throws CapExceeded when |cod|^|dom| > cap.
std::vector<FinMor> enumerate_mors(const FinObjPtr& dom, const FinObjPtr& cod, std::uint64_t cap);

/// Visits every tuple of the cartesian product in lexicographic order.
void for_each_tuple(std::span<const FinObjPtr> factors,
                    const std::function<void(const std::vector<Value>&)>& visit);

}  // namespace proccat
