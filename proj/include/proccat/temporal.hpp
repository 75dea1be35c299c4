#pragma once

// The functor category ℬ^ℐ over a finite time scale: temporal objects with
// restriction maps, natural transformations between them, pointwise
// (co)products, the end exponential, and exhaustive enumeration of natural
// transformations.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "proccat/finbase.hpp"
#include "proccat/report.hpp"
#include "proccat/timescale.hpp"

namespace proccat {

class TemporalObj;
using TObj = std::shared_ptr<const TemporalObj>;

class TemporalObj {
 public:
  enum class Shape { Atomic, Product, Coproduct };

  using CarrierFn = std::function<std::vector<Value>(const IndexPair&)>;
  /// Maps an element of carrier(m.dom()) to carrier(m.cod()).
  using RestrictFn = std::function<Value(const IndexMorphism&, const Value&)>;

  /// Tabulates carriers and restrictions. Functoriality is not enforced
  /// here; see check_functor.
  static TObj from_functions(TimeScale scale, std::string label, const CarrierFn& carrier,
                             const RestrictFn& restrict);
  /// Time-independent inhabitation: the same carrier everywhere, identity restrictions.
  static TObj constant(TimeScale scale, std::string label, FinObjPtr carrier);
  static TObj terminal(const TimeScale& scale);
  static TObj initial(const TimeScale& scale);
  /// Constant n-element object; flag(0) and flag(1) are initial and terminal.
  static TObj flag(const TimeScale& scale, std::size_t n);

  /// A copy of `base` with one restriction map replaced. No checks; this
  /// exists to build deliberately broken objects.
  static TObj with_restriction(const TObj& base, const IndexMorphism& m, FinMor replacement);

  const TimeScale& scale() const { return scale_; }
  const std::string& label() const { return label_; }
  Shape shape() const { return shape_; }
  /// Factors of a product or summands of a coproduct.
  const std::vector<TObj>& parts() const { return parts_; }

  const FinObjPtr& carrier(const IndexPair& i) const { return carriers_[scale_.index_id(i)]; }
  const FinObjPtr& carrier_at(std::size_t id) const { return carriers_[id]; }
  const FinMor& restriction(const IndexMorphism& m) const;
  /// Restriction from positions (i, k) to (i, j), i ≤ j ≤ k.
  const FinMor& restriction_pos(std::size_t i, std::size_t j, std::size_t k) const {
    return restrictions_[(i * n_ + j) * n_ + k];
  }
  const Value& restrict(const IndexMorphism& m, const Value& v) const {
    return restriction(m).apply(v);
  }

  /// Total number of elements over all indices.
  std::size_t total_size() const;

 private:
  friend TObj pointwise_product(const std::vector<TObj>& factors);
  friend TObj pointwise_coproduct(const std::vector<TObj>& summands);

  TemporalObj(TimeScale scale, std::string label) : scale_(std::move(scale)), label_(std::move(label)) {}
  void tabulate(const CarrierFn& carrier, const RestrictFn& restrict);

  TimeScale scale_;
  std::string label_;
  Shape shape_ = Shape::Atomic;
  std::vector<TObj> parts_;
  std::size_t n_ = 0;
  std::vector<FinObjPtr> carriers_;
  std::vector<FinMor> restrictions_;
};

/// Same scale and identical carriers and restriction tables.
bool same_tobj(const TObj& a, const TObj& b);

/// Both functoriality equations at every index and composable pair.
LawReport check_functor(const TObj& a);

/// Carrier: Tuple values; the empty family gives the terminal object.
TObj pointwise_product(const std::vector<TObj>& factors);
/// Carrier: Inj(k, x) values; the empty family gives the initial object.
TObj pointwise_coproduct(const std::vector<TObj>& summands);

/// B^A by the end formula: an element at (t, t0) is a Tuple of function
/// tables φ_{t''} : A(t, t'') → B(t, t''), t'' ∈ [t, t0], satisfying the
/// wedge condition. Throws CapExceeded if an unfiltered family space at
/// some index exceeds `cap`.
TObj exponential_end(const TObj& a, const TObj& b, std::uint64_t cap);

/// Thrown when a morphism rule is not natural.
class NaturalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TemporalMor {
 public:
  using Rule = std::function<Value(const IndexPair&, const Value&)>;

  TemporalMor() = default;
  /// Unchecked construction from components, one per flat index id.
  TemporalMor(TObj dom, TObj cod, std::vector<FinMor> comps);

  /// Tabulates `rule` and verifies naturality (NaturalityError otherwise).
  static TemporalMor from_rule(TObj dom, TObj cod, const Rule& rule);
  /// Tabulates `rule` without the naturality check. For morphisms that are
  /// natural by construction or that are deliberately broken.
  static TemporalMor from_rule_unchecked(TObj dom, TObj cod, const Rule& rule);
  static TemporalMor identity(const TObj& obj);

  const TObj& dom() const { return dom_; }
  const TObj& cod() const { return cod_; }
  const FinMor& at(const IndexPair& i) const { return comps_[dom_->scale().index_id(i)]; }
  const FinMor& at_id(std::size_t id) const { return comps_[id]; }
  const std::vector<FinMor>& components() const { return comps_; }
  const Value& apply(const IndexPair& i, const Value& v) const { return at(i).apply(v); }

 private:
  TObj dom_;
  TObj cod_;
  std::vector<FinMor> comps_;
};

/// g ∘ f; throws std::invalid_argument if f.cod and g.dom differ.
TemporalMor compose(const TemporalMor& g, const TemporalMor& f);
/// fs applied right to left: compose_all({h, g, f}) = h ∘ g ∘ f.
TemporalMor compose_all(const std::vector<TemporalMor>& fs);

/// First failing naturality square, if any.
std::optional<Witness> naturality_witness(const TemporalMor& f);

bool mor_equal(const TemporalMor& f, const TemporalMor& g);
/// First index and element where f and g differ. Both must share dom and cod.
std::optional<Witness> mor_difference(const TemporalMor& f, const TemporalMor& g);

// Structural combinators. `p` must be built by pointwise_product, `s` by
// pointwise_coproduct.
TemporalMor proj(const TObj& p, std::size_t i);
TemporalMor pair(const TObj& p, const std::vector<TemporalMor>& legs);
/// f₁ × ... × fₙ between two products with matching arity.
TemporalMor prod_map(const TObj& p_dom, const TObj& p_cod, const std::vector<TemporalMor>& maps);
TemporalMor inj(const TObj& s, std::size_t k);
TemporalMor copair(const TObj& s, const std::vector<TemporalMor>& legs);
TemporalMor coprod_map(const TObj& s_dom, const TObj& s_cod, const std::vector<TemporalMor>& maps);
/// The unique morphism into a terminal object.
TemporalMor bang_to(const TObj& from, const TObj& terminal);
/// The unique morphism out of an object with empty carriers everywhere.
TemporalMor from_empty(const TObj& empty, const TObj& to);

/// ∏ over indices of |B(I)|^|A(I)|.
BigCount nat_trans_search_space(const TObj& a, const TObj& b);

/// Visits every natural transformation A → B in deterministic order
/// (lexicographic in ascending index order, then element order). The visitor
/// returns false to stop early. Throws CapExceeded when the unfiltered
/// search space exceeds `cap`; returns the number visited.
std::uint64_t for_each_nat_trans(const TObj& a, const TObj& b, std::uint64_t cap,
                                 const std::function<bool(const TemporalMor&)>& visit);
std::vector<TemporalMor> enumerate_nat_trans(const TObj& a, const TObj& b, std::uint64_t cap);

// Mutation helpers used to confirm that the checks have teeth.

/// Post-composes f with a transposition of the first two image elements at
/// the first index whose codomain has at least two elements. Returns f
/// unchanged when no such index exists.
TemporalMor mutate_transpose(const TemporalMor& f);
/// Sends every element at the first index with a nonempty codomain of
/// size ≥ 2 to the first codomain element.
TemporalMor mutate_collapse(const TemporalMor& f);

/// Carrier 1 at (t, t0) when t < tb, otherwise empty; restrictions forced.
TObj before(const TimeScale& scale, const Time& tb);

}  // namespace proccat
