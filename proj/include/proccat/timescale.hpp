#pragma once

// Finite time scales, the extended order (T∞, ≤∞), the temporal index
// category and the well-foundedness validator for symbolic scales.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace proccat {

/// A time point. Exact rational so that equality and ordering are decidable.
using Time = boost::rational<std::int64_t>;

std::string to_string(const Time& t);

/// Parses an integer or a `p/q` rational. Throws std::invalid_argument.
Time parse_time(std::string_view text);

/// (t, t0) with t ≤ t0: values inhabiting a type at t, observed at t0.
struct IndexPair {
  Time t;
  Time t0;

  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// The unique morphism (t, t0, t0') from (t, t0') to (t, t0).
struct IndexMorphism {
  Time t;
  Time t0;
  Time t0prime;

  IndexPair dom() const { return {t, t0prime}; }
  IndexPair cod() const { return {t, t0}; }
  bool is_identity() const { return t0 == t0prime; }

  friend bool operator==(const IndexMorphism&, const IndexMorphism&) = default;
};

/// Composition g ∘ f where f : (t, t0'') → (t, t0') and g : (t, t0') → (t, t0).
/// Throws std::invalid_argument when the morphisms are not composable.
IndexMorphism compose(const IndexMorphism& g, const IndexMorphism& f);

std::string to_string(const IndexPair& i);
std::string to_string(const IndexMorphism& m);

/// A finite, nonempty, strictly ascending set of time points.
///
/// Index pairs are addressed internally by flat ids in ascending (t, t0)
/// order; positions refer to the ordinal of a point in `points()`.
class TimeScale {
 public:
  /// Throws std::invalid_argument if `points` is empty or not strictly ascending.
  explicit TimeScale(std::vector<Time> points);

  /// The scale {0, 1, ..., n-1}.
  static TimeScale range(std::size_t n);

  std::span<const Time> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Time& at(std::size_t pos) const { return points_.at(pos); }
  const Time& min() const { return points_.front(); }
  const Time& max() const { return points_.back(); }

  std::optional<std::size_t> position(const Time& t) const;
  /// Like position(), but throws std::out_of_range for foreign points.
  std::size_t require_position(const Time& t) const;
  bool contains(const Time& t) const { return position(t).has_value(); }

  std::size_t index_count() const { return size() * (size() + 1) / 2; }
  /// Flat id of the index pair at positions (i, j), i ≤ j.
  std::size_t index_id(std::size_t i, std::size_t j) const;
  std::size_t index_id(const IndexPair& p) const;
  IndexPair index_pair(std::size_t id) const;
  /// Positions (i, j) of a flat id.
  std::pair<std::size_t, std::size_t> index_positions(std::size_t id) const;

  bool valid(const IndexPair& p) const;
  bool valid(const IndexMorphism& m) const;

  std::string to_string() const;

  friend bool operator==(const TimeScale&, const TimeScale&) = default;

 private:
  std::vector<Time> points_;
  std::vector<std::size_t> row_offset_;
};

/// All index objects (t, t0) with t ≤ t0, ascending by (t, t0).
std::vector<IndexPair> index_objects(const TimeScale& scale);

/// The hom-set of the index category, which has at most one element.
std::optional<IndexMorphism> hom(const TimeScale& scale, const IndexPair& from,
                                 const IndexPair& to);

/// An object of 𝒲 = T∞: a termination bound, or no guarantee at all.
class WBound {
 public:
  static WBound bound(Time t) { return WBound(t); }
  static WBound infinity() { return WBound(); }

  bool is_infinite() const { return !bound_.has_value(); }
  /// Precondition: !is_infinite().
  const Time& value() const { return *bound_; }

  std::string to_string() const;

  friend bool operator==(const WBound&, const WBound&) = default;

 private:
  WBound() = default;
  explicit WBound(Time t) : bound_(t) {}
  std::optional<Time> bound_;
};

/// t1 ≤∞ t2 ⇔ t1 ≤ t2 ∨ t2 = ∞.
bool w_leq(const WBound& a, const WBound& b);
/// Strict version of w_leq.
bool w_lt(const WBound& a, const WBound& b);
/// Binary product in 𝒲, i.e. the minimum under ≤∞.
WBound w_meet(const WBound& a, const WBound& b);
/// t <∞ w for a plain time point t.
bool before_bound(const Time& t, const WBound& w);

// ---------------------------------------------------------------------------
// Symbolic scales for the well-foundedness validator.

/// Thrown for overlapping union members and other malformed expressions.
class ScaleStructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ScaleExpr {
 public:
  enum class Kind {
    Finite,                // explicit points
    DescendingChainAbove,  // {base + 1/n | n ≥ 1}
    AscendingChainBelow,   // {limit − 1/n | n ≥ 1}
    Union,
  };

  static ScaleExpr finite(std::vector<Time> points);
  static ScaleExpr desc_above(Time base);
  static ScaleExpr asc_below(Time limit);
  static ScaleExpr union_of(std::vector<ScaleExpr> members);

  Kind kind() const { return kind_; }
  const std::vector<Time>& points() const { return points_; }
  /// Base of a descending chain or limit of an ascending chain.
  const Time& anchor() const { return points_.front(); }
  const std::vector<ScaleExpr>& members() const { return members_; }

  std::string to_string() const;

 private:
  ScaleExpr(Kind kind, std::vector<Time> points, std::vector<ScaleExpr> members)
      : kind_(kind), points_(std::move(points)), members_(std::move(members)) {}

  Kind kind_;
  std::vector<Time> points_;
  std::vector<ScaleExpr> members_;
};

/// Whitespace-insensitive syntax: finite(0,1,2), desc_above(0), asc_below(1),
/// union(...). Throws std::invalid_argument with a position on parse errors.
ScaleExpr parse_scale_expr(std::string_view text);

/// True iff the two leaf expressions (non-unions) share a point. Exact.
bool leaves_overlap(const ScaleExpr& a, const ScaleExpr& b);

struct ScaleVerdict {
  bool accepted = true;
  /// For a rejection: the limit of the offending ascending chain.
  std::optional<Time> witness_limit;

  std::string to_string() const;
};

/// Accepts iff no ascending chain bounded above occurs, which is exactly the
/// configuration that makes ≥ non-well-founded below some time point.
/// Throws ScaleStructureError when union members overlap.
ScaleVerdict validate_scale(const ScaleExpr& expr);

/// The executable scale of a `finite(...)` expression. Throws
/// std::invalid_argument for any other kind.
TimeScale to_time_scale(const ScaleExpr& expr);

}  // namespace proccat
