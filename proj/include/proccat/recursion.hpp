#pragma once

// Corecursion −∞ and recursion −* on processes, computed by memoized
// recursion over t descending for each fixed observation time t0.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "proccat/apc_ops.hpp"

namespace proccat {

/// f : C → A ▷′_W (B + C), with B + C = sum2(B, C).
struct CoiterProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor f;

  TObj bc() const { return sum2(b, c); }
  /// A ▷′_W B
  TObj target() const { return triangle_prime_obj(w, a, b); }
};

/// f : (A × C) ▷″_W B → C, with A × C = prod2(A, C).
struct RecurProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor f;

  /// A ▷″_W B
  TObj source() const { return triangle_obj(w, a, b); }
};

/// Records every memo access of one solve, for the guardedness check.
struct MemoTrace {
  struct Event {
    bool write;
    IndexPair at;   // the memo entry
    IndexPair for_; // the index being computed when the access happened
  };
  std::vector<Event> events;
};

/// Description of the first access that breaks the schedule: a read of an
/// entry that is not yet written, or a read at t′ ≤ t while computing (t, t0).
std::optional<std::string> guardedness_violation(const MemoTrace& trace);

/// Element-level right-hand side of a fixed-point equation.
using PointRule = std::function<Value(const IndexPair&, const Value&)>;

/// True iff x agrees with `rhs` everywhere; stops at the first difference.
/// This is the fast path for uniqueness searches over many candidates.
bool satisfies_pointwise(const TemporalMor& x, const PointRule& rhs);

/// T′[ι₁, k] followed by μ′ at one element of A ▷′_W (B + D), where
/// k : D → A ▷_W B. With `mu` null, μ′ is ϑ′.
Value join_after_at(const IndexPair& at, const Value& v, const TemporalMor& k, const TemporalMor* mu);

/// The unique f∞ : C → A ▷′_W B with f∞ = ϑ′ ∘ (id_A ▷′ (id_B + f∞)) ∘ f.
TemporalMor coiter(const CoiterProblem& p, MemoTrace* trace = nullptr);
/// Right-hand side of the corecursion equation for a candidate `x`, with an
/// optional replacement for ϑ′.
TemporalMor coiter_rhs(const CoiterProblem& p, const TemporalMor& x,
                       const std::optional<TemporalMor>& mu = std::nullopt);

PointRule coiter_rhs_rule(const CoiterProblem& p, const TemporalMor& x, const TemporalMor* mu = nullptr);

/// f : C → B + A ▷′_W C (the codomain must be sum2(B, A ▷′_W C)).
struct CoiterTriProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor f;
};
/// f∞ = (id_B + (id_A ▷′ f)∞) ∘ f : C → A ▷_W B
TemporalMor coiter_tri(const CoiterTriProblem& p);
/// The inner problem (id_A ▷′ f) on A ▷′_W C.
CoiterProblem coiter_tri_inner(const CoiterTriProblem& p);
/// [ι₁, ι₂ ∘ ϑ′ ∘ (id_A ▷′ x)] ∘ f, the unfolding that the solution satisfies.
TemporalMor coiter_tri_unfold(const CoiterTriProblem& p, const TemporalMor& x);

/// f : C → A ▷″_W (B + A × C), with B + A × C = sum2(B, prod2(A, C)).
struct CoiterDtriProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor f;
};
/// f∞ = ϑ″ ∘ (id_A ▷″ (id_B + (id_A × f)∞)) ∘ f : C → A ▷″_W B
TemporalMor coiter_dtri(const CoiterDtriProblem& p);
CoiterProblem coiter_dtri_inner(const CoiterDtriProblem& p);
/// ϑ″ ∘ (id_A ▷″ [ι₁, ι₂ ∘ (id_A × x)]) ∘ f
TemporalMor coiter_dtri_unfold(const CoiterDtriProblem& p, const TemporalMor& x);

/// The unique f* : A ▷″_W B → C with f* = f ∘ ((id_A × f*) ▷″ id_B) ∘ θ″.
TemporalMor recur(const RecurProblem& p, MemoTrace* trace = nullptr);
/// `theta` replaces θ″ (for mutation runs).
TemporalMor recur_rhs(const RecurProblem& p, const TemporalMor& x,
                      const std::optional<TemporalMor>& theta = std::nullopt);
PointRule recur_rhs_rule(const RecurProblem& p, const TemporalMor& x, const TemporalMor* theta = nullptr);

/// f : A × (C ▷″_W B) → C, with the domain prod2(A, triangle_obj(W, C, B)).
struct RecurTriProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor f;
};
/// f* = f ∘ (id_A × (f ▷″ id_B)*) : A ▷′_W B → C
TemporalMor recur_tri(const RecurTriProblem& p);
RecurProblem recur_tri_inner(const RecurTriProblem& p);
/// f ∘ (id_A × ((x ▷″ id_B) ∘ θ″))
TemporalMor recur_tri_unfold(const RecurTriProblem& p, const TemporalMor& x);

}  // namespace proccat
