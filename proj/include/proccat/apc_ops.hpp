#pragma once

// Process expansion θ, process joining ϑ, process merging χ and the
// canonical nonterminating process.

#include "proccat/process.hpp"

namespace proccat {

struct ApcInstance {
  WBound w;
  TObj a;
  TObj b;

  TimeScale scale() const { return a->scale(); }
  std::string describe() const;
};

// Element-level operations. Both reuse entries as they are: every value
// involved is observed at the same t0, so no restriction map applies.

/// θ″ on one value of A ▷″_W B: each continuous entry at t″ becomes the pair
/// (entry, suffix of the process after t″).
Value expand_process(const Value& p);
/// ϑ″ on one value of A ▷″_W (A ▷_W B): concatenates the process carried by
/// the terminal event.
Value join_process(const Value& p);

/// θ″ : A ▷″_W B → (A ▷′_W B) ▷″_W B
TemporalMor theta2(const ApcInstance& inst);
/// θ′ = ⟨id, θ″ ∘ π₂⟩ : A ▷′_W B → (A ▷′_W B) ▷′_W B
TemporalMor theta1(const ApcInstance& inst);
/// θ = id_B + θ′ : A ▷_W B → (A ▷′_W B) ▷_W B
TemporalMor theta0(const ApcInstance& inst);

/// ϑ″ : A ▷″_W (A ▷_W B) → A ▷″_W B
TemporalMor vartheta2(const ApcInstance& inst);
/// ϑ′ = id_A × ϑ″ : A ▷′_W (A ▷_W B) → A ▷′_W B
TemporalMor vartheta1(const ApcInstance& inst);
/// ϑ = [id, ι₂ ∘ ϑ′] : A ▷_W (A ▷_W B) → A ▷_W B
TemporalMor vartheta0(const ApcInstance& inst);

struct ChiResult {
  TObj merged;     // (A₁ × A₂) ▷″_{W₁ ∧ W₂} M
  TObj middle;     // M = B₁×B₂ + B₁×(A₂ ▷′ B₂) + (A₁ ▷′ B₁)×B₂
  TObj left;       // A₁ ▷″_{W₁} B₁
  TObj right;      // A₂ ▷″_{W₂} B₂
  TObj pair_obj;   // left × right
  TemporalMor chi1;
  TemporalMor chi2;
  TemporalMor pairing;        // ⟨χ″₁, χ″₂⟩
  TemporalMor merge_inverse;  // pair_obj → merged
};

/// Summands of M: 0 both terminate together, 1 left terminates first,
/// 2 right terminates first.
ChiResult chi(const ApcInstance& first, const ApcInstance& second);

/// Element-level inverse of ⟨χ″₁, χ″₂⟩: zips both processes until the
/// first termination.
Value merge_processes(const Value& left, const Value& right);

/// 1 ▷′_∞ 0.
TObj canonical_nonterminating_obj(const TimeScale& scale);
/// (•, Ongoing with • everywhere) at the given index.
Value canonical_nonterminating(const TimeScale& scale, const IndexPair& at);
/// Passes iff the carrier of `obj` has exactly one element at every index.
LawReport check_singleton_carriers(const TObj& obj, const std::string& suite);

}  // namespace proccat
