#pragma once

// The Milius-style formulation of complete iterativity for T′ = A ▷′_W −,
// μ′ = ϑ′, T = Id + T′, and both translations to and from −∞.

#include <cstdint>
#include <optional>

#include "proccat/recursion.hpp"

namespace proccat {

/// g : C → B + A ▷′_W (B + C), codomain sum2(B, triangle_prime_obj(W, A, sum2(B, C))).
struct MiliusProblem {
  std::string name;
  WBound w;
  TObj a;
  TObj b;
  TObj c;
  TemporalMor g;

  /// T′(B + C)
  TObj x() const { return triangle_prime_obj(w, a, sum2(b, c)); }
  /// B + T′B = A ▷_W B
  TObj tb() const { return triangle_full_obj(w, a, b); }
};

/// μ′_B ∘ T′[ι₁, k] for k : D → A ▷_W B where `bd` = sum2(B, D); the map
/// T′(B + D) → T′B shared by both translations.
TemporalMor join_after(const WBound& w, const TObj& a, const TObj& b, const TObj& bd, const TemporalMor& k,
                       const std::optional<TemporalMor>& mu = std::nullopt);

/// The equation morphism f = T′[ι₁, g] : T′(B + C) → T′(B + T′(B + C)).
CoiterProblem milius_equation(const MiliusProblem& p);
/// g† = (id_B + f∞) ∘ g.
TemporalMor dagger_from_infty(const MiliusProblem& p);
/// (id_B + μ′ ∘ T′[ι₁, x]) ∘ g
TemporalMor dagger_rhs(const MiliusProblem& p, const TemporalMor& x,
                       const std::optional<TemporalMor>& mu = std::nullopt);

struct InftyFromDagger {
  MiliusProblem milius;   // g = ι₂ ∘ f
  TemporalMor dagger;     // the unique solution found by search
  TemporalMor infty;      // f∞ = μ′ ∘ T′[ι₁, g†] ∘ f
  std::uint64_t solutions = 0;
  std::uint64_t candidates = 0;
};

/// g = ι₂ ∘ f as a Milius problem.
MiliusProblem milius_of(const CoiterProblem& p);
/// Finds g† by exhaustive search, independently of coiter. Throws
/// CapExceeded, and std::runtime_error when the search does not find
/// exactly one solution.
InftyFromDagger infty_from_dagger(const CoiterProblem& p, std::uint64_t cap);

/// Round trips and uniqueness counts for both translation directions.
/// `given_g` supplies g, `given_f` supplies f. `mu` replaces ϑ′ everywhere a
/// translation uses it (for mutation runs); coiter itself is untouched.
LawReport check_roundtrips(const MiliusProblem& given_g, const CoiterProblem& given_f, std::uint64_t cap,
                           const std::optional<TemporalMor>& mu = std::nullopt);

}  // namespace proccat
