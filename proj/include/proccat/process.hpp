#pragma once

// The basic temporal functor ▷″ and the functors derived from it.
//
//   A ▷″_W B   carriers per case of the bound (empty / S_{t_b} / S_{t0} + ongoing)
//   A ▷′_W B = A × (A ▷″_W B)
//   A ▷_W B  = B + (A ▷′_W B)
//
// Objects built here are interned: asking twice for the same functor
// application on the same argument objects returns the same pointer.

#include <string>

#include "proccat/temporal.hpp"

namespace proccat {

struct ProcDescriptor {
  WBound w;
  TObj a;
  TObj b;
};

/// A ▷″_W B. Throws std::invalid_argument when W is a bound outside the scale
/// or A and B live on different scales.
TObj triangle_obj(const WBound& w, const TObj& a, const TObj& b);
/// A ▷′_W B, a product with parts {A, A ▷″_W B}.
TObj triangle_prime_obj(const WBound& w, const TObj& a, const TObj& b);
/// A ▷_W B, a coproduct with parts {B, A ▷′_W B}.
TObj triangle_full_obj(const WBound& w, const TObj& a, const TObj& b);

inline TObj triangle_obj(const ProcDescriptor& d) { return triangle_obj(d.w, d.a, d.b); }

/// Interned binary product and coproduct, so that repeated constructions
/// share one object.
TObj prod2(const TObj& a, const TObj& b);
TObj sum2(const TObj& a, const TObj& b);

/// f ▷″_W g : A ▷″_W B → A′ ▷″_W B′.
TemporalMor triangle_map_obj(const WBound& w, const TemporalMor& f, const TemporalMor& g);
/// f ▷′_W g = f × (f ▷″_W g).
TemporalMor triangle_prime_map(const WBound& w, const TemporalMor& f, const TemporalMor& g);
/// f ▷_W g = g + (f ▷′_W g).
TemporalMor triangle_full_map(const WBound& w, const TemporalMor& f, const TemporalMor& g);

/// id_A ▷″_w id_B : A ▷″_W B → A ▷″_{W′} B for W ≤∞ W′. Throws
/// std::invalid_argument otherwise.
TemporalMor triangle_map_w(const WBound& from, const WBound& to, const TObj& a, const TObj& b);

/// "Strong" termination on a finite scale: Bound(max point).
WBound strong_bound(const TimeScale& scale);

// Derived functors. Weak is ∞, strong is strong_bound().
TObj box_prime(const TObj& a);  // A ▷″_∞ 0
TObj box(const TObj& a);        // A ▷′_∞ 0
TObj dia_prime(const TObj& b);  // 1 ▷′_strong B
TObj dia(const TObj& b);        // 1 ▷_strong B

struct DerivedFunctors {
  TObj prime;      // A ▷′_W B
  TObj full;       // A ▷_W B
  TObj box_prime;  // □′A
  TObj box;        // □A
  TObj dia_prime;  // ◇′B
  TObj dia;        // ◇B
};

DerivedFunctors derived_functors(const ProcDescriptor& d);

/// Label of a bound as a descriptor annotation: "inf", "0", "1/2", ...
std::string bound_label(const WBound& w);

}  // namespace proccat
