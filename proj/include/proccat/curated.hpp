#pragma once

// Hand-picked corecursion and recursion problems on a given scale. Every
// morphism is built with a naturality check, so a faulty rule fails loudly.

#include <vector>

#include "proccat/milius.hpp"

namespace proccat {

struct MiliusPair {
  MiliusProblem given_g;    // g supplied, f derived
  CoiterProblem given_f;    // f supplied, g derived
};

struct CuratedSet {
  std::vector<CoiterProblem> coiter;
  std::vector<RecurProblem> recur;
  std::vector<CoiterTriProblem> coiter_tri;
  std::vector<CoiterDtriProblem> coiter_dtri;
  std::vector<RecurTriProblem> recur_tri;
  std::vector<MiliusPair> milius;
};

CuratedSet curated_problems(const TimeScale& scale);

/// The first scale point after t, if any.
std::optional<Time> next_point(const TimeScale& scale, const Time& t);

}  // namespace proccat
