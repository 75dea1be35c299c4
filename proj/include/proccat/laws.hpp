#pragma once

// Commuting-diagram checks over finite instances and the law suites built
// from them: ideal (co)monad coherence, joining and expansion, merging, the
// canonical nonterminating process, (co)recursion and uniqueness.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proccat/curated.hpp"

namespace proccat {

/// Named objects and morphisms plus path equations between them.
class Diagram {
 public:
  struct Edge {
    std::string from;
    std::string to;
    TemporalMor mor;
  };
  /// Paths list edge names in traversal order; an empty path is the identity.
  struct Equation {
    std::string from;
    std::string to;
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
  };

  // All three throw std::invalid_argument on ill-typed input.
  void node(const std::string& name, TObj obj);
  void edge(const std::string& name, const std::string& from, const std::string& to, TemporalMor mor);
  void equation(const std::string& from, const std::string& to, std::vector<std::string> lhs,
                std::vector<std::string> rhs);

  const std::vector<Equation>& equations() const { return equations_; }
  /// The composite along a path starting at `from`.
  TemporalMor compose_path(const std::string& from, const std::vector<std::string>& path) const;

 private:
  void require_path(const std::string& from, const std::string& to, const std::vector<std::string>& path) const;

  std::map<std::string, TObj> nodes_;
  std::map<std::string, Edge> edges_;
  std::vector<Equation> equations_;
};

/// Checks every equation in order; the first difference becomes the witness.
LawReport check_diagram(const Diagram& d, const std::string& suite, const std::string& instance);

/// U′ on a slot, with δ′_X : U′X → U′(X × U′X). U, ε and δ are derived.
struct IdealComonadInstance {
  std::function<TObj(const TObj&)> obj;
  std::function<TemporalMor(const TemporalMor&)> map;
  std::function<TemporalMor(const TObj&)> delta_prime;

  TObj u(const TObj& x) const { return prod2(x, obj(x)); }
  TemporalMor epsilon(const TObj& x) const { return proj(u(x), 0); }
  /// ⟨id_U, δ′ ∘ π₂⟩
  TemporalMor delta(const TObj& x) const;
};

/// T′ on a slot, with μ′_X : T′(X + T′X) → T′X. T, η and μ are derived.
struct IdealMonadInstance {
  std::function<TObj(const TObj&)> obj;
  std::function<TemporalMor(const TemporalMor&)> map;
  std::function<TemporalMor(const TObj&)> mu_prime;

  TObj t(const TObj& x) const { return sum2(x, obj(x)); }
  TemporalMor eta(const TObj& x) const { return inj(t(x), 0); }
  /// [id_T, ι₂ ∘ μ′]
  TemporalMor mu(const TObj& x) const;
};

/// U′ε ∘ δ′ = id and U′δ ∘ δ′ = δ′U ∘ δ′, at the slot value `x`.
Diagram ideal_comonad_diagram(const IdealComonadInstance& c, const TObj& x);
/// μ′ ∘ T′η = id and μ′ ∘ T′μ = μ′ ∘ μ′T, at the slot value `x`.
Diagram ideal_monad_diagram(const IdealMonadInstance& m, const TObj& x);

enum class Mutation { None, Theta, Vartheta, Chi, Bang, Mu };
const std::vector<std::string>& mutation_names();
/// Throws std::invalid_argument for unknown names.
Mutation parse_mutation(const std::string& name);

/// The instance grid: scales × carriers × bounds.
struct Grid {
  std::vector<TimeScale> scales;
  std::vector<std::string> carriers;  // "empty", "unit", "flag"
  std::vector<std::string> bounds;    // "min", "max", "inf"
};

Grid default_grid();
/// Reads {"scales": [[0], [0, 1]], "carriers": [...], "bounds": [...]}.
/// Points may be integers or "p/q" strings. Throws std::invalid_argument.
Grid load_grid(const std::string& path);
/// Every (A, B, W) over one scale; bounds that coincide are listed once.
std::vector<ApcInstance> grid_instances(const Grid& g, const TimeScale& scale);

// Single checks. Each returns one report; CapExceeded propagates.

LawReport suite_functor(const ApcInstance& in);
LawReport suite_fig1(const ApcInstance& in, Mutation m = Mutation::None);
LawReport suite_fig2(const ApcInstance& in, Mutation m = Mutation::None);
LawReport suite_fig3(const ApcInstance& in, Mutation m = Mutation::None);
LawReport suite_monad(const ApcInstance& in, Mutation m = Mutation::None);
/// θ″ and ϑ″ against every endomorphism of A and of B, plus index naturality.
LawReport suite_naturality(const ApcInstance& in, std::uint64_t cap);
/// ⟨χ″₁, χ″₂⟩ is a natural bijection at every index with the merge as inverse.
LawReport suite_chi(const ApcInstance& first, const ApcInstance& second, Mutation m = Mutation::None);
/// 1 ▷′_∞ 0 has exactly the canonical nonterminating process at every index.
LawReport suite_bang(const TimeScale& scale, Mutation m = Mutation::None);

LawReport suite_coiter(const CoiterProblem& p);
LawReport suite_recur(const RecurProblem& p);
/// Each derived operator against the unfolding it must satisfy.
LawReport suite_derived(const CoiterTriProblem& p);
LawReport suite_derived(const CoiterDtriProblem& p);
LawReport suite_derived(const RecurTriProblem& p);
/// Counts the solutions of the corecursion equation among all candidates.
LawReport suite_uniqueness(const CoiterProblem& p, std::uint64_t cap, Mutation m = Mutation::None);
LawReport suite_uniqueness(const RecurProblem& p, std::uint64_t cap, Mutation m = Mutation::None);
/// g† from f∞ satisfies its equation; f∞ from the searched g† equals coiter.
LawReport suite_milius_equations(const MiliusPair& pair, std::uint64_t cap, Mutation m = Mutation::None);
/// Both round trips with their uniqueness counts.
LawReport suite_milius_roundtrips(const MiliusPair& pair, std::uint64_t cap, Mutation m = Mutation::None);

/// Problems whose candidate space is larger than this are left out of the
/// exhaustive searches, independently of the run's cap.
inline constexpr std::uint64_t kExhaustiveLimit = 1000000;

const std::vector<std::string>& suite_names();

struct RunOptions {
  Grid grid = default_grid();
  std::vector<std::string> suites;  // empty means all
  std::uint64_t cap = kExhaustiveLimit;
  Mutation mutation = Mutation::None;
  bool timing = false;
};

/// Runs the selected suites over the grid. Reports come back sorted by suite
/// then instance. CapExceeded becomes a report verdict; other exceptions
/// become Error reports.
std::vector<LawReport> run_suites(const RunOptions& opts);

}  // namespace proccat
