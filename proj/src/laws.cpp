#include "proccat/laws.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <json.hpp>

namespace proccat {

void Diagram::node(const std::string& name, TObj obj) {
  if (!nodes_.emplace(name, std::move(obj)).second) throw std::invalid_argument("duplicate node " + name);
}

void Diagram::edge(const std::string& name, const std::string& from, const std::string& to, TemporalMor mor) {
  auto f = nodes_.find(from);
  auto t = nodes_.find(to);
  if (f == nodes_.end() || t == nodes_.end()) throw std::invalid_argument("edge " + name + ": unknown endpoint");
  if (!same_tobj(mor.dom(), f->second) || !same_tobj(mor.cod(), t->second))
    throw std::invalid_argument("edge " + name + " does not go from " + from + " to " + to);
  if (!edges_.emplace(name, Edge{from, to, std::move(mor)}).second)
    throw std::invalid_argument("duplicate edge " + name);
}

void Diagram::require_path(const std::string& from, const std::string& to,
                           const std::vector<std::string>& path) const {
  std::string at = from;
  for (const auto& e : path) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw std::invalid_argument("unknown edge " + e);
    if (it->second.from != at) throw std::invalid_argument("edge " + e + " does not start at " + at);
    at = it->second.to;
  }
  if (at != to) throw std::invalid_argument("path ends at " + at + ", not " + to);
}

void Diagram::equation(const std::string& from, const std::string& to, std::vector<std::string> lhs,
                       std::vector<std::string> rhs) {
  if (!nodes_.count(from) || !nodes_.count(to)) throw std::invalid_argument("equation: unknown endpoint");
  require_path(from, to, lhs);
  require_path(from, to, rhs);
  equations_.push_back({from, to, std::move(lhs), std::move(rhs)});
}

TemporalMor Diagram::compose_path(const std::string& from, const std::vector<std::string>& path) const {
  auto out = TemporalMor::identity(nodes_.at(from));
  for (const auto& e : path) out = compose(edges_.at(e).mor, out);
  return out;
}

namespace {

std::string path_label(const std::vector<std::string>& path) {
  if (path.empty()) return "id";
  std::string s;
  for (auto it = path.rbegin(); it != path.rend(); ++it) s += (s.empty() ? "" : " ∘ ") + *it;
  return s;
}

}  // namespace

LawReport check_diagram(const Diagram& d, const std::string& suite, const std::string& instance) {
  for (const auto& eq : d.equations()) {
    auto l = d.compose_path(eq.from, eq.lhs);
    auto r = d.compose_path(eq.from, eq.rhs);
    if (auto w = mor_difference(l, r)) {
      w->note = path_label(eq.lhs) + " ≠ " + path_label(eq.rhs);
      return fail_report(suite, instance, *w);
    }
  }
  return pass_report(suite, instance);
}

TemporalMor IdealComonadInstance::delta(const TObj& x) const {
  auto ux = u(x);
  return pair(u(ux), {TemporalMor::identity(ux), compose(delta_prime(x), proj(ux, 1))});
}

TemporalMor IdealMonadInstance::mu(const TObj& x) const {
  auto tx = t(x);
  return copair(t(tx), {TemporalMor::identity(tx), compose(inj(tx, 1), mu_prime(x))});
}

Diagram ideal_comonad_diagram(const IdealComonadInstance& c, const TObj& x) {
  auto ux = c.u(x);
  Diagram d;
  d.node("U′", c.obj(x));
  d.node("U′U", c.obj(ux));
  d.node("U′UU", c.obj(c.u(ux)));
  d.edge("δ′", "U′", "U′U", c.delta_prime(x));
  d.edge("U′ε", "U′U", "U′", c.map(c.epsilon(x)));
  d.edge("U′δ", "U′U", "U′UU", c.map(c.delta(x)));
  d.edge("δ′U", "U′U", "U′UU", c.delta_prime(ux));
  d.equation("U′", "U′", {"δ′", "U′ε"}, {});
  d.equation("U′", "U′UU", {"δ′", "U′δ"}, {"δ′", "δ′U"});
  return d;
}

Diagram ideal_monad_diagram(const IdealMonadInstance& m, const TObj& x) {
  auto tx = m.t(x);
  Diagram d;
  d.node("T′", m.obj(x));
  d.node("T′T", m.obj(tx));
  d.node("T′TT", m.obj(m.t(tx)));
  d.edge("T′η", "T′", "T′T", m.map(m.eta(x)));
  d.edge("μ′", "T′T", "T′", m.mu_prime(x));
  d.edge("T′μ", "T′TT", "T′T", m.map(m.mu(x)));
  d.edge("μ′T", "T′TT", "T′T", m.mu_prime(tx));
  d.equation("T′", "T′", {"T′η", "μ′"}, {});
  d.equation("T′TT", "T′", {"T′μ", "μ′"}, {"μ′T", "μ′"});
  return d;
}

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names = {"none", "theta", "vartheta", "chi", "bang", "mu"};
  return names;
}

Mutation parse_mutation(const std::string& name) {
  const auto& n = mutation_names();
  auto it = std::find(n.begin(), n.end(), name);
  if (it == n.end()) throw std::invalid_argument("unknown mutation " + name);
  return static_cast<Mutation>(it - n.begin());
}

// ---------------------------------------------------------------------------

Grid default_grid() {
  return {{TimeScale::range(1), TimeScale::range(2), TimeScale::range(3)},
          {"empty", "unit", "flag"},
          {"min", "max", "inf"}};
}

Grid load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read grid file " + path);
  Grid g;
  try {
    auto j = nlohmann::json::parse(in);
    for (const auto& sc : j.at("scales")) {
      std::vector<Time> pts;
      for (const auto& p : sc) pts.push_back(p.is_string() ? parse_time(p.get<std::string>()) : Time(p.get<std::int64_t>()));
      g.scales.emplace_back(std::move(pts));
    }
    g.carriers = j.at("carriers").get<std::vector<std::string>>();
    g.bounds = j.at("bounds").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("grid file " + path + ": " + e.what());
  }
  return g;
}

namespace {

TObj grid_carrier(const TimeScale& s, const std::string& name) {
  if (name == "empty") return TemporalObj::initial(s);
  if (name == "unit") return TemporalObj::terminal(s);
  if (name == "flag") return TemporalObj::flag(s, 2);
  throw std::invalid_argument("unknown grid carrier " + name);
}

WBound grid_bound(const TimeScale& s, const std::string& name) {
  if (name == "min") return WBound::bound(s.min());
  if (name == "max") return WBound::bound(s.max());
  if (name == "inf") return WBound::infinity();
  throw std::invalid_argument("unknown grid bound " + name);
}

}  // namespace

std::vector<ApcInstance> grid_instances(const Grid& g, const TimeScale& scale) {
  std::vector<WBound> ws;
  for (const auto& b : g.bounds) {
    auto w = grid_bound(scale, b);
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
  }
  std::vector<ApcInstance> out;
  for (const auto& a : g.carriers)
    for (const auto& b : g.carriers)
      for (const auto& w : ws) out.push_back({w, grid_carrier(scale, a), grid_carrier(scale, b)});
  return out;
}

// ---------------------------------------------------------------------------

LawReport suite_functor(const ApcInstance& in) {
  auto r = check_functor(triangle_obj(in.w, in.a, in.b));
  r.instance = in.describe();
  return r;
}

namespace {

TemporalMor maybe_mutate(const TemporalMor& f, bool on) { return on ? mutate_transpose(f) : f; }

}  // namespace

LawReport suite_fig1(const ApcInstance& in, Mutation m) {
  bool mutate = m == Mutation::Theta;
  auto w = in.w;
  auto b = in.b;
  IdealComonadInstance c{
      [w, b](const TObj& x) { return triangle_obj(w, x, b); },
      [w, b](const TemporalMor& f) { return triangle_map_obj(w, f, TemporalMor::identity(b)); },
      [w, b, mutate](const TObj& x) { return maybe_mutate(theta2({w, x, b}), mutate); },
  };
  return check_diagram(ideal_comonad_diagram(c, in.a), "fig1", in.describe());
}

LawReport suite_fig2(const ApcInstance& in, Mutation m) {
  auto full = triangle_full_obj(in.w, in.a, in.b);
  auto full2 = triangle_full_obj(in.w, in.a, full);
  auto join = maybe_mutate(vartheta2(in), m == Mutation::Vartheta);
  Diagram d;
  d.node("A ▷″ B", triangle_obj(in.w, in.a, in.b));
  d.node("A ▷″ (A ▷ B)", triangle_obj(in.w, in.a, full));
  d.node("A ▷″ (A ▷ (A ▷ B))", triangle_obj(in.w, in.a, full2));
  d.edge("A ▷″ ι₁", "A ▷″ B", "A ▷″ (A ▷ B)", triangle_map_obj(in.w, TemporalMor::identity(in.a), inj(full, 0)));
  d.edge("ϑ″", "A ▷″ (A ▷ B)", "A ▷″ B", join);
  d.edge("A ▷″ ϑ", "A ▷″ (A ▷ (A ▷ B))", "A ▷″ (A ▷ B)",
         triangle_map_obj(in.w, TemporalMor::identity(in.a), vartheta0(in)));
  d.edge("ϑ″[A ▷ B]", "A ▷″ (A ▷ (A ▷ B))", "A ▷″ (A ▷ B)", vartheta2({in.w, in.a, full}));
  d.equation("A ▷″ B", "A ▷″ B", {"A ▷″ ι₁", "ϑ″"}, {});
  d.equation("A ▷″ (A ▷ (A ▷ B))", "A ▷″ B", {"A ▷″ ϑ", "ϑ″"}, {"ϑ″[A ▷ B]", "ϑ″"});
  return check_diagram(d, "fig2", in.describe());
}

LawReport suite_fig3(const ApcInstance& in, Mutation m) {
  auto full = triangle_full_obj(in.w, in.a, in.b);
  auto prime = triangle_prime_obj(in.w, in.a, in.b);
  ApcInstance outer{in.w, in.a, full};
  Diagram d;
  d.node("P", triangle_obj(in.w, in.a, full));
  d.node("Q", triangle_obj(in.w, in.a, in.b));
  d.node("R", triangle_obj(in.w, prime, in.b));
  d.node("S", triangle_obj(in.w, triangle_prime_obj(in.w, in.a, full), full));
  d.node("T", triangle_obj(in.w, prime, triangle_full_obj(in.w, prime, in.b)));
  d.edge("ϑ″", "P", "Q", maybe_mutate(vartheta2(in), m == Mutation::Vartheta));
  d.edge("θ″", "Q", "R", maybe_mutate(theta2(in), m == Mutation::Theta));
  d.edge("θ″[A ▷ B]", "P", "S", theta2(outer));
  d.edge("ϑ′ ▷″ θ", "S", "T", triangle_map_obj(in.w, vartheta1(in), theta0(in)));
  d.edge("ϑ″[A ▷′ B]", "T", "R", vartheta2({in.w, prime, in.b}));
  d.equation("P", "R", {"ϑ″", "θ″"}, {"θ″[A ▷ B]", "ϑ′ ▷″ θ", "ϑ″[A ▷′ B]"});
  return check_diagram(d, "fig3", in.describe());
}

LawReport suite_monad(const ApcInstance& in, Mutation m) {
  bool mutate = m == Mutation::Vartheta;
  auto w = in.w;
  auto a = in.a;
  IdealMonadInstance t{
      [w, a](const TObj& x) { return triangle_prime_obj(w, a, x); },
      [w, a](const TemporalMor& g) { return triangle_prime_map(w, TemporalMor::identity(a), g); },
      [w, a, mutate](const TObj& x) {
        ApcInstance here{w, a, x};
        if (!mutate) return vartheta1(here);
        return prod_map(triangle_prime_obj(w, a, triangle_full_obj(w, a, x)), triangle_prime_obj(w, a, x),
                        {TemporalMor::identity(a), mutate_transpose(vartheta2(here))});
      },
  };
  return check_diagram(ideal_monad_diagram(t, in.b), "monad", in.describe());
}

LawReport suite_naturality(const ApcInstance& in, std::uint64_t cap) {
  const std::string suite = "naturality";
  const auto w = in.w;
  auto id_a = TemporalMor::identity(in.a);
  auto id_b = TemporalMor::identity(in.b);
  auto th = theta2(in);
  auto jn = vartheta2(in);
  for (const auto* f : {&th, &jn}) {
    if (auto wit = naturality_witness(*f)) {
      wit->note = (f == &th ? "θ″: " : "ϑ″: ") + wit->note;
      return fail_report(suite, in.describe(), *wit);
    }
  }
  auto square = [&](const TemporalMor& top, const TemporalMor& right, const TemporalMor& left,
                    const TemporalMor& bottom, const std::string& what) -> std::optional<Witness> {
    auto wit = mor_difference(compose(right, top), compose(bottom, left));
    if (wit) wit->note = what;
    return wit;
  };
  // Endomorphisms of a constant object are free per t, so there are few.
  for (const auto& f : enumerate_nat_trans(in.a, in.a, cap)) {
    auto fp = triangle_prime_map(w, f, id_b);
    if (auto wit = square(triangle_map_obj(w, f, id_b), th, th, triangle_map_obj(w, fp, id_b), "θ″ natural in A"))
      return fail_report(suite, in.describe(), *wit);
    auto ff = triangle_full_map(w, f, id_b);
    if (auto wit = square(triangle_map_obj(w, f, ff), jn, jn, triangle_map_obj(w, f, id_b), "ϑ″ natural in A"))
      return fail_report(suite, in.describe(), *wit);
  }
  for (const auto& g : enumerate_nat_trans(in.b, in.b, cap)) {
    auto gp = triangle_prime_map(w, id_a, g);
    if (auto wit = square(triangle_map_obj(w, id_a, g), th, th, triangle_map_obj(w, gp, g), "θ″ natural in B"))
      return fail_report(suite, in.describe(), *wit);
    auto gf = triangle_full_map(w, id_a, g);
    if (auto wit = square(triangle_map_obj(w, id_a, gf), jn, jn, triangle_map_obj(w, id_a, g), "ϑ″ natural in B"))
      return fail_report(suite, in.describe(), *wit);
  }
  return pass_report(suite, in.describe());
}

LawReport suite_chi(const ApcInstance& first, const ApcInstance& second, Mutation m) {
  const std::string suite = "chi";
  const std::string instance = "scale=" + first.scale().to_string() + " A1=" + first.a->label() + " B1=" +
                               first.b->label() + " W1=" + first.w.to_string() + " A2=" + second.a->label() +
                               " B2=" + second.b->label() + " W2=" + second.w.to_string();
  auto r = chi(first, second);
  auto pairing = r.pairing;
  if (m == Mutation::Chi) pairing = pair(r.pair_obj, {mutate_collapse(r.chi1), r.chi2});
  const auto& s = first.scale();
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    const auto& c = pairing.at_id(id);
    auto where = to_string(s.index_pair(id));
    std::vector<std::int64_t> seen(c.cod()->size(), -1);
    for (std::size_t x = 0; x < c.dom()->size(); ++x) {
      auto y = c.image_index(x);
      if (seen[y] >= 0) {
        return fail_report(suite, instance,
                           {where, c.dom()->at(x).dump(), c.cod()->at(y).dump(),
                            c.cod()->at(y).dump(), "not injective: " + c.dom()->at(seen[y]).dump() + " has the same image"});
      }
      seen[y] = static_cast<std::int64_t>(x);
    }
    for (std::size_t y = 0; y < seen.size(); ++y) {
      if (seen[y] < 0)
        return fail_report(suite, instance, {where, c.cod()->at(y).dump(), "(no preimage)", "a preimage", "not surjective"});
    }
  }
  if (auto w = naturality_witness(pairing)) return fail_report(suite, instance, *w);
  if (auto w = mor_difference(compose(r.merge_inverse, pairing), TemporalMor::identity(r.merged))) {
    w->note = "merge ∘ ⟨χ″₁, χ″₂⟩ ≠ id";
    return fail_report(suite, instance, *w);
  }
  return pass_report(suite, instance);
}

LawReport suite_bang(const TimeScale& scale, Mutation m) {
  const std::string suite = "bang";
  auto obj = m == Mutation::Bang
                 ? triangle_prime_obj(strong_bound(scale), TemporalObj::terminal(scale), TemporalObj::initial(scale))
                 : canonical_nonterminating_obj(scale);
  const std::string instance = "scale=" + scale.to_string() + " " + obj->label();
  auto r = check_singleton_carriers(obj, suite);
  r.instance = instance;
  if (!r.passed()) return r;
  for (std::size_t id = 0; id < scale.index_count(); ++id) {
    auto at = scale.index_pair(id);
    auto want = canonical_nonterminating(scale, at);
    const auto& got = obj->carrier_at(id)->at(0);
    if (!(got == want)) return fail_report(suite, instance, {to_string(at), got.dump(), got.dump(), want.dump(), "unexpected sole element"});
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string problem_instance(const TimeScale& s, const std::string& name) {
  return "scale=" + s.to_string() + " " + name;
}

}  // namespace

LawReport suite_coiter(const CoiterProblem& p) {
  const std::string suite = "coiter";
  auto instance = problem_instance(p.c->scale(), p.name);
  MemoTrace trace;
  auto f = coiter(p, &trace);
  if (auto v = guardedness_violation(trace)) return fail_report(suite, instance, {"(schedule)", "", *v, "", "unguarded"});
  if (auto w = naturality_witness(f)) return fail_report(suite, instance, *w);
  if (auto w = mor_difference(f, coiter_rhs(p, f))) {
    w->note = "f∞ ≠ ϑ′ ∘ (id ▷′ (id + f∞)) ∘ f";
    return fail_report(suite, instance, *w);
  }
  return pass_report(suite, instance);
}

LawReport suite_recur(const RecurProblem& p) {
  const std::string suite = "recur";
  auto instance = problem_instance(p.c->scale(), p.name);
  MemoTrace trace;
  auto f = recur(p, &trace);
  if (auto v = guardedness_violation(trace)) return fail_report(suite, instance, {"(schedule)", "", *v, "", "unguarded"});
  if (auto w = naturality_witness(f)) return fail_report(suite, instance, *w);
  if (auto w = mor_difference(f, recur_rhs(p, f))) {
    w->note = "f* ≠ f ∘ ((id × f*) ▷″ id) ∘ θ″";
    return fail_report(suite, instance, *w);
  }
  return pass_report(suite, instance);
}

namespace {

template <class P, class Solve, class Unfold>
LawReport derived_check(const P& p, const std::string& kind, Solve solve, Unfold unfold) {
  auto instance = problem_instance(p.c->scale(), kind + " " + p.name);
  auto f = solve(p);
  if (auto w = mor_difference(f, unfold(p, f))) {
    w->note = kind + " solution does not satisfy its unfolding";
    return fail_report("derived", instance, *w);
  }
  return pass_report("derived", instance);
}

}  // namespace

LawReport suite_derived(const CoiterTriProblem& p) {
  return derived_check(p, "coiter_tri", [](const auto& q) { return coiter_tri(q); }, coiter_tri_unfold);
}

LawReport suite_derived(const CoiterDtriProblem& p) {
  return derived_check(p, "coiter_dtri", [](const auto& q) { return coiter_dtri(q); }, coiter_dtri_unfold);
}

LawReport suite_derived(const RecurTriProblem& p) {
  return derived_check(p, "recur_tri", [](const auto& q) { return recur_tri(q); }, recur_tri_unfold);
}

namespace {

LawReport count_report(const std::string& instance, std::uint64_t candidates, std::uint64_t solutions,
                       const std::optional<TemporalMor>& found, const TemporalMor& computed) {
  auto detail = "candidates=" + std::to_string(candidates) + " solutions=" + std::to_string(solutions);
  if (solutions != 1) {
    auto r = fail_report("uniqueness", instance,
                         {"(all indices)", "(candidate space)", std::to_string(solutions) + " solutions", "1 solution",
                          "solution count"});
    r.detail = detail;
    return r;
  }
  if (auto w = mor_difference(*found, computed)) {
    w->note = "the only solution differs from the computed one";
    auto r = fail_report("uniqueness", instance, *w);
    r.detail = detail;
    return r;
  }
  return pass_report("uniqueness", instance, detail);
}

template <class Rule>
LawReport count_solutions(const TObj& dom, const TObj& cod, std::uint64_t cap, const std::string& instance,
                          const TemporalMor& computed, Rule rule) {
  std::uint64_t solutions = 0;
  std::optional<TemporalMor> found;
  auto candidates = for_each_nat_trans(dom, cod, cap, [&](const TemporalMor& x) {
    if (satisfies_pointwise(x, rule(x))) {
      if (!found) found = x;
      ++solutions;
    }
    return true;
  });
  return count_report(instance, candidates, solutions, found, computed);
}

}  // namespace

LawReport suite_uniqueness(const CoiterProblem& p, std::uint64_t cap, Mutation m) {
  auto instance = problem_instance(p.c->scale(), "coiter " + p.name);
  std::optional<TemporalMor> mu;
  if (m == Mutation::Mu) mu = mutate_transpose(vartheta1({p.w, p.a, p.b}));
  const TemporalMor* mup = mu ? &*mu : nullptr;
  return count_solutions(p.c, p.target(), cap, instance, coiter(p),
                         [&](const TemporalMor& x) { return coiter_rhs_rule(p, x, mup); });
}

LawReport suite_uniqueness(const RecurProblem& p, std::uint64_t cap, Mutation m) {
  auto instance = problem_instance(p.c->scale(), "recur " + p.name);
  std::optional<TemporalMor> th;
  if (m == Mutation::Theta) th = mutate_transpose(theta2({p.w, p.a, p.b}));
  const TemporalMor* thp = th ? &*th : nullptr;
  return count_solutions(p.source(), p.c, cap, instance, recur(p),
                         [&](const TemporalMor& x) { return recur_rhs_rule(p, x, thp); });
}

namespace {

std::optional<TemporalMor> milius_mu(const MiliusPair& pair, Mutation m) {
  if (m != Mutation::Mu) return std::nullopt;
  const auto& g = pair.given_g;
  return mutate_transpose(vartheta1({g.w, g.a, g.b}));
}

std::string milius_instance(const MiliusPair& pair, const std::string& what) {
  return problem_instance(pair.given_g.c->scale(), pair.given_g.name + " / " + pair.given_f.name + " " + what);
}

}  // namespace

LawReport suite_milius_equations(const MiliusPair& pair, std::uint64_t cap, Mutation m) {
  const std::string suite = "milius";
  auto instance = milius_instance(pair, "equations");
  auto mu = milius_mu(pair, m);
  auto gd = dagger_from_infty(pair.given_g);
  if (auto w = mor_difference(gd, dagger_rhs(pair.given_g, gd, mu))) {
    w->note = "g† ≠ (id + μ′ ∘ T′[ι₁, g†]) ∘ g";
    return fail_report(suite, instance, *w);
  }
  auto back = infty_from_dagger(pair.given_f, cap);
  if (auto w = mor_difference(back.infty, coiter(pair.given_f))) {
    w->note = "f∞ from the searched g† differs from coiter";
    return fail_report(suite, instance, *w);
  }
  return pass_report(suite, instance, "candidates=" + std::to_string(back.candidates));
}

LawReport suite_milius_roundtrips(const MiliusPair& pair, std::uint64_t cap, Mutation m) {
  auto r = check_roundtrips(pair.given_g, pair.given_f, cap, milius_mu(pair, m));
  r.instance = milius_instance(pair, "round trips");
  return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"bang",  "chi",   "coiter",     "derived", "fig1",  "fig2",
                                                 "fig3",  "functor", "milius",   "monad",   "naturality",
                                                 "recur", "uniqueness"};
  return names;
}

namespace {

bool fits(const TObj& dom, const TObj& cod) { return nat_trans_search_space(dom, cod) <= kExhaustiveLimit; }

bool milius_fits(const MiliusPair& p) {
  const auto& g = p.given_g;
  const auto& f = p.given_f;
  return fits(g.c, g.tb()) && fits(g.x(), triangle_prime_obj(g.w, g.a, g.b)) &&
         fits(f.c, triangle_full_obj(f.w, f.a, f.b)) && fits(f.c, f.target());
}

}  // namespace

std::vector<LawReport> run_suites(const RunOptions& o) {
  for (const auto& s : o.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw std::invalid_argument("unknown suite " + s);
  auto wanted = [&](const std::string& s) {
    return o.suites.empty() || std::find(o.suites.begin(), o.suites.end(), s) != o.suites.end();
  };
  std::vector<LawReport> out;
  auto run = [&](const std::string& suite, const std::string& instance, const std::function<LawReport()>& f) {
    auto start = std::chrono::steady_clock::now();
    LawReport r;
    try {
      r = f();
    } catch (const CapExceeded& e) {
      r = LawReport{suite, instance, Verdict::CapExceeded, std::nullopt, std::nullopt, e.what()};
    } catch (const std::exception& e) {
      r = LawReport{suite, instance, Verdict::Error, std::nullopt, std::nullopt, e.what()};
    }
    if (o.timing)
      r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  };
  const auto m = o.mutation;
  for (const auto& scale : o.grid.scales) {
    auto grid = grid_instances(o.grid, scale);
    auto sc = "scale=" + scale.to_string();
    for (const auto& in : grid) {
      auto d = in.describe();
      if (wanted("functor")) run("functor", d, [&] { return suite_functor(in); });
      if (wanted("fig1")) run("fig1", d, [&] { return suite_fig1(in, m); });
      if (wanted("fig2")) run("fig2", d, [&] { return suite_fig2(in, m); });
      if (wanted("fig3")) run("fig3", d, [&] { return suite_fig3(in, m); });
      if (wanted("monad")) run("monad", d, [&] { return suite_monad(in, m); });
      if (wanted("naturality")) run("naturality", d, [&] { return suite_naturality(in, o.cap); });
    }
    if (wanted("chi"))
      for (const auto& l : grid)
        for (const auto& r : grid) run("chi", sc, [&] { return suite_chi(l, r, m); });
    if (wanted("bang")) run("bang", sc, [&] { return suite_bang(scale, m); });

    bool any_problem = wanted("coiter") || wanted("recur") || wanted("derived") || wanted("uniqueness") ||
                       wanted("milius");
    if (!any_problem) continue;
    auto set = curated_problems(scale);
    for (const auto& p : set.coiter) {
      auto name = problem_instance(scale, p.name);
      if (wanted("coiter")) run("coiter", name, [&] { return suite_coiter(p); });
      if (wanted("uniqueness") && fits(p.c, p.target()))
        run("uniqueness", problem_instance(scale, "coiter " + p.name), [&] { return suite_uniqueness(p, o.cap, m); });
    }
    for (const auto& p : set.recur) {
      auto name = problem_instance(scale, p.name);
      if (wanted("recur")) run("recur", name, [&] { return suite_recur(p); });
      if (wanted("uniqueness") && fits(p.source(), p.c))
        run("uniqueness", problem_instance(scale, "recur " + p.name), [&] { return suite_uniqueness(p, o.cap, m); });
    }
    if (wanted("derived")) {
      for (const auto& p : set.coiter_tri) run("derived", sc, [&] { return suite_derived(p); });
      for (const auto& p : set.coiter_dtri) run("derived", sc, [&] { return suite_derived(p); });
      for (const auto& p : set.recur_tri) run("derived", sc, [&] { return suite_derived(p); });
    }
    if (wanted("milius"))
      for (const auto& p : set.milius) {
        if (!milius_fits(p)) continue;
        run("milius", milius_instance(p, "equations"), [&] { return suite_milius_equations(p, o.cap, m); });
        run("milius", milius_instance(p, "round trips"), [&] { return suite_milius_roundtrips(p, o.cap, m); });
      }
  }
  std::stable_sort(out.begin(), out.end(), [](const LawReport& a, const LawReport& b) {
    return std::tie(a.suite, a.instance) < std::tie(b.suite, b.instance);
  });
  return out;
}

}  // namespace proccat
