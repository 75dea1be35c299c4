#include "proccat/milius.hpp"

namespace proccat {

TemporalMor join_after(const WBound& w, const TObj& a, const TObj& b, const TObj& bd, const TemporalMor& k,
                       const std::optional<TemporalMor>& mu) {
  auto full = triangle_full_obj(w, a, b);
  auto lift = triangle_prime_map(w, TemporalMor::identity(a), copair(bd, {inj(full, 0), k}));
  return compose(mu ? *mu : vartheta1({w, a, b}), lift);
}

CoiterProblem milius_equation(const MiliusProblem& p) {
  auto x = p.x();
  auto bx = sum2(p.b, x);
  if (!same_tobj(p.g.cod(), bx)) throw std::invalid_argument("milius: g has the wrong codomain");
  auto f = triangle_prime_map(p.w, TemporalMor::identity(p.a), copair(sum2(p.b, p.c), {inj(bx, 0), p.g}));
  return {p.name + "/equation", p.w, p.a, p.b, x, f};
}

TemporalMor dagger_from_infty(const MiliusProblem& p) {
  auto finf = coiter(milius_equation(p));
  return compose(coprod_map(sum2(p.b, p.x()), p.tb(), {TemporalMor::identity(p.b), finf}), p.g);
}

TemporalMor dagger_rhs(const MiliusProblem& p, const TemporalMor& x, const std::optional<TemporalMor>& mu) {
  auto inner = join_after(p.w, p.a, p.b, sum2(p.b, p.c), x, mu);
  return compose(coprod_map(sum2(p.b, p.x()), p.tb(), {TemporalMor::identity(p.b), inner}), p.g);
}

MiliusProblem milius_of(const CoiterProblem& p) {
  auto x = triangle_prime_obj(p.w, p.a, p.bc());
  return {p.name + "/milius", p.w, p.a, p.b, p.c, compose(inj(sum2(p.b, x), 1), p.f)};
}

namespace {

// (id_B + μ′ ∘ T′[ι₁, x]) ∘ g at one element.
PointRule dagger_rule(const MiliusProblem& p, const TemporalMor& x, const TemporalMor* mu) {
  auto k = x;
  return [&p, k, mu](const IndexPair& at, const Value& z) {
    const auto& gz = p.g.apply(at, z);
    if (gz.tag() == 0) return gz;
    return Value::inj(1, join_after_at(at, gz.payload(), k, mu));
  };
}

struct Search {
  std::uint64_t solutions = 0;
  std::uint64_t candidates = 0;
  std::optional<TemporalMor> found;
};

Search search(const TObj& dom, const TObj& cod, std::uint64_t cap,
              const std::function<PointRule(const TemporalMor&)>& rule) {
  Search s;
  s.candidates = for_each_nat_trans(dom, cod, cap, [&](const TemporalMor& cand) {
    if (satisfies_pointwise(cand, rule(cand))) {
      ++s.solutions;
      if (!s.found) s.found = cand;
    }
    return true;
  });
  return s;
}

}  // namespace

InftyFromDagger infty_from_dagger(const CoiterProblem& p, std::uint64_t cap) {
  auto m = milius_of(p);
  auto s = search(p.c, m.tb(), cap, [&](const TemporalMor& x) { return dagger_rule(m, x, nullptr); });
  if (s.solutions != 1)
    throw std::runtime_error("Milius equation has " + std::to_string(s.solutions) + " solutions, expected 1");
  auto infty = compose(join_after(p.w, p.a, p.b, p.bc(), *s.found), p.f);
  return {m, *s.found, infty, s.solutions, s.candidates};
}

LawReport check_roundtrips(const MiliusProblem& given_g, const CoiterProblem& given_f, std::uint64_t cap,
                           const std::optional<TemporalMor>& mu) {
  const std::string suite = "milius";
  const std::string instance = given_g.name + " | " + given_f.name;
  const TemporalMor* mup = mu ? &*mu : nullptr;
  auto fail = [&](const std::string& what, Witness w) {
    w.note = what + (w.note.empty() ? "" : "; " + w.note);
    return fail_report(suite, instance, std::move(w));
  };
  auto count_fail = [&](const std::string& what, std::uint64_t n) {
    return fail(what, Witness{"(all indices)", "(candidate space)", std::to_string(n) + " solutions", "1 solution", ""});
  };

  // First direction: g given, f = T′[ι₁, g] solved by coiter.
  {
    const auto& p = given_g;
    auto bc = sum2(p.b, p.c);
    auto bx = sum2(p.b, p.x());
    auto q = [&](const TemporalMor& a) {
      return compose(coprod_map(bx, p.tb(), {TemporalMor::identity(p.b), a}), p.g);
    };
    auto r = [&](const TemporalMor& b) { return join_after(p.w, p.a, p.b, bc, b, mu); };
    auto finf = coiter(milius_equation(p));
    if (auto d = mor_difference(r(q(finf)), finf)) return fail("f∞ ≠ r(q(f∞))", *d);
    auto gd = q(finf);
    if (auto d = mor_difference(q(r(gd)), gd)) return fail("g† ≠ q(r(g†))", *d);
    auto sg = search(p.c, p.tb(), cap, [&](const TemporalMor& b) { return dagger_rule(p, b, mup); });
    if (sg.solutions != 1) return count_fail("g† = q(r(g†)) solution count", sg.solutions);
    if (auto d = mor_difference(*sg.found, gd)) return fail("searched g† differs from q(f∞)", *d);
    auto eq = milius_equation(p);
    auto sf = search(p.x(), eq.target(), cap, [&](const TemporalMor& a) {
      auto k = compose(inj(p.tb(), 1), a);
      return PointRule([&p, k, mup](const IndexPair& at, const Value& v) {
        // r(q(a)) = μ′ ∘ T′[ι₁, (id + a) ∘ g]
        const auto& qv = v.item(1).proc();
        Value inner = v.item(1);
        if (qv.terminated && qv.y->tag() == 1) {
          IndexPair later{qv.t_term, at.t0};
          const auto& gz = p.g.apply(later, qv.y->payload());
          Value carried = gz.tag() == 0 ? gz : k.apply(later, gz.payload());
          inner = Value::process(ProcessValue::make_terminated(qv.t_term, qv.cont, carried));
        }
        auto lifted = Value::pair(v.item(0), inner);
        if (mup) return mup->apply(at, lifted);
        return Value::pair(v.item(0), join_process(inner));
      });
    });
    if (sf.solutions != 1) return count_fail("f∞ = r(q(f∞)) solution count", sf.solutions);
    if (auto d = mor_difference(*sf.found, finf)) return fail("searched f∞ differs from coiter", *d);
  }

  // Second direction: f given, g = ι₂ ∘ f solved by search only.
  {
    const auto& p = given_f;
    auto m = milius_of(p);
    auto bc = p.bc();
    auto q = [&](const TemporalMor& a) { return compose(join_after(p.w, p.a, p.b, bc, a, mu), p.f); };
    auto r = [&](const TemporalMor& b) { return compose(inj(m.tb(), 1), b); };
    auto sg = search(p.c, m.tb(), cap, [&](const TemporalMor& x) { return dagger_rule(m, x, mup); });
    if (sg.solutions != 1) return count_fail("g† = r(q(g†)) solution count", sg.solutions);
    auto gd = *sg.found;
    if (auto d = mor_difference(r(q(gd)), gd)) return fail("g† ≠ r(q(g†))", *d);
    auto finf = q(gd);
    if (auto d = mor_difference(q(r(finf)), finf)) return fail("f∞ ≠ q(r(f∞))", *d);
    auto sf = search(p.c, p.target(), cap, [&](const TemporalMor& b) { return coiter_rhs_rule(p, b, mup); });
    if (sf.solutions != 1) return count_fail("f∞ = q(r(f∞)) solution count", sf.solutions);
    if (auto d = mor_difference(*sf.found, finf)) return fail("searched f∞ differs from q(g†)", *d);
    if (auto d = mor_difference(coiter(p), finf)) return fail("q(g†) differs from coiter", *d);
  }
  return pass_report(suite, instance);
}

}  // namespace proccat
