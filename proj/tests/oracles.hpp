#pragma once

// Reference computations that share no code path with the library's
// constructions: closed-form carrier counts, brute-force enumeration, and
// direct unfolding of (co)recursive definitions.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "proccat/recursion.hpp"

namespace oracle {

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

/// |(A ▷″_W B)(i, j)| for constant A and B of sizes a and b over an n-point
/// scale, with the bound at position bp (nullopt for ∞). Positions count
/// from 0. A termination at p carries p − i − 1 continuous entries.
inline std::uint64_t triangle_size(std::size_t a, std::size_t b, std::size_t i, std::size_t j,
                                   std::optional<std::size_t> bp) {
  if (bp && *bp < i) return 0;
  std::size_t last = bp && *bp <= j ? *bp : j;
  std::uint64_t n = 0;
  for (std::size_t p = i + 1; p <= last; ++p) n += ipow(a, p - i - 1) * b;
  if (!(bp && *bp <= j)) n += ipow(a, j - i);
  return n;
}

/// Natural transformations between constant objects: one function per t.
inline std::uint64_t constant_nat_count(std::size_t a, std::size_t b, std::size_t points) {
  return ipow(ipow(b, a), points);
}

/// Brute force over every family of component tables, keeping the natural ones.
inline std::uint64_t brute_nat_count(const proccat::TObj& a, const proccat::TObj& b) {
  using namespace proccat;
  const auto& s = a->scale();
  std::vector<std::size_t> sizes_a, sizes_b;
  std::size_t slots = 0;
  for (std::size_t id = 0; id < s.index_count(); ++id) {
    sizes_a.push_back(a->carrier_at(id)->size());
    sizes_b.push_back(b->carrier_at(id)->size());
    slots += sizes_a.back();
    if (sizes_b.back() == 0 && sizes_a.back() > 0) return 0;
  }
  std::vector<std::vector<std::uint32_t>> table(s.index_count());
  for (std::size_t id = 0; id < s.index_count(); ++id) table[id].assign(sizes_a[id], 0);
  std::uint64_t count = 0;
  while (true) {
    bool natural = true;
    for (std::size_t i = 0; i < s.size() && natural; ++i)
      for (std::size_t j = i; j < s.size() && natural; ++j)
        for (std::size_t k = j; k < s.size() && natural; ++k) {
          IndexMorphism m{s.at(i), s.at(j), s.at(k)};
          auto dk = s.index_id(i, k), dj = s.index_id(i, j);
          for (std::size_t x = 0; x < sizes_a[dk]; ++x) {
            const auto& ax = a->carrier_at(dk)->at(x);
            const auto& lhs = b->restrict(m, b->carrier_at(dk)->at(table[dk][x]));
            const auto& rhs = b->carrier_at(dj)->at(table[dj][a->carrier_at(dj)->require_index(a->restrict(m, ax))]);
            if (!(lhs == rhs)) {
              natural = false;
              break;
            }
          }
        }
    if (natural) ++count;
    // odometer over all slots
    std::size_t id = 0, x = 0;
    bool carried = true;
    for (id = 0; id < table.size() && carried; ++id)
      for (x = 0; x < table[id].size() && carried; ++x) {
        if (++table[id][x] < sizes_b[id]) carried = false;
        else table[id][x] = 0;
      }
    if (carried || slots == 0) return count;
  }
}

/// f∞(z) at `at` by running f step after step, with no memo table.
inline proccat::Value unfold_coiter(const proccat::CoiterProblem& p, const proccat::IndexPair& at,
                                    const proccat::Value& z) {
  using namespace proccat;
  auto fz = p.f.apply(at, z);
  std::vector<ContEntry> cont;
  Value head = fz.item(0);
  Value step = fz.item(1);
  while (true) {
    const auto& q = step.proc();
    cont.insert(cont.end(), q.cont.begin(), q.cont.end());
    if (!q.terminated) return Value::pair(head, Value::process(ProcessValue::make_ongoing(cont)));
    if (q.y->tag() == 0)
      return Value::pair(head, Value::process(ProcessValue::make_terminated(q.t_term, cont, q.y->payload())));
    auto next = p.f.apply({q.t_term, at.t0}, q.y->payload());
    cont.push_back({q.t_term, next.item(0)});
    step = next.item(1);
  }
}

/// f*(v) at `at` by plain structural recursion on suffixes.
inline proccat::Value unfold_recur(const proccat::RecurProblem& p, const proccat::IndexPair& at,
                                   const proccat::Value& v) {
  using namespace proccat;
  const auto& pv = v.proc();
  ProcessValue dag = pv;
  for (auto& e : dag.cont) {
    auto rest = Value::process(pv.suffix_after(e.at));
    e.value = Value::pair(e.value, unfold_recur(p, {e.at, at.t0}, rest));
  }
  return p.f.apply(at, Value::process(std::move(dag)));
}

}  // namespace oracle
