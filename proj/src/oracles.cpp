#include "spectroscopy/oracles.hpp"

#include <deque>
#include <map>
#include <set>

namespace spectroscopy::oracles {

namespace {

using relation = std::vector<std::vector<bool>>;

relation full_relation(std::size_t n) { return relation(n, std::vector<bool>(n, true)); }

/// Refines r to its greatest subset closed under `ok`; symmetric if requested.
template <class Ok>
void refine(relation& r, bool symmetric, Ok ok) {
  const auto n = r.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (state_id p = 0; p < n; ++p)
      for (state_id q = 0; q < n; ++q) {
        if (!r[p][q]) continue;
        if (ok(p, q) && (!symmetric || ok(q, p))) continue;
        r[p][q] = false;
        if (symmetric) r[q][p] = false;
        changed = true;
      }
  }
}

/// q ⇒ -a-> ⇒ for visible a, q ⇒ for tau.
state_set weak_successors(const transition_system& sys, state_id q, action_id a) {
  const auto& pre = sys.weak_closure(q);
  if (a == tau) return pre;
  return sys.weak_closure(sys.step(pre, a));
}

bool weakly_answered(const transition_system& sys, const relation& r, state_id p, state_id q) {
  for (const auto& t : sys.outgoing(p)) {
    bool found = false;
    for (auto q2 : weak_successors(sys, q, t.action))
      if (r[t.target][q2]) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

/// Walks pairs of weak-trace-reachable sets and applies `at_pair` to each; stops at false.
template <class AtPair>
bool for_trace_pairs(const transition_system& sys, state_id p, state_id q, AtPair at_pair) {
  std::set<std::pair<state_set, state_set>> seen;
  std::deque<std::pair<state_set, state_set>> todo;
  todo.emplace_back(sys.weak_closure(p), sys.weak_closure(q));
  seen.insert(todo.front());
  while (!todo.empty()) {
    auto [ps, qs] = todo.front();
    todo.pop_front();
    if (!at_pair(ps, qs)) return false;
    for (action_id a = 1; a < sys.num_actions(); ++a) {
      auto ps2 = sys.weak_closure(sys.step(ps, a));
      if (ps2.empty()) continue;
      std::pair<state_set, state_set> next{std::move(ps2), sys.weak_closure(sys.step(qs, a))};
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return true;
}

bool stable_check(const transition_system& sys, const relation& eqv, state_id p, state_id q) {
  return for_trace_pairs(sys, p, q, [&](const state_set& ps, const state_set& qs) {
    if (qs.empty()) return false;
    for (auto s : ps) {
      if (!sys.is_stable(s)) continue;
      bool matched = false;
      for (auto t : qs)
        if (sys.is_stable(t) && eqv[s][t]) {
          matched = true;
          break;
        }
      if (!matched) return false;
    }
    return true;
  });
}

relation stable_equivalence(const transition_system& sys) {
  auto eqv = full_relation(sys.num_states());
  const auto n = sys.num_states();
  for (state_id s = 0; s < n; ++s)
    for (state_id t = 0; t < n; ++t)
      if (!sys.is_stable(s) || !sys.is_stable(t)) eqv[s][t] = false;
  refine(eqv, true, [&](state_id s, state_id t) { return stable_check(sys, eqv, s, t); });
  return eqv;
}

}  // namespace

bool branching_bisim_sr(const transition_system& sys, state_id p0, state_id q0) {
  auto r = full_relation(sys.num_states());
  auto ok = [&](state_id p, state_id q) {
    for (const auto& t : sys.outgoing(p)) {
      if (t.action == tau && r[t.target][q]) continue;
      bool found = false;
      for (auto q1 : sys.weak_closure(q)) {
        if (!r[p][q1]) continue;
        for (const auto& u : sys.outgoing(q1))
          if (u.action == t.action && r[t.target][u.target]) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return false;
    }
    if (sys.is_stable(p)) {
      for (auto q1 : sys.weak_closure(q))
        if (sys.is_stable(q1) && r[p][q1]) return true;
      return false;
    }
    return true;
  };
  refine(r, true, ok);
  return r[p0][q0];
}

bool weak_bisim(const transition_system& sys, state_id p, state_id q) {
  auto r = full_relation(sys.num_states());
  refine(r, true, [&](state_id a, state_id b) { return weakly_answered(sys, r, a, b); });
  return r[p][q];
}

bool weak_sim_preorder(const transition_system& sys, state_id p, state_id q) {
  auto r = full_relation(sys.num_states());
  refine(r, false, [&](state_id a, state_id b) { return weakly_answered(sys, r, a, b); });
  return r[p][q];
}

bool weak_trace_preorder(const transition_system& sys, state_id p, state_id q) {
  return for_trace_pairs(sys, p, q, [](const state_set&, const state_set& qs) { return !qs.empty(); });
}

bool stable_preorder(const transition_system& sys, state_id p, state_id q) {
  return stable_check(sys, stable_equivalence(sys), p, q);
}

bool stable_bisim(const transition_system& sys, state_id p, state_id q) {
  auto eqv = stable_equivalence(sys);
  return stable_check(sys, eqv, p, q) && stable_check(sys, eqv, q, p);
}

namespace {

using family = std::set<state_set>;

energy minus(energy b, dim d) {
  if (b[d] != infinity) --b[d];
  return b;
}

/// All intersections of subfamilies of f, including the empty one (= all states).
family intersection_closure(const transition_system& sys, const family& f) {
  family out{sys.all_states()};
  std::vector<state_set> todo{sys.all_states()};
  while (!todo.empty()) {
    auto x = std::move(todo.back());
    todo.pop_back();
    for (const auto& y : f) {
      auto z = x & y;
      if (out.insert(z).second) todo.push_back(std::move(z));
    }
  }
  return out;
}

struct saturation {
  const transition_system& sys;
  std::map<energy, std::size_t> index;
  std::vector<energy> budgets;
  std::vector<family> phi, chi, psi;

  std::size_t node(const energy& b) {
    if (auto it = index.find(b); it != index.end()) return it->second;
    auto i = budgets.size();
    index.emplace(b, i);
    budgets.push_back(b);
    phi.emplace_back();
    chi.emplace_back();
    psi.emplace_back();
    return i;
  }

  static bool grow(family& into, const family& from) {
    bool changed = false;
    for (const auto& x : from) changed |= into.insert(x).second;
    return changed;
  }

  bool round(std::size_t i) {
    const auto b = budgets[i];
    bool changed = false;

    // ψ: positive and negative conjuncts.
    {
      family next;
      auto bp = b;
      bp[modal_depth] = std::min(b[modal_depth], b[positive_depth]);
      for (const auto& x : chi[node(bp)]) next.insert(sys.weak_pre_closure(x));
      if (b[negations] >= 1) {
        auto bn = minus(b, negations);
        bn[modal_depth] = std::min(b[modal_depth], b[negative_depth]);
        for (const auto& x : chi[node(bn)]) next.insert(sys.weak_pre_closure(x).complement());
      }
      changed |= grow(psi[i], next);
    }
    // χ: observations and the three conjunction flavours.
    {
      family next{sys.all_states()};
      if (b[modal_depth] >= 1)
        for (const auto& y : phi[node(minus(b, modal_depth))])
          for (action_id a = 1; a < sys.num_actions(); ++a) next.insert(sys.pre(y, a));
      if (b[unstable_conjunctions] >= 1) grow(next, intersection_closure(sys, psi[node(minus(b, unstable_conjunctions))]));
      if (b[stable_conjunctions] >= 1)
        for (const auto& x : intersection_closure(sys, psi[node(minus(b, stable_conjunctions))]))
          next.insert(x & sys.stable_states());
      if (b[branching_conjunctions] >= 1 && b[unstable_conjunctions] >= 1) {
        auto c = minus(minus(b, branching_conjunctions), unstable_conjunctions);
        if (c[modal_depth] >= 1 && c[positive_depth] >= 1) {
          auto ch = minus(c, modal_depth);
          ch[modal_depth] = std::min(minus(c, modal_depth)[modal_depth], minus(c, positive_depth)[positive_depth]);
          const auto rest = intersection_closure(sys, psi[node(c)]);
          for (const auto& y : phi[node(ch)])
            for (action_id a = 0; a < sys.num_actions(); ++a) {
              auto head = sys.pre(y, a);
              if (a == tau) head |= y;
              for (const auto& x : rest) next.insert(head & x);
            }
        }
      }
      changed |= grow(chi[i], next);
    }
    // φ: delayed observations and immediate conjunctions.
    {
      family next{sys.all_states()};
      for (const auto& x : chi[i]) next.insert(sys.weak_pre_closure(x));
      if (b[immediate_conjunctions] >= 1 && b[unstable_conjunctions] >= 1)
        grow(next, intersection_closure(sys, psi[node(minus(minus(b, immediate_conjunctions), unstable_conjunctions))]));
      changed |= grow(phi[i], next);
    }
    return changed;
  }
};

}  // namespace

sublogic::sublogic(const transition_system& sys, const energy& coordinate) {
  saturation s{sys, {}, {}, {}, {}, {}};
  s.node(coordinate);
  bool changed = true;
  while (changed) {
    changed = false;
    // node() may append while iterating; new budgets are visited in the same sweep.
    for (std::size_t i = 0; i < s.budgets.size(); ++i) changed |= s.round(i);
  }
  const auto& top = s.phi[s.index.at(coordinate)];
  top_.assign(top.begin(), top.end());
}

bool sublogic::preorder(state_id p, state_id q) const {
  for (const auto& x : top_)
    if (x.contains(p) && !x.contains(q)) return false;
  return true;
}

}  // namespace spectroscopy::oracles
