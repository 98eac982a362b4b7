#pragma once

#include "spectroscopy/energy.hpp"
#include "spectroscopy/lts.hpp"

// Reference decision procedures that never touch the game.

namespace spectroscopy::oracles {

/// Greatest symmetric stability-respecting branching bisimulation.
[[nodiscard]] bool branching_bisim_sr(const transition_system& sys, state_id p, state_id q);

/// Greatest symmetric weak bisimulation (p -α-> p' answered by q ⇒(α)⇒ q').
[[nodiscard]] bool weak_bisim(const transition_system& sys, state_id p, state_id q);

/// Greatest weak simulation of p by q.
[[nodiscard]] bool weak_sim_preorder(const transition_system& sys, state_id p, state_id q);

/// Weak trace inclusion by a product of subset constructions.
[[nodiscard]] bool weak_trace_preorder(const transition_system& sys, state_id p, state_id q);

/// Stable-bisimulation preorder: for every weak trace w, q realises w if p does and every
/// stable state p reaches by w is matched by an equivalent stable state q reaches by w.
/// Stable states are equivalent under the greatest fixed point of the mutual version.
[[nodiscard]] bool stable_preorder(const transition_system& sys, state_id p, state_id q);
[[nodiscard]] bool stable_bisim(const transition_system& sys, state_id p, state_id q);

/// Preorder of the sublogic whose formulas have price <= coordinate, decided by saturating
/// the family of formula denotations (no game involved). Exponential in the state count.
class sublogic {
 public:
  sublogic(const transition_system& sys, const energy& coordinate);
  [[nodiscard]] bool preorder(state_id p, state_id q) const;
  /// Number of distinct denotations of top-level formulas.
  [[nodiscard]] std::size_t denotations() const { return top_.size(); }

 private:
  std::vector<state_set> top_;
};

}  // namespace spectroscopy::oracles
