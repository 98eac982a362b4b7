#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/solver.hpp"

namespace spectroscopy {

enum class notion : std::uint8_t {
  branching_bisim_sr,
  branching_bisim,
  dbisim_sr,
  eta_bisim,
  delay_bisim,
  stable_bisim,
  weak_bisim,
  eta_sim,
  two_nested_sim,
  contrasim,
  ready_sim_stable,
  ready_sim,
  possible_futures,
  impossible_futures_stable,
  readiness_stable,
  impossible_futures,
  weak_sim,
  readiness,
  failures_stable,
  failures,
  weak_traces,
};
inline constexpr std::size_t notion_count = 21;

struct notion_info {
  notion id;
  /// Command-line name, e.g. "BBsr" or "1S".
  std::string_view name;
  std::string_view description;
  energy coordinate;
};

/// All notions in a topological order of the hierarchy (finest first).
[[nodiscard]] std::span<const notion_info> notions();
[[nodiscard]] const notion_info& info(notion n);
[[nodiscard]] std::optional<notion> find_notion(std::string_view name);

/// Direct edges (finer, coarser) of the hierarchy.
[[nodiscard]] std::span<const std::pair<notion, notion>> hierarchy_edges();
/// Strictly finer in the transitive closure of the hierarchy.
[[nodiscard]] bool finer_than(notion finer, notion coarser);

struct notion_verdict {
  bool lr = false;
  bool rl = false;
  bool eq = false;
  /// Index into the left-right / right-left budget antichain that refutes the preorder.
  std::optional<std::size_t> witness_lr;
  std::optional<std::size_t> witness_rl;
};

struct verdict {
  std::array<notion_verdict, notion_count> per_notion{};
  [[nodiscard]] const notion_verdict& operator[](notion n) const { return per_notion[static_cast<std::size_t>(n)]; }
};

/// p ⪯_N q iff the coordinate of N is not attacker-winning from [p,{q}]_a.
[[nodiscard]] verdict classify(const antichain& budgets_lr, const antichain& budgets_rl);
[[nodiscard]] verdict classify(const budget_table& table, const game_position& lr, const game_position& rl);

enum class relation { equivalence, preorder_lr, preorder_rl };

struct frontier_result {
  std::vector<notion> finest_maintained;
  std::vector<notion> coarsest_violated;
};

/// Maximal maintained and minimal violated notions for the chosen relation.
[[nodiscard]] frontier_result frontier(const verdict& v, relation rel = relation::equivalence);

}  // namespace spectroscopy
