#include "spectroscopy/spectrum.hpp"

#include <algorithm>

namespace spectroscopy {

namespace {

constexpr energy_component I = infinity;

// Topological order: every edge below points from an earlier to a later entry.
const std::array<notion_info, notion_count> table = {{
    {notion::branching_bisim_sr, "BBsr", "stability-respecting branching bisimilarity", energy{I, I, I, I, I, I, I, I}},
    {notion::branching_bisim, "BB", "branching bisimilarity", energy{I, I, I, 0, I, I, I, I}},
    {notion::dbisim_sr, "DBsr", "stability-respecting delay bisimilarity", energy{I, 0, I, I, I, I, I, I}},
    {notion::eta_bisim, "eta-bisim", "eta-bisimilarity", energy{I, I, I, 0, 0, I, I, I}},
    {notion::delay_bisim, "DB", "delay bisimilarity", energy{I, 0, I, 0, I, I, I, I}},
    {notion::stable_bisim, "SB", "stable bisimilarity", energy{I, 0, 0, I, 0, I, I, I}},
    {notion::weak_bisim, "B", "weak bisimilarity", energy{I, 0, I, 0, 0, I, I, I}},
    {notion::eta_sim, "etaS", "eta-similarity", energy{I, I, I, 0, 0, I, 0, 0}},
    {notion::two_nested_sim, "2S", "two-nested weak simulation", energy{I, 0, I, 0, 0, I, I, 1}},
    {notion::contrasim, "C", "contrasimilarity", energy{I, 0, I, 0, 0, 0, I, I}},
    {notion::ready_sim_stable, "RSs", "stable ready simulation", energy{I, 0, 0, I, 0, I, 1, 1}},
    {notion::ready_sim, "RS", "weak ready simulation", energy{I, 0, I, 0, 0, I, 1, 1}},
    {notion::possible_futures, "PF", "weak possible futures", energy{I, 0, 1, 0, 0, I, I, 1}},
    {notion::impossible_futures_stable, "IFs", "stable impossible futures", energy{I, 0, 0, 1, 0, 0, I, 1}},
    {notion::readiness_stable, "Rs", "stable readiness", energy{I, 0, 0, 1, 0, 1, 1, 1}},
    {notion::impossible_futures, "IF", "weak impossible futures", energy{I, 0, 1, 0, 0, 0, I, 1}},
    {notion::weak_sim, "1S", "weak similarity", energy{I, 0, I, 0, 0, I, 0, 0}},
    {notion::readiness, "R", "weak readiness", energy{I, 0, 1, 0, 0, 1, 1, 1}},
    {notion::failures_stable, "Fs", "stable failures", energy{I, 0, 0, 1, 0, 0, 1, 1}},
    {notion::failures, "F", "weak failures", energy{I, 0, 1, 0, 0, 0, 1, 1}},
    {notion::weak_traces, "T", "weak trace inclusion", energy{I, 0, 0, 0, 0, 0, 0, 0}},
}};

using n = notion;
const std::array<std::pair<notion, notion>, 29> edges = {{
    {n::branching_bisim_sr, n::branching_bisim},
    {n::branching_bisim_sr, n::dbisim_sr},
    {n::branching_bisim, n::eta_bisim},
    {n::branching_bisim, n::delay_bisim},
    {n::dbisim_sr, n::delay_bisim},
    {n::dbisim_sr, n::stable_bisim},
    {n::eta_bisim, n::weak_bisim},
    {n::eta_bisim, n::eta_sim},
    {n::delay_bisim, n::weak_bisim},
    {n::stable_bisim, n::ready_sim_stable},
    {n::stable_bisim, n::impossible_futures_stable},
    {n::weak_bisim, n::two_nested_sim},
    {n::weak_bisim, n::contrasim},
    {n::eta_sim, n::weak_sim},
    {n::two_nested_sim, n::ready_sim},
    {n::two_nested_sim, n::possible_futures},
    {n::contrasim, n::impossible_futures},
    {n::ready_sim_stable, n::readiness_stable},
    {n::ready_sim, n::weak_sim},
    {n::ready_sim, n::readiness},
    {n::possible_futures, n::readiness},
    {n::possible_futures, n::impossible_futures},
    {n::impossible_futures_stable, n::failures_stable},
    {n::readiness_stable, n::failures_stable},
    {n::impossible_futures, n::failures},
    {n::weak_sim, n::weak_traces},
    {n::readiness, n::failures},
    {n::failures_stable, n::weak_traces},
    {n::failures, n::weak_traces},
}};

std::size_t position_of(notion x) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i].id == x) return i;
  return table.size();
}

// reach[a][b]: b is strictly coarser than a.
const std::array<std::array<bool, notion_count>, notion_count>& closure() {
  static const auto c = [] {
    std::array<std::array<bool, notion_count>, notion_count> r{};
    for (const auto& [a, b] : edges) r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    for (std::size_t k = 0; k < notion_count; ++k)
      for (std::size_t i = 0; i < notion_count; ++i)
        for (std::size_t j = 0; j < notion_count; ++j)
          if (r[i][k] && r[k][j]) r[i][j] = true;
    return r;
  }();
  return c;
}

std::optional<std::size_t> witness(const antichain& budgets, const energy& coord) {
  for (std::size_t i = 0; i < budgets.size(); ++i)
    if (leq(budgets[i], coord)) return i;
  return std::nullopt;
}

}  // namespace

std::span<const notion_info> notions() { return table; }

const notion_info& info(notion x) { return table[position_of(x)]; }

std::optional<notion> find_notion(std::string_view name) {
  for (const auto& i : table)
    if (i.name == name) return i.id;
  return std::nullopt;
}

std::span<const std::pair<notion, notion>> hierarchy_edges() { return edges; }

bool finer_than(notion finer, notion coarser) {
  return closure()[static_cast<std::size_t>(finer)][static_cast<std::size_t>(coarser)];
}

verdict classify(const antichain& budgets_lr, const antichain& budgets_rl) {
  verdict v;
  for (const auto& i : table) {
    auto& nv = v.per_notion[static_cast<std::size_t>(i.id)];
    nv.witness_lr = witness(budgets_lr, i.coordinate);
    nv.witness_rl = witness(budgets_rl, i.coordinate);
    nv.lr = !nv.witness_lr;
    nv.rl = !nv.witness_rl;
    nv.eq = nv.lr && nv.rl;
  }
  return v;
}

verdict classify(const budget_table& table_, const game_position& lr, const game_position& rl) {
  return classify(table_.at(lr), table_.at(rl));
}

frontier_result frontier(const verdict& v, relation rel) {
  auto holds = [&](notion x) {
    const auto& nv = v[x];
    switch (rel) {
      case relation::equivalence: return nv.eq;
      case relation::preorder_lr: return nv.lr;
      case relation::preorder_rl: return nv.rl;
    }
    return false;
  };
  frontier_result out;
  for (const auto& i : table) {
    const bool h = holds(i.id);
    bool extreme = true;
    for (const auto& j : table) {
      if (holds(j.id) != h) continue;
      if (h ? finer_than(j.id, i.id) : finer_than(i.id, j.id)) {
        extreme = false;
        break;
      }
    }
    if (extreme) (h ? out.finest_maintained : out.coarsest_violated).push_back(i.id);
  }
  return out;
}

}  // namespace spectroscopy
