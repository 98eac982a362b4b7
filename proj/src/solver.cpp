#include "spectroscopy/solver.hpp"

#include <deque>

namespace spectroscopy {

antichain local_budgets(const game_graph& graph, const std::vector<antichain>& budgets, std::size_t i) {
  const auto& moves = graph.moves(i);
  antichain out;
  if (!graph.is_defender(i)) {
    for (const auto& m : moves)
      for (const auto& e : budgets[m.to]) out.insert(inverse(e, m.weight));
    return out;
  }
  // Defender: one minimal budget per successor, combined by sup.
  out.insert(energy::zero());
  for (const auto& m : moves) {
    if (budgets[m.to].empty()) return {};
    antichain next;
    for (const auto& acc : out)
      for (const auto& e : budgets[m.to]) next.insert(sup(acc, inverse(e, m.weight)));
    out = std::move(next);
  }
  return out;
}

budget_table solve(const game_graph& graph, solve_stats* stats) {
  const auto n = graph.size();
  std::vector<antichain> budgets(n);
  std::deque<std::size_t> todo;
  std::vector<bool> queued(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.is_defender(i) && graph.moves(i).empty()) {
      budgets[i].insert(energy::zero());
      for (auto pred : graph.predecessors(i))
        if (!queued[pred]) {
          queued[pred] = true;
          todo.push_back(pred);
        }
    }
  }
  std::size_t updates = 0;
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop_front();
    queued[i] = false;
    auto fresh = local_budgets(graph, budgets, i);
    if (fresh == budgets[i]) continue;
    budgets[i] = std::move(fresh);
    ++updates;
    for (auto pred : graph.predecessors(i))
      if (!queued[pred]) {
        queued[pred] = true;
        todo.push_back(pred);
      }
  }
  if (stats != nullptr) stats->updates = updates;
  return budget_table(graph, std::move(budgets));
}

bool attacker_wins(const budget_table& table, const game_position& g, const energy& e) {
  auto i = table.graph().find(g);
  return i && table.attacker_wins(*i, e);
}

}  // namespace spectroscopy
