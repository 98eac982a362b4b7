#pragma once

#include <cstddef>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/game.hpp"

namespace spectroscopy {

/// Minimal attacker-winning budgets for every position of one game graph.
/// An empty antichain means the defender wins from every budget.
class budget_table {
 public:
  budget_table(const game_graph& graph, std::vector<antichain> budgets)
      : graph_(&graph), budgets_(std::move(budgets)) {}

  [[nodiscard]] const game_graph& graph() const { return *graph_; }
  [[nodiscard]] const antichain& operator[](std::size_t i) const { return budgets_[i]; }
  [[nodiscard]] const antichain& at(const game_position& g) const { return budgets_[graph_->index_of(g)]; }
  [[nodiscard]] bool attacker_wins(std::size_t i, const energy& e) const { return budgets_[i].dominates(e); }
  [[nodiscard]] std::size_t size() const { return budgets_.size(); }

 private:
  const game_graph* graph_;
  std::vector<antichain> budgets_;
};

struct solve_stats {
  std::size_t updates = 0;
};

/// Antichain fixed point over the whole graph. The graph must outlive the table.
[[nodiscard]] budget_table solve(const game_graph& graph, solve_stats* stats = nullptr);

/// e ∈ Win_a(g); false for positions outside the graph.
[[nodiscard]] bool attacker_wins(const budget_table& table, const game_position& g, const energy& e);

/// Minimal budgets that one position would get from its successors' current budgets.
[[nodiscard]] antichain local_budgets(const game_graph& graph, const std::vector<antichain>& budgets, std::size_t i);

}  // namespace spectroscopy
