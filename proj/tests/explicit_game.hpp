#pragma once

#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/game.hpp"

namespace support {

using namespace spectroscopy;

/// Decides one (position, budget) pair on the explicit product of the game with the
/// finitely many energies below the budget. Independent of the antichain solver.
/// A move whose update underflows is unavailable to the attacker and loses for the
/// attacker when the defender may take it.
inline bool explicit_attacker_wins(const game_graph& g, std::size_t start, const energy& e) {
  using node = std::pair<std::size_t, energy>;
  std::map<node, std::size_t> id;
  std::vector<node> nodes;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<bool> blocked;  // defender node with an underflowing move
  auto intern = [&](const node& n) {
    auto [it, fresh] = id.emplace(n, nodes.size());
    if (fresh) {
      nodes.push_back(n);
      succ.emplace_back();
      blocked.push_back(false);
    }
    return it->second;
  };
  intern({start, e});
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    auto [pos, en] = nodes[k];
    for (const auto& m : g.moves(pos)) {
      auto next = apply(en, m.weight);
      if (!next) {
        if (g.is_defender(pos)) blocked[k] = true;
        continue;
      }
      auto j = intern({m.to, *next});
      succ[k].push_back(j);
    }
  }
  std::vector<std::vector<std::size_t>> pred(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
    for (auto j : succ[k]) pred[j].push_back(k);
  std::vector<std::size_t> pending(nodes.size());
  std::vector<bool> won(nodes.size(), false);
  std::deque<std::size_t> todo;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    pending[k] = succ[k].size();
    if (g.is_defender(nodes[k].first) && !blocked[k] && succ[k].empty()) {
      won[k] = true;
      todo.push_back(k);
    }
  }
  while (!todo.empty()) {
    auto k = todo.front();
    todo.pop_front();
    for (auto j : pred[k]) {
      if (won[j]) continue;
      bool def = g.is_defender(nodes[j].first);
      if (!def || (--pending[j] == 0 && !blocked[j])) {
        won[j] = true;
        todo.push_back(j);
      }
    }
  }
  return won[0];
}

}  // namespace support
