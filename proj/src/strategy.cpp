#include "spectroscopy/strategy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace spectroscopy {

namespace {

using key = std::pair<std::size_t, energy>;

// Lower rank wins ties between moves with equal required budgets.
int rule_rank(move_rule r) {
  switch (r) {
    case move_rule::finishing: return 0;
    case move_rule::delay: return 1;
    case move_rule::procrastination: return 2;
    case move_rule::observation: return 3;
    case move_rule::immediate_conjunction: return 4;
    case move_rule::late_conjunction: return 5;
    case move_rule::positive_conjunct: return 6;
    case move_rule::negative_conjunct: return 7;
    case move_rule::stable_conjunction: return 8;
    case move_rule::branching_conjunction: return 9;
    default: return 10;
  }
}

class extractor {
 public:
  extractor(const transition_system& sys, const budget_table& table)
      : sys_(sys), graph_(table.graph()), table_(table) {}

  hml::formula_ptr attacker(std::size_t i, const energy& e) {
    if (auto it = phi_.find({i, e}); it != phi_.end()) return it->second;
    auto choice = pick({i}, e);
    const auto& m = graph_.moves(choice.from)[choice.edge];
    hml::formula_ptr out;
    if (m.rule == move_rule::delay)
      out = hml::delayed_obs(delayed(m.to, choice.next));
    else
      out = hml::immediate_conj(conjuncts(m.to, choice.next));
    phi_.emplace(key{i, e}, out);
    return out;
  }

  hml::delayed_ptr delayed(std::size_t i, const energy& e) {
    if (auto it = chi_.find({i, e}); it != chi_.end()) return it->second;
    // Procrastination keeps the budget, so search the whole tau-reachable region at once.
    std::vector<std::size_t> region{i};
    std::map<std::size_t, std::size_t> distance{{i, 0}};
    for (std::size_t k = 0; k < region.size(); ++k)
      for (const auto& m : graph_.moves(region[k]))
        if (m.rule == move_rule::procrastination && distance.emplace(m.to, distance[region[k]] + 1).second)
          region.push_back(m.to);
    auto choice = pick(region, e, &distance);
    const auto& m = graph_.moves(choice.from)[choice.edge];
    hml::delayed_ptr out;
    switch (m.rule) {
      case move_rule::observation: {
        const auto& from = std::get<attacker_delayed_pos>(graph_.position(choice.from));
        const auto& to = std::get<attacker_pos>(graph_.position(m.to));
        out = hml::observe(sys_.action_label(observed_action(from.p, to.p, from.q, to.q)), attacker(m.to, choice.next));
        break;
      }
      case move_rule::late_conjunction:
        out = hml::conj(conjuncts(m.to, choice.next));
        break;
      case move_rule::stable_conjunction:
        out = stable(m.to, choice.next);
        break;
      case move_rule::branching_conjunction:
        out = branching(m.to, choice.next);
        break;
      default:
        throw std::logic_error("unexpected move out of a delayed position");
    }
    chi_.emplace(key{i, e}, out);
    return out;
  }

  hml::conjunct conjunct(std::size_t i, const energy& e) {
    auto choice = pick({i}, e);
    const auto& m = graph_.moves(choice.from)[choice.edge];
    auto chi = delayed(m.to, choice.next);
    return m.rule == move_rule::negative_conjunct ? hml::neg(chi) : hml::pos(chi);
  }

 private:
  struct picked {
    std::size_t from;
    std::size_t edge;
    energy next;
  };

  // Deterministic choice among winning non-procrastination moves of the given attacker positions.
  picked pick(const std::vector<std::size_t>& from, const energy& e,
              const std::map<std::size_t, std::size_t>* distance = nullptr) {
    std::optional<picked> best;
    std::tuple<energy, std::size_t, int> best_rank;
    for (auto i : from) {
      const auto& moves = graph_.moves(i);
      for (std::size_t k = 0; k < moves.size(); ++k) {
        const auto& m = moves[k];
        if (m.rule == move_rule::procrastination) continue;
        auto next = apply(e, m.weight);
        if (!next || !table_.attacker_wins(m.to, *next)) continue;
        std::optional<energy> need;
        for (const auto& b : table_[m.to]) {
          auto inv = inverse(b, m.weight);
          if (leq(inv, e) && (!need || inv < *need)) need = inv;
        }
        std::tuple<energy, std::size_t, int> rank{*need, distance ? distance->at(i) : 0, rule_rank(m.rule)};
        if (!best || rank < best_rank) {
          best = picked{i, k, *next};
          best_rank = rank;
        }
      }
    }
    if (!best) throw std::logic_error("no winning move at an attacker-won position");
    return *best;
  }

  action_id observed_action(state_id p, state_id p2, const state_set& q, const state_set& q2) const {
    for (const auto& t : sys_.outgoing(p))
      if (t.action != tau && t.target == p2 && sys_.step(q, t.action) == q2) return t.action;
    throw std::logic_error("observation move without a matching transition");
  }

  std::vector<hml::conjunct> conjuncts(std::size_t i, const energy& e) {
    std::vector<hml::conjunct> out;
    for (const auto& m : graph_.moves(i)) out.push_back(conjunct(m.to, *apply(e, m.weight)));
    return out;
  }

  hml::delayed_ptr stable(std::size_t i, const energy& e) {
    std::vector<hml::conjunct> psis;
    for (const auto& m : graph_.moves(i))
      if (m.rule == move_rule::stable_answer) psis.push_back(conjunct(m.to, *apply(e, m.weight)));
    return hml::stable_conj(std::move(psis));
  }

  hml::delayed_ptr branching(std::size_t i, const energy& e) {
    const auto& pos = std::get<defender_branching_pos>(graph_.position(i));
    std::vector<hml::conjunct> psis;
    hml::formula_ptr head;
    for (const auto& m : graph_.moves(i)) {
      auto next = *apply(e, m.weight);
      if (m.rule == move_rule::branching_answer) {
        psis.push_back(conjunct(m.to, next));
      } else {
        // The accounting move is folded into the branch head.
        const auto& acc = graph_.moves(m.to).front();
        head = attacker(acc.to, *apply(next, acc.weight));
      }
    }
    return hml::branching_conj(sys_.action_label(pos.alpha), head, std::move(psis));
  }

  const transition_system& sys_;
  const game_graph& graph_;
  const budget_table& table_;
  std::map<key, hml::formula_ptr> phi_;
  std::map<key, hml::delayed_ptr> chi_;
};

}  // namespace

hml::formula_ptr extract(const transition_system& sys, const budget_table& table, const game_position& pos,
                         const energy& e) {
  const auto* ap = std::get_if<attacker_pos>(&pos);
  if (ap == nullptr) throw std::invalid_argument("extraction starts at an attacker position [p,Q]_a");
  auto i = table.graph().find(pos);
  if (!i || !table.attacker_wins(*i, e)) throw not_winning("budget is not attacker-winning at this position");

  // Work from the lexicographically least minimal budget below e; it is finite.
  std::optional<energy> start;
  for (const auto& b : table[*i])
    if (leq(b, e) && (!start || b < *start)) start = b;

  extractor ex(sys, table);
  auto f = ex.attacker(*i, *start);
  if (!hml::distinguishes(sys, *f, ap->p, ap->q)) throw std::logic_error("extracted formula does not distinguish");
  if (!leq(hml::price(*f), e)) throw std::logic_error("extracted formula exceeds the budget");
  return f;
}

std::vector<certificate> certificates(const transition_system& sys, const budget_table& table,
                                      const game_position& pos) {
  std::vector<certificate> out;
  auto i = table.graph().find(pos);
  if (!i) return out;
  for (const auto& b : table[*i]) out.push_back({b, extract(sys, table, pos, b)});
  return out;
}

}  // namespace spectroscopy
