#pragma once

// Corpus-wide checks shared by the property tests and the acceptance run.

#include <functional>
#include <string>
#include <vector>

#include "explicit_game.hpp"
#include "spectroscopy/energy.hpp"
#include "spectroscopy/game.hpp"
#include "spectroscopy/hml.hpp"
#include "spectroscopy/oracles.hpp"
#include "spectroscopy/solver.hpp"
#include "spectroscopy/spectrum.hpp"
#include "spectroscopy/strategy.hpp"

namespace support {

using namespace spectroscopy;

struct tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what();
  }
  tally& operator+=(const tally& o) {
    if (failed == 0 && o.failed != 0) first_failure = o.first_failure;
    checked += o.checked;
    failed += o.failed;
    return *this;
  }
  [[nodiscard]] bool ok() const { return failed == 0 && checked > 0; }
};

/// Game over all ordered pairs of one system.
struct all_pairs {
  const transition_system& sys;
  game_graph graph;
  budget_table table;

  explicit all_pairs(const transition_system& s)
      : sys(s), graph(build(s, pairs(s))), table(solve(graph)) {}

  [[nodiscard]] const antichain& budgets(state_id p, state_id q) const {
    return table.at(attacker_pos{p, sys.singleton(q)});
  }
  [[nodiscard]] bool preorder(state_id p, state_id q, notion n) const {
    return !budgets(p, q).dominates(info(n).coordinate);
  }

 private:
  static std::vector<std::pair<state_id, state_id>> pairs(const transition_system& s) {
    std::vector<std::pair<state_id, state_id>> out;
    for (state_id p = 0; p < s.num_states(); ++p)
      for (state_id q = 0; q < s.num_states(); ++q) out.emplace_back(p, q);
    return out;
  }
};

inline std::string pair_text(const transition_system& sys, state_id p, state_id q) {
  return sys.state_name(p) + " vs " + sys.state_name(q);
}

/// Game verdicts at BBsr, B, SB, T, 1S against the relational oracles.
inline tally oracle_agreement(const all_pairs& g) {
  tally t;
  const auto& sys = g.sys;
  for (state_id p = 0; p < sys.num_states(); ++p)
    for (state_id q = 0; q < sys.num_states(); ++q) {
      auto both = [&](notion n) { return g.preorder(p, q, n) && g.preorder(q, p, n); };
      auto at = [&](const char* what) { return [&sys, p, q, what] { return std::string(what) + ": " + pair_text(sys, p, q); }; };
      t.expect(g.preorder(p, q, notion::branching_bisim_sr) == oracles::branching_bisim_sr(sys, p, q), at("BBsr"));
      t.expect(both(notion::weak_bisim) == oracles::weak_bisim(sys, p, q), at("B"));
      t.expect(both(notion::stable_bisim) == oracles::stable_bisim(sys, p, q), at("SB"));
      t.expect(g.preorder(p, q, notion::weak_traces) == oracles::weak_trace_preorder(sys, p, q), at("T"));
      t.expect(g.preorder(p, q, notion::weak_sim) == oracles::weak_sim_preorder(sys, p, q), at("1S"));
    }
  return t;
}

/// Game verdicts for every notion against the price-bounded sublogic saturation.
inline tally sublogic_agreement(const all_pairs& g) {
  tally t;
  const auto& sys = g.sys;
  for (const auto& n : notions()) {
    oracles::sublogic logic(sys, n.coordinate);
    for (state_id p = 0; p < sys.num_states(); ++p)
      for (state_id q = 0; q < sys.num_states(); ++q)
        t.expect(g.preorder(p, q, n.id) == logic.preorder(p, q),
                 [&] { return std::string(n.name) + ": " + pair_text(sys, p, q); });
  }
  return t;
}

/// Every minimal budget at every attacker position yields a formula that distinguishes,
/// fits the budget, and whose price is itself winning.
inline tally certificate_soundness(const all_pairs& g) {
  tally t;
  const auto& sys = g.sys;
  for (std::size_t i = 0; i < g.graph.size(); ++i) {
    const auto* pos = std::get_if<attacker_pos>(&g.graph.position(i));
    if (pos == nullptr) continue;
    auto where = [&] { return render(sys, g.graph.position(i)); };
    for (const auto& budget : g.table[i]) {
      hml::formula_ptr f;
      try {
        f = extract(sys, g.table, *pos, budget);
      } catch (const std::exception& e) {
        t.expect(false, [&] { return where() + ": " + e.what(); });
        continue;
      }
      auto pr = hml::price(*f);
      t.expect(hml::distinguishes(sys, *f, pos->p, pos->q), [&] { return where() + " " + hml::render(*f); });
      t.expect(leq(pr, budget), [&] { return where() + " price " + to_string(pr); });
      t.expect(g.table.attacker_wins(i, pr), [&] { return where() + " price not winning"; });
    }
  }
  return t;
}

/// attacker_wins is monotone and each minimal budget is tight in every finite component.
/// Monotonicity is probed on the unit steps above each minimal budget and below the
/// ceilings of all notions; tightness is cross-checked on the explicit product game.
inline tally closure_and_minimality(const all_pairs& g, bool explicit_check) {
  tally t;
  for (std::size_t i = 0; i < g.graph.size(); ++i) {
    if (g.graph.is_defender(i)) continue;
    auto where = [&] { return render(g.sys, g.graph.position(i)); };
    const auto& bs = g.table[i];
    for (const auto& m : bs) {
      t.expect(g.table.attacker_wins(i, m), [&] { return where() + " minimal budget loses"; });
      for (std::size_t d = 0; d < energy_dims; ++d) {
        auto up = m;
        if (up[d] != infinity) ++up[d];
        t.expect(g.table.attacker_wins(i, up), [&] { return where() + " not upward closed"; });
        if (m[d] == 0 || m[d] == infinity) continue;
        auto down = m;
        --down[d];
        t.expect(!g.table.attacker_wins(i, down), [&] { return where() + " not minimal " + to_string(m); });
        if (explicit_check)
          t.expect(!explicit_attacker_wins(g.graph, i, down), [&] { return where() + " explicit game wins below"; });
      }
      if (explicit_check)
        t.expect(explicit_attacker_wins(g.graph, i, m), [&] { return where() + " explicit game loses at minimum"; });
    }
    for (const auto& a : notions())
      for (const auto& b : notions())
        if (leq(a.coordinate, b.coordinate) && g.table.attacker_wins(i, a.coordinate))
          t.expect(g.table.attacker_wins(i, b.coordinate), [&] { return where() + " not monotone"; });
  }
  return t;
}

}  // namespace support
