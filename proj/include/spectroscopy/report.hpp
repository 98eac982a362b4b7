#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "spectroscopy/game.hpp"
#include "spectroscopy/hml.hpp"
#include "spectroscopy/solver.hpp"
#include "spectroscopy/spectrum.hpp"
#include "spectroscopy/strategy.hpp"

namespace spectroscopy::report {

[[nodiscard]] nlohmann::json to_json(const hml::formula& f);
[[nodiscard]] nlohmann::json to_json(const hml::delayed& d);
[[nodiscard]] nlohmann::json to_json(const hml::conjunct& c);
[[nodiscard]] nlohmann::json to_json(const antichain& a);
[[nodiscard]] nlohmann::json game_to_json(const transition_system& sys, const game_graph& g);
[[nodiscard]] nlohmann::json budgets_to_json(const transition_system& sys, const budget_table& t);

struct analysis_options {
  build_options build;
  bool formulas = false;
  bool keep_game = false;
  bool oracles = false;
};

struct oracle_verdicts {
  bool branching_bisim_sr;
  bool weak_bisim;
  bool stable_bisim;
  bool weak_sim_lr;
  bool weak_traces_lr;
};

struct pair_result {
  std::string left;
  std::string right;
  relation rel = relation::equivalence;
  antichain budgets_lr;
  antichain budgets_rl;
  std::vector<certificate> formulas_lr;
  std::vector<certificate> formulas_rl;
  verdict notions;
  frontier_result frontier;
  std::size_t positions = 0;
  std::size_t moves = 0;
  double seconds = 0;
  std::optional<nlohmann::json> game;
  std::optional<nlohmann::json> budgets;
  std::optional<oracle_verdicts> oracle;
};

/// Builds one game with both directions as roots, solves it and classifies the pair.
/// Throws position_limit_exceeded.
[[nodiscard]] pair_result analyze(const transition_system& sys, state_id left, state_id right, relation rel,
                                  const analysis_options& opts);

[[nodiscard]] nlohmann::json to_json(const pair_result& r);
[[nodiscard]] std::string to_text(const pair_result& r, bool with_formulas, bool with_stats);

}  // namespace spectroscopy::report
