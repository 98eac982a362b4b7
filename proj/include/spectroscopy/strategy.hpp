#pragma once

#include <stdexcept>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/game.hpp"
#include "spectroscopy/hml.hpp"
#include "spectroscopy/solver.hpp"

namespace spectroscopy {

/// Thrown when a budget is not attacker-winning at the requested position.
class not_winning : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Distinguishing formula for an attacker position [p,Q]_a read off a winning
/// strategy for budget e. The result distinguishes p from Q and has price <= e;
/// both are re-checked before returning (std::logic_error on failure).
[[nodiscard]] hml::formula_ptr extract(const transition_system& sys, const budget_table& table,
                                       const game_position& pos, const energy& e);

struct certificate {
  energy budget;
  hml::formula_ptr formula;
};

/// One distinguishing formula per minimal budget of pos, in the table's order.
[[nodiscard]] std::vector<certificate> certificates(const transition_system& sys, const budget_table& table,
                                                    const game_position& pos);

}  // namespace spectroscopy
