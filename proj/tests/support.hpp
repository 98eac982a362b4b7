#pragma once

#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spectroscopy/ccs.hpp"
#include "spectroscopy/lts.hpp"

namespace support {

using namespace spectroscopy;

// The four processes of the introductory example: visible idling and tau-idling,
// each with the early-choice (e) and late-choice (l) variant.
inline constexpr std::string_view idling = R"(
Pe = op.Ae + op.Be
Ae = idle.Ae + a.0
Be = idle.Be + b.0
Pl = op.Al + op.Bl
Al = a.0 + idle.Bl + idle.Al
Bl = b.0 + idle.Al + idle.Bl

PeTau = op.AeTau + op.BeTau
AeTau = tau.AeTau + a.0
BeTau = tau.BeTau + b.0
PlTau = op.AlTau + op.BlTau
AlTau = a.0 + tau.BlTau + tau.AlTau
BlTau = b.0 + tau.AlTau + tau.BlTau

@compare Pe, Pl
@compare PeTau, PlTau
)";

// a + tau.b + b against a + tau.b.
inline constexpr std::string_view branching_example = R"(
P = a.0 + tau.b.0 + b.0
Q = a.0 + tau.b.0
@compare P, Q
)";

struct named {
  transition_system sys;
  std::map<std::string, state_id> at;
};

inline named from_ccs(std::string_view src) {
  auto c = ccs::compile(ccs::parse(src));
  return {std::move(c.system), std::move(c.states)};
}

/// At most `max_states` states, actions from {tau, a, b}, at most `max_transitions` transitions.
inline transition_system random_system(std::mt19937& rng, std::size_t max_states = 5,
                                       std::size_t max_transitions = 10) {
  std::uniform_int_distribution<std::size_t> n_states(1, max_states);
  std::uniform_int_distribution<std::size_t> n_trans(0, max_transitions);
  const auto n = n_states(rng);
  const auto m = n_trans(rng);
  transition_system::builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_state("s" + std::to_string(i));
  const action_id acts[] = {tau, b.action("a"), b.action("b")};
  std::uniform_int_distribution<std::size_t> pick_state(0, n - 1), pick_action(0, 2);
  for (std::size_t i = 0; i < m; ++i)
    b.add_transition(static_cast<state_id>(pick_state(rng)), acts[pick_action(rng)],
                     static_cast<state_id>(pick_state(rng)));
  return std::move(b).build();
}

/// The fixed random corpus shared by the property suites and the acceptance run.
inline std::vector<transition_system> corpus(std::size_t count = 200, unsigned seed = 2024) {
  std::mt19937 rng(seed);
  std::vector<transition_system> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_system(rng));
  return out;
}

}  // namespace support
