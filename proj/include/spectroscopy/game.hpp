#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "spectroscopy/energy.hpp"
#include "spectroscopy/lts.hpp"

namespace spectroscopy {

/// [p,Q]_a
struct attacker_pos {
  state_id p;
  state_set q;
  friend bool operator==(const attacker_pos&, const attacker_pos&) = default;
};
/// [p,Q]^ε_a
struct attacker_delayed_pos {
  state_id p;
  state_set q;
  friend bool operator==(const attacker_delayed_pos&, const attacker_delayed_pos&) = default;
};
/// [p,q]^∧_a
struct attacker_conjunct_pos {
  state_id p;
  state_id q;
  friend bool operator==(const attacker_conjunct_pos&, const attacker_conjunct_pos&) = default;
};
/// [p,Q]^η_a
struct attacker_branching_pos {
  state_id p;
  state_set q;
  friend bool operator==(const attacker_branching_pos&, const attacker_branching_pos&) = default;
};
/// (p,Q)_d
struct defender_conj_pos {
  state_id p;
  state_set q;
  friend bool operator==(const defender_conj_pos&, const defender_conj_pos&) = default;
};
/// (p,Q)^s_d
struct defender_stable_conj_pos {
  state_id p;
  state_set q;
  friend bool operator==(const defender_stable_conj_pos&, const defender_stable_conj_pos&) = default;
};
/// (p,α,p',Q,Qα)^η_d; `q` holds the answers, `q_alpha` the states that must follow α.
struct defender_branching_pos {
  state_id p;
  action_id alpha;
  state_id p_alpha;
  state_set q;
  state_set q_alpha;
  friend bool operator==(const defender_branching_pos&, const defender_branching_pos&) = default;
};

using game_position = std::variant<attacker_pos, attacker_delayed_pos, attacker_conjunct_pos, attacker_branching_pos,
                                   defender_conj_pos, defender_stable_conj_pos, defender_branching_pos>;

[[nodiscard]] bool is_defender(const game_position& g);
[[nodiscard]] std::size_t hash_position(const game_position& g);
[[nodiscard]] std::string render(const transition_system& sys, const game_position& g);
/// Short kind tag: attacker, attacker_delayed, ... defender_branching.
[[nodiscard]] std::string_view kind_name(const game_position& g);

struct position_hash {
  std::size_t operator()(const game_position& g) const { return hash_position(g); }
};

enum class move_rule : std::uint8_t {
  delay,
  procrastination,
  observation,
  finishing,
  immediate_conjunction,
  late_conjunction,
  conjunction_answer,
  positive_conjunct,
  negative_conjunct,
  stable_conjunction,
  stable_answer,
  stable_finishing,
  branching_conjunction,
  branching_answer,
  branching_observation,
  branching_accounting,
};
[[nodiscard]] std::string_view rule_name(move_rule r);

struct move {
  game_position from;
  game_position to;
  update weight;
  move_rule rule;
};

/// Which move families exist: the delay game only, plus stability rules, or everything.
enum class game_variant { delay, stability, full };

/// All moves out of g, deduplicated. Deterministic order.
[[nodiscard]] std::vector<move> successors(const transition_system& sys, const game_position& g,
                                           game_variant variant = game_variant::full);

class position_limit_exceeded : public std::runtime_error {
 public:
  explicit position_limit_exceeded(std::size_t limit)
      : std::runtime_error("game exceeds the position limit of " + std::to_string(limit)), limit_(limit) {}
  [[nodiscard]] std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

struct game_edge {
  std::size_t to;
  update weight;
  move_rule rule;
};

/// Finite game reachable from some roots, with positions indexed densely.
class game_graph {
 public:
  [[nodiscard]] std::size_t size() const { return positions_.size(); }
  [[nodiscard]] std::size_t num_moves() const;
  [[nodiscard]] const game_position& position(std::size_t i) const { return positions_[i]; }
  [[nodiscard]] bool is_defender(std::size_t i) const { return defender_[i]; }
  [[nodiscard]] const std::vector<game_edge>& moves(std::size_t i) const { return out_[i]; }
  [[nodiscard]] const std::vector<std::size_t>& predecessors(std::size_t i) const { return in_[i]; }
  [[nodiscard]] std::optional<std::size_t> find(const game_position& g) const;
  [[nodiscard]] std::size_t index_of(const game_position& g) const;
  [[nodiscard]] const std::vector<std::size_t>& roots() const { return roots_; }
  [[nodiscard]] game_variant variant() const { return variant_; }

 private:
  friend class game_builder;
  std::vector<game_position> positions_;
  std::vector<bool> defender_;
  std::unordered_map<game_position, std::size_t, position_hash> index_;
  std::vector<std::vector<game_edge>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::size_t> roots_;
  game_variant variant_ = game_variant::full;
};

struct build_options {
  std::size_t max_positions = 1'000'000;
  game_variant variant = game_variant::full;
};

/// Explores everything reachable from [p,{q}]_a for each (p,q) in `roots`.
[[nodiscard]] game_graph build(const transition_system& sys, const std::vector<std::pair<state_id, state_id>>& roots,
                               const build_options& opts = {});
/// Explores from the given positions.
[[nodiscard]] game_graph build_from(const transition_system& sys, const std::vector<game_position>& roots,
                                    const build_options& opts = {});
[[nodiscard]] inline game_graph build(const transition_system& sys, state_id p, state_id q,
                                      const build_options& opts = {}) {
  return build(sys, {{p, q}}, opts);
}

}  // namespace spectroscopy
