#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "spectroscopy/state_set.hpp"

namespace spectroscopy {

using action_id = std::uint32_t;

/// The silent action always has id 0 and label "tau".
inline constexpr action_id tau = 0;
inline constexpr std::string_view tau_label = "tau";

struct transition {
  state_id source;
  action_id action;
  state_id target;
  friend auto operator<=>(const transition&, const transition&) = default;
};

/// Raised for malformed input with a 1-based source location (column 0 if unknown).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string loc = "line " + std::to_string(line);
    if (column != 0) loc += ", column " + std::to_string(column);
    return loc + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// Immutable finite labelled transition system with a distinguished silent action.
/// Transitions are deduplicated and sorted by (source, action, target).
class transition_system {
 public:
  class builder {
   public:
    builder();
    state_id add_state(std::string name);
    /// Returns the existing id if a state of that name was added before.
    state_id state(const std::string& name);
    /// "tau" maps to the silent action; "e" and "ε" are rejected.
    action_id action(const std::string& label);
    void add_transition(state_id source, action_id action, state_id target);
    void add_transition(const std::string& source, const std::string& label, const std::string& target);
    [[nodiscard]] transition_system build() &&;

   private:
    std::vector<std::string> states_;
    std::unordered_map<std::string, state_id> state_index_;
    std::vector<std::string> actions_;
    std::unordered_map<std::string, action_id> action_index_;
    std::vector<transition> transitions_;
  };

  transition_system() = default;

  [[nodiscard]] std::size_t num_states() const { return state_names_.size(); }
  [[nodiscard]] std::size_t num_actions() const { return action_labels_.size(); }
  [[nodiscard]] const std::string& state_name(state_id s) const { return state_names_[s]; }
  [[nodiscard]] const std::string& action_label(action_id a) const { return action_labels_[a]; }
  [[nodiscard]] std::optional<state_id> find_state(std::string_view name) const;
  [[nodiscard]] std::optional<action_id> find_action(std::string_view label) const;

  [[nodiscard]] std::span<const transition> transitions() const { return transitions_; }
  /// Outgoing transitions of s, sorted by (action, target).
  [[nodiscard]] std::span<const transition> outgoing(state_id s) const {
    return std::span<const transition>(transitions_).subspan(offsets_[s], offsets_[s + 1] - offsets_[s]);
  }

  [[nodiscard]] bool is_stable(state_id s) const { return !has_tau_[s]; }
  [[nodiscard]] state_set stable_states() const;

  [[nodiscard]] state_set empty_set() const { return state_set(num_states()); }
  [[nodiscard]] state_set all_states() const { return empty_set().complement(); }
  [[nodiscard]] state_set singleton(state_id s) const;

  /// Reflexive-transitive tau-closure.
  [[nodiscard]] const state_set& weak_closure(state_id s) const { return closure_[s]; }
  [[nodiscard]] state_set weak_closure(const state_set& q) const;
  /// Targets of a-transitions from q (no closure).
  [[nodiscard]] state_set step(const state_set& q, action_id a) const;
  /// step(q, a), plus q itself when a is tau.
  [[nodiscard]] state_set optional_step(const state_set& q, action_id a) const;

  /// States with an a-transition into x.
  [[nodiscard]] state_set pre(const state_set& x, action_id a) const;
  /// States that reach x by zero or more tau-steps.
  [[nodiscard]] state_set weak_pre_closure(const state_set& x) const;

 private:
  std::vector<std::string> state_names_;
  std::unordered_map<std::string, state_id> state_index_;
  std::vector<std::string> action_labels_;
  std::unordered_map<std::string, action_id> action_index_;
  std::vector<transition> transitions_;
  std::vector<std::size_t> offsets_;
  std::vector<bool> has_tau_;
  std::vector<state_set> closure_;
  std::vector<std::vector<transition>> incoming_;
};

/// Parses lines `source<TAB>action<TAB>target` (comma also accepted as separator).
/// Blank lines and lines starting with '#' are skipped. States are numbered by first appearance.
[[nodiscard]] transition_system parse_transition_list(std::string_view text);

/// Renders a set as `{a,b}` using state names.
[[nodiscard]] std::string render_set(const transition_system& sys, const state_set& q);

}  // namespace spectroscopy
