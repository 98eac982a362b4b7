#include "spectroscopy/lts.hpp"

#include <algorithm>
#include <sstream>

namespace spectroscopy {

transition_system::builder::builder() {
  actions_.emplace_back(tau_label);
  action_index_.emplace(std::string(tau_label), tau);
}

state_id transition_system::builder::add_state(std::string name) {
  if (state_index_.count(name) != 0) throw std::invalid_argument("duplicate state name: " + name);
  auto id = static_cast<state_id>(states_.size());
  state_index_.emplace(name, id);
  states_.push_back(std::move(name));
  return id;
}

state_id transition_system::builder::state(const std::string& name) {
  if (auto it = state_index_.find(name); it != state_index_.end()) return it->second;
  return add_state(name);
}

action_id transition_system::builder::action(const std::string& label) {
  if (auto it = action_index_.find(label); it != action_index_.end()) return it->second;
  if (label.empty() || label == "e" || label == "ε")
    throw std::invalid_argument("reserved or empty action label: '" + label + "'");
  auto id = static_cast<action_id>(actions_.size());
  action_index_.emplace(label, id);
  actions_.push_back(label);
  return id;
}

void transition_system::builder::add_transition(state_id source, action_id action, state_id target) {
  if (source >= states_.size() || target >= states_.size() || action >= actions_.size())
    throw std::out_of_range("transition refers to an unknown state or action");
  transitions_.push_back({source, action, target});
}

void transition_system::builder::add_transition(const std::string& source, const std::string& label,
                                                const std::string& target) {
  auto s = state(source);
  auto a = action(label);
  auto t = state(target);
  add_transition(s, a, t);
}

transition_system transition_system::builder::build() && {
  transition_system sys;
  sys.state_names_ = std::move(states_);
  sys.state_index_ = std::move(state_index_);
  sys.action_labels_ = std::move(actions_);
  sys.action_index_ = std::move(action_index_);
  sys.transitions_ = std::move(transitions_);
  std::sort(sys.transitions_.begin(), sys.transitions_.end());
  sys.transitions_.erase(std::unique(sys.transitions_.begin(), sys.transitions_.end()), sys.transitions_.end());

  const auto n = sys.state_names_.size();
  sys.offsets_.assign(n + 1, 0);
  sys.has_tau_.assign(n, false);
  sys.incoming_.assign(n, {});
  for (const auto& t : sys.transitions_) {
    ++sys.offsets_[t.source + 1];
    if (t.action == tau) sys.has_tau_[t.source] = true;
    sys.incoming_[t.target].push_back(t);
  }
  for (std::size_t i = 0; i < n; ++i) sys.offsets_[i + 1] += sys.offsets_[i];

  sys.closure_.reserve(n);
  for (state_id s = 0; s < n; ++s) {
    state_set seen(n);
    std::vector<state_id> todo{s};
    seen.insert(s);
    while (!todo.empty()) {
      auto p = todo.back();
      todo.pop_back();
      for (const auto& t : sys.outgoing(p)) {
        if (t.action != tau) continue;
        if (!seen.contains(t.target)) {
          seen.insert(t.target);
          todo.push_back(t.target);
        }
      }
    }
    sys.closure_.push_back(std::move(seen));
  }
  return sys;
}

std::optional<state_id> transition_system::find_state(std::string_view name) const {
  if (auto it = state_index_.find(std::string(name)); it != state_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<action_id> transition_system::find_action(std::string_view label) const {
  if (auto it = action_index_.find(std::string(label)); it != action_index_.end()) return it->second;
  return std::nullopt;
}

state_set transition_system::stable_states() const {
  auto out = empty_set();
  for (state_id s = 0; s < num_states(); ++s)
    if (is_stable(s)) out.insert(s);
  return out;
}

state_set transition_system::singleton(state_id s) const {
  auto out = empty_set();
  out.insert(s);
  return out;
}

state_set transition_system::weak_closure(const state_set& q) const {
  auto out = empty_set();
  for (auto s : q) out |= closure_[s];
  return out;
}

state_set transition_system::step(const state_set& q, action_id a) const {
  auto out = empty_set();
  for (auto s : q)
    for (const auto& t : outgoing(s))
      if (t.action == a) out.insert(t.target);
  return out;
}

state_set transition_system::optional_step(const state_set& q, action_id a) const {
  auto out = step(q, a);
  if (a == tau) out |= q;
  return out;
}

state_set transition_system::pre(const state_set& x, action_id a) const {
  auto out = empty_set();
  for (auto s : x)
    for (const auto& t : incoming_[s])
      if (t.action == a) out.insert(t.source);
  return out;
}

state_set transition_system::weak_pre_closure(const state_set& x) const {
  auto out = x;
  std::vector<state_id> todo = x.elements();
  while (!todo.empty()) {
    auto s = todo.back();
    todo.pop_back();
    for (const auto& t : incoming_[s]) {
      if (t.action == tau && !out.contains(t.source)) {
        out.insert(t.source);
        todo.push_back(t.source);
      }
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

transition_system parse_transition_list(std::string_view text) {
  transition_system::builder b;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      if (i == body.size() || body[i] == '\t' || body[i] == ',') {
        fields.push_back(trim(body.substr(start, i - start)));
        start = i + 1;
      }
    }
    if (fields.size() != 3) throw parse_error("expected 'source<TAB>action<TAB>target'", line_no, 0);
    for (auto f : fields)
      if (f.empty()) throw parse_error("empty field", line_no, 0);
    try {
      b.add_transition(std::string(fields[0]), std::string(fields[1]), std::string(fields[2]));
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), line_no, 0);
    }
  }
  return std::move(b).build();
}

std::string render_set(const transition_system& sys, const state_set& q) {
  std::string out = "{";
  bool first = true;
  for (auto s : q) {
    if (!first) out += ',';
    out += sys.state_name(s);
    first = false;
  }
  return out + "}";
}

}  // namespace spectroscopy
