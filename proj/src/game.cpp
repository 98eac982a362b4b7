#include "spectroscopy/game.hpp"

#include <algorithm>
#include <deque>

namespace spectroscopy {

namespace {

const update& w_zero() {
  static const update u;
  return u;
}
const update& w_observation() {
  static const update u = update::minus({modal_depth});
  return u;
}
const update& w_immediate() {
  static const update u = update::minus({immediate_conjunctions});
  return u;
}
const update& w_answer() {
  static const update u = update::minus({unstable_conjunctions});
  return u;
}
const update& w_positive() {
  static const update u = update().min_select(modal_depth, {modal_depth, positive_depth});
  return u;
}
const update& w_negative() {
  static const update u = update().min_select(modal_depth, {modal_depth, negative_depth}).decrement(negations);
  return u;
}
const update& w_stable_answer() {
  static const update u = update::minus({stable_conjunctions});
  return u;
}
const update& w_branch_answer() {
  static const update u = update::minus({branching_conjunctions, unstable_conjunctions});
  return u;
}
const update& w_branch_observation() {
  static const update u = update()
                              .min_select(modal_depth, {modal_depth, positive_depth})
                              .decrement(branching_conjunctions)
                              .decrement(unstable_conjunctions);
  return u;
}

std::size_t mix(std::size_t h, std::size_t v) { return (h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2))); }

/// Calls f on every subset of q in a fixed order, starting with the empty set.
template <class F>
void for_each_subset(const transition_system& sys, const state_set& q, F&& f) {
  const auto elems = q.elements();
  if (elems.size() >= 63) throw position_limit_exceeded(std::size_t{1} << 62);
  const std::uint64_t n = std::uint64_t{1} << elems.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    auto sub = sys.empty_set();
    for (std::size_t i = 0; i < elems.size(); ++i)
      if ((mask >> i) & 1U) sub.insert(elems[i]);
    f(sub);
  }
}

}  // namespace

bool is_defender(const game_position& g) {
  return std::holds_alternative<defender_conj_pos>(g) || std::holds_alternative<defender_stable_conj_pos>(g) ||
         std::holds_alternative<defender_branching_pos>(g);
}

std::size_t hash_position(const game_position& g) {
  std::size_t h = g.index();
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        h = mix(h, x.p);
        if constexpr (std::is_same_v<T, attacker_conjunct_pos>) {
          h = mix(h, x.q);
        } else if constexpr (std::is_same_v<T, defender_branching_pos>) {
          h = mix(h, x.alpha);
          h = mix(h, x.p_alpha);
          h = mix(h, x.q.hash());
          h = mix(h, x.q_alpha.hash());
        } else {
          h = mix(h, x.q.hash());
        }
      },
      g);
  return h;
}

std::string_view kind_name(const game_position& g) {
  static constexpr std::string_view names[] = {"attacker",          "attacker_delayed",      "attacker_conjunct",
                                               "attacker_branching", "defender_conjunction", "defender_stable_conjunction",
                                               "defender_branching"};
  return names[g.index()];
}

std::string render(const transition_system& sys, const game_position& g) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        const auto& p = sys.state_name(x.p);
        if constexpr (std::is_same_v<T, attacker_pos>) {
          return "[" + p + "," + render_set(sys, x.q) + "]_a";
        } else if constexpr (std::is_same_v<T, attacker_delayed_pos>) {
          return "[" + p + "," + render_set(sys, x.q) + "]^e_a";
        } else if constexpr (std::is_same_v<T, attacker_conjunct_pos>) {
          return "[" + p + "," + sys.state_name(x.q) + "]^and_a";
        } else if constexpr (std::is_same_v<T, attacker_branching_pos>) {
          return "[" + p + "," + render_set(sys, x.q) + "]^eta_a";
        } else if constexpr (std::is_same_v<T, defender_conj_pos>) {
          return "(" + p + "," + render_set(sys, x.q) + ")_d";
        } else if constexpr (std::is_same_v<T, defender_stable_conj_pos>) {
          return "(" + p + "," + render_set(sys, x.q) + ")^s_d";
        } else {
          return "(" + p + "," + sys.action_label(x.alpha) + "," + sys.state_name(x.p_alpha) + "," +
                 render_set(sys, x.q) + "," + render_set(sys, x.q_alpha) + ")^eta_d";
        }
      },
      g);
}

std::string_view rule_name(move_rule r) {
  static constexpr std::string_view names[] = {
      "delay",            "procrastination",   "observation",      "finishing",
      "immediate_conj",   "late_conj",         "conj_answer",      "positive_conjunct",
      "negative_conjunct", "stable_conj",      "stable_answer",    "stable_finishing",
      "branching_conj",   "branching_answer",  "branching_observation", "branching_accounting"};
  return names[static_cast<std::size_t>(r)];
}

std::vector<move> successors(const transition_system& sys, const game_position& g, game_variant variant) {
  std::vector<move> out;
  auto emit = [&](game_position to, const update& w, move_rule r) {
    for (const auto& m : out)
      if (m.to == to && m.weight == w) return;
    out.push_back(move{g, std::move(to), w, r});
  };
  const bool stability = variant != game_variant::delay;
  const bool branching = variant == game_variant::full;

  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, attacker_pos>) {
          emit(attacker_delayed_pos{x.p, sys.weak_closure(x.q)}, w_zero(), move_rule::delay);
          if (x.q.empty())
            emit(defender_conj_pos{x.p, x.q}, w_zero(), move_rule::finishing);
          else
            emit(defender_conj_pos{x.p, x.q}, w_immediate(), move_rule::immediate_conjunction);
        } else if constexpr (std::is_same_v<T, attacker_delayed_pos>) {
          for (const auto& t : sys.outgoing(x.p))
            if (t.action == tau && t.target != x.p)
              emit(attacker_delayed_pos{t.target, x.q}, w_zero(), move_rule::procrastination);
          for (const auto& t : sys.outgoing(x.p))
            if (t.action != tau)
              emit(attacker_pos{t.target, sys.step(x.q, t.action)}, w_observation(), move_rule::observation);
          emit(defender_conj_pos{x.p, x.q}, w_zero(), move_rule::late_conjunction);
          if (stability && sys.is_stable(x.p))
            emit(defender_stable_conj_pos{x.p, x.q & sys.stable_states()}, w_zero(), move_rule::stable_conjunction);
          if (branching) {
            std::vector<std::pair<action_id, state_id>> steps;
            steps.emplace_back(tau, x.p);
            for (const auto& t : sys.outgoing(x.p)) steps.emplace_back(t.action, t.target);
            std::sort(steps.begin(), steps.end());
            steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
            for (const auto& [alpha, target] : steps)
              for_each_subset(sys, x.q, [&](const state_set& q_alpha) {
                emit(defender_branching_pos{x.p, alpha, target, x.q - q_alpha, q_alpha}, w_zero(),
                     move_rule::branching_conjunction);
              });
          }
        } else if constexpr (std::is_same_v<T, attacker_conjunct_pos>) {
          emit(attacker_delayed_pos{x.p, sys.weak_closure(x.q)}, w_positive(), move_rule::positive_conjunct);
          if (x.p != x.q)
            emit(attacker_delayed_pos{x.q, sys.weak_closure(x.p)}, w_negative(), move_rule::negative_conjunct);
        } else if constexpr (std::is_same_v<T, attacker_branching_pos>) {
          emit(attacker_pos{x.p, x.q}, w_observation(), move_rule::branching_accounting);
        } else if constexpr (std::is_same_v<T, defender_conj_pos>) {
          for (auto q : x.q) emit(attacker_conjunct_pos{x.p, q}, w_answer(), move_rule::conjunction_answer);
        } else if constexpr (std::is_same_v<T, defender_stable_conj_pos>) {
          for (auto q : x.q) emit(attacker_conjunct_pos{x.p, q}, w_stable_answer(), move_rule::stable_answer);
          if (x.q.empty()) emit(defender_conj_pos{x.p, x.q}, w_stable_answer(), move_rule::stable_finishing);
        } else {
          for (auto q : x.q) emit(attacker_conjunct_pos{x.p, q}, w_branch_answer(), move_rule::branching_answer);
          emit(attacker_branching_pos{x.p_alpha, sys.optional_step(x.q_alpha, x.alpha)}, w_branch_observation(),
               move_rule::branching_observation);
        }
      },
      g);
  return out;
}

std::size_t game_graph::num_moves() const {
  std::size_t n = 0;
  for (const auto& o : out_) n += o.size();
  return n;
}

std::optional<std::size_t> game_graph::find(const game_position& g) const {
  if (auto it = index_.find(g); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t game_graph::index_of(const game_position& g) const {
  if (auto i = find(g)) return *i;
  throw std::out_of_range("position not in game graph");
}

class game_builder {
 public:
  game_builder(const transition_system& sys, const build_options& opts) : sys_(sys), opts_(opts) {
    graph_.variant_ = opts.variant;
  }

  std::size_t intern(const game_position& g) {
    if (auto it = graph_.index_.find(g); it != graph_.index_.end()) return it->second;
    if (graph_.positions_.size() >= opts_.max_positions) throw position_limit_exceeded(opts_.max_positions);
    auto i = graph_.positions_.size();
    graph_.positions_.push_back(g);
    graph_.defender_.push_back(is_defender(g));
    graph_.index_.emplace(g, i);
    graph_.out_.emplace_back();
    graph_.in_.emplace_back();
    todo_.push_back(i);
    return i;
  }

  void add_root(const game_position& g) {
    auto i = intern(g);
    if (std::find(graph_.roots_.begin(), graph_.roots_.end(), i) == graph_.roots_.end()) graph_.roots_.push_back(i);
  }

  game_graph run() && {
    while (!todo_.empty()) {
      auto i = todo_.front();
      todo_.pop_front();
      guard_branching(graph_.positions_[i]);
      auto ms = successors(sys_, graph_.positions_[i], opts_.variant);
      for (auto& m : ms) {
        auto j = intern(m.to);
        graph_.out_[i].push_back(game_edge{j, m.weight, m.rule});
        auto& in = graph_.in_[j];
        if (in.empty() || in.back() != i) in.push_back(i);
      }
    }
    return std::move(graph_);
  }

 private:
  // Refuse before enumerating 2^|Q| subsets that could never fit under the cap.
  void guard_branching(const game_position& g) const {
    if (opts_.variant != game_variant::full) return;
    const auto* d = std::get_if<attacker_delayed_pos>(&g);
    if (d == nullptr) return;
    const auto k = d->q.count();
    if (k >= 63 || (std::size_t{1} << k) > opts_.max_positions) throw position_limit_exceeded(opts_.max_positions);
  }

  const transition_system& sys_;
  build_options opts_;
  game_graph graph_;
  std::deque<std::size_t> todo_;
};

game_graph build_from(const transition_system& sys, const std::vector<game_position>& roots, const build_options& opts) {
  game_builder b(sys, opts);
  for (const auto& r : roots) b.add_root(r);
  return std::move(b).run();
}

game_graph build(const transition_system& sys, const std::vector<std::pair<state_id, state_id>>& roots,
                 const build_options& opts) {
  std::vector<game_position> rs;
  rs.reserve(roots.size());
  for (const auto& [p, q] : roots) rs.emplace_back(attacker_pos{p, sys.singleton(q)});
  return build_from(sys, rs, opts);
}

}  // namespace spectroscopy
