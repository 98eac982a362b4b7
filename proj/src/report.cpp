#include "spectroscopy/report.hpp"

#include <chrono>
#include <sstream>

#include "spectroscopy/oracles.hpp"

namespace spectroscopy::report {

using nlohmann::json;

json to_json(const hml::formula& f) {
  if (const auto* d = std::get_if<hml::delayed_observation>(&f.node))
    return {{"kind", "delayed_observation"}, {"inner", to_json(*d->inner)}};
  json cs = json::array();
  for (const auto& c : std::get<hml::immediate_conjunction>(f.node).conjuncts) cs.push_back(to_json(c));
  return {{"kind", "immediate_conjunction"}, {"conjuncts", cs}};
}

json to_json(const hml::delayed& d) {
  if (const auto* o = std::get_if<hml::observation>(&d.node))
    return {{"kind", "observation"}, {"action", o->action}, {"continuation", to_json(*o->continuation)}};
  const auto& c = std::get<hml::conjunction>(d.node);
  json cs = json::array();
  for (const auto& x : c.conjuncts) cs.push_back(to_json(x));
  static constexpr const char* flavors[] = {"standard", "stable", "branching"};
  json out = {{"kind", "conjunction"}, {"flavor", flavors[static_cast<int>(c.flavor)]}, {"conjuncts", cs}};
  if (c.flavor == hml::conj_flavor::branching)
    out["branch"] = {{"action", c.branch_action}, {"continuation", to_json(*c.branch_continuation)}};
  return out;
}

json to_json(const hml::conjunct& c) { return {{"negated", c.negated}, {"inner", to_json(*c.inner)}}; }

json to_json(const antichain& a) {
  json out = json::array();
  for (const auto& e : a) out.push_back(to_string(e));
  return out;
}

json game_to_json(const transition_system& sys, const game_graph& g) {
  json positions = json::array();
  json moves = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    positions.push_back({{"id", i}, {"kind", kind_name(g.position(i))}, {"label", render(sys, g.position(i))}});
    for (const auto& m : g.moves(i))
      moves.push_back({{"from", i}, {"to", m.to}, {"rule", rule_name(m.rule)}, {"update", to_string(m.weight)}});
  }
  return {{"positions", positions}, {"moves", moves}, {"roots", g.roots()}};
}

json budgets_to_json(const transition_system& sys, const budget_table& t) {
  json out = json::object();
  for (std::size_t i = 0; i < t.size(); ++i) out[render(sys, t.graph().position(i))] = to_json(t[i]);
  return out;
}

pair_result analyze(const transition_system& sys, state_id left, state_id right, relation rel,
                    const analysis_options& opts) {
  const auto start = std::chrono::steady_clock::now();
  pair_result r;
  r.left = sys.state_name(left);
  r.right = sys.state_name(right);
  r.rel = rel;

  const game_position lr = attacker_pos{left, sys.singleton(right)};
  const game_position rl = attacker_pos{right, sys.singleton(left)};
  auto graph = build_from(sys, {lr, rl}, opts.build);
  auto table = solve(graph);
  r.budgets_lr = table.at(lr);
  r.budgets_rl = table.at(rl);
  r.notions = classify(r.budgets_lr, r.budgets_rl);
  r.frontier = frontier(r.notions, rel);
  if (opts.formulas) {
    r.formulas_lr = certificates(sys, table, lr);
    r.formulas_rl = certificates(sys, table, rl);
  }
  r.positions = graph.size();
  r.moves = graph.num_moves();
  if (opts.keep_game) {
    r.game = game_to_json(sys, graph);
    r.budgets = budgets_to_json(sys, table);
  }
  if (opts.oracles) {
    r.oracle = oracle_verdicts{oracles::branching_bisim_sr(sys, left, right), oracles::weak_bisim(sys, left, right),
                               oracles::stable_bisim(sys, left, right), oracles::weak_sim_preorder(sys, left, right),
                               oracles::weak_trace_preorder(sys, left, right)};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

json certificates_json(const std::vector<certificate>& cs, const std::string& from, const std::string& to) {
  json out = json::array();
  for (const auto& c : cs)
    out.push_back({{"from", from},
                   {"to", to},
                   {"budget", to_string(c.budget)},
                   {"price", to_string(hml::price(*c.formula))},
                   {"formula", hml::render(*c.formula)},
                   {"ast", to_json(*c.formula)}});
  return out;
}

std::string names(const std::vector<notion>& ns) {
  std::string out;
  for (auto n : ns) {
    if (!out.empty()) out += ", ";
    out += info(n).name;
  }
  return out.empty() ? "-" : out;
}

const char* relation_name(relation rel) {
  switch (rel) {
    case relation::equivalence: return "equivalence";
    case relation::preorder_lr: return "preorder";
    case relation::preorder_rl: return "reverse preorder";
  }
  return "";
}

}  // namespace

json to_json(const pair_result& r) {
  json out;
  out["left"] = r.left;
  out["right"] = r.right;
  out["relation"] = relation_name(r.rel);
  out["budgets_lr"] = to_json(r.budgets_lr);
  out["budgets_rl"] = to_json(r.budgets_rl);
  auto fs = certificates_json(r.formulas_lr, r.left, r.right);
  for (auto& f : certificates_json(r.formulas_rl, r.right, r.left)) fs.push_back(f);
  out["formulas"] = fs;
  json ns = json::object();
  for (const auto& i : notions()) {
    const auto& v = r.notions[i.id];
    ns[std::string(i.name)] = {{"lr", v.lr}, {"rl", v.rl}, {"eq", v.eq}};
  }
  out["notions"] = ns;
  json fin = json::array(), vio = json::array();
  for (auto n : r.frontier.finest_maintained) fin.push_back(info(n).name);
  for (auto n : r.frontier.coarsest_violated) vio.push_back(info(n).name);
  out["frontier"] = {{"finest_maintained", fin}, {"coarsest_violated", vio}};
  out["stats"] = {{"positions", r.positions}, {"moves", r.moves}, {"seconds", r.seconds}};
  if (r.game) out["game"] = *r.game;
  if (r.budgets) out["budgets"] = *r.budgets;
  if (r.oracle)
    out["oracles"] = {{"BBsr", r.oracle->branching_bisim_sr},
                      {"B", r.oracle->weak_bisim},
                      {"SB", r.oracle->stable_bisim},
                      {"1S_lr", r.oracle->weak_sim_lr},
                      {"T_lr", r.oracle->weak_traces_lr}};
  return out;
}

std::string to_text(const pair_result& r, bool with_formulas, bool with_stats) {
  std::ostringstream out;
  out << r.left << " vs " << r.right << " (" << relation_name(r.rel) << ")\n";
  out << "  distinguishing budgets " << r.left << " -> " << r.right << ": " << to_string(r.budgets_lr) << "\n";
  out << "  distinguishing budgets " << r.right << " -> " << r.left << ": " << to_string(r.budgets_rl) << "\n";
  if (with_formulas) {
    for (const auto* side : {&r.formulas_lr, &r.formulas_rl}) {
      const bool lr = side == &r.formulas_lr;
      for (const auto& c : *side)
        out << "  " << (lr ? r.left : r.right) << " -> " << (lr ? r.right : r.left) << "  " << to_string(c.budget)
            << "  " << hml::render(*c.formula) << "\n";
    }
  }
  out << "  notion      lr   rl   eq\n";
  for (const auto& i : notions()) {
    const auto& v = r.notions[i.id];
    std::string name(i.name);
    name.resize(10, ' ');
    out << "  " << name << "  " << (v.lr ? "yes" : "no ") << "  " << (v.rl ? "yes" : "no ") << "  "
        << (v.eq ? "yes" : "no") << "\n";
  }
  out << "  finest maintained: " << names(r.frontier.finest_maintained) << "\n";
  out << "  coarsest violated: " << names(r.frontier.coarsest_violated) << "\n";
  if (r.oracle) {
    out << "  oracles: BBsr=" << r.oracle->branching_bisim_sr << " B=" << r.oracle->weak_bisim
        << " SB=" << r.oracle->stable_bisim << " 1S(lr)=" << r.oracle->weak_sim_lr
        << " T(lr)=" << r.oracle->weak_traces_lr << "\n";
  }
  if (with_stats) {
    out << "  positions: " << r.positions << ", moves: " << r.moves << "\n";
    out << "  wall time: " << r.seconds << " s\n";
  }
  return out.str();
}

}  // namespace spectroscopy::report
