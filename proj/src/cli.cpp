#include "spectroscopy/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "spectroscopy/ccs.hpp"
#include "spectroscopy/report.hpp"

namespace spectroscopy::cli {

namespace {

struct job {
  state_id left;
  state_id right;
  relation rel;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectroscopy of weak behavioural equivalences for finite transition systems"};
  app.require_subcommand(1);
  auto* check = app.add_subcommand("check", "Compare the process pairs of a CCS file or a transition list");

  std::string file, lts_file, pair, notion_name;
  bool as_json = false, emit_game = false, budgets = false, formulas = false, stats = false, use_oracle = false;
  std::size_t max_positions = 1'000'000;
  unsigned threads = 1;
  check->add_option("file", file, "CCS input");
  check->add_option("--lts", lts_file, "Transition list input (source<TAB>action<TAB>target)");
  check->add_option("--pair", pair, "Compare only L,R");
  check->add_option("--notion", notion_name, "Exit 0 iff the notion holds for every pair, else 1");
  check->add_flag("--json", as_json, "Machine-readable report");
  check->add_flag("--emit-game", emit_game, "Include the game graph");
  check->add_flag("--budgets", budgets, "Include the budget of every position");
  check->add_flag("--formulas", formulas, "Include one distinguishing formula per minimal budget");
  check->add_flag("--stats", stats, "Report game size and time");
  check->add_option("--max-positions", max_positions, "Abort with exit code 3 above this many positions");
  check->add_option("--threads", threads, "Pairs analysed in parallel")->check(CLI::PositiveNumber);
  check->add_flag("--oracle", use_oracle, "Also run the reference decision procedures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_input_error;
  }
  if (file.empty() == lts_file.empty()) {
    err << "error: give exactly one of FILE or --lts FILE\n";
    return exit_input_error;
  }

  std::optional<notion> wanted;
  if (!notion_name.empty()) {
    wanted = find_notion(notion_name);
    if (!wanted) {
      err << "error: unknown notion '" << notion_name << "'\n";
      return exit_input_error;
    }
  }

  transition_system sys;
  std::vector<job> jobs;
  try {
    if (!lts_file.empty()) {
      sys = parse_transition_list(read_file(lts_file));
    } else {
      auto prog = ccs::parse(read_file(file));
      auto compiled = ccs::compile(prog);
      sys = std::move(compiled.system);
      for (const auto& d : prog.directives)
        jobs.push_back({compiled.states.at(d.left), compiled.states.at(d.right),
                        d.kind == ccs::directive_kind::compare ? relation::equivalence : relation::preorder_lr});
    }
  } catch (const parse_error& e) {
    err << (lts_file.empty() ? file : lts_file) << ": " << e.what() << "\n";
    return exit_input_error;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input_error;
  }

  if (!pair.empty()) {
    auto comma = pair.find(',');
    auto l = sys.find_state(pair.substr(0, comma));
    auto r = comma == std::string::npos ? std::nullopt : sys.find_state(pair.substr(comma + 1));
    if (!l || !r) {
      err << "error: --pair expects L,R naming two states\n";
      return exit_input_error;
    }
    jobs = {{*l, *r, relation::equivalence}};
  }
  if (jobs.empty()) {
    err << "error: nothing to compare (use @compare/@preorder or --pair)\n";
    return exit_input_error;
  }

  report::analysis_options opts;
  opts.build.max_positions = max_positions;
  opts.formulas = formulas;
  opts.keep_game = emit_game || budgets;
  opts.oracles = use_oracle;

  std::vector<std::optional<report::pair_result>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> over_limit{false};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        results[i] = report::analyze(sys, jobs[i].left, jobs[i].right, jobs[i].rel, opts);
      } catch (const position_limit_exceeded&) {
        over_limit = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::min<std::size_t>(threads, jobs.size()); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (over_limit) {
    err << "error: game exceeds --max-positions " << max_positions << "\n";
    return exit_position_limit;
  }

  bool all_hold = true;
  if (wanted) {
    for (const auto& r : results) {
      const auto& v = r->notions[*wanted];
      all_hold = all_hold && (r->rel == relation::equivalence ? v.eq : v.lr);
    }
  }

  if (as_json) {
    nlohmann::json doc;
    doc["pairs"] = nlohmann::json::array();
    for (auto& r : results) {
      auto j = report::to_json(*r);
      if (!emit_game) j.erase("game");
      if (!budgets) j.erase("budgets");
      doc["pairs"].push_back(std::move(j));
    }
    if (wanted) doc["notion"] = {{"name", notion_name}, {"holds", all_hold}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << report::to_text(*r, formulas, stats);
      if (emit_game) out << "  game: " << r->game->dump() << "\n";
      if (budgets) out << "  budgets: " << r->budgets->dump() << "\n";
      if (wanted) {
        const auto& v = r->notions[*wanted];
        out << "  " << notion_name << ": " << ((r->rel == relation::equivalence ? v.eq : v.lr) ? "holds" : "fails")
            << "\n";
      }
    }
  }
  return wanted && !all_hold ? exit_notion_fails : exit_ok;
}

}  // namespace spectroscopy::cli
