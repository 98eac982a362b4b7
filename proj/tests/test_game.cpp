#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "spectroscopy/game.hpp"
#include "support.hpp"

using namespace spectroscopy;

namespace {

const move* find_rule(const std::vector<move>& ms, move_rule r) {
  for (const auto& m : ms)
    if (m.rule == r) return &m;
  return nullptr;
}

std::size_t count_rule(const std::vector<move>& ms, move_rule r) {
  return static_cast<std::size_t>(std::count_if(ms.begin(), ms.end(), [&](const move& m) { return m.rule == r; }));
}

}  // namespace

TEST_CASE("attacker position: delay and conjunction moves") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto ms = successors(s, attacker_pos{n.at.at("PeTau"), s.singleton(n.at.at("PlTau"))});
  REQUIRE(ms.size() == 2);
  const auto* d = find_rule(ms, move_rule::delay);
  REQUIRE(d);
  CHECK(d->weight.is_zero());
  const auto* c = find_rule(ms, move_rule::immediate_conjunction);
  REQUIRE(c);
  CHECK(to_string(c->weight) == "(0,0,0,0,-1,0,0,0)");

  auto empty = successors(s, attacker_pos{n.at.at("Ae"), s.empty_set()});
  const auto* f = find_rule(empty, move_rule::finishing);
  REQUIRE(f);
  CHECK(f->weight.is_zero());
  CHECK_FALSE(find_rule(empty, move_rule::immediate_conjunction));
}

TEST_CASE("delayed position closes Q under tau before observing") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto ae = n.at.at("AeTau");
  auto q = s.singleton(n.at.at("AlTau"));
  auto ms = successors(s, attacker_pos{ae, q});
  const auto* d = find_rule(ms, move_rule::delay);
  REQUIRE(d);
  CHECK(std::get<attacker_delayed_pos>(d->to).q == s.weak_closure(q));

  auto dm = successors(s, d->to);
  // AeTau is unstable: no stable conjunction; its tau self-loop is no procrastination.
  CHECK_FALSE(find_rule(dm, move_rule::stable_conjunction));
  CHECK_FALSE(find_rule(dm, move_rule::procrastination));
  const auto* obs = find_rule(dm, move_rule::observation);
  REQUIRE(obs);
  CHECK(to_string(obs->weight) == "(-1,0,0,0,0,0,0,0)");
  CHECK(std::get<attacker_pos>(obs->to).q == s.singleton(*s.find_state("0")));
  CHECK(find_rule(dm, move_rule::late_conjunction));
  // Branching conjunctions: (tau self and tau-loop target coincide, plus a) x 4 subsets of {AlTau,BlTau}.
  CHECK(count_rule(dm, move_rule::branching_conjunction) == 2 * 4);
}

TEST_CASE("conjunct challenges carry min-selection updates") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto ms = successors(s, attacker_conjunct_pos{n.at.at("AeTau"), n.at.at("AlTau")});
  const auto* pos = find_rule(ms, move_rule::positive_conjunct);
  const auto* neg = find_rule(ms, move_rule::negative_conjunct);
  REQUIRE(pos);
  REQUIRE(neg);
  CHECK(to_string(pos->weight) == "(min{1,6},0,0,0,0,0,0,0)");
  CHECK(to_string(neg->weight) == "(min{1,7},0,0,0,0,0,0,-1)");
  // The negative challenge swaps sides.
  CHECK(std::get<attacker_delayed_pos>(neg->to).p == n.at.at("AlTau"));
  CHECK(successors(s, attacker_conjunct_pos{n.at.at("Ae"), n.at.at("Ae")}).size() == 1);
}

TEST_CASE("defender positions answer per state") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto q = s.singleton(n.at.at("Al")) | s.singleton(n.at.at("Bl"));
  auto ms = successors(s, defender_conj_pos{n.at.at("Ae"), q});
  CHECK(ms.size() == 2);
  for (const auto& m : ms) CHECK(to_string(m.weight) == "(0,0,-1,0,0,0,0,0)");
  CHECK(successors(s, defender_conj_pos{n.at.at("Ae"), s.empty_set()}).empty());

  auto st = successors(s, defender_stable_conj_pos{n.at.at("Ae"), s.empty_set()});
  REQUIRE(st.size() == 1);
  CHECK(st[0].rule == move_rule::stable_finishing);
  CHECK(to_string(st[0].weight) == "(0,0,0,-1,0,0,0,0)");

  auto a = *s.find_action("a");
  auto zero = *s.find_state("0");
  auto br = successors(s, defender_branching_pos{n.at.at("Ae"), a, zero, s.singleton(n.at.at("Bl")),
                                                 s.singleton(n.at.at("Al"))});
  REQUIRE(br.size() == 2);
  const auto* ans = find_rule(br, move_rule::branching_answer);
  const auto* obs = find_rule(br, move_rule::branching_observation);
  REQUIRE(ans);
  REQUIRE(obs);
  CHECK(to_string(ans->weight) == "(0,-1,-1,0,0,0,0,0)");
  CHECK(to_string(obs->weight) == "(min{1,6},-1,-1,0,0,0,0,0)");
  CHECK(std::get<attacker_branching_pos>(obs->to).q == s.singleton(zero));
  auto acc = successors(s, obs->to);
  REQUIRE(acc.size() == 1);
  CHECK(acc[0].rule == move_rule::branching_accounting);
  CHECK(to_string(acc[0].weight) == "(-1,0,0,0,0,0,0,0)");
}

TEST_CASE("tau branching keeps states that stay put") {
  auto n = support::from_ccs(support::branching_example);
  const auto& s = n.sys;
  auto q = s.singleton(n.at.at("Q"));
  auto br = successors(s, defender_branching_pos{n.at.at("P"), tau, *s.find_state("b.0"), s.empty_set(), q});
  const auto* obs = find_rule(br, move_rule::branching_observation);
  REQUIRE(obs);
  CHECK(std::get<attacker_branching_pos>(obs->to).q == (q | s.singleton(*s.find_state("b.0"))));
}

TEST_CASE("variants restrict the move families") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto pos = attacker_delayed_pos{n.at.at("Ae"), s.singleton(n.at.at("Al"))};
  auto delay = successors(s, pos, game_variant::delay);
  auto stab = successors(s, pos, game_variant::stability);
  auto full = successors(s, pos, game_variant::full);
  CHECK_FALSE(find_rule(delay, move_rule::stable_conjunction));
  CHECK(find_rule(stab, move_rule::stable_conjunction));
  CHECK_FALSE(find_rule(stab, move_rule::branching_conjunction));
  CHECK(find_rule(full, move_rule::branching_conjunction));
  CHECK(delay.size() < stab.size());
  CHECK(stab.size() < full.size());
}

TEST_CASE("successors are deduplicated by target and weight") {
  std::mt19937 rng(41);
  for (int round = 0; round < 100; ++round) {
    auto sys = support::random_system(rng);
    auto g = build(sys, 0, sys.num_states() - 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
      auto ms = successors(sys, g.position(i));
      for (std::size_t a = 0; a < ms.size(); ++a)
        for (std::size_t b = a + 1; b < ms.size(); ++b)
          CHECK_FALSE((ms[a].to == ms[b].to && ms[a].weight == ms[b].weight));
      CHECK(g.moves(i).size() == ms.size());
      CHECK(g.is_defender(i) == is_defender(g.position(i)));
      for (const auto& m : g.moves(i)) {
        CHECK(m.weight.valid());
        const auto& pred = g.predecessors(m.to);
        CHECK(std::find(pred.begin(), pred.end(), i) != pred.end());
      }
    }
  }
}

TEST_CASE("graph interning and roots") {
  auto n = support::from_ccs(support::idling);
  const auto& s = n.sys;
  auto pe = n.at.at("PeTau"), pl = n.at.at("PlTau");
  auto g = build(s, {{pe, pl}, {pl, pe}, {pe, pl}});
  CHECK(g.roots().size() == 2);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.index_of(g.position(i)) == i);
  CHECK(g.find(attacker_pos{pe, s.singleton(pl)}).has_value());
  CHECK_FALSE(g.find(attacker_pos{pe, s.all_states()}).has_value());
  CHECK_THROWS_AS((void)g.index_of(attacker_pos{pe, s.all_states()}), std::out_of_range);
  CHECK(render(s, g.position(g.roots()[0])) == "[PeTau,{PlTau}]_a");
}

TEST_CASE("the position cap is enforced") {
  auto n = support::from_ccs(support::idling);
  CHECK_THROWS_AS((void)build(n.sys, n.at.at("Pe"), n.at.at("Pl"), {10, game_variant::full}),
                  position_limit_exceeded);
  CHECK_NOTHROW((void)build(n.sys, n.at.at("Pe"), n.at.at("Pl"), {10'000, game_variant::full}));
}

TEST_CASE("the branching subset guard refuses huge Q before enumerating") {
  transition_system::builder b;
  auto p = b.add_state("p");
  auto a = b.action("a");
  auto hub = b.add_state("hub");
  b.add_transition(p, a, p);
  b.add_transition(hub, a, hub);
  for (int i = 0; i < 30; ++i) {
    auto x = b.add_state("x" + std::to_string(i));
    b.add_transition(hub, tau, x);
  }
  auto sys = std::move(b).build();
  try {
    (void)build(sys, p, hub, {1000, game_variant::full});
    FAIL("expected position_limit_exceeded");
  } catch (const position_limit_exceeded& e) {
    CHECK(e.limit() == 1000);
  }
  CHECK_NOTHROW((void)build(sys, p, hub, {1000, game_variant::delay}));
}
