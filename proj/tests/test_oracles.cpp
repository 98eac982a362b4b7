#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spectroscopy/oracles.hpp"
#include "spectroscopy/spectrum.hpp"
#include "support.hpp"

using namespace spectroscopy;
using namespace spectroscopy::oracles;

namespace {

const char* const zoo = R"(
P = a.0 + tau.b.0 + b.0
Q = a.0 + tau.b.0
Div = tau.Div + a.0
A = a.0
Sim1 = a.b.0 + a.0
Sim2 = a.b.0
Tr1 = a.b.0 + a.c.0
Tr2 = a.(b.0 + c.0)
)";

}  // namespace

TEST_CASE("absorbed tau step: weakly but not branching bisimilar") {
  auto n = support::from_ccs(zoo);
  auto p = n.at.at("P"), q = n.at.at("Q");
  CHECK(weak_bisim(n.sys, p, q));
  CHECK_FALSE(branching_bisim_sr(n.sys, p, q));
  CHECK(stable_bisim(n.sys, p, q));
  CHECK(weak_sim_preorder(n.sys, p, q));
  CHECK(weak_trace_preorder(n.sys, q, p));
}

TEST_CASE("divergence separates the stability-respecting notions only") {
  auto n = support::from_ccs(zoo);
  auto d = n.at.at("Div"), a = n.at.at("A");
  CHECK_FALSE(branching_bisim_sr(n.sys, d, a));
  CHECK(weak_bisim(n.sys, d, a));
  CHECK_FALSE(stable_bisim(n.sys, d, a));
  CHECK(stable_preorder(n.sys, d, a));
  CHECK_FALSE(stable_preorder(n.sys, a, d));
  CHECK(oracles::sublogic(n.sys, info(notion::branching_bisim).coordinate).preorder(d, a));
  CHECK(oracles::sublogic(n.sys, info(notion::branching_bisim).coordinate).preorder(a, d));
  CHECK_FALSE(oracles::sublogic(n.sys, info(notion::branching_bisim_sr).coordinate).preorder(a, d));
}

TEST_CASE("similar both ways yet not bisimilar") {
  auto n = support::from_ccs(zoo);
  auto x = n.at.at("Sim1"), y = n.at.at("Sim2");
  CHECK(weak_sim_preorder(n.sys, x, y));
  CHECK(weak_sim_preorder(n.sys, y, x));
  CHECK_FALSE(weak_bisim(n.sys, x, y));
}

TEST_CASE("trace equivalent yet not similar") {
  auto n = support::from_ccs(zoo);
  auto x = n.at.at("Tr1"), y = n.at.at("Tr2");
  CHECK(weak_trace_preorder(n.sys, x, y));
  CHECK(weak_trace_preorder(n.sys, y, x));
  CHECK(weak_sim_preorder(n.sys, x, y));
  CHECK_FALSE(weak_sim_preorder(n.sys, y, x));
  CHECK_FALSE(oracles::sublogic(n.sys, info(notion::failures).coordinate).preorder(x, y));
  CHECK(oracles::sublogic(n.sys, info(notion::weak_traces).coordinate).preorder(y, x));
}

TEST_CASE("the tau-idling processes are stable bisimilar, not failure equivalent") {
  auto n = support::from_ccs(support::idling);
  auto pe = n.at.at("PeTau"), pl = n.at.at("PlTau");
  CHECK(stable_bisim(n.sys, pe, pl));
  CHECK_FALSE(weak_bisim(n.sys, pe, pl));
  CHECK(weak_trace_preorder(n.sys, pe, pl));
  CHECK(oracles::sublogic(n.sys, info(notion::eta_sim).coordinate).preorder(pe, pl));
  CHECK_FALSE(oracles::sublogic(n.sys, info(notion::failures).coordinate).preorder(pe, pl));
  CHECK(oracles::sublogic(n.sys, info(notion::failures).coordinate).preorder(pl, pe));
}

TEST_CASE("oracles respect the hierarchy (random)") {
  std::mt19937 rng(61);
  for (int round = 0; round < 150; ++round) {
    auto sys = support::random_system(rng);
    for (state_id p = 0; p < sys.num_states(); ++p)
      for (state_id q = 0; q < sys.num_states(); ++q) {
        bool bbsr = branching_bisim_sr(sys, p, q);
        bool wb = weak_bisim(sys, p, q);
        bool sb = stable_bisim(sys, p, q);
        bool sim = weak_sim_preorder(sys, p, q);
        bool tr = weak_trace_preorder(sys, p, q);
        if (bbsr) CHECK(wb);
        if (bbsr) CHECK(sb);
        if (wb) CHECK(sim);
        if (sim) CHECK(tr);
        if (sb) CHECK(tr);
        CHECK(bbsr == branching_bisim_sr(sys, q, p));
        CHECK(wb == weak_bisim(sys, q, p));
      }
    CHECK(branching_bisim_sr(sys, 0, 0));
    CHECK(stable_bisim(sys, 0, 0));
  }
}

TEST_CASE("sublogic saturation agrees with the relational oracles (random)") {
  std::mt19937 rng(67);
  for (int round = 0; round < 60; ++round) {
    auto sys = support::random_system(rng, 4, 8);
    oracles::sublogic bbsr(sys, info(notion::branching_bisim_sr).coordinate);
    oracles::sublogic wb(sys, info(notion::weak_bisim).coordinate);
    oracles::sublogic sb(sys, info(notion::stable_bisim).coordinate);
    oracles::sublogic sim(sys, info(notion::weak_sim).coordinate);
    oracles::sublogic tr(sys, info(notion::weak_traces).coordinate);
    for (state_id p = 0; p < sys.num_states(); ++p)
      for (state_id q = 0; q < sys.num_states(); ++q) {
        CHECK(bbsr.preorder(p, q) == branching_bisim_sr(sys, p, q));
        CHECK((wb.preorder(p, q) && wb.preorder(q, p)) == weak_bisim(sys, p, q));
        CHECK((sb.preorder(p, q) && sb.preorder(q, p)) == stable_bisim(sys, p, q));
        CHECK(sim.preorder(p, q) == weak_sim_preorder(sys, p, q));
        CHECK(tr.preorder(p, q) == weak_trace_preorder(sys, p, q));
      }
  }
}
