#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spectroscopy/energy.hpp"

using namespace spectroscopy;

namespace {

const update negative_conjunct = update().min_select(modal_depth, {modal_depth, negative_depth}).decrement(negations);

energy random_energy(std::mt19937& rng, energy_component max) {
  std::uniform_int_distribution<energy_component> d(0, max + 1);
  energy e;
  for (std::size_t i = 0; i < energy_dims; ++i) {
    auto v = d(rng);
    e[i] = v > max ? infinity : v;
  }
  return e;
}

update random_update(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> other(0, energy_dims - 1);
  update u;
  for (std::size_t i = 0; i < energy_dims; ++i) {
    switch (kind(rng)) {
      case 1: u.decrement(static_cast<dim>(i)); break;
      case 2: u.min_select(static_cast<dim>(i), {static_cast<dim>(i), static_cast<dim>(other(rng))}); break;
      default: break;
    }
  }
  return u;
}

}  // namespace

TEST_CASE("min{1,7} with decrements on (2,0,inf,0,0,0,1,1)") {
  auto u = update().min_select(modal_depth, {modal_depth, negative_depth}).decrement(unstable_conjunctions).decrement(negations);
  auto r = apply(energy{2, 0, infinity, 0, 0, 0, 1, 1}, u);
  REQUIRE(r);
  CHECK(*r == energy{1, 0, infinity, 0, 0, 0, 1, 0});
}

TEST_CASE("application is partial") {
  CHECK_FALSE(apply(energy{1, 0, 0, 0, 0, 0, 2, 0}, negative_conjunct));
  CHECK_FALSE(apply(energy::zero(), update::minus({modal_depth})));
  CHECK(apply(energy::zero(), update::zero()) == energy::zero());
}

TEST_CASE("min selection reads the old vector") {
  auto u = update().min_select(modal_depth, {modal_depth, positive_depth}).decrement(positive_depth);
  CHECK(apply(energy{3, 0, 0, 0, 0, 2, 0, 0}, u) == energy{2, 0, 0, 0, 0, 1, 0, 0});
}

TEST_CASE("infinity absorbs decrements") {
  auto e = energy::all_infinite();
  CHECK(apply(e, update::minus({modal_depth, negations})) == e);
  CHECK(apply(e, negative_conjunct) == e);
}

TEST_CASE("inverse is the least solution (random)") {
  std::mt19937 rng(3);
  for (int i = 0; i < 20000; ++i) {
    auto u = random_update(rng);
    REQUIRE(u.valid());
    auto t = random_energy(rng, 3);
    auto e = random_energy(rng, 4);
    auto inv = inverse(t, u);
    auto at_inv = apply(inv, u);
    REQUIRE(at_inv);
    CHECK(leq(t, *at_inv));
    auto r = apply(e, u);
    CHECK((r && leq(t, *r)) == leq(inv, e));
  }
}

TEST_CASE("antichain keeps exactly the minimal elements") {
  antichain a;
  CHECK(a.insert(energy{1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK_FALSE(a.insert(energy{1, 1, 1, 0, 0, 0, 0, 0}));
  CHECK(a.insert(energy{0, 2, 0, 0, 0, 0, 0, 0}));
  CHECK(a.size() == 2);
  CHECK(a.insert(energy{0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(a.size() == 1);
  CHECK(a.dominates(energy{5, 1, 0, 0, 0, 0, 0, 0}));
  CHECK_FALSE(a.dominates(energy::zero()));
}

TEST_CASE("antichain minima are pairwise incomparable and cover the input (random)") {
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<energy> es;
    for (int k = 0; k < 12; ++k) es.push_back(random_energy(rng, 2));
    auto m = antichain::minima(es);
    for (const auto& x : m)
      for (const auto& y : m)
        if (!(x == y)) CHECK_FALSE(leq(x, y));
    for (const auto& e : es) CHECK(m.dominates(e));
    for (const auto& x : m) CHECK(std::find(es.begin(), es.end(), x) != es.end());
  }
}

TEST_CASE("text syntax round trip") {
  energy e{2, 0, infinity, 0, 0, 0, 1, 1};
  CHECK(to_string(e) == "(2,0,inf,0,0,0,1,1)");
  CHECK(parse_energy("(2,0,inf,0,0,0,1,1)") == e);
  CHECK(parse_energy(" ( 2, 0, ∞,0,0,0,1,1 ) ") == e);
  CHECK_FALSE(parse_energy("(2,0,0)"));
  CHECK_FALSE(parse_energy("(a,0,0,0,0,0,0,0)"));
  CHECK(to_string(negative_conjunct) == "(min{1,7},0,0,0,0,0,0,-1)");
}
