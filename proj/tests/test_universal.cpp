#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "forest.hpp"
#include "instances.hpp"
#include "universal.hpp"

using namespace forestnet;

namespace {

// Two roots sharing one hybrid that feeds c; a and b hang off distinct
// roots, so no base forest puts them in a common component.
Network bridge3() {
  return build_network(Digraph::from_arcs({{"r1", "hx"},
                                           {"r1", "xa"},
                                           {"r2", "hx"},
                                           {"r2", "xb"},
                                           {"hx", "xc"}},
                                          {{"xa", "a"},
                                           {"xb", "b"},
                                           {"xc", "c"}}));
}

}  // namespace

TEST_CASE("forest catalog sizes") {
  CHECK(enumerate_forests({"a", "b"}).size() == 1);
  CHECK(enumerate_forests({"a", "b", "c"}).size() == 4);
  CHECK(enumerate_forests({"a", "b", "c", "d"}).size() == 22);
  CHECK(enumerate_forests({"a", "b", "c", "d", "e"}).size() == 161);

  CHECK_THROWS_AS(enumerate_forests({"a"}), Error);
  CHECK_THROWS_AS(enumerate_forests({"a", "b", "c", "d", "e", "f", "g"}),
                  Error);

  auto cat = enumerate_forests({"d", "c", "b", "a"});
  std::set<std::string> keys;
  for (const auto& f : cat) {
    CHECK(f.label_set() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(f.trees.size() >= 2);
    keys.insert(f.canonical_key());
  }
  CHECK(keys.size() == cat.size());
}

TEST_CASE("the cherry is universal on two labels") {
  UniversalReport r = is_universal_forest_based(instances::cherry());
  CHECK(r.universal);
  CHECK_FALSE(r.missing.has_value());
}

TEST_CASE("a three-leaf tree is universal") {
  Network T = build_network(Digraph::from_arcs(
      {{"r", "u"}, {"r", "xc"}, {"u", "xa"}, {"u", "xb"}},
      {{"xa", "a"}, {"xb", "b"}, {"xc", "c"}}));
  UniversalReport r = is_universal_forest_based(T);
  CHECK(r.universal);
}

TEST_CASE("the two-rooted bridge misses the forest pairing its far leaves") {
  UniversalReport r = is_universal_forest_based(bridge3());
  CHECK_FALSE(r.universal);
  REQUIRE(r.missing.has_value());
  // The only unrealizable forest is ab|c: a component holding both a and b
  // would need both roots, and hx always drags c into its own component.
  PhyloForest expect = make_forest(
      {tree_from_network(instances::cherry()), solo_tree("xc", "c")});
  CHECK(r.missing->canonical_key() == expect.canonical_key());
}

TEST_CASE("universality preconditions") {
  auto code_of = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::SyntaxError;  // sentinel for "did not throw"
  };
  CHECK(code_of([] { is_universal_forest_based(instances::fig7()); }) ==
        ErrorCode::NotBinary);
  // fig9 is binary but carries seven labels.
  CHECK(code_of([] { is_universal_forest_based(instances::fig9()); }) ==
        ErrorCode::TooLarge);
}

TEST_CASE("forbidden configuration witnesses") {
  // Both chains may have length zero: a vertex with two leaf children.
  auto w = forbidden_configuration(instances::cherry());
  REQUIRE(w.has_value());
  CHECK((*w)[0] == "r");
  CHECK((*w)[1] == "a");
  CHECK((*w)[2] == "b");

  // One-step chain through a hybrid: r1's children hx (-> c) and xa (-> a).
  auto wb = forbidden_configuration(bridge3());
  REQUIRE(wb.has_value());
  CHECK((*wb)[0] == "r1");
  CHECK((*wb)[1] == "c");
  CHECK((*wb)[2] == "a");

  // Two-step chain: u's children h1 (h1 -> h2 -> x3) and x1.
  auto wl = forbidden_configuration(instances::gamma_loop2());
  REQUIRE(wl.has_value());
  CHECK((*wl)[0] == "u");
  CHECK((*wl)[1] == "x3");
  CHECK((*wl)[2] == "x1");

  // fig5: r1's children h1 (h1 -> h3 -> e) and la.
  auto w5 = forbidden_configuration(instances::fig5());
  REQUIRE(w5.has_value());
  CHECK((*w5)[0] == "r1");
  CHECK((*w5)[1] == "e");
  CHECK((*w5)[2] == "a");
}

TEST_CASE("chains ending at tree vertices block the configuration") {
  // Hybrid h funnels into the degree-two tree vertex s, so the chain from h
  // never reaches a leaf; every branching vertex fields at most one live
  // chain.
  Network N = build_network(Digraph::from_arcs({{"r1", "u"},
                                                {"r1", "l1"},
                                                {"u", "h"},
                                                {"u", "h2"},
                                                {"r2", "v"},
                                                {"r2", "l2"},
                                                {"v", "h"},
                                                {"v", "h2"},
                                                {"h", "s"},
                                                {"s", "l3"},
                                                {"h2", "l4"}},
                                               {{"l1", "l1"},
                                                {"l2", "l2"},
                                                {"l3", "l3"},
                                                {"l4", "l4"}}));
  CHECK_FALSE(forbidden_configuration(N).has_value());
}

TEST_CASE("binary network enumeration finds all two-leaf networks") {
  std::vector<Network> nets;
  enumerate_binary_networks(2, 6, [&](const Network& N) {
    nets.push_back(N);
    return true;
  });
  CHECK_FALSE(nets.empty());
  for (size_t i = 0; i < nets.size(); ++i) {
    CHECK(is_binary(nets[i]));
    CHECK(nets[i].nx() == 2);
    CHECK(nets[i].n() <= 6);
    for (size_t j = i + 1; j < nets.size(); ++j)
      CHECK_FALSE(are_equivalent(nets[i].g, nets[j].g, false));
  }
  bool has_cherry = false;
  for (const auto& N : nets) has_cherry |= N.n() == 3 && N.hybrids.empty();
  CHECK(has_cherry);

  int seen = 0;
  enumerate_binary_networks(2, 6, [&](const Network&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);

  CHECK_THROWS_AS(
      enumerate_binary_networks(1, 6, [](const Network&) { return true; }),
      Error);
}

TEST_CASE("enumeration covers multi-rooted shapes") {
  int with_two_roots = 0, with_hybrids = 0;
  enumerate_binary_networks(3, 9, [&](const Network& N) {
    with_two_roots += N.m() == 2;
    with_hybrids += !N.hybrids.empty();
    return true;
  });
  CHECK(with_two_roots > 0);
  CHECK(with_hybrids > 0);
}
