#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"
#include "doctest.h"
#include "error.hpp"

using namespace forestnet;

namespace {

std::set<std::pair<std::string, std::string>> arc_names(const Digraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [t, h] : g.all_arcs()) out.insert({g.names[t], g.names[h]});
  return out;
}

}  // namespace

TEST_CASE("digraph construction and degrees") {
  Digraph g;
  int a = g.add_vertex("a");
  int b = g.add_vertex("b");
  int c = g.ensure_vertex("c");
  CHECK(g.ensure_vertex("c") == c);
  g.add_arc(a, b);
  g.add_arc(a, c);
  g.add_arc(b, c);
  CHECK(g.n() == 3);
  CHECK(g.arc_count() == 3);
  CHECK(g.outdeg(a) == 2);
  CHECK(g.indeg(c) == 2);
  CHECK(g.has_arc(a, b));
  CHECK_FALSE(g.has_arc(b, a));
  CHECK(g.find("b") == b);
  CHECK(g.find("zz") == -1);
  CHECK_THROWS_AS(g.require("zz"), Error);
}

TEST_CASE("topological order breaks ties by name") {
  Digraph g = Digraph::from_arcs({{"z", "m"}, {"a", "m"}, {"m", "q"}}, {});
  auto ord = g.topo_order();
  REQUIRE(ord.has_value());
  std::vector<std::string> names;
  for (int v : *ord) names.push_back(g.names[v]);
  CHECK(names == std::vector<std::string>{"a", "z", "m", "q"});
}

TEST_CASE("cycles defeat topo order") {
  Digraph g = Digraph::from_arcs({{"a", "b"}, {"b", "c"}, {"c", "a"}}, {});
  CHECK_FALSE(g.topo_order().has_value());
  CHECK_FALSE(g.is_acyclic());

  Digraph loop;
  int v = loop.add_vertex("v");
  loop.add_arc(v, v);
  CHECK_FALSE(loop.is_acyclic());
}

TEST_CASE("weak components") {
  Digraph g = Digraph::from_arcs({{"a", "b"}, {"c", "d"}, {"d", "e"}}, {});
  CHECK(g.weak_component_count() == 2);
  auto comp = g.weak_components();
  CHECK(comp[g.find("c")] == comp[g.find("e")]);
  CHECK(comp[g.find("a")] != comp[g.find("c")]);
  CHECK_FALSE(g.is_connected());
  Digraph lone;
  lone.add_vertex("x");
  CHECK(lone.is_connected());
}

TEST_CASE("filtered keeps the induced subgraph") {
  Digraph g = Digraph::from_arcs({{"a", "b"}, {"b", "c"}, {"a", "c"}},
                                 {{"c", "leafc"}});
  std::vector<char> keep(g.n(), 1);
  keep[g.find("b")] = 0;
  Digraph f = filtered(g, keep);
  CHECK(f.n() == 2);
  CHECK(arc_names(f) ==
        std::set<std::pair<std::string, std::string>>{{"a", "c"}});
  CHECK(f.labels[f.find("c")] == "leafc");
}

TEST_CASE("subdivide then suppress restores the digraph") {
  Digraph g = Digraph::from_arcs(
      {{"r", "u"}, {"r", "v"}, {"u", "x"}, {"u", "y"}, {"v", "z"}, {"v", "w"}},
      {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"w", "w"}});
  Digraph s = subdivide_arc(g, g.find("r"), g.find("u"), "mid");
  CHECK(s.n() == g.n() + 1);
  CHECK(s.has_arc(s.find("r"), s.find("mid")));
  CHECK(s.has_arc(s.find("mid"), s.find("u")));
  CHECK_FALSE(s.has_arc(s.find("r"), s.find("u")));
  CHECK(are_equivalent(suppress(s), g, true));
}

TEST_CASE("suppress drops outdegree-one roots") {
  Digraph g = Digraph::from_arcs({{"p", "w"}, {"w", "x"}}, {{"x", "x"}});
  Digraph s = suppress(g);
  CHECK(s.n() == 1);
  CHECK(s.labels[0] == "x");
}

TEST_CASE("contract arcs merges endpoints under the smaller name") {
  Digraph g = Digraph::from_arcs(
      {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}}, {{"d", "d"}});
  Digraph c = contract_arcs(g, {{g.find("b"), g.find("c")}});
  CHECK(c.n() == 3);
  CHECK(c.find("b") != -1);
  CHECK(c.find("c") == -1);
  CHECK(arc_names(c) == std::set<std::pair<std::string, std::string>>{
                            {"a", "b"}, {"b", "d"}});
}

TEST_CASE("equivalence is a label-aware isomorphism") {
  Digraph a = Digraph::from_arcs({{"r", "u"}, {"r", "v"}},
                                 {{"u", "x"}, {"v", "y"}});
  Digraph b = Digraph::from_arcs({{"q", "s"}, {"q", "t"}},
                                 {{"s", "x"}, {"t", "y"}});
  Digraph c = Digraph::from_arcs({{"q", "s"}, {"q", "t"}},
                                 {{"s", "y"}, {"t", "z"}});
  CHECK(are_equivalent(a, a, true));
  CHECK(are_equivalent(a, b, true));
  CHECK(are_equivalent(b, a, true));
  CHECK_THROWS_AS(are_equivalent(a, c, true), Error);  // label sets differ
  CHECK(are_equivalent(a, c, false));

  Digraph path = Digraph::from_arcs({{"r", "u"}, {"u", "v"}}, {});
  Digraph fork = Digraph::from_arcs({{"r", "u"}, {"r", "v"}}, {});
  CHECK_FALSE(are_equivalent(path, fork, false));
}

TEST_CASE("equivalence distinguishes identical degree profiles") {
  // Two 3-cycles vs one 6-cycle: every vertex has indegree 1 and outdegree 1
  // in both, so only the backtracking search can tell them apart.
  Digraph two3 = Digraph::from_arcs({{"a", "b"},
                                     {"b", "c"},
                                     {"c", "a"},
                                     {"d", "e"},
                                     {"e", "f"},
                                     {"f", "d"}},
                                    {});
  Digraph one6 = Digraph::from_arcs({{"a", "b"},
                                     {"b", "c"},
                                     {"c", "d"},
                                     {"d", "e"},
                                     {"e", "f"},
                                     {"f", "a"}},
                                    {});
  CHECK_FALSE(are_equivalent(two3, one6, false));
  CHECK(are_equivalent(two3, two3, false));
}
