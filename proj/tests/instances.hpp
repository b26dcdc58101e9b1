#pragma once

// Fixed networks and cluster systems exercised across the test suite. Each
// builder returns a freshly validated Network so tests can mutate copies.

#include <string>
#include <utility>
#include <vector>

#include "network.hpp"

namespace forestnet::instances {

using Arcs = std::vector<std::pair<std::string, std::string>>;
using Labels = std::vector<std::pair<std::string, std::string>>;

inline Network cherry() {
  return build_network(
      Digraph::from_arcs({{"r", "x"}, {"r", "y"}}, {{"x", "a"}, {"y", "b"}}));
}

// Four roots each feeding one of two sibling hybrids whose shared child is a
// third hybrid. Arboreal (11 arcs, 12 vertices) yet not forest-based: h3
// keeps one in-arc, so h1 or h2 is left without a retained out-arc.
inline Network fig5() {
  Arcs a = {{"r1", "h1"}, {"r1", "la"}, {"r2", "h1"}, {"r2", "lb"},
            {"r3", "h2"}, {"r3", "lc"}, {"r4", "h2"}, {"r4", "ld"},
            {"h1", "h3"}, {"h2", "h3"}, {"h3", "le"}};
  Labels l = {{"la", "a"}, {"lb", "b"}, {"lc", "c"}, {"ld", "d"},
              {"le", "e"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Three-rooted, forest-based but not proper: gamma edges {p1,p2}, {ha,p1},
// {ha,p2} forbid colors 1 and 2 on ha, while no directed path from p3
// reaches ha, so color 3 violates reachability. u2 has outdegree 3, making
// the network semi-binary but not binary.
inline Network fig7() {
  Arcs a = {{"p1", "ha"}, {"p1", "u1"}, {"p2", "ha"}, {"p2", "u2"},
            {"p3", "u3"}, {"p3", "x0"}, {"u1", "x1"}, {"u1", "g1"},
            {"u2", "x2"}, {"u2", "g3"}, {"u2", "g2"}, {"u3", "x3"},
            {"u3", "g3"}, {"ha", "t"},  {"t", "x5"},  {"t", "q1"},
            {"t", "q2"},  {"q1", "y1"}, {"q1", "g1"}, {"q2", "y2"},
            {"q2", "g2"}, {"g1", "x6"}, {"g2", "x7"}, {"g3", "x4"}};
  Labels l = {{"x0", "x0"}, {"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"},
              {"x4", "x4"}, {"x5", "x5"}, {"x6", "x6"}, {"x7", "x7"},
              {"y1", "y1"}, {"y2", "y2"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Binary two-rooted network with omnians v and w. The omni-extension picking
// h1 for v and h3 for w is bipartite, so the network is properly
// forest-based; picking h2 for both closes a triangle.
inline Network fig9() {
  Arcs a = {{"p1", "a"},  {"p1", "x4"}, {"a", "v"},   {"a", "q2"},
            {"q2", "x5"}, {"q2", "h3"}, {"v", "h1"},  {"v", "h2"},
            {"p2", "b"},  {"p2", "x6"}, {"b", "w"},   {"b", "q1"},
            {"q1", "x7"}, {"q1", "h1"}, {"w", "h2"},  {"w", "h3"},
            {"h1", "x1"}, {"h2", "x2"}, {"h3", "x3"}};
  Labels l = {{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}, {"x4", "x4"},
              {"x5", "x5"}, {"x6", "x6"}, {"x7", "x7"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Three roots whose hybrids wire gamma into a triangle; no omnians, proper.
inline Network root_triangle() {
  Arcs a = {{"r1", "u1"}, {"r1", "w1"}, {"r2", "u2"}, {"r2", "w2"},
            {"r3", "u3"}, {"r3", "w3"}, {"u1", "hb"}, {"u1", "a1"},
            {"u2", "hb"}, {"u2", "a2"}, {"w2", "hc"}, {"w2", "b2"},
            {"u3", "hc"}, {"u3", "a3"}, {"w3", "hd"}, {"w3", "b3"},
            {"w1", "hd"}, {"w1", "b1"}, {"hb", "xb"}, {"hc", "xc"},
            {"hd", "xd"}};
  Labels l = {{"a1", "a1"}, {"a2", "a2"}, {"a3", "a3"}, {"b1", "b1"},
              {"b2", "b2"}, {"b3", "b3"}, {"xb", "xb"}, {"xc", "xc"},
              {"xd", "xd"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Arboreal, every hybrid has a non-hybrid child, yet u1, u2, u3 form a
// component of the shared-hybrid graph consisting of omnians only, so no
// spanning forest preserves the leaf set.
inline Network arboreal_gap13() {
  Arcs a = {{"r1", "u1"}, {"r1", "l1"}, {"r2", "u2"}, {"r2", "l2"},
            {"r3", "u3"}, {"r3", "l3"}, {"u1", "g1"}, {"u1", "g2"},
            {"u2", "g1"}, {"u3", "g2"}, {"g1", "c1"}, {"g2", "c2"}};
  Labels l = {{"l1", "l1"}, {"l2", "l2"}, {"l3", "l3"}, {"c1", "c1"},
              {"c2", "c2"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Two-rooted binary network whose gamma graph has a loop at r1 (hybrid h1
// has both parents below r1), hence no proper coloring exists.
inline Network gamma_loop2() {
  Arcs a = {{"r1", "u"},  {"r1", "v"},  {"u", "h1"}, {"u", "x1"},
            {"v", "h1"},  {"v", "x2"},  {"h1", "h2"}, {"r2", "x4"},
            {"r2", "w"},  {"w", "h2"},  {"w", "x5"}, {"h2", "x3"}};
  Labels l = {{"x1", "x1"}, {"x2", "x2"}, {"x3", "x3"}, {"x4", "x4"},
              {"x5", "x5"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Binary single-rooted network where hybrids u1 and u2 are omnians sharing
// their only hybrid child h, so no omnian-saturating matching exists.
inline Network non_tree_based() {
  Arcs a = {{"r", "a"},  {"r", "b"},  {"a", "c"},  {"a", "d"},
            {"b", "e"},  {"b", "f"},  {"c", "u1"}, {"c", "l1"},
            {"d", "u1"}, {"d", "l2"}, {"e", "u2"}, {"e", "l3"},
            {"f", "u2"}, {"f", "l4"}, {"u1", "h"}, {"u2", "h"},
            {"h", "x"}};
  Labels l = {{"l1", "l1"}, {"l2", "l2"}, {"l3", "l3"}, {"l4", "l4"},
              {"x", "x"}};
  return build_network(Digraph::from_arcs(a, l));
}

// Cluster system of three cherries overlapping in c; reconstruction orders
// differ by hybrid-chain layout until bad arcs are collapsed.
inline std::string fig6_clusters() {
  return "a\nb\nc\nd\na,c\nb,c\nc,d\n";
}

// Passes P1-P3 yet unrealizable: the four pairwise intersections need four
// distinct hybrid witnesses, more than |R|-1 allows.
inline std::string tsclu_clusters() {
  return "a\nb\nx\ny\na,x\nx,y\ny,b\na,b\n";
}

}  // namespace forestnet::instances
