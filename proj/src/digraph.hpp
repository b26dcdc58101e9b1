#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace forestnet {

// Mutable directed multigraph with string vertex names and optional leaf
// labels. Validation into a Network happens separately; this layer allows
// arbitrary degree patterns (GeneralDigraph in the external vocabulary).
struct Digraph {
  std::vector<std::string> names;
  std::vector<std::string> labels;  // empty string = unlabeled
  std::vector<std::vector<int>> kids;
  std::vector<std::vector<int>> pars;
  std::unordered_map<std::string, int> index;

  int n() const { return static_cast<int>(names.size()); }
  int indeg(int v) const { return static_cast<int>(pars[v].size()); }
  int outdeg(int v) const { return static_cast<int>(kids[v].size()); }

  int add_vertex(const std::string& name);
  int ensure_vertex(const std::string& name);
  int find(const std::string& name) const;     // -1 if absent
  int require(const std::string& name) const;  // throws UnknownVertex
  void add_arc(int tail, int head);
  bool has_arc(int tail, int head) const;
  void set_label(int v, const std::string& label);

  int arc_count() const;
  // All arcs, tails ascending, heads in insertion order per tail.
  std::vector<std::pair<int, int>> all_arcs() const;

  // Kahn topological order, smallest vertex name first among ready vertices.
  // nullopt if the graph has a directed cycle (self-loops included).
  std::optional<std::vector<int>> topo_order() const;
  bool is_acyclic() const { return topo_order().has_value(); }
  bool is_connected() const;  // weakly; true when n() <= 1
  std::vector<int> weak_components() const;  // component id per vertex
  int weak_component_count() const;

  static Digraph from_arcs(
      const std::vector<std::pair<std::string, std::string>>& arcs,
      const std::vector<std::pair<std::string, std::string>>& leaf_labels);
};

// Keeps exactly the vertices with keep[v] != 0 and the arcs among them.
Digraph filtered(const Digraph& g, const std::vector<char>& keep);

// Replaces arc (tail, head) by tail -> w -> head with a fresh vertex w.
// The fresh name is "_s<k>" for the smallest non-colliding k unless given.
Digraph subdivide_arc(const Digraph& g, int tail, int head,
                      const std::string& fresh_name = "");

// Fixpoint removal of unlabeled indegree-1/outdegree-1 vertices (splicing
// parent to child, merging would-be parallel arcs) and unlabeled
// outdegree-1 indegree-0 vertices (dropping the vertex and its arc).
Digraph suppress(const Digraph& g);

// Contracts every arc in `arcs` (endpoints identified), drops arcs that end
// up inside a merged group, merges parallel arcs. Group representative name
// is the lexicographically least member name; a group may carry at most one
// label.
Digraph contract_arcs(const Digraph& g,
                      const std::vector<std::pair<int, int>>& arcs);

// Digraph isomorphism; when respect_labels, the bijection must preserve leaf
// labels (and the label sets must match, else LabelSetMismatch).
bool are_equivalent(const Digraph& a, const Digraph& b, bool respect_labels);

}  // namespace forestnet
