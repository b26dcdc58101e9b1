#pragma once

#include <string>
#include <vector>

#include "digraph.hpp"

namespace forestnet {

enum class VertexKind { Root, Leaf, TreeVertex, Hybrid };

const char* vertex_kind_name(VertexKind k);

// A validated multi-rooted phylogenetic network: acyclic, connected, no
// parallel arcs or loops, roots have outdegree >= 2, hybrids have indegree 2
// and outdegree 1, leaves (indegree 1, outdegree 0) are bijectively labeled.
// Immutable after build_network; all fields are caches of g.
struct Network {
  Digraph g;
  std::vector<VertexKind> kind;
  std::vector<int> roots;    // sorted by vertex name
  std::vector<int> leaves;   // sorted by vertex name
  std::vector<int> hybrids;  // sorted by vertex name
  std::vector<std::string> label_set;      // X, sorted
  std::vector<std::vector<int>> clusters;  // per vertex: sorted label indices
  std::vector<int> gamma_of;  // nearest root-or-hybrid ancestor (self for RH)

  int n() const { return g.n(); }
  int m() const { return static_cast<int>(roots.size()); }
  int nx() const { return static_cast<int>(label_set.size()); }
  int label_index(const std::string& label) const;  // -1 if absent
  bool is_rh(int v) const {
    return kind[v] == VertexKind::Root || kind[v] == VertexKind::Hybrid;
  }
};

Network build_network(const Digraph& raw);

VertexKind vertex_kind(const Network& N, const std::string& name);
std::vector<std::string> cluster_of(const Network& N, const std::string& name);
int gamma(const Network& N, int v);
std::string gamma(const Network& N, const std::string& name);

// Binary: every root and every non-leaf tree vertex has outdegree exactly 2
// (hybrids are already indegree 2, outdegree 1 by validation).
bool is_binary(const Network& N);

// Underlying undirected graph is a tree (networks are connected, so this is
// the arc-count condition |A| = |V| - 1).
bool is_arboreal(const Network& N);

// Name-addressed wrappers over the digraph editing operations.
Digraph subdivide_arc(const Network& N, const std::string& tail,
                      const std::string& head);
bool are_equivalent(const Network& a, const Network& b);

}  // namespace forestnet
