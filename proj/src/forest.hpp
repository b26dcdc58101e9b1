#pragma once

#include <optional>
#include <string>
#include <vector>

#include "network.hpp"

namespace forestnet {

// A phylogenetic tree: a Network with exactly one root and no hybrids, or a
// single labeled vertex (the latter is legal only as a forest component).
struct PhyloTree {
  std::optional<Network> shape;  // nullopt => solo vertex
  std::string solo_name;
  std::string solo_label;

  bool is_solo() const { return !shape.has_value(); }
  std::vector<std::string> leaf_labels() const;  // sorted
  // All clusters of the tree as sorted label lists, sorted; a tree on a fixed
  // leaf set is determined up to equivalence by this key.
  std::vector<std::vector<std::string>> cluster_key() const;
};

// >= 2 trees with pairwise disjoint leaf sets.
struct PhyloForest {
  std::vector<PhyloTree> trees;

  std::vector<std::string> label_set() const;  // sorted union
  // Sorted per-tree keys; equality of keys == component-wise equivalence.
  std::string canonical_key() const;
};

PhyloTree solo_tree(const std::string& name, const std::string& label);
// Validates single root, no hybrids (PreconditionViolated otherwise).
PhyloTree tree_from_network(const Network& n);
// Validates >= 2 trees and leaf-disjointness (PreconditionViolated).
PhyloForest make_forest(std::vector<PhyloTree> trees);
// The forest whose components are the single leaves of X.
PhyloForest trivial_forest(const std::vector<std::string>& labels);

std::string tree_key_string(const PhyloTree& t);
// Shared canonical encoding: clusters sorted, labels comma-joined, clusters
// semicolon-joined.
std::string key_from_clusters(std::vector<std::vector<std::string>> clusters);

}  // namespace forestnet
