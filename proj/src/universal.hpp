#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forest.hpp"
#include "forest_based.hpp"
#include "network.hpp"

namespace forestnet {

// All binary phylogenetic forests on X: set partitions with at least two
// blocks, blocks of size k expanded into every binary shape. Guard 2..6.
std::vector<PhyloForest> enumerate_forests(
    const std::vector<std::string>& labels);

struct UniversalReport {
  bool universal = false;
  std::optional<PhyloForest> missing;
};

// True iff every cataloged forest on N's label set is a base forest of N.
// Needs binary N with |X| <= 5.
UniversalReport is_universal_forest_based(
    const Network& N, long long node_budget = kDefaultNodeBudget);

// Root-or-tree vertex w with two children that each start a hybrid-only
// chain ending at leaves with distinct labels; witness (w, x, y) gives the
// vertex name and both leaf labels.
std::optional<std::array<std::string, 3>> forbidden_configuration(
    const Network& N);

// All binary networks on the first num_labels letters with at most
// max_vertices vertices, one representative per leaf-relabeling equivalence
// class; visit returns false to stop early.
void enumerate_binary_networks(
    int num_labels, int max_vertices,
    const std::function<bool(const Network&)>& visit);

}  // namespace forestnet
