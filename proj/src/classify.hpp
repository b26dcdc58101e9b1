#pragma once

#include <optional>

#include "network.hpp"

namespace forestnet {

struct ClassReport {
  bool tree_child = false;
  bool tree_sibling = false;
  bool reticulation_visible = false;
  bool arboreal = false;
  // Present only for binary single-rooted networks.
  std::optional<bool> tree_based;
};

// Every non-leaf vertex has a child of in-degree one.
bool is_tree_child(const Network& N);

// Every hybrid shares a parent with a distinct vertex of in-degree one.
bool is_tree_sibling(const Network& N);

// Removing any single hybrid cuts some leaf off from all roots.
bool is_reticulation_visible(const Network& N);

// Matching criterion for binary single-rooted networks; throws NotSingleRoot
// or NotBinary when the preconditions fail.
bool is_tree_based_phylo(const Network& N);

ClassReport classify_all(const Network& N);

}  // namespace forestnet
