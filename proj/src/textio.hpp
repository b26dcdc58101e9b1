#pragma once

#include <string>

#include "forest.hpp"
#include "forest_based.hpp"
#include "network.hpp"

namespace forestnet {

// Line grammar shared by network and forest files:
//   arc TAIL HEAD
//   leaf VERTEX LABEL
// plus blank lines and full-line '#' comments. Ids match [A-Za-z0-9_]+.
Digraph parse_network_text(const std::string& text);

// Canonical form: sorted arc lines, then sorted leaf lines.
std::string print_network_text(const Digraph& g);
std::string print_network_text(const Network& N);

// Every weak component must be a tree; an isolated labeled vertex is a
// single-vertex tree.
PhyloForest parse_forest_text(const std::string& text);
std::string print_forest_text(const PhyloForest& F);

// Contact arcs drawn dashed and components colored when a certificate is
// supplied.
std::string export_dot(const Network& N,
                       const ForestCertificate* cert = nullptr);

// One-way import of a single-rooted tree; branch lengths are dropped.
Digraph parse_newick(const std::string& text);

}  // namespace forestnet
