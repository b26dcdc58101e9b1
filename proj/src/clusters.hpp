#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forest.hpp"
#include "network.hpp"

namespace forestnet {

// Ground set is the sorted union of all members; members hold sorted indices
// into `ground`, deduplicated and stored in lexicographic order.
struct ClusterSystem {
  std::vector<std::string> ground;
  std::vector<std::vector<int>> members;
  bool operator==(const ClusterSystem&) const = default;
  std::vector<std::string> labels_of(const std::vector<int>& member) const;
};

ClusterSystem normalize_clusters(
    const std::vector<std::vector<std::string>>& raw);
ClusterSystem cluster_system(const Network& N);

// One cluster per line, labels comma separated; canonical form sorts labels
// within a line and lines as strings.
ClusterSystem parse_cluster_text(const std::string& text);
std::string print_cluster_text(const ClusterSystem& cs);

// All singletons, the full ground set, and pairwise laminar members.
bool is_hierarchy(const ClusterSystem& cs);

// Hasse diagram of a hierarchy; throws NotAHierarchy otherwise.
PhyloTree tree_from_hierarchy(const ClusterSystem& cs);

struct P123Report {
  bool p1 = true;  // each maximal cluster's restriction is a hierarchy
  bool p2 = true;  // intersection graph of maximal clusters is connected
  bool p3 = true;  // pairwise intersections of maximal clusters are members
  std::string detail;
  bool ok() const { return p1 && p2 && p3; }
};

P123Report check_P1_P2_P3(const ClusterSystem& cs);

// Grafting reconstruction of an arboreal network realizing `cs`; throws
// PropertiesViolated when the system cannot be realized.
Network arboreal_from_clusters(const ClusterSystem& cs);

// One reconstruction per constructible processing order of the maximal
// clusters; empty when no order grafts to completion.
std::vector<Network> arboreal_from_clusters_variants(const ClusterSystem& cs);

// True when every realization of `cs` is the same network: no constructible
// graft order repeats an overlap cluster, so no realization stacks hybrids
// (vacuously true when nothing grafts to completion). Needs P1..P3 to hold
// first (PropertiesViolated otherwise).
bool is_uniquely_determined(const ClusterSystem& cs);

// Arcs whose endpoints are both hybrid, as sorted name pairs.
std::vector<std::pair<std::string, std::string>> bad_arcs(const Network& N);

// Contract bad arcs one at a time, smallest name pair first, until none are
// left. The result can have vertices of in-degree above two, hence a digraph.
Digraph collapse_bad_arcs(const Network& N);

struct TransferReport {
  bool first_forest_based = false;
  bool second_forest_based = false;
  bool agree = false;
};

// Both networks must be arboreal with identical cluster systems.
TransferReport same_clusters_transfer(const Network& a, const Network& b);

}  // namespace forestnet
