#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forest.hpp"
#include "network.hpp"

namespace forestnet {

inline constexpr long long kDefaultNodeBudget = 1'000'000;

// Subdivision-forest certificate: the retained arcs A' and a component index
// per vertex. Contact arcs are A - A', derived.
struct ForestCertificate {
  std::vector<std::pair<int, int>> retained;
  std::vector<int> comp;
};

struct CertCheck {
  bool ok;
  std::string reason;  // empty when ok, else "<Code>: detail"
};

// Undirected graph on roots+hybrids, one edge per hybrid joining its parents'
// gamma images (loops allowed), plus the omnian child-choice table.
struct GammaGraph {
  std::vector<int> rh;  // sorted by vertex name
  struct Edge {
    int a, b, hybrid;
  };
  std::vector<Edge> edges;
  struct Choice {
    int omnian, hybrid_child, other_gamma;
  };
  std::vector<Choice> choices;
};

// sigma over RH (1..m; 0 for non-RH vertices) plus the chosen omni-extension
// edges, one (other_gamma, hybrid_child) pair per omnian.
struct ColoringCertificate {
  std::vector<int> sigma;
  std::vector<std::pair<int, int>> extension;
};

struct TwoRootedWitness {
  bool proper = false;
  std::vector<std::pair<int, int>> extension;  // (other_gamma, hybrid_child)
  std::vector<int> coloring;   // 0/1 on RH, -1 elsewhere (when proper)
  std::vector<int> odd_cycle;  // odd closed walk on RH (when not proper)
};

struct ArborealResult {
  bool forest_based = false;
  std::optional<ForestCertificate> cert;
  // Per omnian: the mu(N) walk from it to a vertex owning a non-hybrid child.
  std::map<std::string, std::vector<std::string>> sequences;
  std::vector<std::string> witness_component;  // all-omnian component when not
};

// Non-leaf vertices all of whose children are hybrid, sorted by name.
std::vector<int> omnians(const Network& N);
GammaGraph gamma_graph(const Network& N);

// Exact decider: partition of V(N) into |X| directed paths, one per leaf,
// no arc of N joining non-consecutive vertices of one path. Deterministic
// (reverse topological processing, smallest-name tie-breaks).
std::optional<ForestCertificate> decide_forest_based(
    const Network& N, long long node_budget = kDefaultNodeBudget);

CertCheck verify_certificate(const Network& N, const ForestCertificate& cert);
PhyloForest extract_base_forest(const Network& N,
                                const ForestCertificate& cert);

std::optional<std::vector<std::pair<int, int>>> is_based_on(
    const Network& N, const PhyloForest& F,
    long long node_budget = kDefaultNodeBudget);

std::optional<ColoringCertificate> decide_proper_forest_based(
    const Network& N, long long node_budget = kDefaultNodeBudget);

// Converts a proper coloring into the color-class forest certificate.
ForestCertificate certificate_from_coloring(const Network& N,
                                            const ColoringCertificate& col);

TwoRootedWitness decide_proper_two_rooted(
    const Network& N, long long node_budget = kDefaultNodeBudget);

ArborealResult arboreal_forest_based(const Network& N);

// Enumerates every valid certificate through per-vertex retained-in-arc
// choices (choice[v] = kept parent or -1); visit returns false to stop early.
void for_each_base_forest(
    const Network& N, long long node_budget,
    const std::function<bool(const std::vector<int>&)>& visit);

ForestCertificate certificate_from_choice(const Network& N,
                                          const std::vector<int>& choice);

// Canonical key of the base forest realized by a choice vector; nullopt when
// the retained graph has a single component (a lone tree is not a forest).
std::optional<std::string> base_forest_key(const Network& N,
                                           const std::vector<int>& choice);

// Text form: 'retain TAIL HEAD' and 'comp VERTEX INDEX' lines.
std::string print_certificate(const Network& N, const ForestCertificate& cert);
ForestCertificate parse_certificate(const Network& N, const std::string& text);
std::string print_coloring(const Network& N, const ColoringCertificate& col);

}  // namespace forestnet
