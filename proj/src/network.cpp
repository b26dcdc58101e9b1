#include "network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forestnet {

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Root: return "root";
    case VertexKind::Leaf: return "leaf";
    case VertexKind::TreeVertex: return "tree";
    case VertexKind::Hybrid: return "hybrid";
  }
  return "?";
}

int Network::label_index(const std::string& label) const {
  auto it = std::lower_bound(label_set.begin(), label_set.end(), label);
  if (it == label_set.end() || *it != label) return -1;
  return static_cast<int>(it - label_set.begin());
}

Network build_network(const Digraph& raw) {
  Network N;
  N.g = raw;
  const Digraph& g = N.g;
  if (g.n() == 0)
    throw Error(ErrorCode::Disconnected, "empty digraph is not a network");

  for (int v = 0; v < g.n(); ++v) {
    std::set<int> seen;
    for (int c : g.kids[v]) {
      if (c == v)
        throw Error(ErrorCode::CycleDetected,
                    "loop at vertex '" + g.names[v] + "'");
      if (!seen.insert(c).second)
        throw Error(ErrorCode::ParallelArc, "parallel arc '" + g.names[v] +
                                                "' -> '" + g.names[c] + "'");
    }
  }
  auto topo = g.topo_order();
  if (!topo)
    throw Error(ErrorCode::CycleDetected, "digraph contains a directed cycle");
  if (!g.is_connected())
    throw Error(ErrorCode::Disconnected,
                "underlying undirected graph is not connected");

  N.kind.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    int din = g.indeg(v), dout = g.outdeg(v);
    if (din == 0) {
      if (dout < 2)
        throw Error(ErrorCode::RootOutdegreeOne,
                    "root '" + g.names[v] + "' has outdegree " +
                        std::to_string(dout) + " (need >= 2)");
      N.kind[v] = VertexKind::Root;
    } else if (din >= 2) {
      if (din != 2 || dout != 1)
        throw Error(ErrorCode::NonSemiBinaryHybrid,
                    "hybrid '" + g.names[v] + "' must have indegree 2 and "
                    "outdegree 1 (got " + std::to_string(din) + "/" +
                        std::to_string(dout) + ")");
      N.kind[v] = VertexKind::Hybrid;
    } else {
      N.kind[v] = dout == 0 ? VertexKind::Leaf : VertexKind::TreeVertex;
    }
    if (N.kind[v] == VertexKind::Leaf) {
      if (g.labels[v].empty())
        throw Error(ErrorCode::UnlabeledLeaf,
                    "leaf '" + g.names[v] + "' carries no label");
    } else if (!g.labels[v].empty()) {
      throw Error(ErrorCode::UnlabeledLeaf,
                  "label '" + g.labels[v] + "' sits on non-leaf vertex '" +
                      g.names[v] + "'; labels must be a bijection onto the "
                      "leaf set");
    }
  }

  std::map<std::string, int> by_label;
  for (int v = 0; v < g.n(); ++v) {
    if (g.labels[v].empty()) continue;
    auto [it, fresh] = by_label.emplace(g.labels[v], v);
    if (!fresh)
      throw Error(ErrorCode::DuplicateLabel,
                  "label '" + g.labels[v] + "' used by vertices '" +
                      g.names[it->second] + "' and '" + g.names[v] + "'");
  }
  for (const auto& [label, v] : by_label) {
    (void)v;
    N.label_set.push_back(label);
  }

  std::vector<std::pair<std::string, int>> named;
  for (int v = 0; v < g.n(); ++v) named.emplace_back(g.names[v], v);
  std::sort(named.begin(), named.end());
  for (const auto& [name, v] : named) {
    (void)name;
    switch (N.kind[v]) {
      case VertexKind::Root: N.roots.push_back(v); break;
      case VertexKind::Leaf: N.leaves.push_back(v); break;
      case VertexKind::Hybrid: N.hybrids.push_back(v); break;
      case VertexKind::TreeVertex: break;
    }
  }

  N.clusters.assign(g.n(), {});
  for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
    int v = *it;
    if (N.kind[v] == VertexKind::Leaf) {
      N.clusters[v] = {N.label_index(g.labels[v])};
      continue;
    }
    std::set<int> acc;
    for (int c : g.kids[v]) acc.insert(N.clusters[c].begin(), N.clusters[c].end());
    N.clusters[v].assign(acc.begin(), acc.end());
  }

  N.gamma_of.assign(g.n(), -1);
  for (int v : *topo)
    N.gamma_of[v] = N.is_rh(v) ? v : N.gamma_of[g.pars[v][0]];

  return N;
}

VertexKind vertex_kind(const Network& N, const std::string& name) {
  return N.kind[N.g.require(name)];
}

std::vector<std::string> cluster_of(const Network& N, const std::string& name) {
  int v = N.g.require(name);
  std::vector<std::string> out;
  for (int i : N.clusters[v]) out.push_back(N.label_set[i]);
  return out;
}

int gamma(const Network& N, int v) { return N.gamma_of[v]; }

std::string gamma(const Network& N, const std::string& name) {
  return N.g.names[N.gamma_of[N.g.require(name)]];
}

bool is_binary(const Network& N) {
  for (int v = 0; v < N.n(); ++v) {
    VertexKind k = N.kind[v];
    if ((k == VertexKind::Root || k == VertexKind::TreeVertex) &&
        N.g.outdeg(v) != 2)
      return false;
  }
  return true;
}

bool is_arboreal(const Network& N) {
  return N.g.arc_count() == N.n() - 1;
}

Digraph subdivide_arc(const Network& N, const std::string& tail,
                      const std::string& head) {
  return subdivide_arc(N.g, N.g.require(tail), N.g.require(head));
}

bool are_equivalent(const Network& a, const Network& b) {
  return are_equivalent(a.g, b.g, true);
}

}  // namespace forestnet
