#include "forest_based.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

namespace forestnet {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[b] = a;
    return true;
  }
};

std::vector<int> sorted_by_name(const Digraph& g, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end(),
            [&](int a, int b) { return g.names[a] < g.names[b]; });
  return vs;
}

std::vector<int> reverse_topo(const Network& N) {
  auto ord = *N.g.topo_order();
  std::reverse(ord.begin(), ord.end());
  return ord;
}

}  // namespace

std::vector<int> omnians(const Network& N) {
  std::vector<int> out;
  for (int v = 0; v < N.n(); ++v) {
    if (N.kind[v] == VertexKind::Leaf) continue;
    bool all_hybrid = true;
    for (int c : N.g.kids[v])
      if (N.kind[c] != VertexKind::Hybrid) {
        all_hybrid = false;
        break;
      }
    if (all_hybrid) out.push_back(v);
  }
  return sorted_by_name(N.g, out);
}

GammaGraph gamma_graph(const Network& N) {
  GammaGraph G;
  for (int v = 0; v < N.n(); ++v)
    if (N.is_rh(v)) G.rh.push_back(v);
  G.rh = sorted_by_name(N.g, G.rh);
  for (int h : N.hybrids) {
    int a = N.gamma_of[N.g.pars[h][0]];
    int b = N.gamma_of[N.g.pars[h][1]];
    if (N.g.names[b] < N.g.names[a]) std::swap(a, b);
    G.edges.push_back({a, b, h});
  }
  for (int v : omnians(N)) {
    for (int h : sorted_by_name(N.g, N.g.kids[v])) {
      int other = N.g.pars[h][0] == v ? N.g.pars[h][1] : N.g.pars[h][0];
      G.choices.push_back({v, h, N.gamma_of[other]});
    }
  }
  return G;
}

namespace {

struct PathSearch {
  const Network& N;
  long long budget;
  long long nodes = 0;
  std::vector<int> ord;
  std::vector<std::vector<int>> kids_sorted;
  std::vector<int> path_of;
  std::vector<int> head_of;
  std::vector<int> chosen;

  bool rec(size_t k) {
    if (k == ord.size()) return true;
    int v = ord[k];
    if (N.kind[v] == VertexKind::Leaf) {
      int p = N.label_index(N.g.labels[v]);
      path_of[v] = p;
      head_of[p] = v;
      if (rec(k + 1)) return true;
      path_of[v] = -1;
      head_of[p] = -1;
      return false;
    }
    for (int c : kids_sorted[v]) {
      if (++nodes > budget)
        throw Error(ErrorCode::ResourceExhausted,
                    "path-partition search exceeded the node budget");
      int p = path_of[c];
      if (head_of[p] != c) continue;
      bool chord = false;
      for (int z : kids_sorted[v])
        if (z != c && path_of[z] == p) {
          chord = true;
          break;
        }
      if (chord) continue;
      path_of[v] = p;
      head_of[p] = v;
      chosen[v] = c;
      if (rec(k + 1)) return true;
      path_of[v] = -1;
      head_of[p] = c;
      chosen[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<ForestCertificate> decide_forest_based(const Network& N,
                                                     long long node_budget) {
  if (N.nx() < 2)
    throw Error(ErrorCode::TooFewLeaves,
                "forest-based status needs at least two leaves");
  PathSearch s{N, node_budget, 0, reverse_topo(N), {}, {}, {}, {}};
  s.kids_sorted.resize(N.n());
  for (int v = 0; v < N.n(); ++v)
    s.kids_sorted[v] = sorted_by_name(N.g, N.g.kids[v]);
  s.path_of.assign(N.n(), -1);
  s.head_of.assign(N.nx(), -1);
  s.chosen.assign(N.n(), -1);
  if (!s.rec(0)) return std::nullopt;
  ForestCertificate cert;
  cert.comp = s.path_of;
  for (int v = 0; v < N.n(); ++v)
    if (s.chosen[v] >= 0) cert.retained.emplace_back(v, s.chosen[v]);
  std::sort(cert.retained.begin(), cert.retained.end(),
            [&](const auto& x, const auto& y) {
              return std::make_pair(N.g.names[x.first], N.g.names[x.second]) <
                     std::make_pair(N.g.names[y.first], N.g.names[y.second]);
            });
  return cert;
}

CertCheck verify_certificate(const Network& N, const ForestCertificate& cert) {
  auto fail = [](const std::string& code, const std::string& detail) {
    return CertCheck{false, code + ": " + detail};
  };
  if (static_cast<int>(cert.comp.size()) != N.n())
    return fail("ComponentMismatch",
                "component map must assign every vertex");
  std::set<std::pair<int, int>> ret;
  for (const auto& [t, h] : cert.retained) {
    if (t < 0 || h < 0 || t >= N.n() || h >= N.n() || !N.g.has_arc(t, h))
      return fail("UnknownArc", "retained arc is not an arc of the network");
    if (!ret.emplace(t, h).second)
      return fail("DuplicateArc", "retained arc listed twice");
  }
  std::vector<int> rin(N.n(), 0), rout(N.n(), 0);
  UnionFind uf(N.n());
  for (const auto& [t, h] : ret) {
    if (++rin[h] > 1)
      return fail("IndegreeViolation",
                  "vertex '" + N.g.names[h] + "' keeps two in-arcs");
    ++rout[t];
    if (!uf.unite(t, h))
      return fail("CycleViolation", "retained arcs close an undirected cycle");
  }
  for (int v = 0; v < N.n(); ++v)
    if (N.kind[v] != VertexKind::Leaf && rout[v] == 0)
      return fail("LeafMismatch", "non-leaf '" + N.g.names[v] +
                                      "' has no retained out-arc");
  for (int v = 0; v < N.n(); ++v)
    if (cert.comp[v] < 0)
      return fail("ComponentMismatch",
                  "vertex '" + N.g.names[v] + "' has no component");
  for (int u = 0; u < N.n(); ++u)
    for (int v = u + 1; v < N.n(); ++v) {
      bool same_comp = cert.comp[u] == cert.comp[v];
      bool same_class = uf.find(u) == uf.find(v);
      if (same_comp != same_class)
        return fail("ComponentMismatch",
                    "component map disagrees with the retained forest at '" +
                        N.g.names[u] + "'/'" + N.g.names[v] + "'");
    }
  for (const auto& [t, h] : N.g.all_arcs())
    if (!ret.count({t, h}) && uf.find(t) == uf.find(h))
      return fail("ContactWithinComponent",
                  "contact arc '" + N.g.names[t] + "' -> '" + N.g.names[h] +
                      "' joins vertices of one component");
  return {true, ""};
}

PhyloForest extract_base_forest(const Network& N,
                                const ForestCertificate& cert) {
  auto chk = verify_certificate(N, cert);
  if (!chk.ok) throw Error(ErrorCode::InvalidCertificate, chk.reason);
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < N.n(); ++v) groups[cert.comp[v]].push_back(v);
  if (groups.size() < 2)
    throw Error(ErrorCode::InvalidCertificate,
                "base forest needs at least two components");
  Digraph R;
  for (int v = 0; v < N.n(); ++v) {
    R.add_vertex(N.g.names[v]);
    R.set_label(v, N.g.labels[v]);
  }
  for (const auto& [t, h] : cert.retained) R.add_arc(t, h);
  std::vector<PhyloTree> trees;
  for (const auto& [id, members] : groups) {
    (void)id;
    std::vector<char> keep(N.n(), 0);
    for (int v : members) keep[v] = 1;
    Digraph sub = suppress(filtered(R, keep));
    if (sub.n() == 1) {
      if (sub.labels[0].empty())
        throw Error(ErrorCode::InvalidCertificate,
                    "component suppressed to an unlabeled vertex");
      trees.push_back(solo_tree(sub.names[0], sub.labels[0]));
    } else {
      trees.push_back(tree_from_network(build_network(sub)));
    }
  }
  return make_forest(std::move(trees));
}

void for_each_base_forest(
    const Network& N, long long node_budget,
    const std::function<bool(const std::vector<int>&)>& visit) {
  auto ord = reverse_topo(N);
  std::vector<std::vector<int>> pars_sorted(N.n());
  for (int v = 0; v < N.n(); ++v)
    pars_sorted[v] = sorted_by_name(N.g, N.g.pars[v]);
  auto arcs = N.g.all_arcs();
  std::vector<int> choice(N.n(), -2);
  std::vector<int> kept_out(N.n(), 0);
  long long nodes = 0;
  bool stop = false;

  std::function<void(size_t)> rec = [&](size_t k) {
    if (stop) return;
    if (k == ord.size()) {
      UnionFind uf(N.n());
      for (int v = 0; v < N.n(); ++v)
        if (choice[v] >= 0) uf.unite(choice[v], v);
      for (const auto& [t, h] : arcs)
        if (choice[h] != t && uf.find(t) == uf.find(h)) return;
      if (!visit(choice)) stop = true;
      return;
    }
    int v = ord[k];
    if (N.kind[v] != VertexKind::Leaf && kept_out[v] == 0) return;
    for (int pi = -1; pi < static_cast<int>(pars_sorted[v].size()); ++pi) {
      if (++nodes > node_budget)
        throw Error(ErrorCode::ResourceExhausted,
                    "base-forest enumeration exceeded the node budget");
      int p = pi < 0 ? -1 : pars_sorted[v][pi];
      choice[v] = p;
      if (p >= 0) ++kept_out[p];
      rec(k + 1);
      if (p >= 0) --kept_out[p];
      choice[v] = -2;
      if (stop) return;
    }
  };
  rec(0);
}

ForestCertificate certificate_from_choice(const Network& N,
                                          const std::vector<int>& choice) {
  ForestCertificate cert;
  UnionFind uf(N.n());
  for (int v = 0; v < N.n(); ++v)
    if (choice[v] >= 0) {
      cert.retained.emplace_back(choice[v], v);
      uf.unite(choice[v], v);
    }
  std::map<int, int> ids;
  cert.comp.resize(N.n());
  for (int v = 0; v < N.n(); ++v) {
    int r = uf.find(v);
    auto [it, fresh] = ids.emplace(r, ids.size());
    (void)fresh;
    cert.comp[v] = it->second;
  }
  return cert;
}

std::optional<std::string> base_forest_key(const Network& N,
                                           const std::vector<int>& choice) {
  int n = N.n();
  UnionFind uf(n);
  for (int v = 0; v < n; ++v)
    if (choice[v] >= 0) uf.unite(choice[v], v);
  std::set<int> classes;
  for (int v = 0; v < n; ++v) classes.insert(uf.find(v));
  if (classes.size() < 2) return std::nullopt;

  int blocks = (N.nx() + 63) / 64;
  std::vector<std::vector<uint64_t>> bits(n, std::vector<uint64_t>(blocks, 0));
  std::vector<std::vector<int>> rkids(n);
  for (int v = 0; v < n; ++v)
    if (choice[v] >= 0) rkids[choice[v]].push_back(v);
  for (int v : reverse_topo(N)) {
    if (N.kind[v] == VertexKind::Leaf) {
      int i = N.label_index(N.g.labels[v]);
      bits[v][i / 64] |= uint64_t{1} << (i % 64);
    }
    for (int c : rkids[v])
      for (int b = 0; b < blocks; ++b) bits[v][b] |= bits[c][b];
  }
  std::map<int, std::set<std::vector<uint64_t>>> comp_clusters;
  for (int v = 0; v < n; ++v) comp_clusters[uf.find(v)].insert(bits[v]);
  std::vector<std::string> tree_keys;
  for (const auto& [cls, clus] : comp_clusters) {
    (void)cls;
    std::vector<std::vector<std::string>> named;
    for (const auto& bv : clus) {
      std::vector<std::string> labs;
      for (int i = 0; i < N.nx(); ++i)
        if (bv[i / 64] >> (i % 64) & 1) labs.push_back(N.label_set[i]);
      named.push_back(std::move(labs));
    }
    tree_keys.push_back(key_from_clusters(std::move(named)));
  }
  std::sort(tree_keys.begin(), tree_keys.end());
  std::string out;
  for (const auto& k : tree_keys) {
    if (!out.empty()) out += "|";
    out += k;
  }
  return out;
}

std::optional<std::vector<std::pair<int, int>>> is_based_on(
    const Network& N, const PhyloForest& F, long long node_budget) {
  if (F.label_set() != N.label_set)
    throw Error(ErrorCode::LeafSetMismatch,
                "forest leaf set differs from the network's label set");
  const std::string want = F.canonical_key();
  std::optional<std::vector<std::pair<int, int>>> found;
  for_each_base_forest(N, node_budget, [&](const std::vector<int>& choice) {
    auto key = base_forest_key(N, choice);
    if (key && *key == want) {
      std::vector<std::pair<int, int>> retained;
      for (int v = 0; v < N.n(); ++v)
        if (choice[v] >= 0) retained.emplace_back(choice[v], v);
      found = std::move(retained);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<ColoringCertificate> decide_proper_forest_based(
    const Network& N, long long node_budget) {
  int m = N.m();
  if (m < 2)
    throw Error(ErrorCode::SingleRoot,
                "proper forest-based status needs at least two roots");
  GammaGraph G = gamma_graph(N);
  for (const auto& e : G.edges)
    if (e.a == e.b) return std::nullopt;

  std::vector<int> sigma(N.n(), 0);
  for (int i = 0; i < m; ++i) sigma[N.roots[i]] = i + 1;
  std::vector<std::vector<int>> adj(N.n());
  for (const auto& e : G.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<int, std::vector<std::pair<int, int>>> cho;  // omnian -> (h, gu)
  for (const auto& c : G.choices)
    cho[c.omnian].emplace_back(c.hybrid_child, c.other_gamma);

  auto omnians_ok = [&]() {
    for (const auto& [v, list] : cho) {
      (void)v;
      bool ok = false;
      for (const auto& [h, gu] : list)
        if (sigma[h] != sigma[gu]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  auto c2_ok = [&]() {
    for (int i = 1; i <= m; ++i) {
      std::vector<char> vis(N.n(), 0);
      std::vector<int> stack{N.roots[i - 1]};
      vis[N.roots[i - 1]] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : N.g.kids[v]) {
          if (vis[c]) continue;
          if (N.kind[c] == VertexKind::Hybrid && sigma[c] != i) continue;
          vis[c] = 1;
          stack.push_back(c);
        }
      }
      for (int h : N.hybrids)
        if (sigma[h] == i && !vis[h]) return false;
    }
    return true;
  };

  const std::vector<int>& hyb = N.hybrids;
  long long nodes = 0;
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == hyb.size()) return omnians_ok() && c2_ok();
    int h = hyb[k];
    for (int c = 1; c <= m; ++c) {
      if (++nodes > node_budget)
        throw Error(ErrorCode::ResourceExhausted,
                    "coloring search exceeded the node budget");
      bool clash = false;
      for (int w : adj[h])
        if (sigma[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      sigma[h] = c;
      if (rec(k + 1)) return true;
      sigma[h] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;

  ColoringCertificate cert;
  cert.sigma = sigma;
  for (const auto& [v, list] : cho) {
    (void)v;
    for (const auto& [h, gu] : list)
      if (sigma[h] != sigma[gu]) {
        cert.extension.emplace_back(gu, h);
        break;
      }
  }
  return cert;
}

ForestCertificate certificate_from_coloring(const Network& N,
                                            const ColoringCertificate& col) {
  std::vector<int> cls(N.n());
  for (int v = 0; v < N.n(); ++v) cls[v] = col.sigma[N.gamma_of[v]];
  ForestCertificate cert;
  cert.comp.resize(N.n());
  for (int v = 0; v < N.n(); ++v) cert.comp[v] = cls[v] - 1;
  for (const auto& [t, h] : N.g.all_arcs())
    if (cls[t] == cls[h]) cert.retained.emplace_back(t, h);
  return cert;
}

namespace {

// BFS bipartiteness; returns an odd closed walk (vertex list) through `cycle`
// when the graph is not bipartite.
bool bipartition(const Network& N,
                 const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& seeds, std::vector<int>& color,
                 std::vector<int>& cycle) {
  std::vector<std::vector<int>> adj(N.n());
  for (const auto& [a, b] : edges) {
    if (a == b) {
      cycle = {a};
      return false;
    }
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  color.assign(N.n(), -1);
  std::vector<int> par(N.n(), -1), depth(N.n(), 0);
  for (int s : seeds) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          par[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          int x = v, y = w;
          std::vector<int> px{x}, py{y};
          while (depth[x] > depth[y]) px.push_back(x = par[x]);
          while (depth[y] > depth[x]) py.push_back(y = par[y]);
          while (x != y) {
            px.push_back(x = par[x]);
            py.push_back(y = par[y]);
          }
          cycle = px;  // v .. lca
          for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
            cycle.push_back(*it);  // .. back down to w
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TwoRootedWitness decide_proper_two_rooted(const Network& N,
                                          long long node_budget) {
  if (N.m() != 2)
    throw Error(ErrorCode::NotTwoRooted,
                "decider needs exactly two roots, got " +
                    std::to_string(N.m()));
  for (int h : N.hybrids)
    if (N.g.indeg(h) != 2)
      throw Error(ErrorCode::NotSemiBinary,
                  "hybrid '" + N.g.names[h] + "' is not semi-binary");
  GammaGraph G = gamma_graph(N);
  TwoRootedWitness w;
  std::vector<std::pair<int, int>> base;
  for (const auto& e : G.edges) base.emplace_back(e.a, e.b);

  std::vector<int> seeds = G.rh;
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> groups;
  for (const auto& c : G.choices) {
    if (groups.empty() || groups.back().first != c.omnian)
      groups.push_back({c.omnian, {}});
    groups.back().second.emplace_back(c.other_gamma, c.hybrid_child);
  }

  std::vector<int> pick(groups.size(), 0);
  long long nodes = 0;
  std::vector<int> first_cycle;
  bool have_first_cycle = false;

  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == groups.size()) {
      auto edges = base;
      std::vector<std::pair<int, int>> ext;
      for (size_t i = 0; i < groups.size(); ++i) {
        ext.push_back(groups[i].second[pick[i]]);
        edges.push_back(ext.back());
      }
      std::vector<int> color, cycle;
      if (bipartition(N, edges, seeds, color, cycle)) {
        w.proper = true;
        w.extension = std::move(ext);
        w.coloring = std::move(color);
        return true;
      }
      if (!have_first_cycle) {
        first_cycle = cycle;
        have_first_cycle = true;
      }
      return false;
    }
    for (size_t i = 0; i < groups[k].second.size(); ++i) {
      if (++nodes > node_budget)
        throw Error(ErrorCode::ResourceExhausted,
                    "omni-extension enumeration exceeded the node budget");
      pick[k] = static_cast<int>(i);
      if (rec(k + 1)) return true;
    }
    return false;
  };
  if (rec(0)) return w;
  w.proper = false;
  w.odd_cycle = first_cycle;
  return w;
}

ArborealResult arboreal_forest_based(const Network& N) {
  if (!is_arboreal(N))
    throw Error(ErrorCode::NotArboreal,
                "underlying undirected graph is not a tree");
  if (N.nx() < 2)
    throw Error(ErrorCode::TooFewLeaves,
                "forest-based status needs at least two leaves");
  ArborealResult R;
  if (N.hybrids.empty()) {
    R.forest_based = true;
    R.cert = decide_forest_based(N);
    return R;
  }

  std::vector<int> mu_verts;
  for (int h : N.hybrids)
    for (int p : N.g.pars[h]) mu_verts.push_back(p);
  std::sort(mu_verts.begin(), mu_verts.end());
  mu_verts.erase(std::unique(mu_verts.begin(), mu_verts.end()),
                 mu_verts.end());
  mu_verts = sorted_by_name(N.g, mu_verts);
  std::vector<int> mu_idx(N.n(), -1);
  for (size_t i = 0; i < mu_verts.size(); ++i) mu_idx[mu_verts[i]] = i;

  struct MuEdge {
    int p, q, hybrid;
  };
  std::vector<MuEdge> edges;
  for (int h : N.hybrids) {
    int p = N.g.pars[h][0], q = N.g.pars[h][1];
    if (N.g.names[q] < N.g.names[p]) std::swap(p, q);
    edges.push_back({p, q, h});
  }
  std::vector<std::vector<std::pair<int, int>>> adj(mu_verts.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[mu_idx[edges[e].p]].emplace_back(mu_idx[edges[e].q], e);
    adj[mu_idx[edges[e].q]].emplace_back(mu_idx[edges[e].p], e);
  }
  for (auto& a : adj)
    std::sort(a.begin(), a.end(), [&](const auto& x, const auto& y) {
      return N.g.names[mu_verts[x.first]] < N.g.names[mu_verts[y.first]];
    });

  std::vector<char> is_omn(N.n(), 0);
  for (int v : omnians(N)) is_omn[v] = 1;

  UnionFind uf(static_cast<int>(mu_verts.size()));
  for (const auto& e : edges) uf.unite(mu_idx[e.p], mu_idx[e.q]);
  std::map<int, std::vector<int>> comps;  // class -> mu indices
  for (size_t i = 0; i < mu_verts.size(); ++i)
    comps[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));

  for (const auto& [cls, members] : comps) {
    (void)cls;
    bool has_escape = false;
    for (int i : members)
      if (!is_omn[mu_verts[i]]) {
        has_escape = true;
        break;
      }
    if (!has_escape) {
      R.forest_based = false;
      for (int i : members) R.witness_component.push_back(N.g.names[mu_verts[i]]);
      std::sort(R.witness_component.begin(), R.witness_component.end());
      return R;
    }
  }
  R.forest_based = true;

  for (size_t s = 0; s < mu_verts.size(); ++s) {
    if (!is_omn[mu_verts[s]]) continue;
    std::vector<int> par(mu_verts.size(), -1);
    std::vector<char> vis(mu_verts.size(), 0);
    std::vector<int> queue{static_cast<int>(s)};
    vis[s] = 1;
    int goal = -1;
    for (size_t qi = 0; qi < queue.size() && goal < 0; ++qi) {
      int v = queue[qi];
      if (!is_omn[mu_verts[v]]) {
        goal = v;
        break;
      }
      for (const auto& [wn, e] : adj[v]) {
        (void)e;
        if (!vis[wn]) {
          vis[wn] = 1;
          par[wn] = v;
          queue.push_back(wn);
        }
      }
    }
    std::vector<std::string> path;
    for (int v = goal; v >= 0; v = par[v]) path.push_back(N.g.names[mu_verts[v]]);
    std::reverse(path.begin(), path.end());
    R.sequences[N.g.names[mu_verts[s]]] = std::move(path);
  }

  std::set<std::pair<int, int>> removed;
  std::vector<char> edge_used(edges.size(), 0);
  for (const auto& [cls, members] : comps) {
    (void)cls;
    int root = -1;
    for (int i : members)
      if (!is_omn[mu_verts[i]] &&
          (root < 0 || N.g.names[mu_verts[i]] < N.g.names[mu_verts[root]]))
        root = i;
    std::vector<char> vis(mu_verts.size(), 0);
    std::vector<int> queue{root};
    vis[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (const auto& [wn, e] : adj[v]) {
        if (vis[wn]) continue;
        vis[wn] = 1;
        queue.push_back(wn);
        edge_used[e] = 1;
        // child wn keeps its arc into the shared hybrid; parent v loses its
        removed.emplace(mu_verts[v], edges[e].hybrid);
      }
    }
  }
  for (char u : edge_used)
    if (!u)
      throw std::logic_error("mu graph of an arboreal network must be a forest");

  ForestCertificate cert;
  for (const auto& [t, h] : N.g.all_arcs())
    if (!removed.count({t, h})) cert.retained.emplace_back(t, h);
  UnionFind cuf(N.n());
  for (const auto& [t, h] : cert.retained) cuf.unite(t, h);
  std::map<int, int> ids;
  cert.comp.resize(N.n());
  for (int v = 0; v < N.n(); ++v) {
    auto [it, fresh] = ids.emplace(cuf.find(v), ids.size());
    (void)fresh;
    cert.comp[v] = it->second;
  }
  auto chk = verify_certificate(N, cert);
  if (!chk.ok)
    throw std::logic_error("arboreal certificate failed verification: " +
                           chk.reason);
  R.cert = std::move(cert);
  return R;
}

std::string print_certificate(const Network& N,
                              const ForestCertificate& cert) {
  std::vector<std::string> retain_lines, comp_lines;
  for (const auto& [t, h] : cert.retained)
    retain_lines.push_back("retain " + N.g.names[t] + " " + N.g.names[h]);
  std::sort(retain_lines.begin(), retain_lines.end());
  std::vector<std::pair<std::string, int>> by_name;
  for (int v = 0; v < N.n(); ++v) by_name.emplace_back(N.g.names[v], v);
  std::sort(by_name.begin(), by_name.end());
  for (const auto& [name, v] : by_name)
    comp_lines.push_back("comp " + name + " " + std::to_string(cert.comp[v]));
  std::string out;
  for (const auto& l : retain_lines) out += l + "\n";
  for (const auto& l : comp_lines) out += l + "\n";
  return out;
}

ForestCertificate parse_certificate(const Network& N,
                                    const std::string& text) {
  ForestCertificate cert;
  cert.comp.assign(N.n(), -1);
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == '#') continue;
    if (tok == "retain") {
      std::string t, h, extra;
      if (!(ls >> t >> h) || (ls >> extra))
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) +
                        ": expected 'retain TAIL HEAD'");
      cert.retained.emplace_back(N.g.require(t), N.g.require(h));
    } else if (tok == "comp") {
      std::string v, k, extra;
      if (!(ls >> v >> k) || (ls >> extra))
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) +
                        ": expected 'comp VERTEX INDEX'");
      int idx;
      try {
        idx = std::stoi(k);
      } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) +
                        ": component index must be an integer");
      }
      cert.comp[N.g.require(v)] = idx;
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "line " + std::to_string(lineno) + ": unknown directive '" +
                      tok + "'");
    }
  }
  return cert;
}

std::string print_coloring(const Network& N, const ColoringCertificate& col) {
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, int>> by_name;
  for (int v = 0; v < N.n(); ++v)
    if (col.sigma[v] > 0) by_name.emplace_back(N.g.names[v], v);
  std::sort(by_name.begin(), by_name.end());
  std::string out;
  for (const auto& [name, v] : by_name)
    out += "color " + name + " " + std::to_string(col.sigma[v]) + "\n";
  std::vector<std::string> ext;
  for (const auto& [gu, h] : col.extension)
    ext.push_back("extend " + N.g.names[gu] + " " + N.g.names[h]);
  std::sort(ext.begin(), ext.end());
  for (const auto& l : ext) out += l + "\n";
  return out;
}

}  // namespace forestnet
