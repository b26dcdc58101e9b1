#include "digraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace forestnet {

int Digraph::add_vertex(const std::string& name) {
  if (index.count(name))
    throw Error(ErrorCode::SyntaxError, "duplicate vertex name '" + name + "'");
  int v = n();
  names.push_back(name);
  labels.emplace_back();
  kids.emplace_back();
  pars.emplace_back();
  index.emplace(name, v);
  return v;
}

int Digraph::ensure_vertex(const std::string& name) {
  auto it = index.find(name);
  if (it != index.end()) return it->second;
  return add_vertex(name);
}

int Digraph::find(const std::string& name) const {
  auto it = index.find(name);
  return it == index.end() ? -1 : it->second;
}

int Digraph::require(const std::string& name) const {
  int v = find(name);
  if (v < 0)
    throw Error(ErrorCode::UnknownVertex, "no vertex named '" + name + "'");
  return v;
}

void Digraph::add_arc(int tail, int head) {
  kids[tail].push_back(head);
  pars[head].push_back(tail);
}

bool Digraph::has_arc(int tail, int head) const {
  const auto& k = kids[tail];
  return std::find(k.begin(), k.end(), head) != k.end();
}

void Digraph::set_label(int v, const std::string& label) { labels[v] = label; }

int Digraph::arc_count() const {
  int m = 0;
  for (const auto& k : kids) m += static_cast<int>(k.size());
  return m;
}

std::vector<std::pair<int, int>> Digraph::all_arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arc_count());
  for (int v = 0; v < n(); ++v)
    for (int c : kids[v]) out.emplace_back(v, c);
  return out;
}

std::optional<std::vector<int>> Digraph::topo_order() const {
  std::vector<int> deg(n());
  for (int v = 0; v < n(); ++v) deg[v] = indeg(v);
  std::set<std::pair<std::string, int>> ready;
  for (int v = 0; v < n(); ++v)
    if (deg[v] == 0) ready.emplace(names[v], v);
  std::vector<int> order;
  order.reserve(n());
  while (!ready.empty()) {
    int v = ready.begin()->second;
    ready.erase(ready.begin());
    order.push_back(v);
    for (int c : kids[v])
      if (--deg[c] == 0) ready.emplace(names[c], c);
  }
  if (static_cast<int>(order.size()) != n()) return std::nullopt;
  return order;
}

std::vector<int> Digraph::weak_components() const {
  std::vector<int> comp(n(), -1);
  int next = 0;
  for (int s = 0; s < n(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& adj : {kids[v], pars[v]})
        for (int w : adj)
          if (comp[w] < 0) {
            comp[w] = next;
            stack.push_back(w);
          }
    }
    ++next;
  }
  return comp;
}

int Digraph::weak_component_count() const {
  auto comp = weak_components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Digraph::is_connected() const { return weak_component_count() <= 1; }

Digraph Digraph::from_arcs(
    const std::vector<std::pair<std::string, std::string>>& arcs,
    const std::vector<std::pair<std::string, std::string>>& leaf_labels) {
  Digraph g;
  for (const auto& [t, h] : arcs) {
    int ti = g.ensure_vertex(t);
    int hi = g.ensure_vertex(h);
    g.add_arc(ti, hi);
  }
  for (const auto& [v, lab] : leaf_labels) g.set_label(g.ensure_vertex(v), lab);
  return g;
}

Digraph filtered(const Digraph& g, const std::vector<char>& keep) {
  Digraph out;
  std::vector<int> remap(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (keep[v]) {
      remap[v] = out.add_vertex(g.names[v]);
      out.set_label(remap[v], g.labels[v]);
    }
  for (int v = 0; v < g.n(); ++v) {
    if (!keep[v]) continue;
    for (int c : g.kids[v])
      if (keep[c]) out.add_arc(remap[v], remap[c]);
  }
  return out;
}

static std::string fresh_subdivision_name(const Digraph& g) {
  for (int k = 0;; ++k) {
    std::string cand = "_s" + std::to_string(k);
    if (!g.index.count(cand)) return cand;
  }
}

Digraph subdivide_arc(const Digraph& g, int tail, int head,
                      const std::string& fresh_name) {
  if (tail < 0 || head < 0 || tail >= g.n() || head >= g.n() ||
      !g.has_arc(tail, head))
    throw Error(ErrorCode::UnknownArc, "no such arc to subdivide");
  Digraph out = g;
  auto& k = out.kids[tail];
  k.erase(std::find(k.begin(), k.end(), head));
  auto& p = out.pars[head];
  p.erase(std::find(p.begin(), p.end(), tail));
  std::string wname = fresh_name.empty() ? fresh_subdivision_name(out) : fresh_name;
  int w = out.add_vertex(wname);
  out.add_arc(tail, w);
  out.add_arc(w, head);
  return out;
}

Digraph suppress(const Digraph& g) {
  int n = g.n();
  std::vector<char> alive(n, 1);
  std::vector<std::set<int>> K(n), P(n);
  for (int v = 0; v < n; ++v)
    for (int c : g.kids[v]) {
      K[v].insert(c);
      P[c].insert(v);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || !g.labels[v].empty()) continue;
      if (P[v].size() == 1 && K[v].size() == 1) {
        int p = *P[v].begin();
        int c = *K[v].begin();
        if (p == v || c == v) continue;
        K[p].erase(v);
        P[c].erase(v);
        K[v].clear();
        P[v].clear();
        K[p].insert(c);
        P[c].insert(p);
        alive[v] = 0;
        changed = true;
      } else if (P[v].empty() && K[v].size() == 1) {
        int c = *K[v].begin();
        P[c].erase(v);
        K[v].clear();
        alive[v] = 0;
        changed = true;
      }
    }
  }
  Digraph out;
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v)
    if (alive[v]) {
      remap[v] = out.add_vertex(g.names[v]);
      out.set_label(remap[v], g.labels[v]);
    }
  for (int v = 0; v < n; ++v)
    if (alive[v])
      for (int c : K[v]) out.add_arc(remap[v], remap[c]);
  return out;
}

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
}  // namespace

Digraph contract_arcs(const Digraph& g,
                      const std::vector<std::pair<int, int>>& arcs) {
  for (const auto& [t, h] : arcs)
    if (t < 0 || h < 0 || t >= g.n() || h >= g.n() || !g.has_arc(t, h))
      throw Error(ErrorCode::UnknownArc, "no such arc to contract");
  UnionFind uf(g.n());
  for (const auto& [t, h] : arcs) uf.unite(t, h);

  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.n(); ++v) groups[uf.find(v)].push_back(v);

  std::map<int, std::string> gname;
  std::map<int, std::string> glabel;
  for (auto& [rep, members] : groups) {
    std::string best = g.names[members.front()];
    std::string label;
    int labeled = 0;
    for (int v : members) {
      best = std::min(best, g.names[v]);
      if (!g.labels[v].empty()) {
        ++labeled;
        label = g.labels[v];
      }
    }
    if (labeled > 1)
      throw Error(ErrorCode::ContractionHitsLeafPair,
                  "contraction would merge two labeled vertices");
    gname[rep] = best;
    glabel[rep] = label;
  }

  std::vector<std::pair<std::string, int>> order;
  for (auto& [rep, name] : gname) order.emplace_back(name, rep);
  std::sort(order.begin(), order.end());

  Digraph out;
  std::map<int, int> remap;
  for (auto& [name, rep] : order) {
    int v = out.add_vertex(name);
    out.set_label(v, glabel[rep]);
    remap[rep] = v;
  }
  std::set<std::pair<int, int>> seen;
  for (int v = 0; v < g.n(); ++v)
    for (int c : g.kids[v]) {
      int a = remap[uf.find(v)];
      int b = remap[uf.find(c)];
      if (a == b) continue;
      if (seen.emplace(a, b).second) out.add_arc(a, b);
    }
  if (!out.is_acyclic())
    throw Error(ErrorCode::CycleDetected, "contraction created a cycle");
  return out;
}

namespace {

// Shared-palette Weisfeiler-Leman refinement over two graphs.
void wl_refine(const Digraph& a, const Digraph& b, bool use_labels,
               std::vector<long long>& ca, std::vector<long long>& cb) {
  std::map<std::string, long long> palette;
  auto intern = [&palette](const std::string& sig) {
    auto [it, fresh] = palette.emplace(sig, palette.size());
    (void)fresh;
    return it->second;
  };
  auto seed = [&](const Digraph& g, std::vector<long long>& col) {
    col.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
      std::string sig = std::to_string(g.indeg(v)) + "," +
                        std::to_string(g.outdeg(v));
      if (use_labels) sig += "," + g.labels[v];
      col[v] = intern(sig);
    }
  };
  seed(a, ca);
  seed(b, cb);
  size_t palette_size = palette.size();
  for (int round = 0; round < a.n() + 2; ++round) {
    auto step = [&](const Digraph& g, const std::vector<long long>& col,
                    std::vector<long long>& next) {
      next.resize(g.n());
      for (int v = 0; v < g.n(); ++v) {
        std::vector<long long> ks, ps;
        for (int c : g.kids[v]) ks.push_back(col[c]);
        for (int p : g.pars[v]) ps.push_back(col[p]);
        std::sort(ks.begin(), ks.end());
        std::sort(ps.begin(), ps.end());
        std::string sig = std::to_string(col[v]) + "/k";
        for (long long x : ks) sig += ":" + std::to_string(x);
        sig += "/p";
        for (long long x : ps) sig += ":" + std::to_string(x);
        next[v] = intern(sig);
      }
    };
    std::vector<long long> na, nb;
    step(a, ca, na);
    step(b, cb, nb);
    ca = std::move(na);
    cb = std::move(nb);
    if (palette.size() == palette_size) break;
    palette_size = palette.size();
  }
}

struct IsoSearch {
  const Digraph& A;
  const Digraph& B;
  bool respect;
  std::vector<long long> colA, colB;
  std::vector<int> map_ab, map_ba;
  std::vector<int> order;

  bool compatible(int u, int v) const {
    if (colA[u] != colB[v]) return false;
    if (respect && A.labels[u] != B.labels[v]) return false;
    if (!respect && (A.labels[u].empty() != B.labels[v].empty())) return false;
    for (int w = 0; w < A.n(); ++w) {
      int mw = map_ab[w];
      if (mw < 0) continue;
      if (A.has_arc(u, w) != B.has_arc(v, mw)) return false;
      if (A.has_arc(w, u) != B.has_arc(mw, v)) return false;
    }
    return true;
  }

  bool rec(size_t k) {
    if (k == order.size()) return true;
    int u = order[k];
    if (map_ab[u] >= 0) return rec(k + 1);
    for (int v = 0; v < B.n(); ++v) {
      if (map_ba[v] >= 0) continue;
      if (!compatible(u, v)) continue;
      map_ab[u] = v;
      map_ba[v] = u;
      if (rec(k + 1)) return true;
      map_ab[u] = -1;
      map_ba[v] = -1;
    }
    return false;
  }
};

}  // namespace

bool are_equivalent(const Digraph& a, const Digraph& b, bool respect_labels) {
  if (respect_labels) {
    std::set<std::string> la, lb;
    for (const auto& s : a.labels)
      if (!s.empty()) la.insert(s);
    for (const auto& s : b.labels)
      if (!s.empty()) lb.insert(s);
    if (la != lb)
      throw Error(ErrorCode::LabelSetMismatch,
                  "graphs carry different leaf label sets");
  }
  if (a.n() != b.n() || a.arc_count() != b.arc_count()) return false;

  IsoSearch s{a, b, respect_labels, {}, {}, {}, {}, {}};
  wl_refine(a, b, respect_labels, s.colA, s.colB);
  std::map<long long, int> ha, hb;
  for (long long c : s.colA) ++ha[c];
  for (long long c : s.colB) ++hb[c];
  if (ha != hb) return false;

  s.map_ab.assign(a.n(), -1);
  s.map_ba.assign(b.n(), -1);
  s.order.resize(a.n());
  std::iota(s.order.begin(), s.order.end(), 0);
  std::sort(s.order.begin(), s.order.end(), [&](int x, int y) {
    return std::make_pair(ha[s.colA[x]], x) < std::make_pair(ha[s.colA[y]], y);
  });
  return s.rec(0);
}

}  // namespace forestnet
