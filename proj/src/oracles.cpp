#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "classify.hpp"

namespace forestnet {

namespace {

constexpr int kAttemptBudget = 1000;

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

struct GenAttempt {
  const GenParams& p;
  SplitMix64& rng;
  Digraph g;
  std::vector<int> blk;       // original block of each vertex
  UnionFind comps{0};
  std::vector<int> pending;   // outdegree-one roots awaiting a tail slot
  int nx = 0, h = 0;

  bool reaches(int from, int to) {
    if (from == to) return true;
    std::vector<char> vis(g.n(), 0);
    std::vector<int> stack{from};
    vis[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int c : g.kids[v]) {
        if (c == to) return true;
        if (!vis[c]) {
          vis[c] = 1;
          stack.push_back(c);
        }
      }
    }
    return false;
  }

  int add(const std::string& name, int block) {
    int v = g.add_vertex(name);
    blk.push_back(block);
    return v;
  }

  // Random binary tree on the labels of one block.
  int grow(const std::vector<std::string>& labels, int block, int& internals) {
    if (labels.size() == 1) {
      int v = add(labels[0], block);
      g.set_label(v, labels[0]);
      return v;
    }
    std::string name;
    if (internals < 0) {
      name = "r" + std::to_string(block);
      internals = 0;
    } else {
      name = "g" + std::to_string(block) + "_" + std::to_string(internals++);
    }
    int v = add(name, block);
    uint64_t bits = rng.below((uint64_t{1} << (labels.size() - 1)) - 1);
    std::vector<std::string> left{labels[0]}, right;
    for (size_t i = 1; i < labels.size(); ++i)
      (bits >> (i - 1) & 1 ? left : right).push_back(labels[i]);
    g.add_arc(v, grow(left, block, internals));
    g.add_arc(v, grow(right, block, internals));
    return v;
  }

  bool is_hybrid(int v) { return g.indeg(v) >= 2; }

  bool head_allowed(int a, int b) {
    if (p.bias != GenBias::TreeChild) return true;
    if (is_hybrid(b) || is_hybrid(a)) return false;
    for (int c : g.kids[a])
      if (c != b && is_hybrid(c)) return false;
    return true;
  }

  bool run() {
    nx = std::max(p.leaves_min, p.roots) +
         static_cast<int>(rng.below(p.leaves_max -
                                    std::max(p.leaves_min, p.roots) + 1));
    h = p.bias == GenBias::Arboreal
            ? p.roots - 1
            : p.hybrids_min +
                  static_cast<int>(rng.below(p.hybrids_max - p.hybrids_min + 1));
    if (h < p.roots - 1) return false;

    std::vector<std::string> labels(nx);
    for (int i = 0; i < nx; ++i) labels[i] = std::string(1, 'a' + i);
    std::vector<int> order(nx);
    std::iota(order.begin(), order.end(), 0);
    for (int i = nx - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(i + 1)]);
    std::vector<std::vector<std::string>> blocks(p.roots);
    for (int i = 0; i < nx; ++i) {
      int b = i < p.roots ? i : static_cast<int>(rng.below(p.roots));
      blocks[b].push_back(labels[order[i]]);
    }
    for (auto& b : blocks) std::sort(b.begin(), b.end());

    comps = UnionFind(p.roots);
    for (int k = 0; k < p.roots; ++k) {
      if (blocks[k].size() == 1) {
        int r = add("r" + std::to_string(k), k);
        int l = add(blocks[k][0], k);
        g.set_label(l, blocks[k][0]);
        g.add_arc(r, l);
        pending.push_back(r);
      } else {
        int internals = -1;
        grow(blocks[k], k, internals);
      }
    }

    for (int i = 0; i < h; ++i) {
      bool need_cross = i < p.roots - 1;
      // Tail first: pending roots must all be consumed.
      int tail_root = -1, tail_arc_t = -1, tail_arc_h = -1;
      if (!pending.empty()) {
        tail_root = pending[rng.below(pending.size())];
      }
      // Pick the head arc among admissible candidates.
      std::vector<std::pair<int, int>> heads;
      for (const auto& [a, b] : g.all_arcs()) {
        if (!head_allowed(a, b)) continue;
        if (need_cross) {
          int other = tail_root >= 0 ? comps.find(blk[tail_root]) : -1;
          if (tail_root >= 0 && comps.find(blk[a]) == other) continue;
          if (tail_root < 0) {
            // Some other component must own an arc or a pending root.
            bool ok = false;
            for (const auto& [c, d] : g.all_arcs()) {
              (void)d;
              if (comps.find(blk[c]) != comps.find(blk[a])) {
                ok = true;
                break;
              }
            }
            if (!ok) continue;
          }
        }
        heads.emplace_back(a, b);
      }
      if (heads.empty()) return false;
      auto [a, b] = heads[rng.below(heads.size())];
      std::string w_name = "h" + std::to_string(i);
      g = subdivide_arc(g, a, b, w_name);
      blk.push_back(blk[a]);
      int w = g.require(w_name);

      if (tail_root >= 0) {
        if (need_cross &&
            comps.find(blk[tail_root]) == comps.find(blk[w]))
          return false;
        g.add_arc(tail_root, w);
        comps.unite(blk[tail_root], blk[w]);
        pending.erase(std::find(pending.begin(), pending.end(), tail_root));
        continue;
      }

      std::vector<std::pair<int, int>> tails;
      for (const auto& [c, d] : g.all_arcs()) {
        if (d == w || c == w) continue;
        if (need_cross && comps.find(blk[c]) == comps.find(blk[w])) continue;
        if (p.bias == GenBias::TreeChild && is_hybrid(d)) continue;
        if (reaches(w, c)) continue;
        tails.emplace_back(c, d);
      }
      if (tails.empty()) return false;
      std::tie(tail_arc_t, tail_arc_h) = tails[rng.below(tails.size())];
      std::string u_name = "u" + std::to_string(i);
      g = subdivide_arc(g, tail_arc_t, tail_arc_h, u_name);
      blk.push_back(blk[tail_arc_t]);
      int u = g.require(u_name);
      w = g.require(w_name);
      g.add_arc(u, w);
      comps.unite(blk[u], blk[w]);
    }
    return pending.empty();
  }
};

}  // namespace

Network random_network(const GenParams& p) {
  if (p.leaves_min < 2 || p.leaves_min > p.leaves_max)
    throw Error(ErrorCode::InfeasibleParams,
                "leaf range must satisfy 2 <= min <= max");
  if (p.leaves_max > 26)
    throw Error(ErrorCode::InfeasibleParams, "at most 26 leaves");
  if (p.roots < 1)
    throw Error(ErrorCode::InfeasibleParams, "at least one root");
  if (p.roots > p.leaves_max)
    throw Error(ErrorCode::InfeasibleParams,
                "root count exceeds the leaf budget");
  if (p.hybrids_min < 0 || p.hybrids_min > p.hybrids_max)
    throw Error(ErrorCode::InfeasibleParams,
                "hybrid range must satisfy 0 <= min <= max");
  if (p.bias == GenBias::Arboreal &&
      (p.roots - 1 < p.hybrids_min || p.roots - 1 > p.hybrids_max))
    throw Error(ErrorCode::InfeasibleParams,
                "arboreal bias needs the hybrid range to contain roots-1");
  if (p.bias != GenBias::Arboreal && p.hybrids_max < p.roots - 1)
    throw Error(ErrorCode::InfeasibleParams,
                "connecting all roots needs at least roots-1 hybrids");

  SplitMix64 rng{p.seed};
  for (int attempt = 0; attempt < kAttemptBudget; ++attempt) {
    GenAttempt a{p, rng, {}, {}, UnionFind(0), {}, 0, 0};
    if (!a.run()) continue;
    Network N;
    try {
      N = build_network(a.g);
    } catch (const Error&) {
      continue;
    }
    if (p.bias == GenBias::TreeChild && !is_tree_child(N)) continue;
    if (p.bias == GenBias::Arboreal && !is_arboreal(N)) continue;
    return N;
  }
  throw Error(ErrorCode::RejectionBudgetExhausted,
              "no admissible network after 1000 attempts");
}

namespace {

std::optional<ForestCertificate> brute_force_scan(const Network& N,
                                                  bool proper) {
  int na = N.g.arc_count();
  if (na > 22)
    throw Error(ErrorCode::TooLarge,
                "brute-force scan supports at most 22 arcs");
  auto arcs = N.g.all_arcs();
  int n = N.n();
  std::vector<uint32_t> in_mask(n, 0), out_mask(n, 0);
  for (int i = 0; i < na; ++i) {
    out_mask[arcs[i].first] |= uint32_t{1} << i;
    in_mask[arcs[i].second] |= uint32_t{1} << i;
  }
  for (uint32_t mask = 0; mask < (uint32_t{1} << na); ++mask) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (__builtin_popcount(mask & in_mask[v]) > 1) ok = false;
      if (N.kind[v] != VertexKind::Leaf && !(mask & out_mask[v])) ok = false;
    }
    if (!ok) continue;
    UnionFind uf(n);
    for (int i = 0; i < na; ++i)
      if (mask >> i & 1) uf.unite(arcs[i].first, arcs[i].second);
    for (int i = 0; i < na && ok; ++i)
      if (!(mask >> i & 1) &&
          uf.find(arcs[i].first) == uf.find(arcs[i].second))
        ok = false;
    if (!ok) continue;
    if (proper) {
      std::set<int> classes;
      for (int v = 0; v < n; ++v) classes.insert(uf.find(v));
      if (static_cast<int>(classes.size()) != N.m()) continue;
      std::set<int> root_classes;
      for (int r : N.roots) root_classes.insert(uf.find(r));
      if (static_cast<int>(root_classes.size()) != N.m()) continue;
    }
    ForestCertificate cert;
    for (int i = 0; i < na; ++i)
      if (mask >> i & 1) cert.retained.push_back(arcs[i]);
    std::map<int, int> ids;
    cert.comp.resize(n);
    for (int v = 0; v < n; ++v) {
      auto [it, fresh] = ids.emplace(uf.find(v), ids.size());
      (void)fresh;
      cert.comp[v] = it->second;
    }
    auto chk = verify_certificate(N, cert);
    if (!chk.ok)
      throw std::logic_error("brute-force candidate failed verification: " +
                             chk.reason);
    return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ForestCertificate> brute_force_forest_based(const Network& N) {
  return brute_force_scan(N, false);
}

std::optional<ForestCertificate> brute_force_proper(const Network& N) {
  if (N.m() < 2)
    throw Error(ErrorCode::SingleRoot,
                "proper scan needs at least two roots");
  return brute_force_scan(N, true);
}

}  // namespace forestnet
