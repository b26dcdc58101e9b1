#include "universal.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace forestnet {

namespace {

struct Shape {
  int leaf = -1;  // label index when a leaf, else -1
  std::shared_ptr<const Shape> l, r;
};
using ShapePtr = std::shared_ptr<const Shape>;

std::vector<ShapePtr> shapes_on(const std::vector<int>& s) {
  if (s.size() == 1) {
    auto leaf = std::make_shared<Shape>();
    leaf->leaf = s[0];
    return {leaf};
  }
  std::vector<ShapePtr> out;
  int k = static_cast<int>(s.size());
  // Split off every proper subset containing the minimum element.
  for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
    std::vector<int> left{s[0]}, right;
    for (int i = 1; i < k; ++i)
      (mask >> (i - 1) & 1 ? left : right).push_back(s[i]);
    if (right.empty()) continue;
    for (const auto& sl : shapes_on(left))
      for (const auto& sr : shapes_on(right)) {
        auto node = std::make_shared<Shape>();
        node->l = sl;
        node->r = sr;
        out.push_back(node);
      }
  }
  return out;
}

PhyloTree tree_of_shape(const ShapePtr& shape,
                        const std::vector<std::string>& labels) {
  if (shape->leaf >= 0)
    return solo_tree(labels[shape->leaf], labels[shape->leaf]);
  Digraph g;
  int fresh = 0;
  std::function<int(const ShapePtr&)> emit = [&](const ShapePtr& s) -> int {
    if (s->leaf >= 0) {
      int v = g.add_vertex(labels[s->leaf]);
      g.set_label(v, labels[s->leaf]);
      return v;
    }
    int v = g.add_vertex("u" + std::to_string(fresh++));
    g.add_arc(v, emit(s->l));
    g.add_arc(v, emit(s->r));
    return v;
  };
  emit(shape);
  return tree_from_network(build_network(g));
}

void partitions_into_blocks(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (blocks.size() >= 2) f(blocks);
      return;
    }
    // Index-based: rec grows and shrinks blocks, so references would dangle.
    for (size_t j = 0; j < blocks.size(); ++j) {
      blocks[j].push_back(i);
      rec(i + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({i});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

}  // namespace

std::vector<PhyloForest> enumerate_forests(
    const std::vector<std::string>& labels) {
  if (labels.size() < 2)
    throw Error(ErrorCode::TooFewLeaves,
                "forest catalog needs at least two labels");
  if (labels.size() > 6)
    throw Error(ErrorCode::TooLarge,
                "forest catalog supports at most six labels");
  std::vector<std::string> ls = labels;
  std::sort(ls.begin(), ls.end());
  std::vector<PhyloForest> out;
  partitions_into_blocks(
      static_cast<int>(ls.size()),
      [&](const std::vector<std::vector<int>>& blocks) {
        std::vector<std::vector<ShapePtr>> options;
        for (const auto& b : blocks) options.push_back(shapes_on(b));
        std::vector<size_t> pick(blocks.size(), 0);
        for (;;) {
          std::vector<PhyloTree> trees;
          for (size_t i = 0; i < blocks.size(); ++i)
            trees.push_back(tree_of_shape(options[i][pick[i]], ls));
          out.push_back(make_forest(std::move(trees)));
          size_t i = 0;
          while (i < pick.size() && ++pick[i] == options[i].size())
            pick[i++] = 0;
          if (i == pick.size()) break;
        }
      });
  return out;
}

UniversalReport is_universal_forest_based(const Network& N,
                                          long long node_budget) {
  if (!is_binary(N))
    throw Error(ErrorCode::NotBinary, "universality test needs a binary network");
  if (N.nx() > 5)
    throw Error(ErrorCode::TooLarge,
                "universality test supports at most five labels");
  std::vector<PhyloForest> catalog = enumerate_forests(N.label_set);
  std::map<std::string, size_t> key_to_index;
  for (size_t i = 0; i < catalog.size(); ++i)
    key_to_index.emplace(catalog[i].canonical_key(), i);
  std::vector<char> found(catalog.size(), 0);
  size_t remaining = catalog.size();
  for_each_base_forest(N, node_budget, [&](const std::vector<int>& choice) {
    auto key = base_forest_key(N, choice);
    if (key) {
      auto it = key_to_index.find(*key);
      if (it != key_to_index.end() && !found[it->second]) {
        found[it->second] = 1;
        if (--remaining == 0) return false;
      }
    }
    return true;
  });
  UniversalReport rep;
  rep.universal = remaining == 0;
  if (remaining > 0)
    for (size_t i = 0; i < catalog.size(); ++i)
      if (!found[i]) {
        rep.missing = catalog[i];
        break;
      }
  return rep;
}

std::optional<std::array<std::string, 3>> forbidden_configuration(
    const Network& N) {
  auto chain_end = [&](int c) -> std::string {
    while (N.kind[c] == VertexKind::Hybrid) c = N.g.kids[c][0];
    return N.kind[c] == VertexKind::Leaf ? N.g.labels[c] : std::string();
  };
  std::vector<std::pair<std::string, int>> by_name;
  for (int v = 0; v < N.n(); ++v) by_name.emplace_back(N.g.names[v], v);
  std::sort(by_name.begin(), by_name.end());
  for (const auto& [name, v] : by_name) {
    if (N.kind[v] != VertexKind::Root && N.kind[v] != VertexKind::TreeVertex)
      continue;
    std::vector<int> kids = N.g.kids[v];
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return N.g.names[a] < N.g.names[b]; });
    for (size_t i = 0; i < kids.size(); ++i)
      for (size_t j = i + 1; j < kids.size(); ++j) {
        std::string x = chain_end(kids[i]);
        std::string y = chain_end(kids[j]);
        if (!x.empty() && !y.empty() && x != y)
          return std::array<std::string, 3>{name, x, y};
      }
  }
  return std::nullopt;
}

namespace {

struct NetGen {
  int nx, n, m, h;
  std::vector<int> type;  // 0 root, 1 tree, 2 hybrid, 3 leaf
  std::vector<int> cap;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> leaf_src;
  const std::function<bool(const Network&)>* emit;
  std::map<std::string, std::vector<Network>>* kept;
  bool stop = false;

  static int capacity_of(int ty) { return ty == 2 ? 1 : (ty == 3 ? 0 : 2); }
  static int indeg_of(int ty) { return ty == 0 ? 0 : (ty == 2 ? 2 : 1); }

  void finish() {
    Digraph g;
    for (int p = 0; p < n; ++p) {
      int v = g.add_vertex("v" + std::to_string(p));
      if (type[p] == 3)
        g.set_label(v, std::string(1, static_cast<char>('a' + p - (n - nx))));
    }
    for (const auto& [a, b] : arcs) g.add_arc(a, b);
    Network N;
    try {
      N = build_network(g);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Disconnected) return;
      throw;
    }
    std::vector<std::string> sig;
    for (int v = 0; v < n; ++v) {
      std::vector<int> kd;
      for (int c : g.kids[v]) kd.push_back(g.indeg(c) * 8 + g.outdeg(c));
      std::sort(kd.begin(), kd.end());
      std::string s =
          std::to_string(g.indeg(v)) + ":" + std::to_string(g.outdeg(v)) + "[";
      for (int x : kd) s += std::to_string(x) + ",";
      sig.push_back(s + "]");
    }
    std::sort(sig.begin(), sig.end());
    std::string key = std::to_string(m) + "/" + std::to_string(h) + "/";
    for (const auto& s : sig) key += s;
    auto& bucket = (*kept)[key];
    for (const auto& old : bucket)
      if (are_equivalent(old.g, N.g, false)) return;
    bucket.push_back(N);
    if (!(*emit)(bucket.back())) stop = true;
  }

  void assign(int p, int demand_after) {
    if (stop) return;
    if (p == n) {
      finish();
      return;
    }
    int spare = 0;
    for (int q = 0; q < p; ++q) spare += cap[q];
    if (spare > demand_after + indeg_of(type[p])) return;
    int next_demand = demand_after - (p + 1 < n ? indeg_of(type[p + 1]) : 0);
    if (type[p] == 2) {
      for (int s1 = 0; s1 < p && !stop; ++s1) {
        if (cap[s1] == 0) continue;
        --cap[s1];
        for (int s2 = s1 + 1; s2 < p && !stop; ++s2) {
          if (cap[s2] == 0) continue;
          --cap[s2];
          arcs.emplace_back(s1, p);
          arcs.emplace_back(s2, p);
          cap[p] = 1;
          assign(p + 1, next_demand);
          cap[p] = 0;
          arcs.pop_back();
          arcs.pop_back();
          ++cap[s2];
        }
        ++cap[s1];
      }
    } else {
      int lo = 0;
      if (type[p] == 3 && p > n - nx && leaf_src[p - (n - nx) - 1] >= 0)
        lo = leaf_src[p - (n - nx) - 1];
      for (int s = lo; s < p && !stop; ++s) {
        if (cap[s] == 0) continue;
        --cap[s];
        arcs.emplace_back(s, p);
        cap[p] = capacity_of(type[p]);
        if (type[p] == 3) leaf_src[p - (n - nx)] = s;
        assign(p + 1, next_demand);
        if (type[p] == 3) leaf_src[p - (n - nx)] = -1;
        cap[p] = 0;
        arcs.pop_back();
        ++cap[s];
      }
    }
  }
};

}  // namespace

void enumerate_binary_networks(
    int num_labels, int max_vertices,
    const std::function<bool(const Network&)>& visit) {
  if (num_labels < 2 || num_labels > 26)
    throw Error(ErrorCode::InfeasibleParams,
                "label count must lie between 2 and 26");
  std::map<std::string, std::vector<Network>> kept;
  bool stopped = false;
  for (int m = 1; !stopped; ++m) {
    int h_lo = std::max({m - 1, 2 * m - num_labels, 0});
    if (2 * num_labels + 2 * h_lo - m > max_vertices) break;
    for (int h = h_lo;
         !stopped && 2 * num_labels + 2 * h - m <= max_vertices; ++h) {
      int t = num_labels + h - 2 * m;
      int n = m + t + h + num_labels;
      int mid = t + h;
      // Choose which middle positions are hybrid.
      std::vector<int> hyb_pos(h);
      std::function<void(int, int)> layouts = [&](int idx, int from) {
        if (stopped) return;
        if (idx == h) {
          NetGen gen;
          gen.nx = num_labels;
          gen.n = n;
          gen.m = m;
          gen.h = h;
          gen.type.assign(n, 1);
          for (int p = 0; p < m; ++p) gen.type[p] = 0;
          for (int p = n - num_labels; p < n; ++p) gen.type[p] = 3;
          for (int p : hyb_pos) gen.type[m + p] = 2;
          gen.cap.assign(n, 0);
          for (int p = 0; p < m; ++p) gen.cap[p] = 2;
          gen.leaf_src.assign(num_labels, -1);
          gen.emit = &visit;
          gen.kept = &kept;
          int demand = 0;
          for (int p = m + 1; p < n; ++p)
            demand += NetGen::indeg_of(gen.type[p]);
          gen.assign(m, demand);
          if (gen.stop) stopped = true;
          return;
        }
        for (int pos = from; pos < mid && !stopped; ++pos) {
          hyb_pos[idx] = pos;
          layouts(idx + 1, pos + 1);
        }
      };
      layouts(0, 0);
    }
  }
}

}  // namespace forestnet
