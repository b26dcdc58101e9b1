#include "classify.hpp"

#include <algorithm>

#include "forest_based.hpp"

namespace forestnet {

bool is_tree_child(const Network& N) {
  for (int v = 0; v < N.n(); ++v) {
    if (N.kind[v] == VertexKind::Leaf) continue;
    bool ok = false;
    for (int c : N.g.kids[v])
      if (N.g.indeg(c) == 1) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_tree_sibling(const Network& N) {
  for (int h : N.hybrids) {
    bool ok = false;
    for (int p : N.g.pars[h]) {
      for (int c : N.g.kids[p])
        if (c != h && N.g.indeg(c) == 1) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

std::vector<char> root_reachable(const Network& N, int skip) {
  std::vector<char> vis(N.n(), 0);
  std::vector<int> stack;
  for (int r : N.roots)
    if (r != skip) {
      vis[r] = 1;
      stack.push_back(r);
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int c : N.g.kids[v])
      if (c != skip && !vis[c]) {
        vis[c] = 1;
        stack.push_back(c);
      }
  }
  return vis;
}

}  // namespace

bool is_reticulation_visible(const Network& N) {
  for (int h : N.hybrids) {
    std::vector<char> vis = root_reachable(N, h);
    bool guards_a_leaf = false;
    for (int l : N.leaves)
      if (!vis[l]) {
        guards_a_leaf = true;
        break;
      }
    if (!guards_a_leaf) return false;
  }
  return true;
}

bool is_tree_based_phylo(const Network& N) {
  if (N.m() != 1)
    throw Error(ErrorCode::NotSingleRoot,
                "tree-based test needs a single root, got " +
                    std::to_string(N.m()));
  if (!is_binary(N))
    throw Error(ErrorCode::NotBinary, "tree-based test needs a binary network");
  std::vector<int> omn = omnians(N);
  std::vector<int> match_h(N.n(), -1);
  std::vector<char> seen(N.n(), 0);
  std::function<bool(int)> augment = [&](int v) -> bool {
    for (int h : N.g.kids[v]) {
      if (seen[h]) continue;
      seen[h] = 1;
      if (match_h[h] < 0 || augment(match_h[h])) {
        match_h[h] = v;
        return true;
      }
    }
    return false;
  };
  for (int v : omn) {
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(v)) return false;
  }
  return true;
}

ClassReport classify_all(const Network& N) {
  ClassReport r;
  r.tree_child = is_tree_child(N);
  r.tree_sibling = is_tree_sibling(N);
  r.reticulation_visible = is_reticulation_visible(N);
  r.arboreal = is_arboreal(N);
  if (N.m() == 1 && is_binary(N)) r.tree_based = is_tree_based_phylo(N);
  return r;
}

}  // namespace forestnet
