#include "clusters.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "forest_based.hpp"

namespace forestnet {

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::string label_list(const ClusterSystem& cs, const std::vector<int>& c) {
  std::string out;
  for (int i : c) {
    if (!out.empty()) out += ",";
    out += cs.ground[i];
  }
  return "{" + out + "}";
}

bool is_member(const ClusterSystem& cs, const std::vector<int>& c) {
  return std::binary_search(cs.members.begin(), cs.members.end(), c);
}

std::vector<std::vector<int>> maximal_members(const ClusterSystem& cs) {
  std::vector<std::vector<int>> out;
  for (const auto& c : cs.members) {
    bool dominated = false;
    for (const auto& d : cs.members)
      if (c != d && is_subset(c, d)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(c);
  }
  return out;
}

// Per-vertex sorted ground-index clusters of an acyclic labeled digraph.
std::vector<std::vector<int>> digraph_clusters(
    const Digraph& g, const std::vector<std::string>& ground) {
  std::map<std::string, int> gi;
  for (size_t i = 0; i < ground.size(); ++i) gi[ground[i]] = i;
  auto topo = g.topo_order();
  if (!topo) throw std::logic_error("cluster computation on a cyclic digraph");
  std::vector<std::set<int>> acc(g.n());
  for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
    int v = *it;
    if (!g.labels[v].empty()) acc[v].insert(gi.at(g.labels[v]));
    for (int c : g.kids[v]) acc[v].insert(acc[c].begin(), acc[c].end());
  }
  std::vector<std::vector<int>> out(g.n());
  for (int v = 0; v < g.n(); ++v)
    out[v] = std::vector<int>(acc[v].begin(), acc[v].end());
  return out;
}

}  // namespace

std::vector<std::string> ClusterSystem::labels_of(
    const std::vector<int>& member) const {
  std::vector<std::string> out;
  for (int i : member) out.push_back(ground[i]);
  return out;
}

ClusterSystem normalize_clusters(
    const std::vector<std::vector<std::string>>& raw) {
  std::set<std::string> all;
  for (const auto& c : raw)
    for (const auto& l : c) all.insert(l);
  ClusterSystem cs;
  cs.ground.assign(all.begin(), all.end());
  std::map<std::string, int> gi;
  for (size_t i = 0; i < cs.ground.size(); ++i) gi[cs.ground[i]] = i;
  std::set<std::vector<int>> uniq;
  for (const auto& c : raw) {
    std::set<int> idx;
    for (const auto& l : c) idx.insert(gi.at(l));
    if (!idx.empty()) uniq.insert(std::vector<int>(idx.begin(), idx.end()));
  }
  cs.members.assign(uniq.begin(), uniq.end());
  return cs;
}

ClusterSystem cluster_system(const Network& N) {
  ClusterSystem cs;
  cs.ground = N.label_set;
  std::set<std::vector<int>> uniq(N.clusters.begin(), N.clusters.end());
  cs.members.assign(uniq.begin(), uniq.end());
  return cs;
}

ClusterSystem parse_cluster_text(const std::string& text) {
  std::vector<std::vector<std::string>> raw;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> labels;
    std::set<std::string> seen;
    std::istringstream ls(t);
    std::string item;
    while (std::getline(ls, item, ',')) {
      item = trim(item);
      if (item.empty())
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) + ": empty label");
      for (char c : item)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw Error(ErrorCode::SyntaxError,
                      "line " + std::to_string(lineno) +
                          ": labels must match [A-Za-z0-9_]+");
      if (!seen.insert(item).second)
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(lineno) + ": label '" + item +
                        "' repeated within one cluster");
      labels.push_back(item);
    }
    raw.push_back(std::move(labels));
  }
  if (raw.empty())
    throw Error(ErrorCode::SyntaxError, "cluster file names no clusters");
  return normalize_clusters(raw);
}

std::string print_cluster_text(const ClusterSystem& cs) {
  std::vector<std::string> lines;
  for (const auto& c : cs.members) {
    std::string l;
    for (int i : c) {
      if (!l.empty()) l += ",";
      l += cs.ground[i];
    }
    lines.push_back(l);
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

bool is_hierarchy(const ClusterSystem& cs) {
  if (cs.ground.empty()) return false;
  std::vector<int> full(cs.ground.size());
  for (size_t i = 0; i < cs.ground.size(); ++i) full[i] = i;
  if (!is_member(cs, full)) return false;
  for (size_t i = 0; i < cs.ground.size(); ++i)
    if (!is_member(cs, {static_cast<int>(i)})) return false;
  for (size_t i = 0; i < cs.members.size(); ++i)
    for (size_t j = i + 1; j < cs.members.size(); ++j) {
      auto common = intersect(cs.members[i], cs.members[j]);
      if (!common.empty() && common != cs.members[i] &&
          common != cs.members[j])
        return false;
    }
  return true;
}

namespace {

// Hasse diagram of a hierarchy as a labeled digraph; internal vertices are
// named through `alloc`.
Digraph hasse_digraph(const ClusterSystem& cs,
                      const std::function<std::string(int)>& alloc) {
  std::vector<size_t> order(cs.members.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (cs.members[a].size() != cs.members[b].size())
      return cs.members[a].size() > cs.members[b].size();
    return cs.members[a] < cs.members[b];
  });
  Digraph g;
  std::vector<int> vert(cs.members.size(), -1);
  int internal = 0;
  for (size_t oi = 0; oi < order.size(); ++oi) {
    size_t i = order[oi];
    if (cs.members[i].size() == 1) {
      int v = g.add_vertex(cs.ground[cs.members[i][0]]);
      g.set_label(v, cs.ground[cs.members[i][0]]);
      vert[i] = v;
    } else {
      vert[i] = g.add_vertex(alloc(internal++));
    }
  }
  for (size_t i = 0; i < cs.members.size(); ++i) {
    size_t best = cs.members.size();
    for (size_t j = 0; j < cs.members.size(); ++j) {
      if (i == j || cs.members[j].size() <= cs.members[i].size()) continue;
      if (!is_subset(cs.members[i], cs.members[j])) continue;
      if (best == cs.members.size() ||
          cs.members[j].size() < cs.members[best].size())
        best = j;
    }
    if (best < cs.members.size()) g.add_arc(vert[best], vert[i]);
  }
  return g;
}

}  // namespace

PhyloTree tree_from_hierarchy(const ClusterSystem& cs) {
  if (!is_hierarchy(cs))
    throw Error(ErrorCode::NotAHierarchy,
                "cluster system is not a hierarchy");
  if (cs.ground.size() == 1) return solo_tree(cs.ground[0], cs.ground[0]);
  std::set<std::string> used(cs.ground.begin(), cs.ground.end());
  auto alloc = [&](int k) {
    std::string name = "i" + std::to_string(k);
    while (used.count(name)) name += "_";
    used.insert(name);
    return name;
  };
  return tree_from_network(build_network(hasse_digraph(cs, alloc)));
}

P123Report check_P1_P2_P3(const ClusterSystem& cs) {
  P123Report rep;
  auto maximals = maximal_members(cs);
  auto note = [&](const std::string& msg) {
    if (rep.detail.empty()) rep.detail = msg;
  };

  for (const auto& M : maximals) {
    std::vector<std::vector<int>> R;
    for (const auto& c : cs.members)
      if (is_subset(c, M)) R.push_back(c);
    for (int x : M)
      if (!std::binary_search(R.begin(), R.end(), std::vector<int>{x})) {
        rep.p1 = false;
        note("P1: maximal cluster " + label_list(cs, M) +
             " misses the singleton {" + cs.ground[x] + "}");
      }
    for (size_t i = 0; i < R.size() && rep.p1; ++i)
      for (size_t j = i + 1; j < R.size(); ++j) {
        auto common = intersect(R[i], R[j]);
        if (!common.empty() && common != R[i] && common != R[j]) {
          rep.p1 = false;
          note("P1: clusters " + label_list(cs, R[i]) + " and " +
               label_list(cs, R[j]) + " overlap inside " + label_list(cs, M));
          break;
        }
      }
  }

  if (!maximals.empty()) {
    std::vector<char> vis(maximals.size(), 0);
    std::vector<size_t> stack{0};
    vis[0] = 1;
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < maximals.size(); ++j)
        if (!vis[j] && !intersect(maximals[i], maximals[j]).empty()) {
          vis[j] = 1;
          stack.push_back(j);
        }
    }
    for (size_t j = 0; j < maximals.size(); ++j)
      if (!vis[j]) {
        rep.p2 = false;
        note("P2: maximal cluster " + label_list(cs, maximals[j]) +
             " is disconnected from " + label_list(cs, maximals[0]) +
             " in the intersection graph");
        break;
      }
  }

  for (size_t i = 0; i < maximals.size() && rep.p3; ++i)
    for (size_t j = i + 1; j < maximals.size(); ++j) {
      auto common = intersect(maximals[i], maximals[j]);
      if (!common.empty() && !is_member(cs, common)) {
        rep.p3 = false;
        note("P3: intersection " + label_list(cs, common) + " of " +
             label_list(cs, maximals[i]) + " and " +
             label_list(cs, maximals[j]) + " is not a cluster");
        break;
      }
    }
  return rep;
}

namespace {

struct GraftEngine {
  const ClusterSystem& cs;
  std::vector<std::vector<int>> maximals;
  std::set<std::string> used;
  int steps = 0;

  explicit GraftEngine(const ClusterSystem& s) : cs(s) {
    maximals = maximal_members(cs);
    used.insert(cs.ground.begin(), cs.ground.end());
  }

  std::string alloc(const std::string& base) {
    std::string name = base;
    while (used.count(name)) name += "_";
    used.insert(name);
    return name;
  }

  Digraph tree_for(size_t j) {
    ClusterSystem sub;
    sub.ground = cs.labels_of(maximals[j]);
    for (const auto& c : cs.members)
      if (is_subset(c, maximals[j])) {
        std::vector<int> remapped;
        for (int x : c)
          remapped.push_back(
              std::lower_bound(maximals[j].begin(), maximals[j].end(), x) -
              maximals[j].begin());
        sub.members.push_back(std::move(remapped));
      }
    std::sort(sub.members.begin(), sub.members.end());
    std::string prefix = "t" + std::to_string(j) + "_i";
    return hasse_digraph(
        sub, [&](int k) { return alloc(prefix + std::to_string(k)); });
  }

  // Attaches tree j to W; `covered` is the processed label-index set.
  void graft(Digraph& W, std::set<int>& covered, size_t j) {
    const auto& Cj = maximals[j];
    std::vector<int> O;
    for (int x : Cj)
      if (covered.count(x)) O.push_back(x);
    if (O.empty())
      throw Error(ErrorCode::PropertiesViolated,
                  "maximal cluster " + label_list(cs, Cj) +
                      " does not meet the processed region");
    if (O == Cj)
      throw Error(ErrorCode::PropertiesViolated,
                  "maximal cluster " + label_list(cs, Cj) +
                      " lies inside the processed region");
    if (!is_member(cs, O))
      throw Error(ErrorCode::PropertiesViolated,
                  "overlap " + label_list(cs, O) + " of " +
                      label_list(cs, Cj) +
                      " with the processed region is not a cluster");

    Digraph T = tree_for(j);
    auto tcl = digraph_clusters(T, cs.ground);
    std::vector<int> O_sorted = O;
    int v = -1;
    for (int x = 0; x < T.n(); ++x)
      if (tcl[x] == O_sorted) {
        v = x;
        break;
      }
    if (v < 0)
      throw std::logic_error("overlap cluster missing from its Hasse tree");
    int pv = T.pars[v][0];
    std::vector<char> keep(T.n(), 1);
    std::vector<int> stack{v};
    keep[v] = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int c : T.kids[x])
        if (keep[c]) {
          keep[c] = 0;
          stack.push_back(c);
        }
    }
    std::string pv_name = T.names[pv];
    Digraph Tr = filtered(T, keep);

    auto wcl = digraph_clusters(W, cs.ground);
    int u = -1, count = 0;
    for (int x = 0; x < W.n(); ++x)
      if (W.indeg(x) <= 1 && wcl[x] == O_sorted) {
        u = x;
        ++count;
      }
    if (count == 0)
      throw Error(ErrorCode::PropertiesViolated,
                  "no attachment point realizes the overlap " +
                      label_list(cs, O));
    if (count > 1)
      throw std::logic_error("attachment point for an overlap is not unique");
    if (W.indeg(u) != 1)
      throw std::logic_error("attachment point sits at a root");

    std::string w_name = alloc("w" + std::to_string(steps++));
    W = subdivide_arc(W, W.pars[u][0], u, w_name);
    for (int x = 0; x < Tr.n(); ++x) {
      int nv = W.add_vertex(Tr.names[x]);
      if (!Tr.labels[x].empty()) W.set_label(nv, Tr.labels[x]);
    }
    for (const auto& [t, h] : Tr.all_arcs())
      W.add_arc(W.require(Tr.names[t]), W.require(Tr.names[h]));
    W.add_arc(W.require(pv_name), W.require(w_name));
    for (int x : Cj) covered.insert(x);
  }

  Network finish(Digraph& W) {
    Network N = build_network(W);
    if (!(cluster_system(N) == cs))
      throw Error(ErrorCode::PropertiesViolated,
                  "grafting completed but the realized cluster system "
                  "differs from the input");
    if (!is_arboreal(N))
      throw std::logic_error("grafted network is not arboreal");
    return N;
  }
};

}  // namespace

Network arboreal_from_clusters(const ClusterSystem& cs) {
  auto rep = check_P1_P2_P3(cs);
  if (!rep.ok())
    throw Error(ErrorCode::PropertiesViolated, rep.detail);
  if (cs.ground.size() < 2)
    throw Error(ErrorCode::PropertiesViolated,
                "a network needs at least two labels");
  GraftEngine eng(cs);
  auto leaf_vec = [&](size_t j) { return cs.labels_of(eng.maximals[j]); };
  size_t first = 0;
  for (size_t j = 1; j < eng.maximals.size(); ++j)
    if (leaf_vec(j) < leaf_vec(first)) first = j;
  Digraph W = eng.tree_for(first);
  std::set<int> covered(eng.maximals[first].begin(),
                        eng.maximals[first].end());
  std::vector<char> done(eng.maximals.size(), 0);
  done[first] = 1;
  for (size_t step = 1; step < eng.maximals.size(); ++step) {
    size_t pick = eng.maximals.size();
    for (size_t j = 0; j < eng.maximals.size(); ++j) {
      if (done[j]) continue;
      bool overlaps = false;
      for (int x : eng.maximals[j])
        if (covered.count(x)) {
          overlaps = true;
          break;
        }
      if (!overlaps) continue;
      if (pick == eng.maximals.size() || leaf_vec(j) < leaf_vec(pick))
        pick = j;
    }
    if (pick == eng.maximals.size())
      throw Error(ErrorCode::PropertiesViolated,
                  "maximal clusters do not connect");
    eng.graft(W, covered, pick);
    done[pick] = 1;
  }
  return eng.finish(W);
}

std::vector<Network> arboreal_from_clusters_variants(const ClusterSystem& cs) {
  auto rep = check_P1_P2_P3(cs);
  if (!rep.ok())
    throw Error(ErrorCode::PropertiesViolated, rep.detail);
  if (cs.ground.size() < 2)
    throw Error(ErrorCode::PropertiesViolated,
                "a network needs at least two labels");
  GraftEngine probe(cs);
  if (probe.maximals.size() > 6)
    throw Error(ErrorCode::TooLarge,
                "variant enumeration supports at most six maximal clusters");
  size_t k = probe.maximals.size();
  std::vector<Network> out;
  std::vector<size_t> order;
  std::vector<char> done(k, 0);
  std::set<int> covered;

  // Only constructible orders reach a full graft: each step's overlap with
  // the processed region must be a member and a proper subset of the grafted
  // cluster, exactly what graft() itself demands.
  std::function<void()> rec = [&]() {
    if (order.size() == k) {
      GraftEngine eng(cs);
      Digraph W = eng.tree_for(order[0]);
      std::set<int> cov(eng.maximals[order[0]].begin(),
                        eng.maximals[order[0]].end());
      for (size_t i = 1; i < k; ++i) eng.graft(W, cov, order[i]);
      out.push_back(eng.finish(W));
      return;
    }
    for (size_t j = 0; j < k; ++j) {
      if (done[j]) continue;
      if (!order.empty()) {
        std::vector<int> cov(covered.begin(), covered.end());
        auto O = intersect(probe.maximals[j], cov);
        if (O.empty() || O == probe.maximals[j] || !is_member(cs, O))
          continue;
      }
      done[j] = 1;
      order.push_back(j);
      std::vector<int> added;
      for (int x : probe.maximals[j])
        if (covered.insert(x).second) added.push_back(x);
      rec();
      for (int x : added) covered.erase(x);
      order.pop_back();
      done[j] = 0;
    }
  };
  rec();
  return out;
}

bool is_uniquely_determined(const ClusterSystem& cs) {
  auto rep = check_P1_P2_P3(cs);
  if (!rep.ok())
    throw Error(ErrorCode::PropertiesViolated, rep.detail);
  auto maximals = maximal_members(cs);
  size_t k = maximals.size();
  if (k <= 2) return true;
  if (k > 16)
    throw Error(ErrorCode::TooLarge,
                "unique-determination test supports at most 16 maximal "
                "clusters");

  // Grafting attaches each maximal at the unique vertex carrying its overlap
  // with the processed region. Two grafts landing on the same overlap stack
  // two hybrids onto that vertex, a bad arc, and swapping the stack gives an
  // inequivalent realization; without such a repeat every order yields the
  // same network. So the system is ambiguous iff some constructible order
  // (every overlap a member and a proper subset of the grafted cluster)
  // completes after repeating an overlap.
  auto key_of = [](const std::vector<int>& c) {
    std::string s;
    for (int x : c) s += std::to_string(x) + ",";
    return s;
  };
  auto covered_of = [&](unsigned mask) {
    std::set<int> u;
    for (size_t j = 0; j < k; ++j)
      if (mask >> j & 1) u.insert(maximals[j].begin(), maximals[j].end());
    return std::vector<int>(u.begin(), u.end());
  };
  auto step_overlap = [&](unsigned mask, size_t j) -> std::vector<int> {
    auto O = intersect(maximals[j], covered_of(mask));
    if (O.empty() || O == maximals[j] || !is_member(cs, O)) return {};
    return O;
  };

  std::map<unsigned, char> completable;
  std::function<bool(unsigned)> can_complete = [&](unsigned mask) -> bool {
    if (mask + 1 == (1u << k)) return true;
    auto it = completable.find(mask);
    if (it != completable.end()) return it->second;
    bool ok = false;
    for (size_t j = 0; j < k && !ok; ++j)
      if (!(mask >> j & 1) && !step_overlap(mask, j).empty())
        ok = can_complete(mask | 1u << j);
    completable[mask] = ok;
    return ok;
  };

  std::set<std::pair<unsigned, std::string>> visited;
  bool ambiguous = false;
  std::function<void(unsigned, const std::set<std::string>&)> rec =
      [&](unsigned mask, const std::set<std::string>& overlaps) {
        if (ambiguous || mask + 1 == (1u << k)) return;
        std::string sig;
        for (const auto& o : overlaps) sig += o + ";";
        if (!visited.emplace(mask, sig).second) return;
        for (size_t j = 0; j < k && !ambiguous; ++j) {
          if (mask >> j & 1) continue;
          auto O = step_overlap(mask, j);
          if (O.empty()) continue;
          std::string okey = key_of(O);
          if (overlaps.count(okey)) {
            if (can_complete(mask | 1u << j)) ambiguous = true;
            continue;
          }
          auto ov = overlaps;
          ov.insert(okey);
          rec(mask | 1u << j, ov);
        }
      };
  for (size_t first = 0; first < k && !ambiguous; ++first)
    rec(1u << first, {});
  return !ambiguous;
}

std::vector<std::pair<std::string, std::string>> bad_arcs(const Network& N) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [t, h] : N.g.all_arcs())
    if (N.g.indeg(t) >= 2 && N.g.indeg(h) >= 2)
      out.emplace_back(N.g.names[t], N.g.names[h]);
  std::sort(out.begin(), out.end());
  return out;
}

Digraph collapse_bad_arcs(const Network& N) {
  Digraph W = N.g;
  for (;;) {
    std::pair<std::string, std::string> best;
    int bt = -1, bh = -1;
    for (const auto& [t, h] : W.all_arcs()) {
      if (W.indeg(t) < 2 || W.indeg(h) < 2) continue;
      std::pair<std::string, std::string> key{W.names[t], W.names[h]};
      if (bt < 0 || key < best) {
        best = key;
        bt = t;
        bh = h;
      }
    }
    if (bt < 0) return W;
    W = contract_arcs(W, {{bt, bh}});
  }
}

TransferReport same_clusters_transfer(const Network& a, const Network& b) {
  if (!is_arboreal(a) || !is_arboreal(b))
    throw Error(ErrorCode::PreconditionViolated,
                "both networks must be arboreal");
  if (a.label_set != b.label_set)
    throw Error(ErrorCode::PreconditionViolated,
                "the networks carry different label sets");
  if (!(cluster_system(a) == cluster_system(b)))
    throw Error(ErrorCode::PreconditionViolated,
                "the networks induce different cluster systems");
  TransferReport r;
  r.first_forest_based = decide_forest_based(a).has_value();
  r.second_forest_based = decide_forest_based(b).has_value();
  r.agree = r.first_forest_based == r.second_forest_based;
  return r;
}

}  // namespace forestnet
