#include "forest.hpp"

#include <algorithm>
#include <set>

namespace forestnet {

std::vector<std::string> PhyloTree::leaf_labels() const {
  if (is_solo()) return {solo_label};
  return shape->label_set;
}

std::vector<std::vector<std::string>> PhyloTree::cluster_key() const {
  if (is_solo()) return {{solo_label}};
  std::set<std::vector<std::string>> key;
  for (int v = 0; v < shape->n(); ++v) {
    std::vector<std::string> c;
    for (int i : shape->clusters[v]) c.push_back(shape->label_set[i]);
    key.insert(std::move(c));
  }
  return {key.begin(), key.end()};
}

std::vector<std::string> PhyloForest::label_set() const {
  std::set<std::string> all;
  for (const auto& t : trees) {
    auto ls = t.leaf_labels();
    all.insert(ls.begin(), ls.end());
  }
  return {all.begin(), all.end()};
}

std::string key_from_clusters(std::vector<std::vector<std::string>> clusters) {
  std::sort(clusters.begin(), clusters.end());
  std::string out;
  for (const auto& c : clusters) {
    if (!out.empty()) out += ";";
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ",";
      out += c[i];
    }
  }
  return out;
}

std::string tree_key_string(const PhyloTree& t) {
  return key_from_clusters(t.cluster_key());
}

std::string PhyloForest::canonical_key() const {
  std::vector<std::string> keys;
  for (const auto& t : trees) keys.push_back(tree_key_string(t));
  std::sort(keys.begin(), keys.end());
  std::string out;
  for (const auto& k : keys) {
    if (!out.empty()) out += "|";
    out += k;
  }
  return out;
}

PhyloTree solo_tree(const std::string& name, const std::string& label) {
  PhyloTree t;
  t.solo_name = name;
  t.solo_label = label;
  return t;
}

PhyloTree tree_from_network(const Network& n) {
  if (n.m() != 1)
    throw Error(ErrorCode::PreconditionViolated,
                "phylogenetic tree needs exactly one root, got " +
                    std::to_string(n.m()));
  if (!n.hybrids.empty())
    throw Error(ErrorCode::PreconditionViolated,
                "phylogenetic tree must not contain hybrid vertices");
  PhyloTree t;
  t.shape = n;
  return t;
}

PhyloForest make_forest(std::vector<PhyloTree> trees) {
  if (trees.size() < 2)
    throw Error(ErrorCode::PreconditionViolated,
                "a phylogenetic forest needs at least two trees");
  std::set<std::string> seen;
  for (const auto& t : trees)
    for (const auto& lab : t.leaf_labels())
      if (!seen.insert(lab).second)
        throw Error(ErrorCode::PreconditionViolated,
                    "forest trees must have disjoint leaf sets; label '" +
                        lab + "' repeats");
  PhyloForest f;
  f.trees = std::move(trees);
  return f;
}

PhyloForest trivial_forest(const std::vector<std::string>& labels) {
  std::vector<PhyloTree> trees;
  for (const auto& lab : labels) trees.push_back(solo_tree(lab, lab));
  return make_forest(std::move(trees));
}

}  // namespace forestnet
