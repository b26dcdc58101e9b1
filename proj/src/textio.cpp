#include "textio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace forestnet {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

[[noreturn]] void syntax(int lineno, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError,
              "line " + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Digraph parse_network_text(const std::string& text) {
  Digraph g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok[0] == '#') continue;
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      syntax(lineno, "expected '" + tok + " ID ID'");
    if (!valid_id(a) || !valid_id(b))
      syntax(lineno, "ids must match [A-Za-z0-9_]+");
    if (tok == "arc") {
      g.add_arc(g.ensure_vertex(a), g.ensure_vertex(b));
    } else if (tok == "leaf") {
      int v = g.ensure_vertex(a);
      if (!g.labels[v].empty() && g.labels[v] != b)
        syntax(lineno, "vertex '" + a + "' labeled twice");
      g.set_label(v, b);
    } else {
      syntax(lineno, "unknown directive '" + tok + "'");
    }
  }
  return g;
}

std::string print_network_text(const Digraph& g) {
  std::vector<std::string> arc_lines, leaf_lines;
  for (const auto& [t, h] : g.all_arcs())
    arc_lines.push_back("arc " + g.names[t] + " " + g.names[h]);
  for (int v = 0; v < g.n(); ++v)
    if (!g.labels[v].empty())
      leaf_lines.push_back("leaf " + g.names[v] + " " + g.labels[v]);
  std::sort(arc_lines.begin(), arc_lines.end());
  std::sort(leaf_lines.begin(), leaf_lines.end());
  std::string out;
  for (const auto& l : arc_lines) out += l + "\n";
  for (const auto& l : leaf_lines) out += l + "\n";
  return out;
}

std::string print_network_text(const Network& N) {
  return print_network_text(N.g);
}

PhyloForest parse_forest_text(const std::string& text) {
  Digraph g = parse_network_text(text);
  if (g.n() == 0)
    throw Error(ErrorCode::SyntaxError, "forest file names no vertices");
  std::vector<int> comp = g.weak_components();
  int nc = g.weak_component_count();
  std::vector<PhyloTree> trees;
  for (int c = 0; c < nc; ++c) {
    std::vector<char> keep(g.n(), 0);
    int count = 0, last = -1;
    for (int v = 0; v < g.n(); ++v)
      if (comp[v] == c) {
        keep[v] = 1;
        ++count;
        last = v;
      }
    if (count == 1) {
      if (g.labels[last].empty())
        throw Error(ErrorCode::UnlabeledLeaf,
                    "isolated vertex '" + g.names[last] + "' has no label");
      trees.push_back(solo_tree(g.names[last], g.labels[last]));
    } else {
      trees.push_back(tree_from_network(build_network(filtered(g, keep))));
    }
  }
  return make_forest(std::move(trees));
}

std::string print_forest_text(const PhyloForest& F) {
  std::vector<std::string> arc_lines, leaf_lines;
  for (const auto& t : F.trees) {
    if (t.is_solo()) {
      leaf_lines.push_back("leaf " + t.solo_name + " " + t.solo_label);
      continue;
    }
    const Digraph& g = t.shape->g;
    for (const auto& [a, b] : g.all_arcs())
      arc_lines.push_back("arc " + g.names[a] + " " + g.names[b]);
    for (int v = 0; v < g.n(); ++v)
      if (!g.labels[v].empty())
        leaf_lines.push_back("leaf " + g.names[v] + " " + g.labels[v]);
  }
  std::sort(arc_lines.begin(), arc_lines.end());
  std::sort(leaf_lines.begin(), leaf_lines.end());
  std::string out;
  for (const auto& l : arc_lines) out += l + "\n";
  for (const auto& l : leaf_lines) out += l + "\n";
  return out;
}

std::string export_dot(const Network& N, const ForestCertificate* cert) {
  static const char* palette[] = {"#e6194b", "#3cb44b", "#d6a500", "#4363d8",
                                  "#f58231", "#911eb4", "#46a5b0", "#f032e6",
                                  "#7a9c10", "#808000"};
  constexpr int npal = 10;
  std::set<std::pair<int, int>> retained;
  if (cert)
    for (const auto& [t, h] : cert->retained) retained.emplace(t, h);
  std::ostringstream out;
  out << "digraph forestnet {\n";
  std::vector<std::pair<std::string, int>> by_name;
  for (int v = 0; v < N.n(); ++v) by_name.emplace_back(N.g.names[v], v);
  std::sort(by_name.begin(), by_name.end());
  for (const auto& [name, v] : by_name) {
    out << "  \"" << name << "\" [";
    if (N.kind[v] == VertexKind::Leaf)
      out << "shape=box, label=\"" << N.g.labels[v] << "\"";
    else if (N.kind[v] == VertexKind::Hybrid)
      out << "shape=diamond, label=\"" << name << "\"";
    else
      out << "shape=ellipse, label=\"" << name << "\"";
    if (cert)
      out << ", style=filled, fillcolor=\""
          << palette[cert->comp[v] % npal] << "\"";
    out << "];\n";
  }
  std::vector<std::string> arc_lines;
  for (const auto& [t, h] : N.g.all_arcs()) {
    std::string attrs;
    if (cert && !retained.count({t, h})) attrs = " [style=dashed]";
    arc_lines.push_back("  \"" + N.g.names[t] + "\" -> \"" + N.g.names[h] +
                        "\"" + attrs + ";\n");
  }
  std::sort(arc_lines.begin(), arc_lines.end());
  for (const auto& l : arc_lines) out << l;
  out << "}\n";
  return out.str();
}

namespace {

struct NewickParser {
  const std::string& s;
  size_t i = 0;
  Digraph g;
  int fresh = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::SyntaxError,
                "newick position " + std::to_string(i) + ": " + msg);
  }
  std::string name_token() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_'))
      ++i;
    return s.substr(start, i - start);
  }
  void skip_length() {
    skip_ws();
    if (i < s.size() && s[i] == ':') {
      ++i;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.' ||
              s[i] == '-' || s[i] == '+' || s[i] == 'e' || s[i] == 'E'))
        ++i;
    }
  }
  int subtree() {
    skip_ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      std::vector<int> children{subtree()};
      skip_ws();
      while (i < s.size() && s[i] == ',') {
        ++i;
        children.push_back(subtree());
      }
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      std::string nm = name_token();
      if (nm.empty()) nm = "n" + std::to_string(fresh++);
      skip_length();
      int v = g.find(nm) >= 0 ? -1 : g.add_vertex(nm);
      if (v < 0) fail("duplicate vertex name '" + nm + "'");
      for (int c : children) g.add_arc(v, c);
      return v;
    }
    std::string nm = name_token();
    if (nm.empty()) fail("expected a name or '('");
    skip_length();
    int v = g.find(nm) >= 0 ? -1 : g.add_vertex(nm);
    if (v < 0) fail("duplicate vertex name '" + nm + "'");
    g.set_label(v, nm);
    return v;
  }
};

}  // namespace

Digraph parse_newick(const std::string& text) {
  NewickParser p{text, 0, {}, 0};
  p.subtree();
  p.skip_ws();
  if (p.i >= text.size() || text[p.i] != ';') p.fail("expected ';'");
  return std::move(p.g);
}

}  // namespace forestnet
