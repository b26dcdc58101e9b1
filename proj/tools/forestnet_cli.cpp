// Command-line surface over the forestnet shared library (C API only).

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "forestnet/forestnet.h"

namespace {

const char* kUsage =
    "usage: forestnet <subcommand> [args]\n"
    "  validate FILE\n"
    "  classify FILE\n"
    "  forest-based FILE [--proper] [--certificate OUT] [--oracle]\n"
    "  based-on FILE --forest FFILE\n"
    "  clusters FILE [--check-p123] [--reconstruct OUT] [--unique]\n"
    "  gamma FILE [--dot OUT]\n"
    "  universal FILE\n"
    "  gen --seed S --leaves K --roots M [--tree-child|--arboreal]\n"
    "      [--hybrids H] -o OUT\n"
    "  export-dot FILE -o OUT\n"
    "Environment: FORESTNET_NODE_BUDGET caps search nodes (default 1000000).\n";

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n" << kUsage;
  return 2;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return out.good();
}

long long node_budget() {
  const char* env = std::getenv("FORESTNET_NODE_BUDGET");
  if (!env || !*env) return 0;
  return std::atoll(env);
}

// Exit codes: 0 success/yes, 1 decided no, 2 usage or invalid input,
// 3 budget exhausted. validate maps semantic invalidity to 1 instead of 2.
int exit_for_status(int st, bool semantic_is_no = false) {
  if (st == FBN_OK) return 0;
  if (st == FBN_EBUDGET) return 3;
  if (semantic_is_no && st == FBN_EINVALID) return 1;
  return 2;
}

int report_failure(const char* sub, int st, bool semantic_is_no = false) {
  int code = exit_for_status(st, semantic_is_no);
  if (code == 1) {
    std::cout << "VERDICT " << sub << " no " << fbn_last_error() << "\n";
  } else {
    std::cerr << "error (" << fbn_status_name(st) << "): " << fbn_last_error()
              << "\n";
  }
  return code;
}

struct StringOut {
  char* s = nullptr;
  ~StringOut() { fbn_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct NetworkHandle {
  fbn_network* n = nullptr;
  ~NetworkHandle() { fbn_network_free(n); }
};

int load_network(const std::string& path, NetworkHandle& h, const char* sub,
                 bool semantic_is_no, int& code) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    code = 2;
    return -1;
  }
  int st = fbn_network_parse(text.c_str(), &h.n);
  if (st != FBN_OK) {
    code = report_failure(sub, st, semantic_is_no);
    return -1;
  }
  return 0;
}

const char* yn(int v) { return v ? "yes" : "no"; }

int cmd_validate(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("validate needs exactly one file");
  NetworkHandle h;
  int code = 0;
  if (load_network(args[0], h, "validate", true, code) < 0) return code;
  int nv, nr, nl, nh, na;
  fbn_network_counts(h.n, &nv, &nr, &nl, &nh, &na);
  std::cout << "VERDICT validate yes vertices=" << nv << " roots=" << nr
            << " leaves=" << nl << " hybrids=" << nh << " arcs=" << na
            << "\n";
  return 0;
}

int cmd_classify(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("classify needs exactly one file");
  NetworkHandle h;
  int code = 0;
  if (load_network(args[0], h, "classify", false, code) < 0) return code;
  int tc, ts, rv, arb, tb;
  int st = fbn_classify(h.n, &tc, &ts, &rv, &arb, &tb);
  if (st != FBN_OK) return report_failure("classify", st);
  std::cout << "VERDICT classify yes tree-child=" << yn(tc)
            << " tree-sibling=" << yn(ts)
            << " reticulation-visible=" << yn(rv) << " arboreal=" << yn(arb)
            << " tree-based=" << (tb < 0 ? "na" : yn(tb)) << "\n";
  return 0;
}

int cmd_forest_based(const std::vector<std::string>& args) {
  std::string file, cert_out;
  bool proper = false, oracle = false;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--proper") {
      proper = true;
    } else if (args[i] == "--oracle") {
      oracle = true;
    } else if (args[i] == "--certificate") {
      if (++i == args.size()) return usage_error("--certificate needs a path");
      cert_out = args[i];
    } else if (file.empty()) {
      file = args[i];
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (file.empty()) return usage_error("forest-based needs a network file");
  NetworkHandle h;
  int code = 0;
  if (load_network(file, h, "forest-based", false, code) < 0) return code;

  int yes = 0;
  StringOut cert, coloring;
  int st = proper ? fbn_decide_proper(h.n, node_budget(), &yes, &coloring.s,
                                      &cert.s)
                  : fbn_decide_forest_based(h.n, node_budget(), &yes, &cert.s);
  if (st != FBN_OK) return report_failure("forest-based", st);

  if (yes && !cert_out.empty() && !write_file(cert_out, cert.str())) {
    std::cerr << "error: cannot write '" << cert_out << "'\n";
    return 2;
  }

  std::string detail;
  int nv, nr, nl, nh, na;
  fbn_network_counts(h.n, &nv, &nr, &nl, &nh, &na);
  if (yes) detail = "components=" + std::to_string(proper ? nr : nl);

  if (oracle) {
    int brute = 0;
    int ost = proper ? fbn_brute_proper(h.n, &brute)
                     : fbn_brute_forest_based(h.n, &brute);
    if (ost != FBN_OK) return report_failure("forest-based", ost);
    bool agree = (yes != 0) == (brute != 0);
    if (!detail.empty()) detail += " ";
    detail += agree ? "oracle=agree" : "oracle=disagree";
    std::cout << "VERDICT forest-based " << yn(yes) << " "
              << (detail.empty() ? "-" : detail) << "\n";
    return agree ? 0 : 1;
  }

  std::cout << "VERDICT forest-based " << yn(yes) << " "
            << (detail.empty() ? "-" : detail) << "\n";
  return yes ? 0 : 1;
}

int cmd_based_on(const std::vector<std::string>& args) {
  std::string file, ffile;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--forest") {
      if (++i == args.size()) return usage_error("--forest needs a path");
      ffile = args[i];
    } else if (file.empty()) {
      file = args[i];
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (file.empty() || ffile.empty())
    return usage_error("based-on needs a network file and --forest FFILE");
  NetworkHandle h;
  int code = 0;
  if (load_network(file, h, "based-on", false, code) < 0) return code;
  std::string ftext;
  if (!read_file(ffile, ftext)) {
    std::cerr << "error: cannot read '" << ffile << "'\n";
    return 2;
  }
  fbn_forest* f = nullptr;
  int st = fbn_forest_parse(ftext.c_str(), &f);
  if (st != FBN_OK) return report_failure("based-on", st);
  int yes = 0;
  StringOut retained;
  st = fbn_is_based_on(h.n, f, node_budget(), &yes, &retained.s);
  fbn_forest_free(f);
  if (st != FBN_OK) return report_failure("based-on", st);
  if (yes) {
    size_t count = 0;
    for (char c : retained.str())
      if (c == '\n') ++count;
    std::cout << "VERDICT based-on yes retained=" << count << "\n";
    return 0;
  }
  std::cout << "VERDICT based-on no -\n";
  return 1;
}

int cmd_clusters(const std::vector<std::string>& args) {
  std::string file, rec_out;
  bool check = false, unique = false, reconstruct = false;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--check-p123") {
      check = true;
    } else if (args[i] == "--unique") {
      unique = true;
    } else if (args[i] == "--reconstruct") {
      if (++i == args.size()) return usage_error("--reconstruct needs a path");
      reconstruct = true;
      rec_out = args[i];
    } else if (file.empty()) {
      file = args[i];
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (file.empty()) return usage_error("clusters needs an input file");
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "error: cannot read '" << file << "'\n";
    return 2;
  }

  // A file with arc/leaf lines is a network to harvest; otherwise it is a
  // cluster-system file.
  bool looks_like_network = false;
  {
    std::istringstream in(text);
    std::string line, tok;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      if (!(ls >> tok) || tok[0] == '#') continue;
      looks_like_network = tok == "arc" || tok == "leaf";
      break;
    }
  }

  fbn_clusters* c = nullptr;
  int st;
  if (looks_like_network) {
    fbn_network* n = nullptr;
    st = fbn_network_parse(text.c_str(), &n);
    if (st != FBN_OK) return report_failure("clusters", st);
    st = fbn_clusters_of_network(n, &c);
    fbn_network_free(n);
  } else {
    st = fbn_clusters_parse(text.c_str(), &c);
  }
  if (st != FBN_OK) return report_failure("clusters", st);

  bool all_yes = true;
  std::string detail;
  if (check) {
    int p1, p2, p3;
    StringOut why;
    st = fbn_check_p123(c, &p1, &p2, &p3, &why.s);
    if (st != FBN_OK) {
      fbn_clusters_free(c);
      return report_failure("clusters", st);
    }
    detail += std::string("p1=") + yn(p1) + " p2=" + yn(p2) +
              " p3=" + yn(p3);
    if (!(p1 && p2 && p3)) {
      all_yes = false;
      detail += " " + why.str();
    }
  }
  if (unique) {
    int u = 0;
    st = fbn_is_uniquely_determined(c, &u);
    if (st != FBN_OK) {
      fbn_clusters_free(c);
      return report_failure("clusters", st);
    }
    if (!detail.empty()) detail += " ";
    detail += std::string("unique=") + yn(u);
    if (!u) all_yes = false;
  }
  if (reconstruct) {
    StringOut net_text;
    st = fbn_reconstruct_arboreal(c, &net_text.s);
    if (!detail.empty()) detail += " ";
    if (st == FBN_OK) {
      if (!write_file(rec_out, net_text.str())) {
        std::cerr << "error: cannot write '" << rec_out << "'\n";
        fbn_clusters_free(c);
        return 2;
      }
      detail += "reconstructed=" + rec_out;
    } else if (st == FBN_EPRECONDITION) {
      all_yes = false;
      detail += std::string("reconstructed=no ") + fbn_last_error();
    } else {
      fbn_clusters_free(c);
      return report_failure("clusters", st);
    }
  }
  if (!check && !unique && !reconstruct) {
    StringOut lines;
    fbn_clusters_print(c, &lines.s);
    std::cout << lines.str();
    size_t count = 0;
    for (char ch : lines.str())
      if (ch == '\n') ++count;
    detail = "count=" + std::to_string(count);
  }
  fbn_clusters_free(c);
  std::cout << "VERDICT clusters " << (all_yes ? "yes" : "no") << " "
            << (detail.empty() ? "-" : detail) << "\n";
  return all_yes ? 0 : 1;
}

int cmd_gamma(const std::vector<std::string>& args) {
  std::string file, dot_out;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--dot") {
      if (++i == args.size()) return usage_error("--dot needs a path");
      dot_out = args[i];
    } else if (file.empty()) {
      file = args[i];
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (file.empty()) return usage_error("gamma needs a network file");
  NetworkHandle h;
  int code = 0;
  if (load_network(file, h, "gamma", false, code) < 0) return code;
  StringOut text;
  int st = fbn_gamma_text(h.n, &text.s);
  if (st != FBN_OK) return report_failure("gamma", st);
  std::cout << text.str();
  if (!dot_out.empty()) {
    StringOut dot;
    st = fbn_gamma_dot(h.n, &dot.s);
    if (st != FBN_OK) return report_failure("gamma", st);
    if (!write_file(dot_out, dot.str())) {
      std::cerr << "error: cannot write '" << dot_out << "'\n";
      return 2;
    }
  }
  size_t edges = 0;
  std::istringstream in(text.str());
  std::string line;
  while (std::getline(in, line))
    if (line.rfind("edge ", 0) == 0) ++edges;
  std::cout << "VERDICT gamma yes edges=" << edges << "\n";
  return 0;
}

int cmd_universal(const std::vector<std::string>& args) {
  if (args.size() != 1) return usage_error("universal needs exactly one file");
  NetworkHandle h;
  int code = 0;
  if (load_network(args[0], h, "universal", false, code) < 0) return code;
  int yes = 0;
  StringOut detail;
  int st = fbn_universal(h.n, node_budget(), &yes, &detail.s);
  if (st != FBN_OK) return report_failure("universal", st);
  std::cout << detail.str();
  if (yes) {
    size_t count = 0;
    for (char c : detail.str())
      if (c == '\n') ++count;
    std::cout << "VERDICT universal yes forests=" << count << "\n";
    return 0;
  }
  std::cout << "VERDICT universal no missing-forest-above\n";
  return 1;
}

int cmd_gen(const std::vector<std::string>& args) {
  unsigned long long seed = 0;
  bool have_seed = false;
  int leaves = 0, roots = 0, hybrids = -1;
  int bias = FBN_BIAS_UNCONSTRAINED;
  std::string out_path;
  for (size_t i = 0; i < args.size(); ++i) {
    auto need_value = [&](const char* flag) -> const std::string* {
      if (++i == args.size()) {
        usage_error(std::string(flag) + " needs a value");
        return nullptr;
      }
      return &args[i];
    };
    if (args[i] == "--seed") {
      const auto* v = need_value("--seed");
      if (!v) return 2;
      seed = std::strtoull(v->c_str(), nullptr, 10);
      have_seed = true;
    } else if (args[i] == "--leaves") {
      const auto* v = need_value("--leaves");
      if (!v) return 2;
      leaves = std::atoi(v->c_str());
    } else if (args[i] == "--roots") {
      const auto* v = need_value("--roots");
      if (!v) return 2;
      roots = std::atoi(v->c_str());
    } else if (args[i] == "--hybrids") {
      const auto* v = need_value("--hybrids");
      if (!v) return 2;
      hybrids = std::atoi(v->c_str());
    } else if (args[i] == "--tree-child") {
      bias = FBN_BIAS_TREE_CHILD;
    } else if (args[i] == "--arboreal") {
      bias = FBN_BIAS_ARBOREAL;
    } else if (args[i] == "-o") {
      const auto* v = need_value("-o");
      if (!v) return 2;
      out_path = *v;
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (!have_seed || leaves <= 0 || roots <= 0 || out_path.empty())
    return usage_error("gen needs --seed, --leaves, --roots and -o");
  int hmin = hybrids >= 0 ? hybrids : std::max(0, roots - 1);
  int hmax = hybrids >= 0 ? hybrids : roots + 2;
  StringOut text;
  int st = fbn_generate(seed, leaves, leaves, roots, hmin, hmax, bias,
                        &text.s);
  if (st != FBN_OK) return report_failure("gen", st);
  if (!write_file(out_path, text.str())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  fbn_network* n = nullptr;
  if (fbn_network_parse(text.str().c_str(), &n) != FBN_OK)
    return report_failure("gen", FBN_EINTERNAL);
  int nv, nr, nl, nh, na;
  fbn_network_counts(n, &nv, &nr, &nl, &nh, &na);
  fbn_network_free(n);
  std::cout << "VERDICT gen yes vertices=" << nv << " roots=" << nr
            << " leaves=" << nl << " hybrids=" << nh << "\n";
  return 0;
}

int cmd_export_dot(const std::vector<std::string>& args) {
  std::string file, out_path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "-o") {
      if (++i == args.size()) return usage_error("-o needs a path");
      out_path = args[i];
    } else if (file.empty()) {
      file = args[i];
    } else {
      return usage_error("unexpected argument '" + args[i] + "'");
    }
  }
  if (file.empty() || out_path.empty())
    return usage_error("export-dot needs a network file and -o OUT");
  NetworkHandle h;
  int code = 0;
  if (load_network(file, h, "export-dot", false, code) < 0) return code;
  StringOut dot;
  int st = fbn_export_dot(h.n, nullptr, &dot.s);
  if (st != FBN_OK) return report_failure("export-dot", st);
  if (!write_file(out_path, dot.str())) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  std::cout << "VERDICT export-dot yes " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage_error("missing subcommand");
  std::string sub = args[0];
  args.erase(args.begin());
  if (sub == "validate") return cmd_validate(args);
  if (sub == "classify") return cmd_classify(args);
  if (sub == "forest-based") return cmd_forest_based(args);
  if (sub == "based-on") return cmd_based_on(args);
  if (sub == "clusters") return cmd_clusters(args);
  if (sub == "gamma") return cmd_gamma(args);
  if (sub == "universal") return cmd_universal(args);
  if (sub == "gen") return cmd_gen(args);
  if (sub == "export-dot") return cmd_export_dot(args);
  return usage_error("unknown subcommand '" + sub + "'");
}
