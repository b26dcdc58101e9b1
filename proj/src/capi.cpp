#include "forestnet/forestnet.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "classify.hpp"
#include "clusters.hpp"
#include "forest_based.hpp"
#include "oracles.hpp"
#include "textio.hpp"
#include "universal.hpp"

using namespace forestnet;

struct fbn_network {
  Network net;
};
struct fbn_forest {
  PhyloForest forest;
};
struct fbn_clusters {
  ClusterSystem cs;
};

namespace {

thread_local std::string g_last_error;

int status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::SyntaxError:
      return FBN_EPARSE;
    case ErrorCode::CycleDetected:
    case ErrorCode::Disconnected:
    case ErrorCode::RootOutdegreeOne:
    case ErrorCode::NonSemiBinaryHybrid:
    case ErrorCode::UnlabeledLeaf:
    case ErrorCode::DuplicateLabel:
    case ErrorCode::ParallelArc:
      return FBN_EINVALID;
    case ErrorCode::ResourceExhausted:
    case ErrorCode::RejectionBudgetExhausted:
      return FBN_EBUDGET;
    case ErrorCode::TooLarge:
      return FBN_ETOOLARGE;
    default:
      return FBN_EPRECONDITION;
  }
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FBN_EINTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

long long budget_or_default(long long budget) {
  return budget > 0 ? budget : kDefaultNodeBudget;
}

}  // namespace

extern "C" {

const char* fbn_status_name(int status) {
  switch (status) {
    case FBN_OK:
      return "ok";
    case FBN_EPARSE:
      return "parse-error";
    case FBN_EINVALID:
      return "invalid-network";
    case FBN_EPRECONDITION:
      return "precondition-failed";
    case FBN_EBUDGET:
      return "budget-exhausted";
    case FBN_ETOOLARGE:
      return "too-large";
    case FBN_EIO:
      return "io-error";
    default:
      return "internal-error";
  }
}

const char* fbn_last_error(void) { return g_last_error.c_str(); }

void fbn_string_free(char* s) { std::free(s); }

int fbn_network_parse(const char* text, fbn_network** out) {
  return guarded([&] {
    auto n = std::make_unique<fbn_network>();
    n->net = build_network(parse_network_text(text ? text : ""));
    *out = n.release();
    return FBN_OK;
  });
}

void fbn_network_free(fbn_network* n) { delete n; }

int fbn_network_print(const fbn_network* n, char** out) {
  return guarded([&] {
    put(out, print_network_text(n->net));
    return FBN_OK;
  });
}

int fbn_network_counts(const fbn_network* n, int* vertices, int* roots,
                       int* leaves, int* hybrids, int* arcs) {
  return guarded([&] {
    if (vertices) *vertices = n->net.n();
    if (roots) *roots = n->net.m();
    if (leaves) *leaves = n->net.nx();
    if (hybrids) *hybrids = static_cast<int>(n->net.hybrids.size());
    if (arcs) *arcs = n->net.g.arc_count();
    return FBN_OK;
  });
}

int fbn_is_binary(const fbn_network* n, int* out) {
  return guarded([&] {
    *out = is_binary(n->net) ? 1 : 0;
    return FBN_OK;
  });
}

int fbn_classify(const fbn_network* n, int* tree_child, int* tree_sibling,
                 int* reticulation_visible, int* arboreal, int* tree_based) {
  return guarded([&] {
    ClassReport r = classify_all(n->net);
    if (tree_child) *tree_child = r.tree_child;
    if (tree_sibling) *tree_sibling = r.tree_sibling;
    if (reticulation_visible) *reticulation_visible = r.reticulation_visible;
    if (arboreal) *arboreal = r.arboreal;
    if (tree_based) *tree_based = r.tree_based ? (*r.tree_based ? 1 : 0) : -1;
    return FBN_OK;
  });
}

int fbn_decide_forest_based(const fbn_network* n, long long budget, int* yes,
                            char** certificate) {
  return guarded([&] {
    auto cert = decide_forest_based(n->net, budget_or_default(budget));
    *yes = cert.has_value() ? 1 : 0;
    if (cert) put(certificate, print_certificate(n->net, *cert));
    return FBN_OK;
  });
}

int fbn_decide_proper(const fbn_network* n, long long budget, int* yes,
                      char** coloring, char** certificate) {
  return guarded([&] {
    auto col = decide_proper_forest_based(n->net, budget_or_default(budget));
    *yes = col.has_value() ? 1 : 0;
    if (col) {
      put(coloring, print_coloring(n->net, *col));
      put(certificate,
          print_certificate(n->net, certificate_from_coloring(n->net, *col)));
    }
    return FBN_OK;
  });
}

int fbn_verify_certificate(const fbn_network* n, const char* certificate,
                           int* ok, char** reason) {
  return guarded([&] {
    auto cert = parse_certificate(n->net, certificate ? certificate : "");
    auto chk = verify_certificate(n->net, cert);
    *ok = chk.ok ? 1 : 0;
    if (!chk.ok) put(reason, chk.reason);
    return FBN_OK;
  });
}

int fbn_brute_forest_based(const fbn_network* n, int* yes) {
  return guarded([&] {
    *yes = brute_force_forest_based(n->net).has_value() ? 1 : 0;
    return FBN_OK;
  });
}

int fbn_brute_proper(const fbn_network* n, int* yes) {
  return guarded([&] {
    *yes = brute_force_proper(n->net).has_value() ? 1 : 0;
    return FBN_OK;
  });
}

int fbn_forest_parse(const char* text, fbn_forest** out) {
  return guarded([&] {
    auto f = std::make_unique<fbn_forest>();
    f->forest = parse_forest_text(text ? text : "");
    *out = f.release();
    return FBN_OK;
  });
}

void fbn_forest_free(fbn_forest* f) { delete f; }

int fbn_is_based_on(const fbn_network* n, const fbn_forest* f,
                    long long budget, int* yes, char** retained) {
  return guarded([&] {
    auto arcs = is_based_on(n->net, f->forest, budget_or_default(budget));
    *yes = arcs.has_value() ? 1 : 0;
    if (arcs && retained) {
      std::string out;
      for (const auto& [t, h] : *arcs)
        out += "retain " + n->net.g.names[t] + " " + n->net.g.names[h] + "\n";
      put(retained, out);
    }
    return FBN_OK;
  });
}

int fbn_clusters_parse(const char* text, fbn_clusters** out) {
  return guarded([&] {
    auto c = std::make_unique<fbn_clusters>();
    c->cs = parse_cluster_text(text ? text : "");
    *out = c.release();
    return FBN_OK;
  });
}

int fbn_clusters_of_network(const fbn_network* n, fbn_clusters** out) {
  return guarded([&] {
    auto c = std::make_unique<fbn_clusters>();
    c->cs = cluster_system(n->net);
    *out = c.release();
    return FBN_OK;
  });
}

void fbn_clusters_free(fbn_clusters* c) { delete c; }

int fbn_clusters_print(const fbn_clusters* c, char** out) {
  return guarded([&] {
    put(out, print_cluster_text(c->cs));
    return FBN_OK;
  });
}

int fbn_check_p123(const fbn_clusters* c, int* p1, int* p2, int* p3,
                   char** detail) {
  return guarded([&] {
    P123Report rep = check_P1_P2_P3(c->cs);
    if (p1) *p1 = rep.p1;
    if (p2) *p2 = rep.p2;
    if (p3) *p3 = rep.p3;
    if (!rep.ok()) put(detail, rep.detail);
    return FBN_OK;
  });
}

int fbn_is_uniquely_determined(const fbn_clusters* c, int* yes) {
  return guarded([&] {
    *yes = is_uniquely_determined(c->cs) ? 1 : 0;
    return FBN_OK;
  });
}

int fbn_reconstruct_arboreal(const fbn_clusters* c, char** network_text) {
  return guarded([&] {
    put(network_text, print_network_text(arboreal_from_clusters(c->cs)));
    return FBN_OK;
  });
}

int fbn_gamma_text(const fbn_network* n, char** out) {
  return guarded([&] {
    const Network& N = n->net;
    GammaGraph G = gamma_graph(N);
    std::string text;
    std::vector<std::pair<std::string, int>> by_name;
    for (int v = 0; v < N.n(); ++v) by_name.emplace_back(N.g.names[v], v);
    std::sort(by_name.begin(), by_name.end());
    for (const auto& [name, v] : by_name)
      text += "gamma " + name + " " + N.g.names[N.gamma_of[v]] + "\n";
    for (const auto& e : G.edges)
      text += "edge " + N.g.names[e.a] + " " + N.g.names[e.b] + " " +
              N.g.names[e.hybrid] + "\n";
    for (const auto& c : G.choices)
      text += "choice " + N.g.names[c.omnian] + " " +
              N.g.names[c.hybrid_child] + " " + N.g.names[c.other_gamma] +
              "\n";
    put(out, text);
    return FBN_OK;
  });
}

int fbn_gamma_dot(const fbn_network* n, char** out) {
  return guarded([&] {
    const Network& N = n->net;
    GammaGraph G = gamma_graph(N);
    std::string text = "graph gamma {\n";
    for (int v : G.rh) text += "  \"" + N.g.names[v] + "\";\n";
    for (const auto& e : G.edges)
      text += "  \"" + N.g.names[e.a] + "\" -- \"" + N.g.names[e.b] +
              "\" [label=\"" + N.g.names[e.hybrid] + "\"];\n";
    for (const auto& c : G.choices)
      text += "  \"" + N.g.names[c.hybrid_child] + "\" -- \"" +
              N.g.names[c.other_gamma] + "\" [style=dotted, label=\"" +
              N.g.names[c.omnian] + "\"];\n";
    text += "}\n";
    put(out, text);
    return FBN_OK;
  });
}

int fbn_universal(const fbn_network* n, long long budget, int* yes,
                  char** detail) {
  return guarded([&] {
    UniversalReport rep =
        is_universal_forest_based(n->net, budget_or_default(budget));
    *yes = rep.universal ? 1 : 0;
    if (rep.universal) {
      std::string keys;
      for (const auto& f : enumerate_forests(n->net.label_set))
        keys += f.canonical_key() + "\n";
      put(detail, keys);
    } else if (rep.missing) {
      put(detail, print_forest_text(*rep.missing));
    }
    return FBN_OK;
  });
}

int fbn_generate(unsigned long long seed, int leaves_min, int leaves_max,
                 int roots, int hybrids_min, int hybrids_max, int bias,
                 char** network_text) {
  return guarded([&] {
    GenParams p;
    p.leaves_min = leaves_min;
    p.leaves_max = leaves_max;
    p.roots = roots;
    p.hybrids_min = hybrids_min;
    p.hybrids_max = hybrids_max;
    p.bias = bias == FBN_BIAS_TREE_CHILD
                 ? GenBias::TreeChild
                 : (bias == FBN_BIAS_ARBOREAL ? GenBias::Arboreal
                                              : GenBias::Unconstrained);
    p.seed = seed;
    put(network_text, print_network_text(random_network(p)));
    return FBN_OK;
  });
}

int fbn_export_dot(const fbn_network* n, const char* certificate, char** out) {
  return guarded([&] {
    if (certificate) {
      ForestCertificate cert = parse_certificate(n->net, certificate);
      put(out, export_dot(n->net, &cert));
    } else {
      put(out, export_dot(n->net, nullptr));
    }
    return FBN_OK;
  });
}

}  // extern "C"
