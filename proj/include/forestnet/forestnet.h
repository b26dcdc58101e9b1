#ifndef FORESTNET_H
#define FORESTNET_H

/* C interface to the forestnet library. All functions return a status code;
 * FBN_OK means success. On failure fbn_last_error() describes the problem
 * (thread-local, valid until the next library call on that thread). Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with fbn_string_free. Handles are opaque and must be released
 * with their matching *_free function. */

#ifdef __cplusplus
extern "C" {
#endif

#define FBN_OK 0
#define FBN_EPARSE 1        /* malformed input text */
#define FBN_EINVALID 2      /* text parsed but is not a valid network/forest */
#define FBN_EPRECONDITION 3 /* operation preconditions not met */
#define FBN_EBUDGET 4       /* search or rejection budget exhausted */
#define FBN_ETOOLARGE 5     /* instance exceeds a combinatorial guard */
#define FBN_EIO 6           /* reserved for callers doing file I/O */
#define FBN_EINTERNAL 7     /* invariant breach inside the library */

#define FBN_BIAS_UNCONSTRAINED 0
#define FBN_BIAS_TREE_CHILD 1
#define FBN_BIAS_ARBOREAL 2

typedef struct fbn_network fbn_network;
typedef struct fbn_forest fbn_forest;
typedef struct fbn_clusters fbn_clusters;

const char* fbn_status_name(int status);
const char* fbn_last_error(void);
void fbn_string_free(char* s);

/* Networks. Text format: 'arc TAIL HEAD' and 'leaf VERTEX LABEL' lines. */
int fbn_network_parse(const char* text, fbn_network** out);
void fbn_network_free(fbn_network* n);
int fbn_network_print(const fbn_network* n, char** out);
int fbn_network_counts(const fbn_network* n, int* vertices, int* roots,
                       int* leaves, int* hybrids, int* arcs);
int fbn_is_binary(const fbn_network* n, int* out);

/* Classification. tree_based is -1 when the network is not binary
 * single-rooted, else 0/1. */
int fbn_classify(const fbn_network* n, int* tree_child, int* tree_sibling,
                 int* reticulation_visible, int* arboreal, int* tree_based);

/* Deciders. budget <= 0 selects the default search budget. On a yes answer
 * the optional out-strings carry printable certificates. */
int fbn_decide_forest_based(const fbn_network* n, long long budget, int* yes,
                            char** certificate);
int fbn_decide_proper(const fbn_network* n, long long budget, int* yes,
                      char** coloring, char** certificate);
int fbn_verify_certificate(const fbn_network* n, const char* certificate,
                           int* ok, char** reason);
int fbn_brute_forest_based(const fbn_network* n, int* yes);
int fbn_brute_proper(const fbn_network* n, int* yes);

/* Forests share the network text format; every component must be a tree. */
int fbn_forest_parse(const char* text, fbn_forest** out);
void fbn_forest_free(fbn_forest* f);
int fbn_is_based_on(const fbn_network* n, const fbn_forest* f,
                    long long budget, int* yes, char** retained);

/* Cluster systems. Text format: one cluster per line, comma separated. */
int fbn_clusters_parse(const char* text, fbn_clusters** out);
int fbn_clusters_of_network(const fbn_network* n, fbn_clusters** out);
void fbn_clusters_free(fbn_clusters* c);
int fbn_clusters_print(const fbn_clusters* c, char** out);
int fbn_check_p123(const fbn_clusters* c, int* p1, int* p2, int* p3,
                   char** detail);
int fbn_is_uniquely_determined(const fbn_clusters* c, int* yes);
int fbn_reconstruct_arboreal(const fbn_clusters* c, char** network_text);

/* Gamma structure: 'gamma V G' per vertex, 'edge A B H' per hybrid,
 * 'choice OMNIAN HYBRID GAMMA' per omnian option. */
int fbn_gamma_text(const fbn_network* n, char** out);
int fbn_gamma_dot(const fbn_network* n, char** out);

/* Universality over the full forest catalog on the network's label set.
 * On yes, detail lists every embedded forest key; on no, detail holds the
 * first missing forest in network text form. */
int fbn_universal(const fbn_network* n, long long budget, int* yes,
                  char** detail);

/* Seeded generator; bias is one of the FBN_BIAS_* constants. */
int fbn_generate(unsigned long long seed, int leaves_min, int leaves_max,
                 int roots, int hybrids_min, int hybrids_max, int bias,
                 char** network_text);

/* Graphviz export; pass a certificate to color components and dash contact
 * arcs, or NULL for a plain drawing. */
int fbn_export_dot(const fbn_network* n, const char* certificate, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FORESTNET_H */
