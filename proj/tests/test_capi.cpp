// Exercises the shared library strictly through the C interface.

#include <cstring>
#include <string>

#include "doctest.h"
#include "forestnet/forestnet.h"

namespace {

const char* kCherry = "arc r x\narc r y\nleaf x a\nleaf y b\n";

const char* kFig5 =
    "arc r1 h1\narc r1 la\narc r2 h1\narc r2 lb\n"
    "arc r3 h2\narc r3 lc\narc r4 h2\narc r4 ld\n"
    "arc h1 h3\narc h2 h3\narc h3 le\n"
    "leaf la a\nleaf lb b\nleaf lc c\nleaf ld d\nleaf le e\n";

const char* kFig9 =
    "arc p1 a\narc p1 x4\narc a v\narc a q2\narc q2 x5\narc q2 h3\n"
    "arc v h1\narc v h2\narc p2 b\narc p2 x6\narc b w\narc b q1\n"
    "arc q1 x7\narc q1 h1\narc w h2\narc w h3\narc h1 x1\narc h2 x2\n"
    "arc h3 x3\n"
    "leaf x1 x1\nleaf x2 x2\nleaf x3 x3\nleaf x4 x4\nleaf x5 x5\n"
    "leaf x6 x6\nleaf x7 x7\n";

const char* kTsClu = "a\nb\nx\ny\na,x\nx,y\ny,b\na,b\n";

struct Net {
  fbn_network* n = nullptr;
  ~Net() { fbn_network_free(n); }
};

struct Str {
  char* s = nullptr;
  ~Str() { fbn_string_free(s); }
};

}  // namespace

TEST_CASE("parse, counts and print") {
  Net net;
  REQUIRE(fbn_network_parse(kFig9, &net.n) == FBN_OK);
  int v = 0, r = 0, l = 0, h = 0, a = 0;
  REQUIRE(fbn_network_counts(net.n, &v, &r, &l, &h, &a) == FBN_OK);
  CHECK(v == 18);
  CHECK(r == 2);
  CHECK(l == 7);
  CHECK(h == 3);
  CHECK(a == 19);
  int binary = 0;
  REQUIRE(fbn_is_binary(net.n, &binary) == FBN_OK);
  CHECK(binary == 1);

  Str printed;
  REQUIRE(fbn_network_print(net.n, &printed.s) == FBN_OK);
  fbn_network* again = nullptr;
  REQUIRE(fbn_network_parse(printed.s, &again) == FBN_OK);
  Str reprinted;
  REQUIRE(fbn_network_print(again, &reprinted.s) == FBN_OK);
  CHECK(std::string(printed.s) == reprinted.s);
  fbn_network_free(again);
}

TEST_CASE("status codes and last error") {
  fbn_network* n = nullptr;
  CHECK(fbn_network_parse("arc r\n", &n) == FBN_EPARSE);
  CHECK(n == nullptr);
  CHECK(std::strlen(fbn_last_error()) > 0);

  // Parses but fails validation: root with outdegree one.
  CHECK(fbn_network_parse("arc r u\narc u x\narc u y\nleaf x a\nleaf y b\n",
                          &n) == FBN_EINVALID);

  Net cherry;
  REQUIRE(fbn_network_parse(kCherry, &cherry.n) == FBN_OK);
  int yes = 0;
  Str col, cert;
  CHECK(fbn_decide_proper(cherry.n, 0, &yes, &col.s, &cert.s) ==
        FBN_EPRECONDITION);

  Net big;
  REQUIRE(fbn_network_parse(kFig9, &big.n) == FBN_OK);
  CHECK(fbn_decide_forest_based(big.n, 1, &yes, nullptr) == FBN_EBUDGET);

  CHECK(std::string(fbn_status_name(FBN_OK)) == "ok");
  CHECK(std::string(fbn_status_name(FBN_EBUDGET)) == "budget-exhausted");
}

TEST_CASE("classification through the interface") {
  Net cherry;
  REQUIRE(fbn_network_parse(kCherry, &cherry.n) == FBN_OK);
  int tc = 0, ts = 0, rv = 0, ar = 0, tb = -2;
  REQUIRE(fbn_classify(cherry.n, &tc, &ts, &rv, &ar, &tb) == FBN_OK);
  CHECK(tc == 1);
  CHECK(ts == 1);
  CHECK(rv == 1);
  CHECK(ar == 1);
  CHECK(tb == 1);

  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  REQUIRE(fbn_classify(f9.n, &tc, &ts, &rv, &ar, &tb) == FBN_OK);
  CHECK(tb == -1);  // two roots: tree-based does not apply
  CHECK(ar == 0);
}

TEST_CASE("decide, certificate text and verification") {
  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  int yes = 0;
  Str cert;
  REQUIRE(fbn_decide_forest_based(f9.n, 0, &yes, &cert.s) == FBN_OK);
  CHECK(yes == 1);
  REQUIRE(cert.s != nullptr);

  int ok = 0;
  Str reason;
  REQUIRE(fbn_verify_certificate(f9.n, cert.s, &ok, &reason.s) == FBN_OK);
  CHECK(ok == 1);

  // Corrupt the certificate: drop the first retained arc line.
  std::string text = cert.s;
  text = text.substr(text.find('\n') + 1);
  REQUIRE(fbn_verify_certificate(f9.n, text.c_str(), &ok, &reason.s) ==
          FBN_OK);
  CHECK(ok == 0);
  CHECK(reason.s != nullptr);

  int brute = 0;
  REQUIRE(fbn_brute_forest_based(f9.n, &brute) == FBN_OK);
  CHECK(brute == 1);
  REQUIRE(fbn_brute_proper(f9.n, &brute) == FBN_OK);
  CHECK(brute == 1);

  Str col, ccert;
  REQUIRE(fbn_decide_proper(f9.n, 0, &yes, &col.s, &ccert.s) == FBN_OK);
  CHECK(yes == 1);
  REQUIRE(fbn_verify_certificate(f9.n, ccert.s, &ok, &reason.s) == FBN_OK);
  CHECK(ok == 1);

  Net f5;
  REQUIRE(fbn_network_parse(kFig5, &f5.n) == FBN_OK);
  REQUIRE(fbn_decide_forest_based(f5.n, 0, &yes, nullptr) == FBN_OK);
  CHECK(yes == 0);
}

TEST_CASE("forests and is_based_on") {
  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  // Trivial forest: seven isolated labeled leaves.
  std::string ftext;
  for (int i = 1; i <= 7; ++i) {
    std::string x = "x" + std::to_string(i);
    ftext += "leaf " + x + " " + x + "\n";
  }
  fbn_forest* f = nullptr;
  REQUIRE(fbn_forest_parse(ftext.c_str(), &f) == FBN_OK);
  int yes = 0;
  Str retained;
  REQUIRE(fbn_is_based_on(f9.n, f, 0, &yes, &retained.s) == FBN_OK);
  CHECK(yes == 1);
  REQUIRE(retained.s != nullptr);
  CHECK(std::string(retained.s).find("retain") != std::string::npos);
  fbn_forest_free(f);

  CHECK(fbn_forest_parse("arc u x\narc u y\narc v x\nleaf x a\n", &f) !=
        FBN_OK);
}

TEST_CASE("cluster systems through the interface") {
  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  fbn_clusters* from_net = nullptr;
  REQUIRE(fbn_clusters_of_network(f9.n, &from_net) == FBN_OK);
  Str printed;
  REQUIRE(fbn_clusters_print(from_net, &printed.s) == FBN_OK);
  CHECK(std::string(printed.s).find("x1") != std::string::npos);
  fbn_clusters_free(from_net);

  fbn_clusters* c = nullptr;
  REQUIRE(fbn_clusters_parse(kTsClu, &c) == FBN_OK);
  int p1 = 0, p2 = 0, p3 = 0;
  Str detail;
  REQUIRE(fbn_check_p123(c, &p1, &p2, &p3, &detail.s) == FBN_OK);
  CHECK(p1 == 1);
  CHECK(p2 == 1);
  CHECK(p3 == 1);

  int unique = -1;
  REQUIRE(fbn_is_uniquely_determined(c, &unique) == FBN_OK);

  // P1-P3 hold yet no arboreal network realizes the system.
  Str net_text;
  CHECK(fbn_reconstruct_arboreal(c, &net_text.s) == FBN_EPRECONDITION);
  fbn_clusters_free(c);

  REQUIRE(fbn_clusters_parse("a\nb\nc\nd\na,c\nb,c\nc,d\n", &c) == FBN_OK);
  REQUIRE(fbn_reconstruct_arboreal(c, &net_text.s) == FBN_OK);
  fbn_network* rebuilt = nullptr;
  REQUIRE(fbn_network_parse(net_text.s, &rebuilt) == FBN_OK);
  fbn_clusters* realized = nullptr;
  REQUIRE(fbn_clusters_of_network(rebuilt, &realized) == FBN_OK);
  Str realized_text;
  REQUIRE(fbn_clusters_print(realized, &realized_text.s) == FBN_OK);
  Str input_text;
  REQUIRE(fbn_clusters_print(c, &input_text.s) == FBN_OK);
  CHECK(std::string(realized_text.s) == input_text.s);
  fbn_clusters_free(realized);
  fbn_network_free(rebuilt);
  fbn_clusters_free(c);

  CHECK(fbn_clusters_parse("a,,b\n", &c) == FBN_EPARSE);
}

TEST_CASE("gamma text and dot") {
  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  Str text;
  REQUIRE(fbn_gamma_text(f9.n, &text.s) == FBN_OK);
  std::string t = text.s;
  CHECK(t.find("gamma v p1") != std::string::npos);
  CHECK(t.find("edge p1 p2 h1") != std::string::npos);
  CHECK(t.find("choice v h1 p2") != std::string::npos);
  Str dot;
  REQUIRE(fbn_gamma_dot(f9.n, &dot.s) == FBN_OK);
  CHECK(std::string(dot.s).find("graph") != std::string::npos);
}

TEST_CASE("universality through the interface") {
  Net cherry;
  REQUIRE(fbn_network_parse(kCherry, &cherry.n) == FBN_OK);
  int yes = 0;
  Str detail;
  REQUIRE(fbn_universal(cherry.n, 0, &yes, &detail.s) == FBN_OK);
  CHECK(yes == 1);

  Net sb;  // semi-binary only: universality requires binary
  REQUIRE(fbn_network_parse(
              "arc r x\narc r y\narc r z\nleaf x a\nleaf y b\nleaf z c\n",
              &sb.n) == FBN_OK);
  CHECK(fbn_universal(sb.n, 0, &yes, &detail.s) == FBN_EPRECONDITION);
}

TEST_CASE("generation through the interface") {
  Str t1, t2;
  REQUIRE(fbn_generate(99, 4, 6, 2, 1, 2, FBN_BIAS_UNCONSTRAINED, &t1.s) ==
          FBN_OK);
  REQUIRE(fbn_generate(99, 4, 6, 2, 1, 2, FBN_BIAS_UNCONSTRAINED, &t2.s) ==
          FBN_OK);
  CHECK(std::string(t1.s) == t2.s);
  fbn_network* n = nullptr;
  REQUIRE(fbn_network_parse(t1.s, &n) == FBN_OK);
  int v = 0, r = 0, l = 0, h = 0, a = 0;
  REQUIRE(fbn_network_counts(n, &v, &r, &l, &h, &a) == FBN_OK);
  CHECK(r == 2);
  CHECK(l >= 4);
  CHECK(l <= 6);
  fbn_network_free(n);

  Str bad;
  CHECK(fbn_generate(1, 5, 4, 1, 0, 0, FBN_BIAS_UNCONSTRAINED, &bad.s) ==
        FBN_EPRECONDITION);
}

TEST_CASE("dot export through the interface") {
  Net f9;
  REQUIRE(fbn_network_parse(kFig9, &f9.n) == FBN_OK);
  Str plain;
  REQUIRE(fbn_export_dot(f9.n, nullptr, &plain.s) == FBN_OK);
  CHECK(std::string(plain.s).find("digraph") != std::string::npos);
  CHECK(std::string(plain.s).find("dashed") == std::string::npos);

  int yes = 0;
  Str cert;
  REQUIRE(fbn_decide_forest_based(f9.n, 0, &yes, &cert.s) == FBN_OK);
  Str colored;
  REQUIRE(fbn_export_dot(f9.n, cert.s, &colored.s) == FBN_OK);
  CHECK(std::string(colored.s).find("dashed") != std::string::npos);
}
