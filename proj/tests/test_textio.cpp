#include <string>

#include "doctest.h"
#include "error.hpp"
#include "forest_based.hpp"
#include "instances.hpp"
#include "network.hpp"
#include "textio.hpp"

using namespace forestnet;

TEST_CASE("network text round trip is canonical and idempotent") {
  std::string text =
      "# cherry with a comment\n"
      "\n"
      "arc r y\n"
      "arc r x\n"
      "leaf y b\n"
      "leaf x a\n";
  Digraph g = parse_network_text(text);
  std::string canon = print_network_text(g);
  CHECK(canon == "arc r x\narc r y\nleaf x a\nleaf y b\n");
  CHECK(print_network_text(parse_network_text(canon)) == canon);

  Network N = instances::fig7();
  std::string t1 = print_network_text(N);
  Network M = build_network(parse_network_text(t1));
  CHECK(print_network_text(M) == t1);
  CHECK(are_equivalent(N, M));
}

TEST_CASE("network text syntax errors carry line numbers") {
  auto thrown = [](const std::string& text) -> std::string {
    try {
      parse_network_text(text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
      return e.what();
    }
    return "";
  };
  CHECK(thrown("arc a\n") .find("line 1") != std::string::npos);
  CHECK(thrown("arc a b\nedge c d\n").find("line 2") != std::string::npos);
  CHECK(thrown("arc a b!\n").find("line 1") != std::string::npos);
  CHECK(thrown("leaf x a\nleaf x b\n").find("line 2") != std::string::npos);
  CHECK(thrown("arc a b c\n").find("line 1") != std::string::npos);
}

TEST_CASE("forest text accepts trees and solo leaves") {
  std::string text =
      "arc r1 x\n"
      "arc r1 u\n"
      "arc u y\n"
      "arc u z\n"
      "leaf x a\n"
      "leaf y b\n"
      "leaf z c\n"
      "leaf s d\n";
  PhyloForest F = parse_forest_text(text);
  CHECK(F.trees.size() == 2);
  CHECK(F.label_set() == std::vector<std::string>{"a", "b", "c", "d"});
  int solos = 0;
  for (const auto& t : F.trees) solos += t.is_solo();
  CHECK(solos == 1);

  std::string out = print_forest_text(F);
  PhyloForest G = parse_forest_text(out);
  CHECK(G.canonical_key() == F.canonical_key());
  CHECK(print_forest_text(G) == out);
}

TEST_CASE("forest text rejects non-tree components") {
  // Two-vertex component: its root has outdegree 1 and its leaf no label.
  CHECK_THROWS_AS(parse_forest_text("arc r x\narc r y\nleaf x a\nleaf y b\n"
                                    "arc q w\n"),
                  Error);
  // Component with a hybrid.
  std::string hyb =
      "arc r x\narc r h\narc s y\narc s h\narc h z\n"
      "leaf x a\nleaf y b\nleaf z c\n";
  CHECK_THROWS_AS(parse_forest_text(hyb), Error);
}

TEST_CASE("dot export marks kinds and certificates") {
  Network N = instances::fig9();
  std::string plain = export_dot(N);
  CHECK(plain.find("digraph") != std::string::npos);
  CHECK(plain.find("diamond") != std::string::npos);  // hybrids
  CHECK(plain.find("box") != std::string::npos);      // leaves
  CHECK(plain.find("dashed") == std::string::npos);

  auto cert = decide_forest_based(N);
  REQUIRE(cert.has_value());
  std::string with = export_dot(N, &*cert);
  CHECK(with.find("dashed") != std::string::npos);  // contact arcs
  CHECK(with.find("filled") != std::string::npos);  // component colors
}

TEST_CASE("newick import builds a tree network") {
  Digraph g = parse_newick("((a,b),c);");
  Network N = build_network(g);
  CHECK(N.m() == 1);
  CHECK(N.nx() == 3);
  CHECK(N.hybrids.empty());
  CHECK(N.label_set == std::vector<std::string>{"a", "b", "c"});

  // Branch lengths are dropped; the shape survives.
  Digraph g2 = parse_newick("((a:0.5,b:1):2,c:0.1);");
  CHECK(are_equivalent(build_network(g2), N));

  CHECK_THROWS_AS(parse_newick("((a,b),c)"), Error);   // missing ';'
  CHECK_THROWS_AS(parse_newick("((a,b),a);"), Error);  // duplicate name
  CHECK_THROWS_AS(parse_newick("((a,b,c);"), Error);   // unbalanced
}
