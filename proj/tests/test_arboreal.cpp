#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "forest_based.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace forestnet;

TEST_CASE("arboreal decider rejects non-arboreal input") {
  CHECK_THROWS_AS(arboreal_forest_based(instances::fig9()), Error);
  try {
    arboreal_forest_based(instances::root_triangle());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotArboreal);
  }
}

TEST_CASE("fig5 fails with the omnian component as witness") {
  Network N = instances::fig5();
  ArborealResult r = arboreal_forest_based(N);
  CHECK_FALSE(r.forest_based);
  CHECK_FALSE(r.cert.has_value());
  CHECK(r.witness_component == std::vector<std::string>{"h1", "h2"});
}

TEST_CASE("13-vertex instance defeats the hybrid-only escape test") {
  Network N = instances::arboreal_gap13();
  ArborealResult r = arboreal_forest_based(N);
  CHECK_FALSE(r.forest_based);
  CHECK(r.witness_component == std::vector<std::string>{"u1", "u2", "u3"});
  CHECK_FALSE(decide_forest_based(N).has_value());
  CHECK_FALSE(brute_force_forest_based(N).has_value());
}

TEST_CASE("tree networks delegate to the path search") {
  Network T = build_network(Digraph::from_arcs(
      {{"r", "u"}, {"r", "z"}, {"u", "x"}, {"u", "y"}},
      {{"x", "a"}, {"y", "b"}, {"z", "c"}}));
  ArborealResult r = arboreal_forest_based(T);
  CHECK(r.forest_based);
  REQUIRE(r.cert.has_value());
  CHECK(verify_certificate(T, *r.cert).ok);
  CHECK(r.sequences.empty());
}

TEST_CASE("positive arboreal instances carry escape sequences") {
  // Two roots sharing one hybrid above an internal vertex: omnian-free, but
  // grow hybrids below omnians via the generator for richer cases.
  int positives = 0;
  for (int i = 0; i < 120; ++i) {
    GenParams p;
    p.roots = 2 + i % 3;
    p.leaves_min = std::max(2, p.roots);
    p.leaves_max = 6;
    p.hybrids_min = p.roots - 1;
    p.hybrids_max = p.roots - 1;
    p.bias = GenBias::Arboreal;
    p.seed = 21000 + i;
    Network N = random_network(p);
    REQUIRE(is_arboreal(N));
    ArborealResult r = arboreal_forest_based(N);
    auto direct = decide_forest_based(N);
    CHECK(r.forest_based == direct.has_value());
    if (!r.forest_based) continue;
    ++positives;
    REQUIRE(r.cert.has_value());
    CHECK(verify_certificate(N, *r.cert).ok);

    // One sequence per omnian, walking the shared-hybrid graph from the
    // omnian to a vertex owning a non-hybrid child.
    std::set<std::string> omn;
    for (int v : omnians(N)) omn.insert(N.g.names[v]);
    CHECK(r.sequences.size() == omn.size());
    for (const auto& [start, seq] : r.sequences) {
      CHECK(omn.count(start) == 1);
      REQUIRE_FALSE(seq.empty());
      CHECK(seq.front() == start);
      int last = N.g.require(seq.back());
      bool escapes = false;
      for (int c : N.g.kids[last])
        escapes |= N.kind[c] != VertexKind::Hybrid;
      CHECK(escapes);
      for (size_t k = 0; k + 1 < seq.size(); ++k) {
        int a = N.g.require(seq[k]);
        int b = N.g.require(seq[k + 1]);
        bool share = false;
        for (int c : N.g.kids[a])
          if (N.kind[c] == VertexKind::Hybrid)
            for (int c2 : N.g.kids[b]) share |= c == c2;
        CHECK(share);
      }
    }

    // Arboreal and forest-based with >= 2 roots means properly so.
    if (N.m() >= 2) {
      auto col = decide_proper_forest_based(N);
      CHECK(col.has_value());
    }
  }
  CHECK(positives > 10);
}

TEST_CASE("arboreal certificates split into exactly m components") {
  for (int i = 0; i < 60; ++i) {
    GenParams p;
    p.roots = 2 + i % 2;
    p.leaves_min = p.roots;
    p.leaves_max = 5;
    p.hybrids_min = p.roots - 1;
    p.hybrids_max = p.roots - 1;
    p.bias = GenBias::Arboreal;
    p.seed = 22000 + i;
    Network N = random_network(p);
    ArborealResult r = arboreal_forest_based(N);
    if (!r.forest_based) continue;
    int mx = -1;
    for (int c : r.cert->comp) mx = std::max(mx, c);
    CHECK(mx + 1 == N.m());
  }
}
