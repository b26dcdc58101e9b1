#pragma once

#include <cstdint>
#include <optional>

#include "forest_based.hpp"
#include "network.hpp"

namespace forestnet {

struct SplitMix64 {
  uint64_t state = 1;
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n) by rejection.
  uint64_t below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do v = next();
    while (v >= limit);
    return v % n;
  }
};

enum class GenBias { Unconstrained, TreeChild, Arboreal };

struct GenParams {
  int leaves_min = 4;
  int leaves_max = 8;
  int roots = 2;
  int hybrids_min = 0;
  int hybrids_max = 3;
  GenBias bias = GenBias::Unconstrained;
  uint64_t seed = 1;
};

// Seeded binary network generator: random trees on a label partition joined
// by hybrid insertions; the first roots-1 hybrids bridge distinct components.
Network random_network(const GenParams& p);

// Literal scan over all retained-arc subsets; at most 22 arcs.
std::optional<ForestCertificate> brute_force_forest_based(const Network& N);

// Same scan, additionally requiring exactly one root per component.
std::optional<ForestCertificate> brute_force_proper(const Network& N);

}  // namespace forestnet
