#pragma once

#include <cstdint>
#include <random>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

/// Seeded random draws with an unbiased bounded sampler, so identical seeds
/// reproduce identical instances independent of the standard library's
/// distribution implementations.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform value in [0, bound) by rejection sampling.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t raw = engine_();
      if (raw >= threshold) return raw % bound;
    }
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct GenOptions {
  int n = 0;
  int k = 0;
  int m = 0;
  std::uint64_t seed = 1;
  bool connected = false;
  int max_attempts = 1000;
};

/// Classical k-uniform hypergraph with m edges drawn uniformly from the
/// k-subsets, with replacement across edges (repeated edges permitted). With
/// the connected flag set, rejection-samples until connected.
OrientedHypergraph generate_uniform(const GenOptions& options);

/// Simple graph (2-uniform, distinct edges) with m edges sampled without
/// replacement from all vertex pairs.
OrientedHypergraph generate_simple_graph(int n, int m, std::uint64_t seed, bool connected,
                                         int max_attempts = 1000);

}  // namespace hypercut
