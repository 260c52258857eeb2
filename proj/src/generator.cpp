#include "hypercut/generator.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace hypercut {

namespace {

std::vector<int> sample_subset(DeterministicRng& rng, int n, int k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + k);
  std::sort(subset.begin(), subset.end());
  return subset;
}

}  // namespace

OrientedHypergraph generate_uniform(const GenOptions& options) {
  if (options.n < 1) fail(ErrorCode::UsageError, "generator needs n >= 1");
  if (options.k < 1 || options.k > options.n)
    fail(ErrorCode::UsageError, "generator needs 1 <= k <= n, got k = " +
                                    std::to_string(options.k) + ", n = " +
                                    std::to_string(options.n));
  if (options.m < 1) fail(ErrorCode::UsageError, "generator needs m >= 1");

  DeterministicRng rng(options.seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<std::vector<int>> edges;
    edges.reserve(options.m);
    for (int e = 0; e < options.m; ++e) edges.push_back(sample_subset(rng, options.n, options.k));
    OrientedHypergraph candidate = OrientedHypergraph::classical(options.n, edges);
    if (!options.connected || candidate.connected()) return candidate;
  }
  fail(ErrorCode::GenerationFailed,
       "no connected instance found in " + std::to_string(options.max_attempts) + " attempts");
}

OrientedHypergraph generate_simple_graph(int n, int m, std::uint64_t seed, bool connected,
                                         int max_attempts) {
  if (n < 2) fail(ErrorCode::UsageError, "simple graph generator needs n >= 2");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 1 || m > max_edges)
    fail(ErrorCode::UsageError, "simple graph generator needs 1 <= m <= n(n-1)/2");

  std::vector<std::pair<int, int>> all_pairs;
  all_pairs.reserve(static_cast<size_t>(max_edges));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all_pairs.push_back({a, b});

  DeterministicRng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<std::pair<int, int>> pairs = all_pairs;
    for (int i = 0; i < m; ++i) {
      const int j =
          i + static_cast<int>(rng.below(static_cast<std::uint64_t>(pairs.size() - i)));
      std::swap(pairs[i], pairs[j]);
    }
    std::vector<std::vector<int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) edges.push_back({pairs[i].first, pairs[i].second});
    OrientedHypergraph candidate = OrientedHypergraph::classical(n, edges);
    if (!connected || candidate.connected()) return candidate;
  }
  fail(ErrorCode::GenerationFailed,
       "no connected simple graph found in " + std::to_string(max_attempts) + " attempts");
}

}  // namespace hypercut
