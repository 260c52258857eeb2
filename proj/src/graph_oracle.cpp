#include "hypercut/graph_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "hypercut/spectral.hpp"

namespace hypercut {

namespace {

void require_two_uniform(const ClassicalView& graph) {
  auto k = graph.uniformity();
  if (!k || *k != 2)
    fail(ErrorCode::NotUniform, "graph oracle requires a 2-uniform hypergraph");
}

}  // namespace

Rational polya_szego_constant(const ClassicalView& graph) {
  require_two_uniform(graph);
  const OrientedHypergraph& g = graph.graph();
  const int n = g.vertex_count();
  if (n > 30) fail(ErrorCode::TooLarge, "oracle enumeration is limited to 30 vertices");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) fail(ErrorCode::ZeroDegreeVertex, "oracle needs positive degrees");

  bool any = false;
  long long best_crossing = 0;
  long long best_volume = 1;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t half = 0; half < subsets; ++half) {
    const std::uint64_t mask = (half << 1) | 1;  // vertex 0 stays inside
    if (mask == full) continue;
    long long crossing = 0;
    for (const Edge& e : g.edges()) {
      const bool a = (mask >> e[0].vertex) & 1;
      const bool b = (mask >> e[1].vertex) & 1;
      if (a != b) ++crossing;
    }
    long long volume = 0;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) volume += g.degree(v);
    const long long smaller = std::min(volume, g.volume() - volume);
    if (!any || static_cast<__int128>(crossing) * best_volume <
                    static_cast<__int128>(best_crossing) * smaller) {
      any = true;
      best_crossing = crossing;
      best_volume = smaller;
    }
  }
  if (!any) fail(ErrorCode::InvalidCut, "no proper cut exists");
  return Rational(best_crossing, best_volume);
}

double normalized_graph_lambda2(const ClassicalView& graph) {
  require_two_uniform(graph);
  const OrientedHypergraph& g = graph.graph();
  const int n = g.vertex_count();
  if (n < 2) fail(ErrorCode::UsageError, "lambda2 needs at least two vertices");

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    auto pair = std::minmax(e[0].vertex, e[1].vertex);
    if (!seen.insert({pair.first, pair.second}).second)
      fail(ErrorCode::UsageError, "graph Laplacian oracle requires a simple graph");
  }

  std::vector<std::vector<int>> adjacency(n, std::vector<int>(n, 0));
  for (const auto& [a, b] : seen) adjacency[a][b] = adjacency[b][a] = 1;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) degree[i] += adjacency[i][j];
  for (int i = 0; i < n; ++i)
    if (degree[i] == 0) fail(ErrorCode::ZeroDegreeVertex, "oracle needs positive degrees");

  std::vector<std::vector<double>> sym(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sym[i][j] = (i == j ? 1.0 : 0.0) -
                  adjacency[i][j] / std::sqrt(static_cast<double>(degree[i]) * degree[j]);
  EigenDecomposition eig = jacobi_eigen(sym);
  return eig.values[1];
}

}  // namespace hypercut
