#include "hypercut/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hypercut {

OrientedHypergraph::OrientedHypergraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ <= 0) fail(ErrorCode::UsageError, "vertex count must be positive");
  degrees_.assign(n_, 0);
  incident_.assign(n_, {});
  std::vector<char> seen(n_, 0);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& edge = edges_[e];
    if (edge.empty()) fail(ErrorCode::EmptyEdge, "edge " + std::to_string(e) + " is empty");
    for (const Incidence& inc : edge) {
      if (inc.vertex < 0 || inc.vertex >= n_)
        fail(ErrorCode::VertexOutOfRange,
             "edge " + std::to_string(e) + " references vertex " + std::to_string(inc.vertex) +
                 " outside [0, " + std::to_string(n_) + ")");
      if (inc.sign != 1 && inc.sign != -1)
        fail(ErrorCode::UsageError, "incidence signs must be +1 or -1");
      if (seen[inc.vertex])
        fail(ErrorCode::DuplicateVertexInEdge,
             "edge " + std::to_string(e) + " lists vertex " + std::to_string(inc.vertex) +
                 " more than once");
      seen[inc.vertex] = 1;
    }
    for (const Incidence& inc : edge) {
      seen[inc.vertex] = 0;
      degrees_[inc.vertex] += 1;
      incident_[inc.vertex].push_back(e);
      volume_ += 1;
    }
  }
}

OrientedHypergraph OrientedHypergraph::classical(int vertex_count,
                                                 const std::vector<std::vector<int>>& edges) {
  std::vector<Edge> signed_edges;
  signed_edges.reserve(edges.size());
  for (const auto& vertices : edges) {
    Edge e;
    e.reserve(vertices.size());
    for (int v : vertices) e.push_back({v, +1});
    signed_edges.push_back(std::move(e));
  }
  return OrientedHypergraph(vertex_count, std::move(signed_edges));
}

bool OrientedHypergraph::all_signs_positive() const noexcept {
  for (const Edge& e : edges_)
    for (const Incidence& inc : e)
      if (inc.sign != 1) return false;
  return true;
}

std::optional<int> OrientedHypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  int k = cardinality(0);
  for (int e = 1; e < edge_count(); ++e)
    if (cardinality(e) != k) return std::nullopt;
  return k;
}

std::optional<int> OrientedHypergraph::regularity() const {
  int d = degrees_[0];
  for (int v = 1; v < n_; ++v)
    if (degrees_[v] != d) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> OrientedHypergraph::connected_components() const {
  std::vector<std::vector<int>> components;
  std::vector<char> vertex_seen(n_, 0);
  std::vector<char> edge_seen(edges_.size(), 0);
  for (int start = 0; start < n_; ++start) {
    if (vertex_seen[start]) continue;
    std::vector<int> component;
    std::queue<int> queue;
    queue.push(start);
    vertex_seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      component.push_back(v);
      for (int e : incident_[v]) {
        if (edge_seen[e]) continue;
        edge_seen[e] = 1;
        for (const Incidence& inc : edges_[e]) {
          if (!vertex_seen[inc.vertex]) {
            vertex_seen[inc.vertex] = 1;
            queue.push(inc.vertex);
          }
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool OrientedHypergraph::connected() const {
  return connected_components().size() == 1;
}

bool OrientedHypergraph::degree_assumption_holds() const {
  for (int v = 0; v < n_; ++v)
    if (2LL * degrees_[v] > volume_) return false;
  return true;
}

OrientedHypergraph OrientedHypergraph::positivized() const {
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges)
    for (Incidence& inc : e) inc.sign = +1;
  return OrientedHypergraph(n_, std::move(edges));
}

namespace {

std::vector<Edge> canonical_edges(const OrientedHypergraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b) {
  return a.vertex_count() == b.vertex_count() && canonical_edges(a) == canonical_edges(b);
}

ClassicalView::ClassicalView(OrientedHypergraph g) : g_(std::move(g)) {
  if (!g_.all_signs_positive())
    fail(ErrorCode::NotClassical, "hypergraph has negative incidence signs");
}

int ClassicalView::require_uniform() const {
  auto k = g_.uniformity();
  if (!k) fail(ErrorCode::NotUniform, "edge cardinalities are not constant");
  return *k;
}

DualMapping dual(const ClassicalView& gamma) {
  const OrientedHypergraph& g = gamma.graph();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      fail(ErrorCode::ZeroDegreeVertex,
           "vertex " + std::to_string(v) + " lies in no edge; dual would have an empty edge");
  std::vector<Edge> dual_edges(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    dual_edges[v].reserve(g.incident_edges(v).size());
    for (int e : g.incident_edges(v)) dual_edges[v].push_back({e, +1});
  }
  DualMapping mapping{OrientedHypergraph(g.edge_count(), std::move(dual_edges)), {}, {}};
  mapping.vertex_to_dual_edge.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) mapping.vertex_to_dual_edge[v] = v;
  mapping.edge_to_dual_vertex.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) mapping.edge_to_dual_vertex[e] = e;
  return mapping;
}

std::vector<int> Bipartition::side_members(int which) const {
  std::vector<int> members;
  for (int v = 0; v < static_cast<int>(side.size()); ++v)
    if (side[v] == which) members.push_back(v);
  return members;
}

std::optional<Bipartition> find_bipartition(const OrientedHypergraph& gamma) {
  const int n = gamma.vertex_count();
  std::vector<int> side(n, 0);
  std::vector<char> edge_done(gamma.edge_count(), 0);
  for (int start = 0; start < n; ++start) {
    if (side[start] != 0) continue;
    side[start] = 1;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int e : gamma.incident_edges(v)) {
        if (edge_done[e]) continue;
        edge_done[e] = 1;
        int sign_v = 0;
        for (const Incidence& inc : gamma.edge(e))
          if (inc.vertex == v) sign_v = inc.sign;
        for (const Incidence& inc : gamma.edge(e)) {
          // co-oriented pairs share a side, anti-oriented pairs take opposite sides
          int required = inc.sign == sign_v ? side[v] : 3 - side[v];
          if (side[inc.vertex] == 0) {
            side[inc.vertex] = required;
            queue.push(inc.vertex);
          } else if (side[inc.vertex] != required) {
            return std::nullopt;
          }
        }
      }
    }
  }
  return Bipartition{std::move(side)};
}

ClassicalView positivize(const OrientedHypergraph& gamma) {
  return ClassicalView(gamma.positivized());
}

}  // namespace hypercut
