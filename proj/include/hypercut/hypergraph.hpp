#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "hypercut/errors.hpp"

namespace hypercut {

struct Incidence {
  int vertex;
  int sign;  // +1 or -1

  friend bool operator==(const Incidence&, const Incidence&) = default;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

using Edge = std::vector<Incidence>;

/// Vertex set {0..n-1} plus an ordered multiset of signed-incidence edges.
/// Repeated edges are allowed; vertices within an edge must be distinct.
/// Immutable after construction; degrees and incidence lists are precomputed.
class OrientedHypergraph {
 public:
  OrientedHypergraph(int vertex_count, std::vector<Edge> edges);

  /// Convenience constructor for all-positive edges given as vertex lists.
  static OrientedHypergraph classical(int vertex_count,
                                      const std::vector<std::vector<int>>& edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }
  int cardinality(int e) const { return static_cast<int>(edges_[e].size()); }

  int degree(int v) const { return degrees_[v]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  /// Sum of all vertex degrees (equivalently the total incidence count).
  long long volume() const noexcept { return volume_; }
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  bool all_signs_positive() const noexcept;
  /// k when every edge has cardinality k, absent otherwise (or when E is empty).
  std::optional<int> uniformity() const;
  /// d when every vertex has degree d, absent otherwise.
  std::optional<int> regularity() const;

  /// Maximal connected classes, each sorted ascending, ordered by smallest
  /// member. Breadth-first from the smallest unvisited vertex.
  std::vector<std::vector<int>> connected_components() const;
  bool connected() const;

  /// True iff deg(v) <= sum of the other degrees for every vertex.
  bool degree_assumption_holds() const;

  /// Same vertices and edges with every incidence sign set to +1.
  OrientedHypergraph positivized() const;

  /// Edge-multiset equality after canonical sorting; edge order and vertex
  /// order within an edge do not matter, multiplicity and signs do.
  friend bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::vector<int>> incident_;
  long long volume_ = 0;
};

/// Certifies at construction that every incidence sign is +1.
class ClassicalView {
 public:
  explicit ClassicalView(OrientedHypergraph g);

  const OrientedHypergraph& graph() const noexcept { return g_; }
  std::optional<int> uniformity() const { return g_.uniformity(); }
  /// Uniformity k, throwing NotUniform when edge cardinalities differ.
  int require_uniform() const;

 private:
  OrientedHypergraph g_;
};

/// A hypergraph together with its incidence transpose. Dual vertex j stands
/// for edge j of the original; dual edge i collects the edges containing
/// vertex i. The bijections are stored explicitly.
struct DualMapping {
  OrientedHypergraph dual;
  std::vector<int> vertex_to_dual_edge;
  std::vector<int> edge_to_dual_vertex;
};

/// Incidence transpose of a classical hypergraph. Every vertex must lie in
/// at least one edge, otherwise the dual would contain an empty edge.
DualMapping dual(const ClassicalView& gamma);

/// Two-sided split of the vertex set; sides are labeled 1 and 2 and one side
/// may be empty.
struct Bipartition {
  std::vector<int> side;

  std::vector<int> side_members(int which) const;
};

/// A split in which each edge has all its +1 incidences on one side and all
/// its -1 incidences on the other (which side is which may differ per edge),
/// found by parity 2-coloring. Absent when no such split exists.
std::optional<Bipartition> find_bipartition(const OrientedHypergraph& gamma);

ClassicalView positivize(const OrientedHypergraph& gamma);

}  // namespace hypercut
