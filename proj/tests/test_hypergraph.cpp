#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include <doctest.h>

#include "hypercut/generator.hpp"
#include "hypercut/hypergraph.hpp"
#include "test_support.hpp"

using namespace hypercut;
using test_support::example_one;
using test_support::triangle_graph;

TEST_CASE("construction validates and precomputes degrees") {
  OrientedHypergraph g = example_one();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  CHECK(g.degrees() == std::vector<int>{1, 1, 2, 2, 2, 1});
  CHECK(g.volume() == 9);

  CHECK(OrientedHypergraph::classical(2, {{0, 1}}).degrees() == std::vector<int>{1, 1});

  CHECK_THROWS_WITH_AS(OrientedHypergraph(3, {Edge{{0, 1}, {0, 1}}}),
                       doctest::Contains("more than once"), Error);
  CHECK_THROWS_AS(OrientedHypergraph(3, {Edge{}}), Error);
  CHECK_THROWS_AS(OrientedHypergraph(2, {Edge{{5, 1}}}), Error);
  CHECK_THROWS_AS(OrientedHypergraph(0, {}), Error);

  try {
    OrientedHypergraph(3, {Edge{{0, 1}, {0, 1}}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateVertexInEdge);
  }
}

TEST_CASE("uniformity and regularity") {
  CHECK(example_one().uniformity() == 3);
  CHECK_FALSE(example_one().regularity().has_value());

  OrientedHypergraph triangle = triangle_graph();
  CHECK(triangle.uniformity() == 2);
  CHECK(triangle.regularity() == 2);

  OrientedHypergraph mixed = OrientedHypergraph::classical(3, {{0, 1}, {0, 1, 2}});
  CHECK_FALSE(mixed.uniformity().has_value());

  CHECK_FALSE(OrientedHypergraph::classical(2, {}).uniformity().has_value());
}

TEST_CASE("connected components") {
  CHECK(example_one().connected_components() ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
  CHECK(example_one().connected());

  OrientedHypergraph split = OrientedHypergraph::classical(4, {{0, 1}, {2, 3}});
  CHECK(split.connected_components() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  OrientedHypergraph singleton = OrientedHypergraph::classical(1, {{0}});
  CHECK(singleton.connected_components() == std::vector<std::vector<int>>{{0}});

  // isolated vertices form their own components
  OrientedHypergraph isolated = OrientedHypergraph::classical(3, {{1, 2}});
  CHECK(isolated.connected_components() == std::vector<std::vector<int>>{{0}, {1, 2}});
}

TEST_CASE("degree assumption") {
  CHECK(example_one().degree_assumption_holds());
  CHECK(OrientedHypergraph::classical(2, {{0, 1}}).degree_assumption_holds());
  // deg(v0) = 3 exceeds the remaining degree sum of 1
  CHECK_FALSE(OrientedHypergraph::classical(2, {{0}, {0}, {0, 1}}).degree_assumption_holds());
}

TEST_CASE("dual of the triangle is a triangle") {
  DualMapping mapping = dual(ClassicalView(triangle_graph()));
  CHECK(mapping.dual == triangle_graph());
  CHECK(mapping.dual.uniformity() == 2);
  CHECK(mapping.dual.regularity() == 2);
}

TEST_CASE("dual of a single edge stacks loops on one vertex") {
  OrientedHypergraph single = OrientedHypergraph::classical(3, {{0, 1, 2}});
  DualMapping mapping = dual(ClassicalView(single));
  CHECK(mapping.dual.vertex_count() == 1);
  CHECK(mapping.dual.edge_count() == 3);
  for (int e = 0; e < 3; ++e) CHECK(mapping.dual.edge(e) == Edge{{0, +1}});
}

TEST_CASE("dual of the running example transposes the incidence") {
  DualMapping mapping = dual(ClassicalView(example_one()));
  CHECK(mapping.dual.vertex_count() == 3);
  CHECK(mapping.dual.edge_count() == 6);
  std::vector<int> cardinalities;
  for (int e = 0; e < 6; ++e) cardinalities.push_back(mapping.dual.cardinality(e));
  CHECK(cardinalities == std::vector<int>{1, 1, 2, 2, 2, 1});

  DualMapping twice = dual(ClassicalView(mapping.dual));
  CHECK(twice.dual == example_one());
}

TEST_CASE("dual rejects zero-degree vertices") {
  OrientedHypergraph isolated = OrientedHypergraph::classical(3, {{1, 2}});
  CHECK_THROWS_AS(dual(ClassicalView(isolated)), Error);
}

TEST_CASE("dual involution and degree conservation over random instances") {
  DeterministicRng shape_rng(13);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    OrientedHypergraph g =
        generate_uniform(test_support::random_connected_options(shape_rng, seed, 4, 8));

    long long cardinality_sum = 0;
    for (int e = 0; e < g.edge_count(); ++e) cardinality_sum += g.cardinality(e);
    CHECK(g.volume() == cardinality_sum);

    DualMapping once = dual(ClassicalView(g));
    DualMapping twice = dual(ClassicalView(once.dual));
    REQUIRE(twice.dual.vertex_count() == g.vertex_count());
    REQUIRE(twice.dual.edge_count() == g.edge_count());
    // exact incidence comparison through the composed bijections
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int image = twice.edge_to_dual_vertex[once.vertex_to_dual_edge[v]];
      for (int e = 0; e < g.edge_count(); ++e) {
        const int edge_image = twice.vertex_to_dual_edge[once.edge_to_dual_vertex[e]];
        bool in_original = false;
        for (const Incidence& inc : g.edge(e)) in_original |= inc.vertex == v;
        bool in_double_dual = false;
        for (const Incidence& inc : twice.dual.edge(edge_image))
          in_double_dual |= inc.vertex == image;
        REQUIRE(in_original == in_double_dual);
      }
    }

    // uniform instances have regular duals with matching constant
    REQUIRE(once.dual.regularity() == g.uniformity());
    if (auto d = g.regularity()) CHECK(once.dual.uniformity() == d);
  }
}

TEST_CASE("component structure is invariant under relabeling and edge order") {
  DeterministicRng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    GenOptions options;
    options.n = 4 + static_cast<int>(rng.below(5));
    options.k = 2 + static_cast<int>(rng.below(2));
    options.m = 1 + static_cast<int>(rng.below(6));
    options.seed = 100 + trial;
    OrientedHypergraph g = generate_uniform(options);

    std::vector<int> relabel(g.vertex_count());
    std::iota(relabel.begin(), relabel.end(), 0);
    for (int i = 0; i < g.vertex_count(); ++i) {
      int j = i + static_cast<int>(rng.below(g.vertex_count() - i));
      std::swap(relabel[i], relabel[j]);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      Edge mapped;
      for (const Incidence& inc : e) mapped.push_back({relabel[inc.vertex], inc.sign});
      edges.push_back(mapped);
    }
    std::reverse(edges.begin(), edges.end());
    OrientedHypergraph permuted(g.vertex_count(), edges);
    CHECK(permuted.connected_components().size() == g.connected_components().size());
  }
}

TEST_CASE("bipartition handling") {
  // all-positive inputs sit entirely on side 1
  auto all_positive = find_bipartition(example_one());
  REQUIRE(all_positive.has_value());
  CHECK(all_positive->side == std::vector<int>{1, 1, 1, 1, 1, 1});
  CHECK(all_positive->side_members(2).empty());

  // a single anti-oriented pair splits
  OrientedHypergraph pair(2, {Edge{{0, +1}, {1, -1}}});
  auto split = find_bipartition(pair);
  REQUIRE(split.has_value());
  CHECK(split->side[0] != split->side[1]);

  // odd anti-orientation cycle: no valid assignment among all 2^3
  OrientedHypergraph odd(3, {Edge{{0, +1}, {1, -1}}, Edge{{1, +1}, {2, -1}},
                             Edge{{0, +1}, {2, -1}}});
  bool exhaustive_found = false;
  for (int assignment = 0; assignment < 8; ++assignment) {
    std::vector<int> side(3);
    for (int v = 0; v < 3; ++v) side[v] = (assignment >> v) & 1 ? 2 : 1;
    exhaustive_found |= test_support::valid_bipartition(odd, side);
  }
  CHECK_FALSE(exhaustive_found);
  CHECK_FALSE(find_bipartition(odd).has_value());
}

TEST_CASE("bipartition found for planted bipartite instances") {
  DeterministicRng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    GenOptions options;
    options.n = 4 + static_cast<int>(rng.below(5));
    options.k = 2 + static_cast<int>(rng.below(3));
    if (options.k > options.n) options.k = options.n;
    options.m = 2 + static_cast<int>(rng.below(5));
    options.seed = 500 + trial;
    OrientedHypergraph base = generate_uniform(options);

    std::vector<int> planted(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); ++v) planted[v] = 1 + static_cast<int>(rng.below(2));
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) {
      const int orientation = rng.below(2) ? +1 : -1;
      Edge signed_edge;
      for (const Incidence& inc : e)
        signed_edge.push_back({inc.vertex, planted[inc.vertex] == 1 ? orientation : -orientation});
      edges.push_back(signed_edge);
    }
    OrientedHypergraph g(base.vertex_count(), edges);
    auto found = find_bipartition(g);
    REQUIRE(found.has_value());
    CHECK(test_support::valid_bipartition(g, found->side));
  }
}

TEST_CASE("positivize") {
  OrientedHypergraph pair(2, {Edge{{0, +1}, {1, -1}}});
  ClassicalView positive = positivize(pair);
  CHECK(positive.graph().edge(0) == Edge{{0, +1}, {1, +1}});
  CHECK(positive.graph().positivized() == positive.graph());

  CHECK(positivize(example_one()).graph() == example_one());

  auto vacuous = find_bipartition(positive.graph());
  REQUIRE(vacuous.has_value());
  CHECK(vacuous->side_members(2).empty());

  CHECK_THROWS_AS(ClassicalView{pair}, Error);
}
