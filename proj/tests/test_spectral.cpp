#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "hypercut/generator.hpp"
#include "hypercut/graph_oracle.hpp"
#include "hypercut/spectral.hpp"
#include "test_support.hpp"

using namespace hypercut;
using test_support::close;
using test_support::example_one;
using test_support::random_connected_options;
using test_support::triangle_graph;

namespace {

const double kSqrt3 = std::sqrt(3.0);

// Characteristic polynomial of det(xI - A) by Faddeev-LeVerrier, an
// independent route to the eigenvalue multiset for small matrices.
std::vector<double> characteristic_polynomial(const std::vector<std::vector<double>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  std::vector<double> coeff(n + 1, 0.0);
  coeff[n] = 1.0;
  std::vector<std::vector<double>> am(n, std::vector<double>(n, 0.0));
  for (int step = 1; step <= n; ++step) {
    if (step == 1) {
      am = a;
    } else {
      std::vector<std::vector<double>> shifted = m;
      for (int i = 0; i < n; ++i) shifted[i][i] += coeff[n - step + 1];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double sum = 0.0;
          for (int l = 0; l < n; ++l) sum += a[i][l] * shifted[l][j];
          am[i][j] = sum;
        }
    }
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += am[i][i];
    coeff[n - step] = -trace / step;
    m = am;
  }
  return coeff;
}

// Expands the monic polynomial with the given roots; index i holds the
// coefficient of x^i, matching characteristic_polynomial above.
std::vector<double> polynomial_from_roots(const std::vector<double>& roots) {
  std::vector<double> coeff{1.0};
  for (double root : roots) {
    std::vector<double> next(coeff.size() + 1, 0.0);
    for (size_t i = 0; i < coeff.size(); ++i) {
      next[i + 1] += coeff[i];
      next[i] -= root * coeff[i];
    }
    coeff = next;
  }
  return coeff;
}

OrientedHypergraph disjoint_union(const OrientedHypergraph& a, const OrientedHypergraph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    Edge shifted;
    for (const Incidence& inc : e) shifted.push_back({inc.vertex + a.vertex_count(), inc.sign});
    edges.push_back(shifted);
  }
  return OrientedHypergraph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace

TEST_CASE("adjacency matrix of the running example") {
  AdjacencyMatrix a = adjacency_matrix(example_one());
  const std::vector<std::vector<long long>> expected = {
      {0, -1, -1, 0, 0, 0}, {-1, 0, -1, 0, 0, 0},  {-1, -1, 0, -1, -1, 0},
      {0, 0, -1, 0, -2, -1}, {0, 0, -1, -2, 0, -1}, {0, 0, 0, -1, -1, 0}};
  CHECK(a.entries == expected);
}

TEST_CASE("adjacency counts orientation") {
  OrientedHypergraph anti(2, {Edge{{0, +1}, {1, -1}}});
  CHECK(adjacency_matrix(anti).entries ==
        std::vector<std::vector<long long>>{{0, 1}, {1, 0}});

  OrientedHypergraph co(2, {Edge{{0, +1}, {1, +1}}});
  CHECK(adjacency_matrix(co).entries ==
        std::vector<std::vector<long long>>{{0, -1}, {-1, 0}});
}

TEST_CASE("normalized Laplacian of the running example") {
  NormalizedLaplacian l = normalized_laplacian(example_one());
  const std::vector<std::vector<double>> expected = {
      {1, 1, 1, 0, 0, 0},       {1, 1, 1, 0, 0, 0},       {0.5, 0.5, 1, 0.5, 0.5, 0},
      {0, 0, 0.5, 1, 1, 0.5},   {0, 0, 0.5, 1, 1, 0.5},   {0, 0, 0, 1, 1, 1}};
  CHECK(l.entries == expected);
}

TEST_CASE("normalized Laplacian corner cases") {
  NormalizedLaplacian l = normalized_laplacian(OrientedHypergraph::classical(3, {{0, 1, 2}}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l.entries[i][j] == 1.0);

  CHECK_THROWS_AS(normalized_laplacian(OrientedHypergraph::classical(3, {{1, 2}})), Error);
}

TEST_CASE("spectrum of the running example matches the closed form") {
  Spectrum spec = spectrum(example_one());
  REQUIRE(spec.size() == 6);
  CHECK(close(spec.eigenvalues[4], (3.0 + kSqrt3) / 2.0, 1e-9));
  CHECK(close(spec.eigenvalues[5], 3.0, 1e-9));

  // the eigenfunction for the second largest eigenvalue, degree-normalized
  // with the largest-magnitude entry positive
  const std::vector<double> base = {-(1.0 + kSqrt3) / 2.0, -(1.0 + kSqrt3) / 2.0, -0.5,
                                    (1.0 + kSqrt3) / 4.0, (1.0 + kSqrt3) / 4.0, 1.0};
  const std::vector<int> degrees = {1, 1, 2, 2, 2, 1};
  double norm = 0.0;
  for (int v = 0; v < 6; ++v) norm += degrees[v] * base[v] * base[v];
  norm = std::sqrt(norm);
  for (int v = 0; v < 6; ++v) CHECK(close(spec.eigenfunctions[4][v], -base[v] / norm, 1e-8));

  // the top eigenfunction is constant with unit degree-weighted norm
  for (int v = 0; v < 6; ++v) CHECK(close(spec.eigenfunctions[5][v], 1.0 / 3.0, 1e-8));
}

TEST_CASE("single 3-edge spectrum") {
  Spectrum spec = spectrum(OrientedHypergraph::classical(3, {{0, 1, 2}}));
  CHECK(close(spec.eigenvalues[0], 0.0, 1e-9));
  CHECK(close(spec.eigenvalues[1], 0.0, 1e-9));
  CHECK(close(spec.eigenvalues[2], 3.0, 1e-9));
}

TEST_CASE("disjoint unions take the union of spectra") {
  OrientedHypergraph block = OrientedHypergraph::classical(3, {{0, 1, 2}});
  OrientedHypergraph both = disjoint_union(block, block);
  Spectrum whole = spectrum(both);
  Spectrum part = spectrum(block);
  std::vector<double> expected;
  expected.insert(expected.end(), part.eigenvalues.begin(), part.eigenvalues.end());
  expected.insert(expected.end(), part.eigenvalues.begin(), part.eigenvalues.end());
  std::sort(expected.begin(), expected.end());
  REQUIRE(whole.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(close(whole.eigenvalues[i], expected[i], 1e-9));

  int at_k = 0;
  for (double lambda : whole.eigenvalues)
    if (std::abs(lambda - 3.0) <= 1e-7) ++at_k;
  CHECK(at_k == 2);
}

TEST_CASE("multiplicity of k counts components") {
  DeterministicRng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int pieces = 1 + static_cast<int>(rng.below(3));
    const int k = 2 + static_cast<int>(rng.below(3));
    OrientedHypergraph g = OrientedHypergraph::classical(1, {{0}});
    for (int piece = 0; piece < pieces; ++piece) {
      GenOptions options = random_connected_options(rng, 1000 + trial * 7 + piece, 4, 8);
      options.k = k;
      options.n = k + 1 + static_cast<int>(rng.below(3));
      options.m = (options.n + k - 3) / (k - 1) + static_cast<int>(rng.below(4));
      OrientedHypergraph part = generate_uniform(options);
      g = piece == 0 ? part : disjoint_union(g, part);
    }
    Spectrum spec = spectrum(g);
    int at_k = 0;
    for (double lambda : spec.eigenvalues)
      if (std::abs(lambda - k) <= 1e-7) ++at_k;
    CHECK(at_k == pieces);
  }
}

TEST_CASE("spectrum invariants over random uniform instances") {
  DeterministicRng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    OrientedHypergraph g = generate_uniform(random_connected_options(rng, 2000 + trial));
    const int k = *g.uniformity();
    Spectrum spec = spectrum(g);
    const int n = spec.size();

    CHECK(spec.eigenvalues[0] >= -1e-9);
    CHECK(close(spec.eigenvalues[n - 1], k, 1e-9));
    for (int i = 0; i + 1 < n; ++i) CHECK(spec.eigenvalues[i] <= spec.eigenvalues[i + 1]);

    // residuals against L, which was never given to the solver
    NormalizedLaplacian l = normalized_laplacian(g);
    for (int i = 0; i < n; ++i) {
      for (int row = 0; row < n; ++row) {
        double lhs = 0.0;
        for (int col = 0; col < n; ++col) lhs += l.entries[row][col] * spec.eigenfunctions[i][col];
        CHECK(std::abs(lhs - spec.eigenvalues[i] * spec.eigenfunctions[i][row]) <=
              1e-8 * (1.0 + std::abs(spec.eigenvalues[i])));
      }
    }

    // degree-weighted normalization
    for (int i = 0; i < n; ++i) {
      double weighted = 0.0;
      for (int v = 0; v < n; ++v)
        weighted += g.degree(v) * spec.eigenfunctions[i][v] * spec.eigenfunctions[i][v];
      CHECK(close(weighted, 1.0, 1e-9));
    }
  }
}

TEST_CASE("eigenvalue multiset agrees with the characteristic polynomial for n <= 5") {
  DeterministicRng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    GenOptions options;
    options.k = 2 + static_cast<int>(rng.below(2));
    options.n = options.k + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(5 - options.k)));
    options.m = (options.n + options.k - 3) / (options.k - 1) + static_cast<int>(rng.below(4));
    options.seed = 3000 + trial;
    options.connected = true;
    OrientedHypergraph g = generate_uniform(options);

    NormalizedLaplacian l = normalized_laplacian(g);
    std::vector<double> from_matrix = characteristic_polynomial(l.entries);
    std::vector<double> from_roots = polynomial_from_roots(spectrum(g).eigenvalues);
    REQUIRE(from_matrix.size() == from_roots.size());
    double scale = 1.0;
    for (double c : from_matrix) scale = std::max(scale, std::abs(c));
    for (size_t i = 0; i < from_matrix.size(); ++i)
      CHECK(std::abs(from_matrix[i] - from_roots[i]) <= 1e-8 * scale);
  }
}

TEST_CASE("spectrum is deterministic") {
  Spectrum first = spectrum(example_one());
  Spectrum second = spectrum(example_one());
  CHECK(first.eigenvalues == second.eigenvalues);
  CHECK(first.eigenfunctions == second.eigenfunctions);
}

TEST_CASE("Rayleigh quotient") {
  ClassicalView view(example_one());
  const std::vector<double> ones(6, 1.0);
  CHECK(close(rayleigh_quotient(view, ones), 3.0, 1e-12));

  const std::vector<double> paper = {-(1.0 + kSqrt3) / 2.0, -(1.0 + kSqrt3) / 2.0, -0.5,
                                     (1.0 + kSqrt3) / 4.0, (1.0 + kSqrt3) / 4.0, 1.0};
  CHECK(close(rayleigh_quotient(view, paper), (3.0 + kSqrt3) / 2.0, 1e-12));

  ClassicalView pair(OrientedHypergraph::classical(2, {{0, 1}}));
  CHECK(rayleigh_quotient(pair, std::vector<double>{1.0, -1.0}) == 0.0);

  CHECK_THROWS_AS(rayleigh_quotient(view, std::vector<double>(6, 0.0)), Error);
}

TEST_CASE("second largest eigenpair") {
  SecondEigenpair pair = second_largest_eigenpair(ClassicalView(example_one()));
  CHECK(close(pair.lambda, (3.0 + kSqrt3) / 2.0, 1e-9));
  CHECK(pair.multiplicity == 1);
  double weighted = 0.0;
  OrientedHypergraph g = example_one();
  for (int v = 0; v < 6; ++v) weighted += g.degree(v) * pair.f[v];
  CHECK(std::abs(weighted) <= 1e-9);
  CHECK(close(rayleigh_quotient(ClassicalView(example_one()), pair.f), pair.lambda, 1e-9));

  SecondEigenpair two = second_largest_eigenpair(
      ClassicalView(OrientedHypergraph::classical(2, {{0, 1}})));
  CHECK(close(two.lambda, 0.0, 1e-10));
  CHECK(close(two.f[0], -two.f[1], 1e-10));

  SecondEigenpair k3 = second_largest_eigenpair(ClassicalView(triangle_graph()));
  CHECK(close(k3.lambda, 0.5, 1e-9));
  CHECK(k3.multiplicity == 2);

  CHECK_THROWS_AS(
      second_largest_eigenpair(ClassicalView(OrientedHypergraph::classical(4, {{0, 1}, {2, 3}}))),
      Error);
  CHECK_THROWS_AS(
      second_largest_eigenpair(ClassicalView(OrientedHypergraph::classical(3, {{0, 1}, {0, 1, 2}}))),
      Error);
}

TEST_CASE("variational bound holds for random projected functions") {
  VariationalCheck check = verify_variational_bound(ClassicalView(example_one()), 100, 42);
  CHECK(check.all_within);
  CHECK(check.max_quotient <= (3.0 + kSqrt3) / 2.0 + 1e-9);

  // the eigenfunction itself attains the maximum
  SecondEigenpair pair = second_largest_eigenpair(ClassicalView(example_one()));
  CHECK(close(rayleigh_quotient(ClassicalView(example_one()), pair.f), check.lambda, 1e-9));

  VariationalCheck tiny = verify_variational_bound(
      ClassicalView(OrientedHypergraph::classical(2, {{0, 1}})), 50, 7);
  CHECK(tiny.all_within);
  CHECK(tiny.max_quotient <= 1e-9);
}

TEST_CASE("k = 2 reduction to the standard graph Laplacian") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);
    const int max_edges = n * (n - 1) / 2;
    const int m = std::min(max_edges, n + static_cast<int>(seed % 4));
    OrientedHypergraph g = generate_simple_graph(n, m, seed, true);
    SecondEigenpair pair = second_largest_eigenpair(ClassicalView(g));
    const double lambda2 = normalized_graph_lambda2(ClassicalView(g));
    CHECK(close(2.0 - pair.lambda, lambda2, 1e-9));
  }
}

TEST_CASE("bipartite hypergraphs share the positivized spectrum") {
  DeterministicRng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    OrientedHypergraph base = generate_uniform(random_connected_options(rng, 4000 + trial, 4, 8));

    std::vector<int> side(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); ++v) side[v] = 1 + static_cast<int>(rng.below(2));
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) {
      const int orientation = rng.below(2) ? +1 : -1;
      Edge signed_edge;
      for (const Incidence& inc : e)
        signed_edge.push_back({inc.vertex, side[inc.vertex] == 1 ? orientation : -orientation});
      edges.push_back(signed_edge);
    }
    OrientedHypergraph g(base.vertex_count(), edges);
    REQUIRE(find_bipartition(g).has_value());

    Spectrum signed_spec = spectrum(g);
    Spectrum positive_spec = spectrum(g.positivized());
    for (int i = 0; i < signed_spec.size(); ++i)
      CHECK(close(signed_spec.eigenvalues[i], positive_spec.eigenvalues[i], 1e-8));
  }
}

TEST_CASE("general oriented spectra stay nonnegative with small residuals") {
  DeterministicRng rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    OrientedHypergraph base = generate_uniform(random_connected_options(rng, 5000 + trial, 4, 8));
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) {
      Edge signed_edge;
      for (const Incidence& inc : e)
        signed_edge.push_back({inc.vertex, rng.below(2) ? +1 : -1});
      edges.push_back(signed_edge);
    }
    OrientedHypergraph g(base.vertex_count(), edges);

    Spectrum spec = spectrum(g);
    CHECK(spec.eigenvalues.front() >= -1e-9);
    NormalizedLaplacian l = normalized_laplacian(g);
    const int n = spec.size();
    for (int i = 0; i < n; ++i) {
      for (int row = 0; row < n; ++row) {
        double lhs = 0.0;
        for (int col = 0; col < n; ++col) lhs += l.entries[row][col] * spec.eigenfunctions[i][col];
        CHECK(std::abs(lhs - spec.eigenvalues[i] * spec.eigenfunctions[i][row]) <=
              1e-8 * (1.0 + std::abs(spec.eigenvalues[i])));
      }
    }
  }
}

TEST_CASE("spectrum rejects zero degrees") {
  CHECK_THROWS_AS(spectrum(OrientedHypergraph::classical(3, {{1, 2}})), Error);
}
