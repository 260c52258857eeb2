#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypercut/hypergraph.hpp"

namespace hypercut {

/// Integer adjacency counts: entry (i,j), i != j, is the number of edges in
/// which v_i and v_j are anti-oriented minus the number in which they are
/// co-oriented. Diagonal is zero. For classical hypergraphs every
/// off-diagonal entry is -(number of edges containing both).
struct AdjacencyMatrix {
  std::vector<std::vector<long long>> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

AdjacencyMatrix adjacency_matrix(const OrientedHypergraph& gamma);

/// Random-walk normalized Laplacian, identity minus degree-inverse times
/// adjacency. Requires every vertex to have positive degree.
struct NormalizedLaplacian {
  std::vector<std::vector<double>> entries;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(entries.size()); }
};

NormalizedLaplacian normalized_laplacian(const OrientedHypergraph& gamma);

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
/// (row-major upper-triangle order) until the off-diagonal Frobenius mass
/// drops below 1e-13 of the matrix Frobenius norm, capped at 64 sweeps.
/// Deterministic for identical input. Values ascend; vectors[i] is the
/// orthonormal eigenvector for values[i].
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};

EigenDecomposition jacobi_eigen(const std::vector<std::vector<double>>& symmetric);

/// Eigenvalues of the normalized Laplacian in ascending order with
/// eigenfunctions expressed as vertex functions. Each eigenfunction has unit
/// degree-weighted norm and the entry of largest magnitude (first such entry
/// on ties) is positive. Computed from the symmetric conjugate problem.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenfunctions;

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

Spectrum spectrum(const OrientedHypergraph& gamma);

/// Edge-sum of squared within-edge function sums over the degree-weighted
/// squared norm of f. Defined for classical hypergraphs only.
double rayleigh_quotient(const ClassicalView& gamma, std::span<const double> f);

/// Second largest eigenvalue with its eigenfunction, for a connected uniform
/// classical hypergraph. When the eigenvalue is numerically degenerate the
/// solver's eigenfunction for the largest index below the top is returned and
/// the multiplicity is reported so callers know the cut may be non-unique.
struct SecondEigenpair {
  double lambda;
  std::vector<double> f;
  int multiplicity;
};

SecondEigenpair second_largest_eigenpair(const ClassicalView& gamma);

/// Samples random vertex functions, projects each to degree-orthogonality
/// against the constants, and checks that no Rayleigh quotient exceeds the
/// second largest eigenvalue beyond tolerance.
struct VariationalCheck {
  int trials;
  double lambda;
  double max_quotient;
  bool all_within;
};

VariationalCheck verify_variational_bound(const ClassicalView& gamma, int trials,
                                          std::uint64_t seed);

}  // namespace hypercut
