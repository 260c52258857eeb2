#pragma once

#include "hypercut/hypergraph.hpp"
#include "hypercut/rational.hpp"

namespace hypercut {

/// Classical graph-theoretic ground truth for 2-uniform inputs, kept on an
/// independent code path from the hypergraph cut and matrix machinery.

/// Isoperimetric constant min over cuts of |E(S, S-bar)| / min volume,
/// counting crossing edges directly per edge endpoint membership.
Rational polya_szego_constant(const ClassicalView& graph);

/// Second smallest eigenvalue of the standard normalized graph Laplacian
/// built from a 0/1 adjacency matrix assembled directly from the edge list.
/// Requires a simple graph (no repeated edges).
double normalized_graph_lambda2(const ClassicalView& graph);

}  // namespace hypercut
