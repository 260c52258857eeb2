#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypercut/hypergraph.hpp"
#include "hypercut/rational.hpp"
#include "hypercut/spectral.hpp"

namespace hypercut {

/// A vertex subset as a bitset over 0..n-1. Cheeger machinery requires it to
/// be nonempty and proper.
class Cut {
 public:
  Cut() = default;
  explicit Cut(int universe_size);
  static Cut from_members(int universe_size, const std::vector<int>& members);
  static Cut from_mask(int universe_size, std::uint64_t mask);

  int universe_size() const noexcept { return n_; }
  bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }
  void insert(int v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  int size() const;
  bool proper() const { return size() > 0 && size() < n_; }
  std::vector<int> members() const;
  Cut complement() const;

  /// Order by the ascending member lists compared lexicographically.
  bool lex_less(const Cut& other) const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Exact intersection census of a cut against the edge multiset:
/// counts[r] is the number of edges meeting S in exactly r vertices,
/// boundary is the pairwise S-to-complement connection count
/// sum over r of counts[r] * r * (k - r), and ratio = boundary over the
/// smaller volume.
struct CutProfile {
  std::vector<long long> counts;
  long long vol_s = 0;
  long long vol_sbar = 0;
  long long boundary = 0;
  Rational ratio;
};

CutProfile cut_profile(const ClassicalView& gamma, const Cut& cut);

/// Both two-sided Cheeger inequalities evaluated with slack:
/// h^2 / (2(k-1)) <= k - lambda <= 2(k-1) h.
struct BoundsCheck {
  double lower_bound = 0.0;
  double gap = 0.0;
  double upper_bound = 0.0;
  bool lower_holds = false;
  bool upper_holds = false;
};

BoundsCheck verify_inequalities(double h, double lambda_second, int k, double tolerance = 1e-7);

enum class CutMethod { Exact, Sweep, Sign };

const char* cut_method_name(CutMethod method);

struct CheegerReport {
  CutMethod method = CutMethod::Exact;
  int k = 0;
  Rational h;
  Cut witness;
  double lambda_second = 0.0;
  int eigen_multiplicity = 0;
  BoundsCheck bounds;
};

struct SearchOptions {
  int limit = 24;  // largest vertex count the exhaustive search accepts
  int threads = 1;
};

/// Exact Cheeger constant by exhaustive search over all cuts containing
/// vertex 0 (complement symmetry halves the space), enumerated in Gray-code
/// order with incremental profile updates. The witness is the
/// lexicographically smallest minimizing set; the result is independent of
/// the thread count.
CheegerReport cheeger_exact(const ClassicalView& gamma, const SearchOptions& options = {});

/// The nonnegative side {v : f(v) >= 0} of a vertex function that attains
/// both a negative and a nonnegative value.
Cut sign_cut(const OrientedHypergraph& gamma, std::span<const double> f);

/// Best prefix cut of the vertices sorted by descending f (ties by ascending
/// index); evaluates every proper prefix incrementally and keeps the first
/// minimizer.
CheegerReport sweep_cut(const ClassicalView& gamma, std::span<const double> f);

/// Sign and sweep cuts derived from the eigenfunction of the second largest
/// eigenvalue; each reported h is an upper certificate for the true constant.
struct SpectralCutResult {
  CheegerReport sign;
  CheegerReport sweep;
};

SpectralCutResult spectral_cut(const ClassicalView& gamma);

/// Vertex Cheeger constant of a d-regular hypergraph, computed both directly
/// over edge subsets and as the edge Cheeger constant of the dual; the two
/// routes are asserted equal. The dual report carries the eigenvalue and
/// bound checks with d in place of k.
struct VertexCutReport {
  int d = 0;
  Rational h_star;
  std::vector<int> witness_edges;
  CheegerReport dual_report;
};

VertexCutReport vertex_cheeger_exact(const ClassicalView& gamma,
                                     const SearchOptions& options = {});

/// Spectral vertex cut: the dual's sign cut pulled back to an edge subset of
/// the original hypergraph, with its exact h-star value.
VertexCutReport vertex_cut(const ClassicalView& gamma);

}  // namespace hypercut
