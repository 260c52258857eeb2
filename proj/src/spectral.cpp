#include "hypercut/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>

namespace hypercut {

AdjacencyMatrix adjacency_matrix(const OrientedHypergraph& gamma) {
  const int n = gamma.vertex_count();
  AdjacencyMatrix a;
  a.entries.assign(n, std::vector<long long>(n, 0));
  for (const Edge& e : gamma.edges()) {
    for (size_t p = 0; p < e.size(); ++p) {
      for (size_t q = p + 1; q < e.size(); ++q) {
        int contribution = e[p].sign == e[q].sign ? -1 : +1;
        a.entries[e[p].vertex][e[q].vertex] += contribution;
        a.entries[e[q].vertex][e[p].vertex] += contribution;
      }
    }
  }
  return a;
}

namespace {

void require_positive_degrees(const OrientedHypergraph& gamma) {
  for (int v = 0; v < gamma.vertex_count(); ++v)
    if (gamma.degree(v) == 0)
      fail(ErrorCode::ZeroDegreeVertex, "vertex " + std::to_string(v) + " has degree zero");
}

}  // namespace

NormalizedLaplacian normalized_laplacian(const OrientedHypergraph& gamma) {
  require_positive_degrees(gamma);
  const int n = gamma.vertex_count();
  AdjacencyMatrix a = adjacency_matrix(gamma);
  NormalizedLaplacian l;
  l.degrees = gamma.degrees();
  l.entries.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      l.entries[i][j] = (i == j ? 1.0 : 0.0) -
                        static_cast<double>(a.entries[i][j]) / static_cast<double>(l.degrees[i]);
  return l;
}

EigenDecomposition jacobi_eigen(const std::vector<std::vector<double>>& symmetric) {
  const int n = static_cast<int>(symmetric.size());
  std::vector<std::vector<double>> a = symmetric;
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;

  double frobenius = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frobenius += a[i][j] * a[i][j];
  frobenius = std::sqrt(frobenius);
  const double threshold = 1e-13 * frobenius;

  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * a[i][j] * a[i][j];
    off = std::sqrt(off);
    if (off <= threshold) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a[p][q];
        if (apq == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a[r][p];
          const double arq = a[r][q];
          a[r][p] = a[p][r] = arp - s * (arq + tau * arp);
          a[r][q] = a[q][r] = arq + s * (arp - tau * arq);
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = v[r][p];
          const double vrq = v[r][q];
          v[r][p] = vrp - s * (vrq + tau * vrp);
          v[r][q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }
  if (!converged)
    fail(ErrorCode::NoConvergence, "Jacobi sweeps exhausted before reaching tolerance");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });

  EigenDecomposition result;
  result.values.resize(n);
  result.vectors.assign(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    result.values[i] = a[order[i]][order[i]];
    for (int r = 0; r < n; ++r) result.vectors[i][r] = v[r][order[i]];
  }
  return result;
}

namespace {

void fix_sign(std::vector<double>& f) {
  int pivot = 0;
  for (int i = 1; i < static_cast<int>(f.size()); ++i)
    if (std::abs(f[i]) > std::abs(f[pivot])) pivot = i;
  if (f[pivot] < 0.0)
    for (double& x : f) x = -x;
}

}  // namespace

Spectrum spectrum(const OrientedHypergraph& gamma) {
  require_positive_degrees(gamma);
  const int n = gamma.vertex_count();
  AdjacencyMatrix a = adjacency_matrix(gamma);
  std::vector<double> inv_sqrt_deg(n);
  for (int v = 0; v < n; ++v) inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(gamma.degree(v)));

  // Symmetric conjugate of L; shares its spectrum and keeps Jacobi applicable.
  std::vector<std::vector<double>> sym(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sym[i][j] = (i == j ? 1.0 : 0.0) -
                  static_cast<double>(a.entries[i][j]) * inv_sqrt_deg[i] * inv_sqrt_deg[j];

  EigenDecomposition eig = jacobi_eigen(sym);
  Spectrum result;
  result.eigenvalues = std::move(eig.values);
  result.eigenfunctions.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> f(n);
    for (int vtx = 0; vtx < n; ++vtx) f[vtx] = eig.vectors[i][vtx] * inv_sqrt_deg[vtx];
    fix_sign(f);
    result.eigenfunctions[i] = std::move(f);
  }
  return result;
}

double rayleigh_quotient(const ClassicalView& gamma, std::span<const double> f) {
  const OrientedHypergraph& g = gamma.graph();
  if (static_cast<int>(f.size()) != g.vertex_count())
    throw std::invalid_argument("rayleigh_quotient: function length mismatch");
  require_positive_degrees(g);
  double denominator = 0.0;
  bool nonzero = false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f[v] != 0.0) nonzero = true;
    denominator += g.degree(v) * f[v] * f[v];
  }
  if (!nonzero) fail(ErrorCode::ZeroFunction, "Rayleigh quotient of the zero function");
  double numerator = 0.0;
  for (const Edge& e : g.edges()) {
    double edge_sum = 0.0;
    for (const Incidence& inc : e) edge_sum += f[inc.vertex];
    numerator += edge_sum * edge_sum;
  }
  return numerator / denominator;
}

SecondEigenpair second_largest_eigenpair(const ClassicalView& gamma) {
  const OrientedHypergraph& g = gamma.graph();
  gamma.require_uniform();
  if (!g.connected()) fail(ErrorCode::NotConnected, "hypergraph is not connected");
  if (g.vertex_count() < 2)
    fail(ErrorCode::UsageError, "second largest eigenpair needs at least two vertices");
  Spectrum spec = spectrum(g);
  const int n = spec.size();
  SecondEigenpair pair;
  pair.lambda = spec.eigenvalues[n - 2];
  pair.f = spec.eigenfunctions[n - 2];
  pair.multiplicity = 0;
  for (double lambda : spec.eigenvalues)
    if (std::abs(lambda - pair.lambda) <= 1e-9) ++pair.multiplicity;
  return pair;
}

VariationalCheck verify_variational_bound(const ClassicalView& gamma, int trials,
                                          std::uint64_t seed) {
  const OrientedHypergraph& g = gamma.graph();
  SecondEigenpair pair = second_largest_eigenpair(gamma);
  const int n = g.vertex_count();
  const double vol = static_cast<double>(g.volume());

  std::mt19937_64 engine(seed);
  auto unit_interval = [&engine]() {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };

  VariationalCheck check{trials, pair.lambda, 0.0, true};
  constexpr double kTolerance = 1e-9;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> f(n);
    double weighted_sum;
    double max_abs;
    do {
      weighted_sum = 0.0;
      for (int v = 0; v < n; ++v) {
        f[v] = 2.0 * unit_interval() - 1.0;
        weighted_sum += g.degree(v) * f[v];
      }
      const double shift = weighted_sum / vol;
      max_abs = 0.0;
      for (int v = 0; v < n; ++v) {
        f[v] -= shift;
        max_abs = std::max(max_abs, std::abs(f[v]));
      }
    } while (max_abs < 1e-12);
    const double quotient = rayleigh_quotient(gamma, f);
    check.max_quotient = std::max(check.max_quotient, quotient);
    if (quotient > pair.lambda + kTolerance) check.all_within = false;
  }
  return check;
}

}  // namespace hypercut
