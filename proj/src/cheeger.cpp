#include "hypercut/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace hypercut {

Cut::Cut(int universe_size) : n_(universe_size) {
  if (n_ <= 0) throw std::invalid_argument("Cut: universe must be nonempty");
  bits_.assign((n_ + 63) / 64, 0);
}

Cut Cut::from_members(int universe_size, const std::vector<int>& members) {
  Cut cut(universe_size);
  for (int v : members) {
    if (v < 0 || v >= universe_size)
      fail(ErrorCode::VertexOutOfRange, "cut member " + std::to_string(v) + " out of range");
    cut.insert(v);
  }
  return cut;
}

Cut Cut::from_mask(int universe_size, std::uint64_t mask) {
  Cut cut(universe_size);
  cut.bits_[0] = mask;
  return cut;
}

int Cut::size() const {
  int total = 0;
  for (std::uint64_t word : bits_) total += std::popcount(word);
  return total;
}

std::vector<int> Cut::members() const {
  std::vector<int> result;
  for (int v = 0; v < n_; ++v)
    if (contains(v)) result.push_back(v);
  return result;
}

Cut Cut::complement() const {
  Cut cut(n_);
  for (size_t w = 0; w < bits_.size(); ++w) cut.bits_[w] = ~bits_[w];
  const int tail = n_ & 63;
  if (tail != 0) cut.bits_.back() &= (std::uint64_t{1} << tail) - 1;
  return cut;
}

bool Cut::lex_less(const Cut& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Cut: mismatched universes");
  int first_diff = -1;
  for (size_t w = 0; w < bits_.size(); ++w) {
    std::uint64_t diff = bits_[w] ^ other.bits_[w];
    if (diff != 0) {
      first_diff = static_cast<int>(w) * 64 + std::countr_zero(diff);
      break;
    }
  }
  if (first_diff < 0) return false;
  auto any_above = [&](const Cut& cut) {
    for (int v = first_diff + 1; v < cut.n_; ++v)
      if (cut.contains(v)) return true;
    return false;
  };
  // The sets share all members below first_diff. Whichever set contains it
  // wins unless the other set ends there, i.e. is a strict prefix.
  if (contains(first_diff)) return any_above(other);
  return !any_above(*this);
}

CutProfile cut_profile(const ClassicalView& gamma, const Cut& cut) {
  const OrientedHypergraph& g = gamma.graph();
  const int k = gamma.require_uniform();
  if (cut.universe_size() != g.vertex_count())
    throw std::invalid_argument("cut_profile: cut universe does not match hypergraph");
  if (!cut.proper())
    fail(ErrorCode::InvalidCut, "cut must be a nonempty proper vertex subset");

  CutProfile profile;
  profile.counts.assign(k + 1, 0);
  for (const Edge& e : g.edges()) {
    int r = 0;
    for (const Incidence& inc : e)
      if (cut.contains(inc.vertex)) ++r;
    profile.counts[r] += 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (cut.contains(v)) profile.vol_s += g.degree(v);
  profile.vol_sbar = g.volume() - profile.vol_s;
  for (int r = 1; r < k; ++r)
    profile.boundary += profile.counts[r] * static_cast<long long>(r) * (k - r);
  const long long smaller = std::min(profile.vol_s, profile.vol_sbar);
  if (smaller == 0)
    fail(ErrorCode::InvalidCut, "one side of the cut has zero volume");
  profile.ratio = Rational(profile.boundary, smaller);
  return profile;
}

BoundsCheck verify_inequalities(double h, double lambda_second, int k, double tolerance) {
  if (k < 2) throw std::invalid_argument("verify_inequalities: k must be at least 2");
  BoundsCheck check;
  check.lower_bound = h * h / (2.0 * (k - 1));
  check.gap = static_cast<double>(k) - lambda_second;
  check.upper_bound = 2.0 * (k - 1) * h;
  check.lower_holds = check.lower_bound <= check.gap + tolerance;
  check.upper_holds = check.gap <= check.upper_bound + tolerance;
  return check;
}

const char* cut_method_name(CutMethod method) {
  switch (method) {
    case CutMethod::Exact: return "exact";
    case CutMethod::Sweep: return "sweep";
    case CutMethod::Sign: return "sign";
  }
  return "unknown";
}

namespace {

void require_cut_preconditions(const ClassicalView& gamma, int k) {
  if (k < 2)
    fail(ErrorCode::NotUniform, "edge cardinality k = " + std::to_string(k) +
                                    " degenerates both Cheeger bounds; k >= 2 required");
  if (!gamma.graph().connected()) fail(ErrorCode::NotConnected, "hypergraph is not connected");
  if (!gamma.graph().degree_assumption_holds())
    fail(ErrorCode::DegreeAssumptionViolated,
         "some vertex holds more than half of the total degree");
}

CheegerReport finish_report(CutMethod method, int k, Rational h, Cut witness,
                            const SecondEigenpair& pair) {
  CheegerReport report;
  report.method = method;
  report.k = k;
  report.h = h;
  report.witness = std::move(witness);
  report.lambda_second = pair.lambda;
  report.eigen_multiplicity = pair.multiplicity;
  report.bounds = verify_inequalities(h.value(), pair.lambda, k);
  return report;
}

// Sorted-member-list lexicographic order on subsets encoded as masks.
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int v = std::countr_zero(a ^ b);
  if ((a >> v) & 1) return (b >> (v + 1)) != 0;
  return (a >> (v + 1)) == 0;
}

struct SubsetSearch {
  // universe: the ground set being cut (vertices, or edges for the dual
  // route); groups: the incidence lists whose intersection sizes drive the
  // boundary weight.
  int universe = 0;
  int group_size = 0;                         // k (or d)
  std::vector<std::uint64_t> group_mask;      // per group, members as bits
  std::vector<std::vector<int>> touching;     // universe element -> group ids
  std::vector<long long> weight;              // element volume contribution
  std::vector<long long> pair_weight;         // r -> r * (group_size - r)
  long long total_volume = 0;

  struct Best {
    bool any = false;
    long long num = 0;
    long long den = 1;
    std::uint64_t mask = 0;

    void consider(long long num_in, long long den_in, std::uint64_t mask_in) {
      if (any) {
        const __int128 lhs = static_cast<__int128>(num_in) * den;
        const __int128 rhs = static_cast<__int128>(num) * den_in;
        if (lhs > rhs) return;
        if (lhs == rhs && !mask_lex_less(mask_in, mask)) return;
      }
      any = true;
      num = num_in;
      den = den_in;
      mask = mask_in;
    }

    void merge(const Best& other) {
      if (other.any) consider(other.num, other.den, other.mask);
    }
  };

  // Enumerates subsets containing element 0 for Gray counters in [x0, x1),
  // skipping the full set. Incremental updates keep each step O(degree).
  Best run_range(std::uint64_t x0, std::uint64_t x1) const {
    const std::uint64_t full = (std::uint64_t{1} << universe) - 1;
    std::uint64_t gray = x0 ^ (x0 >> 1);
    std::uint64_t mask = (gray << 1) | 1;
    std::vector<int> in_count(group_mask.size());
    long long volume = 0;
    long long boundary = 0;
    for (int v = 0; v < universe; ++v)
      if ((mask >> v) & 1) volume += weight[v];
    for (size_t gidx = 0; gidx < group_mask.size(); ++gidx) {
      in_count[gidx] = std::popcount(group_mask[gidx] & mask);
      boundary += pair_weight[in_count[gidx]];
    }

    Best best;
    for (std::uint64_t x = x0;;) {
      if (mask != full)
        best.consider(boundary, std::min(volume, total_volume - volume), mask);
      ++x;
      if (x >= x1) break;
      const int flipped = std::countr_zero(x) + 1;
      const std::uint64_t bit = std::uint64_t{1} << flipped;
      const bool added = (mask & bit) == 0;
      mask ^= bit;
      volume += added ? weight[flipped] : -weight[flipped];
      for (int gidx : touching[flipped]) {
        boundary -= pair_weight[in_count[gidx]];
        in_count[gidx] += added ? 1 : -1;
        boundary += pair_weight[in_count[gidx]];
      }
    }
    return best;
  }

  Best run(int threads) const {
    const std::uint64_t span = std::uint64_t{1} << (universe - 1);
    const int worker_count =
        static_cast<int>(std::min<std::uint64_t>(std::max(threads, 1), span));
    if (worker_count <= 1) return run_range(0, span);

    std::vector<Best> partial(worker_count);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (span + worker_count - 1) / worker_count;
    for (int w = 0; w < worker_count; ++w) {
      const std::uint64_t begin = chunk * w;
      const std::uint64_t end = std::min(span, begin + chunk);
      workers.emplace_back([this, &partial, w, begin, end] {
        partial[w] = run_range(begin, end);
      });
    }
    for (std::thread& worker : workers) worker.join();
    Best best;
    for (const Best& candidate : partial) best.merge(candidate);
    return best;
  }
};

SubsetSearch edge_cut_search(const OrientedHypergraph& g, int k) {
  SubsetSearch search;
  search.universe = g.vertex_count();
  search.group_size = k;
  search.group_mask.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    std::uint64_t mask = 0;
    for (const Incidence& inc : g.edge(e)) mask |= std::uint64_t{1} << inc.vertex;
    search.group_mask[e] = mask;
  }
  search.touching.assign(g.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) search.touching[v] = g.incident_edges(v);
  search.weight.assign(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) search.weight[v] = g.degree(v);
  search.pair_weight.resize(k + 1);
  for (int r = 0; r <= k; ++r) search.pair_weight[r] = static_cast<long long>(r) * (k - r);
  search.total_volume = g.volume();
  return search;
}

// Mirror image of edge_cut_search: the ground set is the edge multiset and
// the boundary weight runs over vertices counted by how many chosen edges
// contain them.
SubsetSearch vertex_cut_search(const OrientedHypergraph& g, int d) {
  SubsetSearch search;
  search.universe = g.edge_count();
  search.group_size = d;
  search.group_mask.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::uint64_t mask = 0;
    for (int e : g.incident_edges(v)) mask |= std::uint64_t{1} << e;
    search.group_mask[v] = mask;
  }
  search.touching.assign(g.edge_count(), {});
  for (int e = 0; e < g.edge_count(); ++e)
    for (const Incidence& inc : g.edge(e)) search.touching[e].push_back(inc.vertex);
  search.weight.assign(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) search.weight[e] = g.cardinality(e);
  search.pair_weight.resize(d + 1);
  for (int r = 0; r <= d; ++r) search.pair_weight[r] = static_cast<long long>(r) * (d - r);
  search.total_volume = g.volume();
  return search;
}

void require_search_size(int universe, const SearchOptions& options) {
  if (universe > options.limit)
    fail(ErrorCode::TooLarge, "exhaustive search over " + std::to_string(universe) +
                                  " elements exceeds the limit of " +
                                  std::to_string(options.limit));
  if (universe > 63)
    fail(ErrorCode::TooLarge, "exhaustive search is capped at 63 elements");
}

}  // namespace

CheegerReport cheeger_exact(const ClassicalView& gamma, const SearchOptions& options) {
  const OrientedHypergraph& g = gamma.graph();
  const int k = gamma.require_uniform();
  require_cut_preconditions(gamma, k);
  require_search_size(g.vertex_count(), options);

  SubsetSearch search = edge_cut_search(g, k);
  SubsetSearch::Best best = search.run(options.threads);
  if (!best.any) throw std::logic_error("exhaustive search evaluated no cuts");
  SecondEigenpair pair = second_largest_eigenpair(gamma);
  return finish_report(CutMethod::Exact, k, Rational(best.num, best.den),
                       Cut::from_mask(g.vertex_count(), best.mask), pair);
}

Cut sign_cut(const OrientedHypergraph& gamma, std::span<const double> f) {
  if (static_cast<int>(f.size()) != gamma.vertex_count())
    throw std::invalid_argument("sign_cut: function length mismatch");
  Cut cut(gamma.vertex_count());
  int inside = 0;
  for (int v = 0; v < gamma.vertex_count(); ++v) {
    if (f[v] >= 0.0) {
      cut.insert(v);
      ++inside;
    }
  }
  if (inside == 0 || inside == gamma.vertex_count())
    fail(ErrorCode::DegenerateFunction,
         "sign cut needs both a negative and a nonnegative value");
  return cut;
}

namespace {

struct SweepOutcome {
  Rational h;
  Cut witness;
};

SweepOutcome sweep_scan(const ClassicalView& gamma, std::span<const double> f, int k) {
  const OrientedHypergraph& g = gamma.graph();
  const int n = g.vertex_count();
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("sweep_cut: function length mismatch");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&f](int a, int b) {
    if (f[a] != f[b]) return f[a] > f[b];
    return a < b;
  });

  std::vector<long long> pair_weight(k + 1);
  for (int r = 0; r <= k; ++r) pair_weight[r] = static_cast<long long>(r) * (k - r);

  std::vector<int> in_count(g.edge_count(), 0);
  long long volume = 0;
  long long boundary = 0;
  bool have_best = false;
  Rational best_h;
  int best_prefix = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int v = order[i];
    volume += g.degree(v);
    for (int e : g.incident_edges(v)) {
      boundary -= pair_weight[in_count[e]];
      in_count[e] += 1;
      boundary += pair_weight[in_count[e]];
    }
    Rational h(boundary, std::min(volume, g.volume() - volume));
    if (!have_best || h < best_h) {
      have_best = true;
      best_h = h;
      best_prefix = i + 1;
    }
  }

  SweepOutcome outcome;
  outcome.h = best_h;
  outcome.witness = Cut::from_members(
      n, std::vector<int>(order.begin(), order.begin() + best_prefix));
  return outcome;
}

}  // namespace

CheegerReport sweep_cut(const ClassicalView& gamma, std::span<const double> f) {
  const int k = gamma.require_uniform();
  require_cut_preconditions(gamma, k);
  SweepOutcome outcome = sweep_scan(gamma, f, k);
  SecondEigenpair pair = second_largest_eigenpair(gamma);
  return finish_report(CutMethod::Sweep, k, outcome.h, std::move(outcome.witness), pair);
}

SpectralCutResult spectral_cut(const ClassicalView& gamma) {
  const int k = gamma.require_uniform();
  require_cut_preconditions(gamma, k);
  SecondEigenpair pair = second_largest_eigenpair(gamma);

  Cut sign_witness = sign_cut(gamma.graph(), pair.f);
  CutProfile sign_profile = cut_profile(gamma, sign_witness);
  SpectralCutResult result;
  result.sign =
      finish_report(CutMethod::Sign, k, sign_profile.ratio, std::move(sign_witness), pair);

  SweepOutcome sweep = sweep_scan(gamma, pair.f, k);
  result.sweep = finish_report(CutMethod::Sweep, k, sweep.h, std::move(sweep.witness), pair);
  return result;
}

namespace {

int require_regular(const ClassicalView& gamma) {
  auto d = gamma.graph().regularity();
  if (!d) fail(ErrorCode::NotRegular, "vertex degrees are not constant");
  if (*d < 2)
    fail(ErrorCode::NotRegular, "vertex Cheeger machinery needs regularity d >= 2, got d = " +
                                    std::to_string(*d));
  return *d;
}

std::vector<int> pull_back_edges(const DualMapping& mapping, const Cut& dual_vertices) {
  // Dual vertex j stands for edge j; invert the stored bijection to be safe.
  std::vector<int> dual_to_edge(mapping.edge_to_dual_vertex.size());
  for (size_t e = 0; e < mapping.edge_to_dual_vertex.size(); ++e)
    dual_to_edge[mapping.edge_to_dual_vertex[e]] = static_cast<int>(e);
  std::vector<int> edges;
  for (int dual_vertex : dual_vertices.members()) edges.push_back(dual_to_edge[dual_vertex]);
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

VertexCutReport vertex_cheeger_exact(const ClassicalView& gamma, const SearchOptions& options) {
  const OrientedHypergraph& g = gamma.graph();
  const int d = require_regular(gamma);
  if (!g.connected()) fail(ErrorCode::NotConnected, "hypergraph is not connected");
  require_search_size(g.edge_count(), options);

  // Route (a): directly over edge subsets of the original hypergraph.
  SubsetSearch direct = vertex_cut_search(g, d);
  SubsetSearch::Best best = direct.run(options.threads);
  if (!best.any) throw std::logic_error("exhaustive search evaluated no edge subsets");
  Rational direct_h(best.num, best.den);

  // Route (b): edge Cheeger constant of the dual.
  DualMapping mapping = dual(gamma);
  ClassicalView dual_view(mapping.dual);
  CheegerReport dual_report = cheeger_exact(dual_view, options);

  if (!(direct_h == dual_report.h))
    throw std::logic_error("vertex Cheeger routes disagree: direct " +
                           std::to_string(direct_h.num) + "/" + std::to_string(direct_h.den) +
                           " vs dual " + std::to_string(dual_report.h.num) + "/" +
                           std::to_string(dual_report.h.den));

  VertexCutReport report;
  report.d = d;
  report.h_star = direct_h;
  report.witness_edges = Cut::from_mask(g.edge_count(), best.mask).members();
  report.dual_report = std::move(dual_report);
  return report;
}

VertexCutReport vertex_cut(const ClassicalView& gamma) {
  const OrientedHypergraph& g = gamma.graph();
  const int d = require_regular(gamma);
  if (!g.connected()) fail(ErrorCode::NotConnected, "hypergraph is not connected");

  DualMapping mapping = dual(gamma);
  ClassicalView dual_view(mapping.dual);
  SpectralCutResult cuts = spectral_cut(dual_view);

  VertexCutReport report;
  report.d = d;
  report.h_star = cuts.sign.h;
  report.witness_edges = pull_back_edges(mapping, cuts.sign.witness);
  report.dual_report = std::move(cuts.sign);
  return report;
}

}  // namespace hypercut
