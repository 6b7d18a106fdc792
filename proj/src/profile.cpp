#include "dhg/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "dhg/error.hpp"
#include "dhg/randomize.hpp"

namespace dhg {

ClassVector significance(const CountVector& real, const CountVector& randomized, double epsilon) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  ClassVector mu{};
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    const double a = real.values[i];
    const double b = randomized.values[i];
    if (a < 0 || b < 0) throw std::invalid_argument("counts must be non-negative");
    mu[i] = (a - b) / (a + b + epsilon);
  }
  return mu;
}

ClassVector characteristic_profile(const ClassVector& mu) {
  const double norm = std::sqrt(std::inner_product(mu.begin(), mu.end(), mu.begin(), 0.0));
  if (norm == 0) throw PreconditionError("significance vector is all zeros; profile undefined");
  ClassVector cp{};
  std::transform(mu.begin(), mu.end(), cp.begin(), [norm](double m) { return m / norm; });
  return cp;
}

ProfileResult profile_graph(const DirectedHypergraph& g, const ClassTable& table,
                            const ProfileOptions& options) {
  if (options.randomizations < 1) throw std::invalid_argument("need at least one randomization");
  auto budget_for = [&](const DirectedHypergraph& graph, std::uint64_t stream) {
    const std::uint64_t seed = derive_seed(options.seed, stream);
    if (options.algorithm == Algorithm::exact) return SampleBudget{options.q, 1, seed};
    return SampleBudget::from_ratio(options.q, graph.arc_count(), seed);
  };

  ProfileResult result;
  result.real_counts = count_instances(g, table, options.algorithm, budget_for(g, 0), options.threads);
  for (std::size_t r = 0; r < options.randomizations; ++r) {
    Rng rng(derive_seed(options.seed, 2 * r + 1));
    const DirectedHypergraph shuffled = randomize(g, rng);
    result.randomized_mean += count_instances(shuffled, table, options.algorithm,
                                              budget_for(shuffled, 2 * r + 2), options.threads);
  }
  result.randomized_mean *= 1.0 / static_cast<double>(options.randomizations);
  result.mu = significance(result.real_counts, result.randomized_mean, options.epsilon);
  result.cp = characteristic_profile(result.mu);
  return result;
}

double pearson_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw std::invalid_argument("vectors must have equal, non-zero length");
  auto constant = [](std::span<const double> v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  if (constant(a) || constant(b)) throw std::invalid_argument("Pearson correlation of a constant vector");
  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mean_b = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = a[i] - mean_a;
    const double y = b[i] - mean_b;
    sab += x * y;
    saa += x * x;
    sbb += y * y;
  }
  if (saa == 0 || sbb == 0) throw std::invalid_argument("Pearson correlation of a constant vector");
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

std::vector<std::vector<double>> similarity_matrix(const std::vector<ClassVector>& profiles) {
  if (profiles.size() < 2) throw std::invalid_argument("similarity matrix needs at least two profiles");
  const std::size_t n = profiles.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    // Validates constant inputs even when there is no off-diagonal work left.
    pearson_similarity(profiles[i], profiles[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      m[i][j] = m[j][i] = pearson_similarity(profiles[i], profiles[j]);
    }
  }
  return m;
}

double err_metric(const CountVector& exact, const CountVector& estimate) {
  double diff = 0, total = 0;
  for (std::size_t i = 0; i < kNumClasses; ++i) {
    diff += std::abs(estimate.values[i] - exact.values[i]);
    total += exact.values[i];
  }
  if (total == 0) throw std::invalid_argument("exact counts are all zero");
  return diff / total;
}

double cos_metric(const ClassVector& cp_exact, const ClassVector& cp_estimate) {
  return std::inner_product(cp_exact.begin(), cp_exact.end(), cp_estimate.begin(), 0.0);
}

namespace {

__extension__ typedef __int128 Wide;

Snapshot make_snapshot(const DirectedHypergraph& g, const ClassTable& table, std::span<const ArcId> arcs,
                       double threshold, unsigned threads) {
  const DirectedHypergraph sub = induced_subgraph(g, arcs);
  Snapshot s;
  s.threshold = threshold;
  s.num_arcs = sub.arc_count();
  s.num_nodes = sub.node_count();
  s.counts = count_exact(sub, table, threads);
  const double total = s.counts.classified_total();
  if (total > 0) {
    for (std::size_t i = 0; i < kNumClasses; ++i) s.ratios[i] = s.counts.values[i] / total;
  }
  return s;
}

// Arc ids sorted by timestamp, so each snapshot is a prefix.
std::vector<ArcId> arcs_by_time(const DirectedHypergraph& g) {
  if (!g.has_timestamps()) throw std::invalid_argument("every hyperarc needs a timestamp");
  std::vector<ArcId> order(g.arc_count());
  std::iota(order.begin(), order.end(), ArcId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&g](ArcId a, ArcId b) { return *g.arc(a).timestamp < *g.arc(b).timestamp; });
  return order;
}

}  // namespace

SnapshotSeries snapshots(const DirectedHypergraph& g, const ClassTable& table, std::size_t s,
                         unsigned threads) {
  if (s < 1) throw std::invalid_argument("need at least one snapshot");
  const auto order = arcs_by_time(g);
  SnapshotSeries series;
  if (order.empty()) return series;
  const Wide lo = *g.arc(order.front()).timestamp;
  const Wide hi = *g.arc(order.back()).timestamp;
  if (hi == lo) s = 1;  // a single instant admits only one distinct threshold
  const auto steps = static_cast<Wide>(s);

  std::size_t prefix = 0;
  for (std::size_t i = 1; i <= s; ++i) {
    // τ <= lo + i·(hi − lo)/s, compared exactly in integers.
    const Wide bound = lo * steps + static_cast<Wide>(i) * (hi - lo);
    while (prefix < order.size() && static_cast<Wide>(*g.arc(order[prefix]).timestamp) * steps <= bound) {
      ++prefix;
    }
    const double threshold =
        i == s ? static_cast<double>(hi)
               : static_cast<double>(lo) + static_cast<double>(i) * static_cast<double>(hi - lo) / static_cast<double>(s);
    series.snapshots.push_back(
        make_snapshot(g, table, std::span<const ArcId>(order.data(), prefix), threshold, threads));
  }
  return series;
}

SnapshotSeries snapshots_per_timestamp(const DirectedHypergraph& g, const ClassTable& table,
                                       unsigned threads) {
  const auto order = arcs_by_time(g);
  SnapshotSeries series;
  std::size_t prefix = 0;
  while (prefix < order.size()) {
    const Timestamp t = *g.arc(order[prefix]).timestamp;
    while (prefix < order.size() && *g.arc(order[prefix]).timestamp == t) ++prefix;
    series.snapshots.push_back(make_snapshot(g, table, std::span<const ArcId>(order.data(), prefix),
                                             static_cast<double>(t), threads));
  }
  return series;
}

}  // namespace dhg
