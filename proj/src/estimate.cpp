#include "dhg/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "dhg/error.hpp"

namespace dhg {

SampleBudget SampleBudget::from_ratio(double q, std::size_t num_arcs, std::uint64_t seed) {
  if (!(q > 0) || !std::isfinite(q)) throw std::invalid_argument("sample ratio q must be positive");
  SampleBudget b;
  b.q = q;
  b.seed = seed;
  const double n = std::round(q * static_cast<double>(num_arcs));
  b.samples = n < 1 ? 1 : static_cast<std::uint64_t>(n);
  return b;
}

NodeWeightTable::NodeWeightTable(const DirectedHypergraph& g) {
  prefix_.resize(g.node_count());
  std::uint64_t running = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint64_t d = g.degree(v);
    const std::uint64_t w = d < 2 ? 0 : (d % 2 == 0 ? (d / 2) * (d - 1) : d * ((d - 1) / 2));
    if (running > std::numeric_limits<std::uint64_t>::max() - w) {
      throw std::overflow_error("node weight total exceeds 64 bits");
    }
    running += w;
    prefix_[v] = running;
  }
}

NodeId NodeWeightTable::sample(Rng& rng) const {
  const std::uint64_t r = rng.below(total());
  const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), r);
  return static_cast<NodeId>(it - prefix_.begin());
}

LineGraphSampler::LineGraphSampler(const DirectedHypergraph& g) : omega_(build_line_graph(g)) {
  if (omega_.empty()) throw PreconditionError("line graph is empty: no incident hyperarc pairs");
}

std::pair<ArcId, ArcId> LineGraphSampler::sample(Rng& rng) const {
  return omega_.pairs[rng.below(omega_.size())];
}

IntersectionSampler::IntersectionSampler(const DirectedHypergraph& g) : graph_(&g), weights_(g) {
  if (weights_.total() == 0) throw PreconditionError("no node has degree >= 2: no incident hyperarc pairs");
}

std::pair<ArcId, ArcId> IntersectionSampler::sample(Rng& rng) const {
  const auto arcs = graph_->incidence(weights_.sample(rng));
  const std::uint64_t d = arcs.size();
  const std::uint64_t i = rng.below(d);
  std::uint64_t j = rng.below(d - 1);
  if (j >= i) ++j;
  return {arcs[i], arcs[j]};
}

NeighborSampler::NeighborSampler(const DirectedHypergraph& g) {
  for (ArcId a = 0; a < g.arc_count(); ++a) {
    const Hyperarc& e = g.arc(a);
    const auto shares = [&g](NodeId v) { return g.degree(v) >= 2; };
    if (std::any_of(e.tail.begin(), e.tail.end(), shares) ||
        std::any_of(e.head.begin(), e.head.end(), shares)) {
      active_.push_back(a);
    }
  }
  if (active_.empty()) throw PreconditionError("no hyperarc has a neighbor");
}

NeighborSampler::Draw NeighborSampler::sample(Rng& rng, NeighborScanner& scanner) const {
  Draw d{};
  d.first = active_[rng.below(active_.size())];
  const auto neighbors = scanner.scan(d.first);
  d.first_degree = neighbors.size();
  d.second = neighbors[rng.below(neighbors.size())];
  d.second_degree = scanner.scan(d.second).size();
  return d;
}

namespace {

// Per-class accumulated weights; the estimator's constant factor is applied
// once at the end so the sum over classes stays exact for uniform sampling.
struct WeightedTally {
  std::array<double, kNumClasses> sums{};
  double unclassified = 0;

  void add(const ClassTable& table, RegionPattern p, double weight) {
    if (auto c = table.lookup(p)) sums[c->slot()] += weight;
    else unclassified += weight;
  }

  CountVector scaled(double factor) const {
    CountVector out;
    for (std::size_t i = 0; i < kNumClasses; ++i) out.values[i] = sums[i] * factor;
    out.unclassified = unclassified * factor;
    return out;
  }
};

// Runs `batch(samples, seed)` once per batch and averages the estimates.
template <class Batch>
CountVector run_batches(const SampleBudget& budget, unsigned threads, Batch batch) {
  if (budget.samples == 0) throw std::invalid_argument("sample budget must be positive");
  const std::uint64_t batches = std::clamp<std::uint64_t>(threads, 1, budget.samples);
  if (batches == 1) return batch(budget.samples, budget.seed);

  std::vector<CountVector> partial(batches);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t b = 0; b < batches; ++b) {
      const std::uint64_t n = budget.samples / batches + (b < budget.samples % batches ? 1 : 0);
      workers.emplace_back([&, b, n] { partial[b] = batch(n, derive_seed(budget.seed, b)); });
    }
  }
  CountVector mean;
  for (const CountVector& p : partial) mean += p;
  mean *= 1.0 / static_cast<double>(batches);
  return mean;
}

}  // namespace

CountVector count_dmochy(const DirectedHypergraph& g, const ClassTable& table,
                         const SampleBudget& budget, unsigned threads) {
  const LineGraphSampler sampler(g);
  const double omega = static_cast<double>(sampler.omega_size());
  return run_batches(budget, threads, [&](std::uint64_t n, std::uint64_t seed) {
    Rng rng(seed);
    WeightedTally tally;
    for (std::uint64_t s = 0; s < n; ++s) {
      const auto [a, b] = sampler.sample(rng);
      tally.add(table, overlap(g.arc(a), g.arc(b)).pattern, 1.0);
    }
    return tally.scaled(omega / static_cast<double>(n));
  });
}

CountVector count_coda_a(const DirectedHypergraph& g, const ClassTable& table,
                         const SampleBudget& budget, unsigned threads) {
  const IntersectionSampler sampler(g);
  const double total_weight = static_cast<double>(sampler.total_weight());
  return run_batches(budget, threads, [&](std::uint64_t n, std::uint64_t seed) {
    Rng rng(seed);
    WeightedTally tally;
    for (std::uint64_t s = 0; s < n; ++s) {
      const auto [a, b] = sampler.sample(rng);
      const PairOverlap o = overlap(g.arc(a), g.arc(b));
      tally.add(table, o.pattern, 1.0 / o.shared);
    }
    return tally.scaled(total_weight / static_cast<double>(n));
  });
}

CountVector count_a2a(const DirectedHypergraph& g, const ClassTable& table,
                      const SampleBudget& budget, unsigned threads) {
  const NeighborSampler sampler(g);
  const double active = static_cast<double>(sampler.active_arcs());
  return run_batches(budget, threads, [&](std::uint64_t n, std::uint64_t seed) {
    Rng rng(seed);
    NeighborScanner scanner(g);
    WeightedTally tally;
    for (std::uint64_t s = 0; s < n; ++s) {
      const auto d = sampler.sample(rng, scanner);
      const double x = static_cast<double>(d.first_degree);
      const double y = static_cast<double>(d.second_degree);
      const double harmonic_mean = 2.0 * x * y / (x + y);
      tally.add(table, overlap(g.arc(d.first), g.arc(d.second)).pattern, harmonic_mean);
    }
    return tally.scaled(active / (2.0 * static_cast<double>(n)));
  });
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::exact: return "exact";
    case Algorithm::dmochy: return "dmochy";
    case Algorithm::coda_a: return "coda-a";
    case Algorithm::a2a: return "a2a";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::exact, Algorithm::dmochy, Algorithm::coda_a, Algorithm::a2a}) {
    if (name == to_string(a)) return a;
  }
  return std::nullopt;
}

CountVector count_instances(const DirectedHypergraph& g, const ClassTable& table, Algorithm algorithm,
                            const SampleBudget& budget, unsigned threads) {
  switch (algorithm) {
    case Algorithm::exact: return count_exact(g, table, threads);
    case Algorithm::dmochy: return count_dmochy(g, table, budget, threads);
    case Algorithm::coda_a: return count_coda_a(g, table, budget, threads);
    case Algorithm::a2a: return count_a2a(g, table, budget, threads);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::uint64_t required_samples(double epsilon, double delta, double ratio) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(ratio >= 1) || !std::isfinite(ratio)) throw std::invalid_argument("ratio must be >= 1");
  const double bound = ratio * ratio * std::log(2.0 / delta) / (2.0 * epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(bound));
}

std::uint64_t required_samples_dmochy(double epsilon, double delta, double omega, double omega_i) {
  if (!(omega_i > 0)) throw std::invalid_argument("class count must be positive");
  return required_samples(epsilon, delta, omega / omega_i);
}

std::uint64_t required_samples_coda_a(double epsilon, double delta, double total_weight,
                                      double gamma_i, double omega_i) {
  if (!(omega_i > 0) || !(gamma_i > 0)) throw std::invalid_argument("class count and gamma must be positive");
  return required_samples(epsilon, delta, total_weight / (gamma_i * omega_i));
}

}  // namespace dhg
