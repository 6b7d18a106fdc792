#pragma once

// Unbiased sampling estimators of per-class instance counts.
//
//   uniform line-graph sampling  p(e,e') = 1/|Ω|                      ("dmochy")
//   intersection-weighted        p(e,e') = |ē∩ē'| / W                 ("coda-a")
//   arc-then-neighbor            p(e,e') = (1/|N_e| + 1/|N_e'|)/|E≥1|  ("a2a")
//
// Each sample adds 1/(n·p) to the class of the drawn pair.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "dhg/count.hpp"
#include "dhg/random.hpp"

namespace dhg {

struct SampleBudget {
  double q = 1.0;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;

  /// samples = round(q·|E|), at least 1. Throws std::invalid_argument for q <= 0.
  static SampleBudget from_ratio(double q, std::size_t num_arcs, std::uint64_t seed);
};

/// w[v] = C(d_v, 2) with prefix sums for O(log |V|) weighted draws.
class NodeWeightTable {
 public:
  explicit NodeWeightTable(const DirectedHypergraph& g);

  std::uint64_t weight(NodeId v) const { return prefix_.at(v) - (v == 0 ? 0 : prefix_[v - 1]); }

  /// W = Σ_v w[v] = Σ_{(e,e')∈Ω} |ē ∩ ē'|.
  std::uint64_t total() const noexcept { return prefix_.empty() ? 0 : prefix_.back(); }

  /// Draws v with probability w[v]/W. Requires total() > 0.
  NodeId sample(Rng& rng) const;

 private:
  std::vector<std::uint64_t> prefix_;  // inclusive
};

/// Draws pairs uniformly from a materialized line graph.
class LineGraphSampler {
 public:
  /// Throws PreconditionError when Ω is empty.
  explicit LineGraphSampler(const DirectedHypergraph& g);

  std::pair<ArcId, ArcId> sample(Rng& rng) const;
  std::size_t omega_size() const noexcept { return omega_.size(); }

 private:
  LineGraph omega_;
};

/// Draws pairs with probability proportional to |ē ∩ ē'| without building Ω:
/// a node by weight C(d_v,2), then an unordered pair of E_v uniformly.
class IntersectionSampler {
 public:
  /// Throws PreconditionError when W = 0.
  explicit IntersectionSampler(const DirectedHypergraph& g);

  std::pair<ArcId, ArcId> sample(Rng& rng) const;
  std::uint64_t total_weight() const noexcept { return weights_.total(); }

 private:
  const DirectedHypergraph* graph_;
  NodeWeightTable weights_;
};

/// Draws an arc uniformly from E≥1 = {e : |N_e| >= 1}, then a neighbor uniformly.
class NeighborSampler {
 public:
  /// Throws PreconditionError when no arc has a neighbor.
  explicit NeighborSampler(const DirectedHypergraph& g);

  struct Draw {
    ArcId first;
    ArcId second;
    std::size_t first_degree;   // |N_e|
    std::size_t second_degree;  // |N_e'|
  };

  /// Uses `scanner` as scratch; it must belong to the same graph.
  Draw sample(Rng& rng, NeighborScanner& scanner) const;

  std::size_t active_arcs() const noexcept { return active_.size(); }

 private:
  std::vector<ArcId> active_;
};

// Estimators. With threads > 1 the budget is split into min(threads, n)
// batches seeded by derive_seed(seed, batch); the estimate is the mean of
// the batch estimates. threads == 1 uses `seed` directly and is the
// reproducibility reference.

/// Throws PreconditionError when Ω is empty.
CountVector count_dmochy(const DirectedHypergraph& g, const ClassTable& table,
                         const SampleBudget& budget, unsigned threads = 1);

/// Throws PreconditionError when W = 0.
CountVector count_coda_a(const DirectedHypergraph& g, const ClassTable& table,
                         const SampleBudget& budget, unsigned threads = 1);

/// Throws PreconditionError when E≥1 is empty.
CountVector count_a2a(const DirectedHypergraph& g, const ClassTable& table,
                      const SampleBudget& budget, unsigned threads = 1);

enum class Algorithm { exact, dmochy, coda_a, a2a };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Dispatches to the chosen counter. `budget` is ignored for exact counting.
CountVector count_instances(const DirectedHypergraph& g, const ClassTable& table, Algorithm algorithm,
                            const SampleBudget& budget, unsigned threads = 1);

/// Samples sufficient for Pr(|C[i] − |Ω_i|| >= ε|Ω_i|) <= δ by Hoeffding:
/// ⌈ ratio² · ln(2/δ) / (2ε²) ⌉. The ratio is the per-sample increment
/// bound over |Ω_i|. Throws std::invalid_argument unless ε > 0, 0 < δ < 1
/// and ratio >= 1.
std::uint64_t required_samples(double epsilon, double delta, double ratio);

/// Uniform line-graph sampling: ratio = |Ω| / |Ω_i|.
std::uint64_t required_samples_dmochy(double epsilon, double delta, double omega, double omega_i);

/// Intersection-weighted sampling: ratio = W / (γ_i · |Ω_i|), γ_i being the
/// smallest |ē ∩ ē'| among instances of class i.
std::uint64_t required_samples_coda_a(double epsilon, double delta, double total_weight,
                                      double gamma_i, double omega_i);

}  // namespace dhg
