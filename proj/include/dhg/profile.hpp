#pragma once

// Characteristic profiles and estimator-quality metrics.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dhg/count.hpp"
#include "dhg/estimate.hpp"

namespace dhg {

using ClassVector = std::array<double, kNumClasses>;

/// μ_i = (real_i − rand_i) / (real_i + rand_i + ε). Throws
/// std::invalid_argument for ε <= 0 or negative counts.
ClassVector significance(const CountVector& real, const CountVector& randomized, double epsilon = 1.0);

/// μ / ‖μ‖₂. Throws PreconditionError when μ is all zeros.
ClassVector characteristic_profile(const ClassVector& mu);

struct ProfileOptions {
  Algorithm algorithm = Algorithm::exact;
  double q = 1.0;                  // sample ratio for estimators
  std::size_t randomizations = 10;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ProfileResult {
  CountVector real_counts;
  CountVector randomized_mean;  // per-class mean over the randomized graphs
  ClassVector mu{};
  ClassVector cp{};
};

/// Counts g and `randomizations` randomized copies, then derives μ and the
/// profile. Randomization r uses derive_seed(seed, 2r + 1) and counting its
/// output uses derive_seed(seed, 2r + 2); counting g uses derive_seed(seed, 0).
/// Throws PreconditionError for a degenerate (all-zero) significance vector.
ProfileResult profile_graph(const DirectedHypergraph& g, const ClassTable& table,
                            const ProfileOptions& options);

/// Pearson correlation. Throws std::invalid_argument for constant input.
double pearson_similarity(std::span<const double> a, std::span<const double> b);

/// Pairwise Pearson similarity; symmetric with unit diagonal. Needs >= 2 profiles.
std::vector<std::vector<double>> similarity_matrix(const std::vector<ClassVector>& profiles);

/// Σ_i |estimate_i − exact_i| / Σ_i exact_i. Throws std::invalid_argument
/// when the exact counts sum to zero.
double err_metric(const CountVector& exact, const CountVector& estimate);

/// Dot product of two unit-norm profiles.
double cos_metric(const ClassVector& cp_exact, const ClassVector& cp_estimate);

struct Snapshot {
  double threshold = 0;
  std::size_t num_arcs = 0;
  std::size_t num_nodes = 0;
  CountVector counts;
  ClassVector ratios{};  // counts / classified total; zeros when no pairs
};

struct SnapshotSeries {
  std::vector<Snapshot> snapshots;
};

/// s equally spaced thresholds t_i = min τ + i·(max τ − min τ)/s, i = 1..s;
/// snapshot i holds the arcs with τ ≤ t_i. Throws std::invalid_argument for
/// s < 1 or untimestamped arcs.
SnapshotSeries snapshots(const DirectedHypergraph& g, const ClassTable& table, std::size_t s,
                         unsigned threads = 1);

/// One snapshot per distinct timestamp value (e.g. publication years).
SnapshotSeries snapshots_per_timestamp(const DirectedHypergraph& g, const ClassTable& table,
                                       unsigned threads = 1);

}  // namespace dhg
