#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dhg/hypergraph.hpp"
#include "dhg/taxonomy.hpp"

namespace dhg {

/// Per-class instance counts (exact) or estimates, indexed by class slot.
///
/// Pairs of identical arcs are incident but belong to no class. Parsed
/// graphs never contain them; randomized and generated graphs may, and their
/// mass is tracked in `unclassified` so that classified_total() +
/// unclassified always accounts for the whole line graph.
struct CountVector {
  std::array<double, kNumClasses> values{};
  double unclassified = 0;

  double& operator[](ClassId c) { return values[c.slot()]; }
  double operator[](ClassId c) const { return values[c.slot()]; }

  double classified_total() const;
  double total() const { return classified_total() + unclassified; }

  CountVector& operator+=(const CountVector& other);
  CountVector& operator*=(double factor);

  friend bool operator==(const CountVector&, const CountVector&) = default;
};

/// Ω: every unordered incident pair (j, k), j < k, exactly once.
struct LineGraph {
  std::vector<std::pair<ArcId, ArcId>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
};

LineGraph build_line_graph(const DirectedHypergraph& g);

/// |Ω_i| for every class. Arcs are sharded across `threads` workers by index;
/// the result does not depend on the thread count.
CountVector count_exact(const DirectedHypergraph& g, const ClassTable& table, unsigned threads = 1);

/// Counts of pairs containing arc `a`. Throws std::out_of_range.
CountVector feature_vector_arc(const DirectedHypergraph& g, const ClassTable& table, ArcId a);

/// Counts of pairs whose union covers node `v`. Throws std::out_of_range.
CountVector feature_vector_node(const DirectedHypergraph& g, const ClassTable& table, NodeId v);

/// feature_vector_arc for every arc, from a single pass over Ω.
std::vector<CountVector> arc_feature_vectors(const DirectedHypergraph& g, const ClassTable& table);

/// feature_vector_node for every node, from a single pass over Ω.
std::vector<CountVector> node_feature_vectors(const DirectedHypergraph& g, const ClassTable& table);

/// min |ē ∩ ē'| over the instances of each class (γ_i); 0 for empty classes.
std::array<std::uint32_t, kNumClasses> min_shared_per_class(const DirectedHypergraph& g,
                                                            const ClassTable& table);

}  // namespace dhg
