#pragma once

// Directed configuration-model randomization: arcs are paired at random and
// the head sets of each pair are shuffled, then the tail sets. Every node's
// head-degree and tail-degree and every arc's (|T|, |H|) survive.

#include <utility>
#include <vector>

#include "dhg/hypergraph.hpp"
#include "dhg/random.hpp"

namespace dhg {

/// Two same-role sets (both heads or both tails) and the fixed opposite-role
/// sets of their arcs. All four must be sorted and repeat-free.
struct ShuffleInput {
  std::vector<NodeId> first;
  std::vector<NodeId> second;
  std::vector<NodeId> first_fixed;
  std::vector<NodeId> second_fixed;
};

/// Exchanges nodes between the two sets. Nodes in both sets stay in both;
/// a node that would collide with the other arc's fixed set stays put; the
/// rest are redistributed uniformly. Output sizes match the inputs and no
/// output set meets its own fixed set. Outputs are sorted. Throws
/// std::invalid_argument when an input set already meets its fixed set.
std::pair<std::vector<NodeId>, std::vector<NodeId>> shuffle_sets(const ShuffleInput& in, Rng& rng);

/// Returns a randomized copy over the same node table. Duplicate arcs that
/// the shuffling creates are kept. Throws std::invalid_argument for fewer
/// than two arcs.
DirectedHypergraph randomize(const DirectedHypergraph& g, Rng& rng);

}  // namespace dhg
