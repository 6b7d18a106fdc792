#pragma once

#include <cstdint>

#include "dhg/hypergraph.hpp"

namespace dhg {

/// Parameters of the uniform random directed-hypergraph generator.
struct GenSpec {
  std::size_t nodes = 0;
  double ratio = 1.0;          // arcs per node
  std::size_t max_size = 2;    // k, largest |ē|
  std::uint64_t seed = 0;

  /// round(ratio · nodes).
  std::size_t arc_count() const;

  /// Throws std::invalid_argument unless ratio·nodes >= 1 and 2 <= k <= nodes.
  void validate() const;
};

/// Each arc draws |ē| uniformly from {2..k}, a uniform node subset of that
/// size, and a uniform split into ⌊|ē|/2⌋ tail and ⌈|ē|/2⌉ head nodes.
/// Nodes are labelled "0".."n-1"; all n nodes are in the table. Every arc
/// uses its own stream derive_seed(seed, index), so the output does not depend
/// on `threads`. Duplicate arcs are kept unless `dedup` is set.
DirectedHypergraph generate(const GenSpec& spec, unsigned threads = 1, bool dedup = false);

}  // namespace dhg
