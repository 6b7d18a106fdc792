#include "dhg/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dhg/random.hpp"

namespace dhg {

std::size_t GenSpec::arc_count() const {
  return static_cast<std::size_t>(std::llround(ratio * static_cast<double>(nodes)));
}

void GenSpec::validate() const {
  if (!(ratio > 0) || !std::isfinite(ratio) || ratio * static_cast<double>(nodes) < 1) {
    throw std::invalid_argument("ratio * nodes must be at least 1");
  }
  if (max_size < 2) throw std::invalid_argument("maximum arc size must be at least 2");
  if (max_size > nodes) throw std::invalid_argument("maximum arc size exceeds node count");
}

namespace {

Hyperarc draw_arc(const GenSpec& spec, std::uint64_t index) {
  Rng rng(derive_seed(spec.seed, index));
  const std::size_t d = 2 + rng.below(spec.max_size - 1);

  // Floyd's sampling gives a uniform d-subset; a Fisher-Yates pass over it
  // makes the order uniform too, so the first ⌊d/2⌋ form a uniform split.
  std::vector<NodeId> chosen;
  chosen.reserve(d);
  for (std::size_t j = spec.nodes - d; j < spec.nodes; ++j) {
    const auto t = static_cast<NodeId>(rng.below(j + 1));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    else chosen.push_back(static_cast<NodeId>(j));
  }
  for (std::size_t i = chosen.size(); i > 1; --i) std::swap(chosen[i - 1], chosen[rng.below(i)]);

  Hyperarc arc;
  const auto split = static_cast<std::ptrdiff_t>(d / 2);
  arc.tail.assign(chosen.begin(), chosen.begin() + split);
  arc.head.assign(chosen.begin() + split, chosen.end());
  normalize(arc);
  return arc;
}

}  // namespace

DirectedHypergraph generate(const GenSpec& spec, unsigned threads, bool dedup) {
  spec.validate();
  NodeTable nodes;
  for (std::size_t v = 0; v < spec.nodes; ++v) nodes.intern(std::to_string(v));

  std::vector<Hyperarc> arcs(spec.arc_count());
  threads = std::max(1U, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i] = draw_arc(spec, i);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < arcs.size(); i += threads) arcs[i] = draw_arc(spec, i);
      });
    }
  }
  return DirectedHypergraph(std::move(nodes), std::move(arcs),
                            dedup ? DuplicatePolicy::collapse : DuplicatePolicy::keep);
}

}  // namespace dhg
