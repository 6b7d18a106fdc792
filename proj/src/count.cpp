#include "dhg/count.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dhg {

double CountVector::classified_total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

CountVector& CountVector::operator+=(const CountVector& other) {
  for (std::size_t i = 0; i < kNumClasses; ++i) values[i] += other.values[i];
  unclassified += other.unclassified;
  return *this;
}

CountVector& CountVector::operator*=(double factor) {
  for (double& v : values) v *= factor;
  unclassified *= factor;
  return *this;
}

LineGraph build_line_graph(const DirectedHypergraph& g) {
  LineGraph omega;
  NeighborScanner scanner(g);
  for (ArcId j = 0; j < g.arc_count(); ++j) {
    for (ArcId k : scanner.scan_forward(j)) omega.pairs.emplace_back(j, k);
  }
  return omega;
}

namespace {

struct Tally {
  std::array<std::uint64_t, kNumClasses> hits{};
  std::uint64_t unclassified = 0;

  void add(const ClassTable& table, RegionPattern p) {
    if (auto c = table.lookup(p)) ++hits[c->slot()];
    else ++unclassified;
  }

  CountVector to_counts() const {
    CountVector out;
    for (std::size_t i = 0; i < kNumClasses; ++i) out.values[i] = static_cast<double>(hits[i]);
    out.unclassified = static_cast<double>(unclassified);
    return out;
  }
};

void count_shard(const DirectedHypergraph& g, const ClassTable& table, unsigned shard,
                 unsigned shards, Tally& tally) {
  NeighborScanner scanner(g);
  for (ArcId j = shard; j < g.arc_count(); j += shards) {
    const Hyperarc& e = g.arc(j);
    for (ArcId k : scanner.scan_forward(j)) tally.add(table, overlap(e, g.arc(k)).pattern);
  }
}

}  // namespace

CountVector count_exact(const DirectedHypergraph& g, const ClassTable& table, unsigned threads) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    Tally tally;
    count_shard(g, table, 0, 1, tally);
    return tally.to_counts();
  }
  std::vector<Tally> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] { count_shard(g, table, t, threads, partial[t]); });
    }
  }
  Tally merged;
  for (const Tally& p : partial) {
    for (std::size_t i = 0; i < kNumClasses; ++i) merged.hits[i] += p.hits[i];
    merged.unclassified += p.unclassified;
  }
  return merged.to_counts();
}

CountVector feature_vector_arc(const DirectedHypergraph& g, const ClassTable& table, ArcId a) {
  if (a >= g.arc_count()) throw std::out_of_range("arc index out of range");
  Tally tally;
  NeighborScanner scanner(g);
  const Hyperarc& e = g.arc(a);
  for (ArcId b : scanner.scan(a)) tally.add(table, overlap(e, g.arc(b)).pattern);
  return tally.to_counts();
}

CountVector feature_vector_node(const DirectedHypergraph& g, const ClassTable& table, NodeId v) {
  if (v >= g.node_count()) throw std::out_of_range("node id out of range");
  Tally tally;
  NeighborScanner scanner(g);
  for (ArcId a : g.incidence(v)) {
    const Hyperarc& e = g.arc(a);
    for (ArcId b : scanner.scan(a)) {
      // A pair with both arcs in E_v is reached twice; keep the visit from the larger id.
      if (b < a && g.arc(b).contains(v)) continue;
      tally.add(table, overlap(e, g.arc(b)).pattern);
    }
  }
  return tally.to_counts();
}

std::vector<CountVector> arc_feature_vectors(const DirectedHypergraph& g, const ClassTable& table) {
  std::vector<Tally> tallies(g.arc_count());
  NeighborScanner scanner(g);
  for (ArcId j = 0; j < g.arc_count(); ++j) {
    for (ArcId k : scanner.scan_forward(j)) {
      const RegionPattern p = overlap(g.arc(j), g.arc(k)).pattern;
      tallies[j].add(table, p);
      tallies[k].add(table, p);
    }
  }
  std::vector<CountVector> out;
  out.reserve(tallies.size());
  for (const Tally& t : tallies) out.push_back(t.to_counts());
  return out;
}

std::vector<CountVector> node_feature_vectors(const DirectedHypergraph& g, const ClassTable& table) {
  std::vector<Tally> tallies(g.node_count());
  NeighborScanner scanner(g);
  for (ArcId j = 0; j < g.arc_count(); ++j) {
    const Hyperarc& e = g.arc(j);
    for (ArcId k : scanner.scan_forward(j)) {
      const Hyperarc& f = g.arc(k);
      const RegionPattern p = overlap(e, f).pattern;
      for (const auto* set : {&e.tail, &e.head}) {
        for (NodeId v : *set) tallies[v].add(table, p);
      }
      for (const auto* set : {&f.tail, &f.head}) {
        for (NodeId v : *set) {
          if (!e.contains(v)) tallies[v].add(table, p);
        }
      }
    }
  }
  std::vector<CountVector> out;
  out.reserve(tallies.size());
  for (const Tally& t : tallies) out.push_back(t.to_counts());
  return out;
}

std::array<std::uint32_t, kNumClasses> min_shared_per_class(const DirectedHypergraph& g,
                                                            const ClassTable& table) {
  std::array<std::uint32_t, kNumClasses> gamma{};
  NeighborScanner scanner(g);
  for (ArcId j = 0; j < g.arc_count(); ++j) {
    for (ArcId k : scanner.scan_forward(j)) {
      const PairOverlap o = overlap(g.arc(j), g.arc(k));
      if (auto c = table.lookup(o.pattern)) {
        auto& slot = gamma[c->slot()];
        slot = slot == 0 ? o.shared : std::min(slot, o.shared);
      }
    }
  }
  return gamma;
}

}  // namespace dhg
