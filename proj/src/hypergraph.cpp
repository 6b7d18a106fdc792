#include "dhg/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace dhg {

bool Hyperarc::in_tail(NodeId v) const { return std::binary_search(tail.begin(), tail.end(), v); }

bool Hyperarc::in_head(NodeId v) const { return std::binary_search(head.begin(), head.end(), v); }

void normalize(Hyperarc& arc) {
  for (auto* set : {&arc.tail, &arc.head}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
  }
}

bool is_valid_arc(const Hyperarc& arc) {
  if (arc.tail.empty() || arc.head.empty()) return false;
  auto t = arc.tail.begin();
  auto h = arc.head.begin();
  while (t != arc.tail.end() && h != arc.head.end()) {
    if (*t == *h) return false;
    if (*t < *h) ++t; else ++h;
  }
  return true;
}

NodeId NodeTable::intern(std::string_view label) {
  auto [it, inserted] = ids_.try_emplace(std::string(label), static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<NodeId> NodeTable::find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct ArcSetsHash {
  const std::vector<Hyperarc>* arcs;
  std::size_t operator()(std::size_t i) const noexcept {
    const Hyperarc& a = (*arcs)[i];
    std::size_t h = a.tail.size() * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (NodeId v : a.tail) mix(v);
    mix(0xffffffffULL);
    for (NodeId v : a.head) mix(v);
    return h;
  }
};

struct ArcSetsEqual {
  const std::vector<Hyperarc>* arcs;
  bool operator()(std::size_t i, std::size_t j) const noexcept {
    return (*arcs)[i].same_sets((*arcs)[j]);
  }
};

}  // namespace

DirectedHypergraph::DirectedHypergraph(NodeTable nodes, std::vector<Hyperarc> arcs,
                                       DuplicatePolicy policy)
    : nodes_(std::move(nodes)) {
  if (arcs.size() > std::numeric_limits<ArcId>::max()) {
    throw std::invalid_argument("too many hyperarcs");
  }
  for (Hyperarc& a : arcs) {
    normalize(a);
    if (!is_valid_arc(a)) {
      throw std::invalid_argument("hyperarc needs non-empty, disjoint tail and head");
    }
    const NodeId last = std::max(a.tail.back(), a.head.back());
    if (last >= nodes_.size()) throw std::invalid_argument("hyperarc references unknown node");
  }

  if (policy == DuplicatePolicy::collapse) {
    std::unordered_set<std::size_t, ArcSetsHash, ArcSetsEqual> seen(
        arcs.size(), ArcSetsHash{&arcs}, ArcSetsEqual{&arcs});
    arcs_.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (seen.insert(i).second) arcs_.push_back(arcs[i]);
    }
  } else {
    arcs_ = std::move(arcs);
  }

  // CSR incidence: count, prefix-sum, fill. Filling in arc order keeps each E_v sorted.
  std::vector<std::size_t> counts(nodes_.size() + 1, 0);
  for (const Hyperarc& a : arcs_) {
    for (NodeId v : a.tail) ++counts[v + 1];
    for (NodeId v : a.head) ++counts[v + 1];
  }
  for (std::size_t v = 1; v < counts.size(); ++v) counts[v] += counts[v - 1];
  incidence_offsets_ = counts;
  incidence_arcs_.resize(counts.back());
  for (ArcId j = 0; j < arcs_.size(); ++j) {
    for (NodeId v : arcs_[j].tail) incidence_arcs_[counts[v]++] = j;
    for (NodeId v : arcs_[j].head) incidence_arcs_[counts[v]++] = j;
  }
}

std::span<const ArcId> DirectedHypergraph::incidence(NodeId v) const {
  if (v >= nodes_.size()) throw std::out_of_range("node id out of range");
  return {incidence_arcs_.data() + incidence_offsets_[v],
          incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

bool DirectedHypergraph::has_timestamps() const noexcept {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [](const Hyperarc& a) { return a.timestamp.has_value(); });
}

std::vector<ArcId> DirectedHypergraph::neighbors(ArcId a) const {
  if (a >= arcs_.size()) throw std::out_of_range("arc index out of range");
  NeighborScanner scanner(*this);
  auto found = scanner.scan(a);
  std::vector<ArcId> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

NeighborScanner::NeighborScanner(const DirectedHypergraph& g)
    : graph_(&g), mark_(g.arc_count(), 0) {}

template <bool ForwardOnly>
std::span<const ArcId> NeighborScanner::collect(ArcId a) {
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  found_.clear();
  mark_[a] = epoch_;
  const Hyperarc& arc = graph_->arc(a);
  for (const auto* set : {&arc.tail, &arc.head}) {
    for (NodeId v : *set) {
      auto inc = graph_->incidence(v);
      auto it = inc.begin();
      if constexpr (ForwardOnly) it = std::upper_bound(inc.begin(), inc.end(), a);
      for (; it != inc.end(); ++it) {
        if (mark_[*it] != epoch_) {
          mark_[*it] = epoch_;
          found_.push_back(*it);
        }
      }
    }
  }
  return found_;
}

std::span<const ArcId> NeighborScanner::scan(ArcId a) { return collect<false>(a); }

std::span<const ArcId> NeighborScanner::scan_forward(ArcId a) { return collect<true>(a); }

DirectedHypergraph induced_subgraph(const DirectedHypergraph& g, std::span<const ArcId> keep) {
  NodeTable nodes;
  std::vector<Hyperarc> arcs;
  arcs.reserve(keep.size());
  for (ArcId a : keep) {
    const Hyperarc& src = g.arc(a);
    Hyperarc dst;
    dst.timestamp = src.timestamp;
    for (NodeId v : src.tail) dst.tail.push_back(nodes.intern(g.label(v)));
    for (NodeId v : src.head) dst.head.push_back(nodes.intern(g.label(v)));
    arcs.push_back(std::move(dst));
  }
  return DirectedHypergraph(std::move(nodes), std::move(arcs), DuplicatePolicy::keep);
}

std::uint64_t line_graph_size(const DirectedHypergraph& g) {
  NeighborScanner scanner(g);
  std::uint64_t pairs = 0;
  for (ArcId a = 0; a < g.arc_count(); ++a) pairs += scanner.scan_forward(a).size();
  return pairs;
}

GraphStats compute_stats(const DirectedHypergraph& g, bool with_line_graph) {
  GraphStats s;
  s.num_nodes = g.node_count();
  s.num_arcs = g.arc_count();
  s.total_incidence = g.total_incidence();
  if (with_line_graph) s.line_graph_size = line_graph_size(g);
  return s;
}

}  // namespace dhg
