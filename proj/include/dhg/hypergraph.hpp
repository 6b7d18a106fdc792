#pragma once

// Directed hypergraph data model: interned node labels, hyperarcs as
// (tail, head) node-set pairs, and a CSR incidence index E_v.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dhg {

using NodeId = std::uint32_t;
using ArcId = std::uint32_t;
using Timestamp = std::int64_t;

/// e = <T, H>. Both sets are kept sorted and free of repeats.
struct Hyperarc {
  std::vector<NodeId> tail;
  std::vector<NodeId> head;
  std::optional<Timestamp> timestamp;

  /// |ē| = |T| + |H| (the sets are disjoint).
  std::size_t size() const noexcept { return tail.size() + head.size(); }

  bool in_tail(NodeId v) const;
  bool in_head(NodeId v) const;
  bool contains(NodeId v) const { return in_tail(v) || in_head(v); }

  /// Same (tail, head) pair; timestamps are ignored.
  bool same_sets(const Hyperarc& other) const noexcept {
    return tail == other.tail && head == other.head;
  }
};

/// Sorts and deduplicates both sets of an arc in place.
void normalize(Hyperarc& arc);

/// True when tail and head are non-empty and disjoint. Expects a normalized arc.
bool is_valid_arc(const Hyperarc& arc);

/// Bijection between original string labels and dense ids 0..size()-1.
class NodeTable {
 public:
  NodeId intern(std::string_view label);
  std::optional<NodeId> find(std::string_view label) const;
  const std::string& label(NodeId id) const { return labels_.at(id); }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

enum class DuplicatePolicy {
  collapse,  // keep the first of several arcs with identical (tail, head)
  keep,      // retain every arc (randomized and generated graphs)
};

/// Immutable after construction; safe for concurrent readers.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;

  /// Arcs are normalized, validated against the Hyperarc invariants and the
  /// node table, then deduplicated per `policy`. Throws std::invalid_argument
  /// on an invalid arc.
  DirectedHypergraph(NodeTable nodes, std::vector<Hyperarc> arcs,
                     DuplicatePolicy policy = DuplicatePolicy::collapse);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const NodeTable& nodes() const noexcept { return nodes_; }
  const std::string& label(NodeId v) const { return nodes_.label(v); }

  const std::vector<Hyperarc>& arcs() const noexcept { return arcs_; }
  const Hyperarc& arc(ArcId a) const { return arcs_.at(a); }

  /// E_v, ascending.
  std::span<const ArcId> incidence(NodeId v) const;
  std::size_t degree(NodeId v) const { return incidence(v).size(); }

  /// Σ_e |ē|, equal to Σ_v d_v.
  std::size_t total_incidence() const noexcept { return incidence_arcs_.size(); }

  bool has_timestamps() const noexcept;

  /// N_e = { j != a : ē_a ∩ ē_j != ∅ }, ascending. Throws std::out_of_range.
  std::vector<ArcId> neighbors(ArcId a) const;

 private:
  NodeTable nodes_;
  std::vector<Hyperarc> arcs_;
  std::vector<std::size_t> incidence_offsets_{0};
  std::vector<ArcId> incidence_arcs_;
};

/// Reusable scratch for repeated neighbor scans over one graph. Not
/// thread-safe; give each worker its own.
class NeighborScanner {
 public:
  explicit NeighborScanner(const DirectedHypergraph& g);

  /// N_a in discovery order. The span is valid until the next call.
  std::span<const ArcId> scan(ArcId a);

  /// Neighbors j of a with j > a, in discovery order.
  std::span<const ArcId> scan_forward(ArcId a);

 private:
  template <bool ForwardOnly>
  std::span<const ArcId> collect(ArcId a);

  const DirectedHypergraph* graph_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<ArcId> found_;
};

/// Builds a graph over the arcs `keep` (in that order), re-interning only
/// the nodes they touch. Duplicates are kept as-is.
DirectedHypergraph induced_subgraph(const DirectedHypergraph& g, std::span<const ArcId> keep);

struct GraphStats {
  std::size_t num_nodes = 0;
  std::size_t num_arcs = 0;
  std::size_t total_incidence = 0;
  std::optional<std::uint64_t> line_graph_size;
};

/// |Ω| is only computed when `with_line_graph` is set; it costs a full
/// neighbor scan of every arc.
GraphStats compute_stats(const DirectedHypergraph& g, bool with_line_graph);

/// Number of unordered incident arc pairs.
std::uint64_t line_graph_size(const DirectedHypergraph& g);

// Text format: one arc per line, `tail<TAB>head[<TAB>timestamp]`, labels
// comma-separated. `#` comments and blank lines are skipped.

/// Self-loop arcs are dropped, exact duplicates collapse to the first
/// occurrence. Throws ParseError.
DirectedHypergraph parse_hypergraph(std::istream& in);
DirectedHypergraph parse_hypergraph(std::string_view text);

/// Throws std::runtime_error when the file cannot be opened.
DirectedHypergraph read_hypergraph_file(const std::string& path);

/// Writes arcs in stored order, labels sorted lexicographically within each set.
void write_hypergraph(std::ostream& out, const DirectedHypergraph& g);
std::string to_text(const DirectedHypergraph& g);

}  // namespace dhg
